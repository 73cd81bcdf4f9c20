#include "silab/corpus.hpp"

#include <stdexcept>

#include "silab/entry_io.hpp"
#include "silab/transforms.hpp"

namespace silab {

namespace {

ExactMatrix from_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<GaussianRational> entries;
  for (const auto& row : rows)
    for (const auto& cell : row) entries.push_back(parse_entry(cell));
  return ExactMatrix(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()),
                     entries);
}

std::vector<CorpusEntry> build() {
  std::vector<CorpusEntry> c;
  auto add = [&](const std::string& name, const std::vector<std::vector<std::string>>& rows,
                 bool designated = false, const std::string& note = "") {
    c.push_back({name, from_rows(rows), designated, note});
  };

  // Nilpotent rank-one family (trace zero).
  add("nilpotent-e12", {{"0", "1"}, {"0", "0"}}, true, "partial isometry, 5-element semigroup");
  add("nilpotent-e12-scaled-2", {{"0", "2"}, {"0", "0"}}, true, "norm 2, not SI");
  add("nilpotent-e12-scaled-half", {{"0", "1/2"}, {"0", "0"}}, false, "norm 1/2, not SI");

  // Higher-rank truncated shifts.
  add("nilpotent-j3", {{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}, false,
      "index-3 truncated shift");
  add("nilpotent-j2-plus-j2", {{"0", "1", "0", "0"}, {"0", "0", "0", "0"}, {"0", "0", "0", "1"},
                               {"0", "0", "0", "0"}},
      false, "two index-2 shifts");

  // Projections and selfadjoint matrices.
  add("proj-e11", {{"1", "0"}, {"0", "0"}});
  add("proj-neg", {{"-1", "0"}, {"0", "0"}});
  add("proj-scaled-half", {{"1/2", "0"}, {"0", "0"}}, false, "scaled projection, SI not simple");
  add("proj-scaled-2", {{"2", "0"}, {"0", "0"}});
  add("identity-2", {{"1", "0"}, {"0", "1"}});
  add("diag-1-minus1", {{"1", "0"}, {"0", "-1"}});
  add("selfadjoint-1-minus1-0", {{"1", "0", "0"}, {"0", "-1", "0"}, {"0", "0", "0"}});
  add("householder-3-4-5", {{"7/25", "-24/25"}, {"-24/25", "-7/25"}}, false,
      "selfadjoint involution");
  add("selfadjoint-shrinking", {{"1/2", "0"}, {"0", "1/3"}});

  // Real-trace rank-one partial isometries (SI but not simple).
  add("rns-3-4-5", {{"3/5", "4/5"}, {"0", "0"}}, true, "real trace 3/5, norm 1");
  add("rns-5-12-13", {{"5/13", "12/13"}, {"0", "0"}});
  add("rns-negative", {{"-3/5", "4/5"}, {"0", "0"}});

  // Non-SI partial isometry with non-real trace.
  add("example-e", {{"3/13+4/13i", "12/13"}, {"0", "0"}}, true,
      "partial isometry, trace not real, not SI");

  // Trace-norm family (simple, hence SI).
  add("trace-norm-4-5", {{"4/5", "3/5+3/4i"}, {"0", "0"}}, true, "witness (1,1,1)");
  add("trace-norm-m1n0", {{"4/5", "1/2+3/5i"}, {"0", "0"}}, false, "witness (1,0,1)");
  add("trace-norm-imag", {{"3/5i", "4/3+4/5i"}, {"0", "0"}}, false, "witness (1,1,1)");
  add("trace-norm-k2", {{"2/5i", "3/2+3/10i"}, {"0", "0"}}, false, "witness (1,1,2)");
  add("trace-norm-neg", {{"-4/5", "1/2+3/5i"}, {"0", "0"}}, false, "witness (1,1,2)");

  // Small-norm non-example (every semigroup element has norm < 1).
  add("small-norm-1-4", {{"1/4", "1/4"}, {"0", "0"}});

  // Normal family.
  add("normal-i", {{"i", "0"}, {"0", "0"}});
  add("normal-2i", {{"2i", "0"}, {"0", "0"}});
  add("normal-i-1", {{"i", "0"}, {"0", "1"}});
  add("normal-i-0-0", {{"i", "0", "0"}, {"0", "0", "0"}, {"0", "0", "0"}});
  add("normal-phase-3-4-5", {{"3/5+4/5i", "0"}, {"0", "0"}}, false,
      "unimodular non-root-of-unity phase");
  add("cyclic-shift-3", {{"0", "1", "0"}, {"0", "0", "1"}, {"1", "0", "0"}});

  // Pythagorean rotations.
  add("rotation-3-4-5", {{"3/5", "4/5"}, {"-4/5", "3/5"}});
  add("rotation-scaled-5", {{"3", "4"}, {"-4", "3"}});

  // Unitary-plus-shift power partial isometry and a conjugated copy.
  add("ens-3x3", {{"1", "0", "0"}, {"0", "0", "1"}, {"0", "0", "0"}}, false,
      "unitary plus index-2 shift");
  c.push_back({"ens-conjugated",
               conjugate(c.back().matrix, exact_unitary(3, 1)), false,
               "ens-3x3 conjugated by an exact unitary"});

  // Similarity counterexample companion (P is proj-e11 above).
  add("similarity-a", {{"1", "-1"}, {"0", "0"}}, false, "similar to proj-e11, not SI");

  // Rank-one with trace zero built from vectors, not in E12 position.
  c.push_back({"rank-one-sym",
               rank_one_from_vectors({GaussianRational(1), GaussianRational(1)},
                                     {GaussianRational(1, 2), GaussianRational(-1, 2)}),
               true, "trace-zero partial isometry, dense entries"});

  // Outside every characterized class.
  add("mixed-unknown", {{"0", "2", "0"}, {"0", "0", "0"}, {"0", "0", "1"}}, false,
      "scaled shift plus unit, no characterization");

  add("zero-2x2", {{"0", "0"}, {"0", "0"}});

  return c;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build();
  return c;
}

const CorpusEntry& corpus_entry(const std::string& name) {
  for (const auto& e : corpus())
    if (e.name == name) return e;
  throw std::invalid_argument("corpus_entry: no corpus matrix named '" + name + "'");
}

}  // namespace silab
