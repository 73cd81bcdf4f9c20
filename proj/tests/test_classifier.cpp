#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "silab/classifier.hpp"
#include "silab/corpus.hpp"
#include "silab/oracle.hpp"
#include "silab/transforms.hpp"
#include "test_helpers.hpp"

using namespace silab;
using silab::testing::m;

namespace {

bool has_basis(const Verdict& v, const std::string& tag) {
  for (const auto& b : v.basis)
    if (b == tag) return true;
  return false;
}

}  // namespace

TEST_CASE("classify: decision-tree examples") {
  Verdict nil = classify(m({{"0", "1"}, {"0", "0"}}));
  CHECK(nil.si == TriState::Yes);
  CHECK(nil.simple == TriState::Yes);
  CHECK(has_basis(nil, "Theorem TR1"));

  Verdict rns = classify(m({{"3/5", "4/5"}, {"0", "0"}}));
  CHECK(rns.si == TriState::Yes);
  CHECK(rns.simple == TriState::No);
  CHECK(has_basis(rns, "Theorem Tnonsimple"));
  REQUIRE(rns.certificate.has_value());
  CHECK(word_str(rns.certificate->left) == "t");
  CHECK(word_str(rns.certificate->right) == "t");

  Verdict sim = classify(m({{"1", "-1"}, {"0", "0"}}));
  CHECK(sim.si == TriState::No);
  CHECK(sim.simple == TriState::No);
  CHECK(has_basis(sim, "Theorem TR2"));

  Verdict halfproj = classify(m({{"1/2", "0"}, {"0", "0"}}));
  CHECK(halfproj.si == TriState::Yes);
  CHECK(halfproj.simple == TriState::No);

  Verdict di = classify(m({{"i", "0"}, {"0", "0"}}));
  CHECK(di.si == TriState::Yes);
  CHECK(di.simple == TriState::Yes);
  CHECK(has_basis(di, "Theorem N2"));
  CHECK(has_basis(di, "Theorem TN1"));

  Verdict tn = classify(m({{"4/5", "3/5+3/4i"}, {"0", "0"}}));
  CHECK(tn.si == TriState::Yes);
  CHECK(tn.simple == TriState::Yes);
  CHECK(has_basis(tn, "Theorem TR2"));
  REQUIRE(tn.witness.has_value());
  CHECK(tn.witness->l == 1);
  CHECK(tn.witness->m + tn.witness->n == 2);
}

TEST_CASE("classify: zero and selfadjoint branches") {
  Verdict zero = classify(ExactMatrix::zero(2, 2));
  CHECK(zero.si == TriState::Yes);
  CHECK(zero.simple == TriState::Yes);

  Verdict proj = classify(m({{"1", "0"}, {"0", "0"}}));
  CHECK(proj.si == TriState::Yes);
  CHECK(proj.simple == TriState::Yes);

  Verdict involution = classify(m({{"1", "0"}, {"0", "-1"}}));
  CHECK(involution.si == TriState::Yes);
  CHECK(involution.simple == TriState::Yes);  // T^3 = T

  Verdict shrink = classify(m({{"1/2", "0"}, {"0", "1/3"}}));
  CHECK(shrink.si == TriState::Yes);
  CHECK(shrink.simple == TriState::No);

  Verdict tsa = classify(m({{"-1", "0"}, {"0", "0"}}));
  CHECK(tsa.simple == TriState::Yes);
  CHECK(has_basis(tsa, "Theorem Tsa"));
}

TEST_CASE("classify: normal branch") {
  CHECK(classify(m({{"2i", "0"}, {"0", "0"}})).si == TriState::No);
  CHECK(classify(m({{"i", "0"}, {"0", "1"}})).si == TriState::Yes);
  CHECK(classify(m({{"i", "0"}, {"0", "1"}})).simple == TriState::Yes);

  // Rank-one normal: the idempotence test must agree with |a| = s = 1.
  std::mt19937_64 rng(5);
  for (int it = 0; it < 30; ++it) {
    GaussianRational a = silab::testing::random_scalar(rng, 4);
    if (a.is_zero() || a.is_real()) continue;
    ExactMatrix t(2, 2);
    t.at(0, 0) = a;
    Verdict v = classify(t);
    bool expected = a.abs_sq().is_one();  // s = |a|^2 here, so s = 1 too
    CHECK((v.si == TriState::Yes) == expected);
    CHECK(v.si == v.simple);
  }
}

TEST_CASE("classify: power partial isometry branch") {
  // Unitary part plus nonzero shift part: SI but not simple.
  ExactMatrix ens = m({{"1", "0", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  Verdict v = classify(ens);
  CHECK(v.si == TriState::Yes);
  CHECK(has_basis(v, "Corollary CPP"));
  CHECK(v.simple == TriState::No);
  CHECK(has_basis(v, "Example ENS"));

  // Pure truncated shift of index 3: simplicity deliberately left open.
  ExactMatrix j3 = m({{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  Verdict vj = classify(j3);
  CHECK(vj.si == TriState::Yes);
  CHECK(vj.simple == TriState::Unknown);
}

TEST_CASE("classify: unitary part of infinite order next to a shift") {
  ExactMatrix u = exact_unitary(2, 1).matrix();
  ExactMatrix j3 = m({{"0", "1", "0"}, {"0", "0", "1"}, {"0", "0", "0"}});
  ExactMatrix t = direct_sum(u, j3);
  REQUIRE(is_power_partial_isometry(t, 10).verified);
  Verdict v = classify(t);
  CHECK(v.si == TriState::Yes);
  CHECK(v.simple == TriState::No);  // rank drops from 4 to the stable 2

  // The closure never saturates (the rotation has infinite order), yet the
  // bounded oracle reaches the same non-simplicity via block separation.
  ClosureResult s = generate_closure({t}, true, 6, 20000);
  CHECK_FALSE(s.saturated);
  CHECK(check_simple(s).value == OracleAnswer::Value::No);
}

TEST_CASE("classify: unknown branch") {
  ExactMatrix mixed = m({{"0", "2", "0"}, {"0", "0", "0"}, {"0", "0", "1"}});
  Verdict v = classify(mixed);
  CHECK(v.si == TriState::Unknown);
  CHECK(v.simple == TriState::Unknown);
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("quick_reject") {
  auto r1 = quick_reject(m({{"1/4", "1/4"}, {"0", "0"}}));
  REQUIRE(r1.has_value());
  CHECK(r1->si == TriState::No);

  CHECK_FALSE(quick_reject(m({{"0", "1"}, {"0", "0"}})).has_value());
  CHECK_FALSE(quick_reject(m({{"1", "-1"}, {"0", "0"}})).has_value());
  CHECK_THROWS_AS(quick_reject(m({{"1", "0"}, {"0", "0"}})), std::invalid_argument);

  // Wherever the rejection fires, the decision tree must already say no.
  std::mt19937_64 rng(9);
  for (int it = 0; it < 40; ++it) {
    ExactMatrix t = silab::testing::random_rank_one(rng, 2);
    if (predicates(t).selfadjoint) continue;
    auto r = quick_reject(t);
    if (r) CHECK(classify(t).si == TriState::No);
  }
}

TEST_CASE("combine_direct_sum") {
  Verdict yes;
  yes.si = yes.simple = TriState::Yes;
  yes.basis = {"Theorem N2"};
  Verdict no;
  no.si = TriState::No;
  no.simple = TriState::No;
  no.basis = {"Theorem TR2"};

  CHECK(combine_direct_sum(yes, true, true, yes, true, true).si == TriState::Yes);
  CHECK(combine_direct_sum(yes, true, true, no, true, true).si == TriState::No);
  CHECK(combine_direct_sum(yes, true, true, yes, true, true).simple == TriState::Yes);
  CHECK(combine_direct_sum(yes, true, false, yes, true, true).simple == TriState::Unknown);
  CHECK_THROWS_AS(combine_direct_sum(yes, false, true, yes, true, true), std::invalid_argument);
}

TEST_CASE("classifier agrees with the oracle on saturating corpus closures") {
  for (const auto& entry : corpus()) {
    ClosureResult s = generate_closure({entry.matrix}, true, 10, 20000);
    if (!s.saturated) continue;
    Verdict v = classify(entry.matrix);
    OracleAnswer si = check_si(s);
    OracleAnswer simple = check_simple(s);
    INFO("corpus matrix ", entry.name);
    if (v.si != TriState::Unknown)
      CHECK((v.si == TriState::Yes) == (si.value == OracleAnswer::Value::Yes));
    if (v.simple != TriState::Unknown)
      CHECK((v.simple == TriState::Yes) == (simple.value == OracleAnswer::Value::Yes));
  }
}

TEST_CASE("unitary invariance of verdicts") {
  for (const auto& entry : corpus()) {
    Verdict base = classify(entry.matrix);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      ExactUnitary u = exact_unitary(entry.matrix.rows(), seed);
      Verdict v = classify(conjugate(entry.matrix, u));
      INFO("corpus matrix ", entry.name, " seed ", seed);
      CHECK(v.si == base.si);
      CHECK(v.simple == base.simple);
      CHECK(v.basis == base.basis);
    }
  }
}

TEST_CASE("derived selfadjoint criterion validated against the oracle") {
  // Every selfadjoint matrix with spectrum in {0, 1, -1} generates a finite
  // S(T) = {T^n}; the oracle verdict must match the T^2 = T / T^3 = T rule.
  // Conjugation makes the inputs non-diagonal without changing either side.
  for (int pattern = 0; pattern < 27; ++pattern) {
    ExactMatrix d(3, 3);
    int digits[3] = {pattern % 3, (pattern / 3) % 3, pattern / 9};
    for (int i = 0; i < 3; ++i)
      d.at(i, i) = GaussianRational(digits[i] == 2 ? -1 : digits[i]);
    ExactMatrix t = conjugate(d, exact_unitary(3, static_cast<std::uint64_t>(pattern)));
    REQUIRE(predicates(t).selfadjoint);
    Verdict v = classify(t);
    ClosureResult s = generate_closure({t}, true, 10, 1000);
    REQUIRE(s.saturated);
    INFO("diagonal pattern ", digits[0], " ", digits[1], " ", digits[2]);
    CHECK((v.simple == TriState::Yes) == (check_simple(s).value == OracleAnswer::Value::Yes));
    CHECK((v.si == TriState::Yes) == (check_si(s).value == OracleAnswer::Value::Yes));
  }
}

TEST_CASE("certificate words verify through the word engine") {
  for (const auto& entry : corpus()) {
    Verdict v = classify(entry.matrix);
    if (!v.certificate) continue;
    Word full;
    full.letters = v.certificate->left.letters;
    full.letters.push_back(Letter::X);
    for (Letter l : v.certificate->right.letters) full.letters.push_back(l);
    CHECK(evaluate_word(full, entry.matrix) == adjoint(entry.matrix));
  }
}

TEST_CASE("one-dimensional matrices") {
  Verdict phase = classify(m({{"i"}}));
  CHECK(phase.si == TriState::Yes);
  CHECK(phase.simple == TriState::Yes);

  Verdict half = classify(m({{"1/2"}}));
  CHECK(half.si == TriState::Yes);
  CHECK(half.simple == TriState::No);

  Verdict small_phase = classify(m({{"1/2i"}}));
  CHECK(small_phase.si == TriState::No);

  CHECK(classify(m({{"0"}})).si == TriState::Yes);
}

TEST_CASE("monotone consistency: simple implies SI") {
  std::mt19937_64 rng(77);
  auto check_verdict = [](const Verdict& v) {
    if (v.simple == TriState::Yes) CHECK(v.si == TriState::Yes);
    if (v.si != TriState::Unknown || v.simple != TriState::Unknown) CHECK_FALSE(v.basis.empty());
  };
  for (const auto& entry : corpus()) check_verdict(classify(entry.matrix));
  for (int it = 0; it < 50; ++it)
    check_verdict(classify(silab::testing::random_rank_one(rng, 2 + static_cast<int>(rng() % 2))));
}
