#include "silab/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "silab/corpus.hpp"
#include "silab/rank_one.hpp"
#include "silab/report.hpp"
#include "silab/scalar_solver.hpp"
#include "silab/transforms.hpp"
#include "silab/word.hpp"

namespace silab {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitParse = 2;
constexpr int kExitDisagreement = 3;

int default_max_elems() {
  if (const char* env = std::getenv("SI_LAB_MAX_ELEMS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 20000;
}

/// INPUT is a file path ("-" for stdin), a corpus matrix name, or inline
/// JSON via --inline.
MatrixDocument load_matrix(const std::string& input, const std::string& inline_json) {
  if (!inline_json.empty()) return parse_matrix_document(inline_json);
  if (input.empty()) throw ParseError("no matrix given (INPUT or --inline)", 0);
  if (input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_matrix_document(buf.str());
  }
  std::ifstream f(input);
  if (f.good()) {
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_matrix_document(buf.str());
  }
  for (const auto& e : corpus()) {
    if (e.name == input) return {e.name, e.matrix};
  }
  throw ParseError("cannot open file and no corpus matrix named '" + input + "'", 0);
}

struct CorpusRow {
  const CorpusEntry* entry;
  Report report;
};

std::vector<CorpusRow> run_corpus(bool with_oracle, int oracle_max_len, int max_elems,
                                  bool* any_disagreement) {
  std::vector<CorpusRow> rows;
  for (const auto& e : corpus()) {
    bool clash = false;
    Report r = make_report({e.name, e.matrix}, with_oracle ? oracle_max_len : 0, max_elems, &clash);
    if (clash && any_disagreement) *any_disagreement = true;
    rows.push_back({&e, std::move(r)});
  }
  return rows;
}

ordered_json corpus_row_json(const CorpusRow& row) {
  ordered_json j;
  j["name"] = row.entry->name;
  j["si"] = tri_str(row.report.verdict.si);
  j["simple"] = tri_str(row.report.verdict.simple);
  j["basis"] = row.report.verdict.basis;
  if (row.report.oracle.used) {
    j["oracle_saturated"] = row.report.oracle.saturated;
    j["oracle_elements"] = row.report.oracle.element_count;
  }
  j["agreement"] = row.report.oracle.agreement;
  return j;
}

void print_corpus_table(const std::vector<CorpusRow>& rows, std::ostream& os) {
  for (const auto& row : rows) {
    os << row.entry->name;
    for (size_t i = row.entry->name.size(); i < 26; ++i) os << ' ';
    os << " si " << tri_str(row.report.verdict.si) << "  simple "
       << tri_str(row.report.verdict.simple);
    if (row.report.oracle.used) {
      os << "  oracle[" << (row.report.oracle.saturated ? "saturated" : "bounded") << " "
         << row.report.oracle.element_count << "] " << row.report.oracle.agreement;
    }
    if (!row.report.verdict.basis.empty()) {
      os << "  (";
      for (size_t i = 0; i < row.report.verdict.basis.size(); ++i)
        os << (i ? "; " : "") << row.report.verdict.basis[i];
      os << ")";
    }
    os << "\n";
  }
}

int cmd_classify(const std::string& input, const std::string& inline_json, int oracle_max_len,
                 int max_elems, bool json) {
  MatrixDocument doc = load_matrix(input, inline_json);
  bool clash = false;
  Report r = make_report(doc, oracle_max_len, max_elems, &clash);
  std::cout << (json ? report_json(r) + "\n" : report_text(r));
  return clash ? kExitDisagreement : kExitOk;
}

int cmd_oracle(const std::string& input, const std::string& inline_json, int max_len,
               int max_elems, bool include_adjoints) {
  MatrixDocument doc = load_matrix(input, inline_json);
  ClosureResult closure = generate_closure({doc.matrix}, include_adjoints, max_len, max_elems);
  std::cout << closure_json(closure) << "\n";
  return kExitOk;
}

int cmd_reduce(const std::string& word_text, const std::string& input,
               const std::string& inline_json, bool json) {
  MatrixDocument doc = load_matrix(input, inline_json);
  Word w = parse_word(word_text);
  RankOneProfile prof = profile(doc.matrix);
  ScaledMonomial sm = reduce_rank_one(w, prof);
  ExactMatrix direct = evaluate_word(w, doc.matrix);
  ExactMatrix via_monomial = monomial_value(sm, doc.matrix);
  bool sound = (direct == via_monomial);

  if (json) {
    ordered_json j;
    j["word"] = word_str(w);
    j["monomial"] = monomial_str(sm);
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < direct.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < direct.cols(); ++c) row.push_back(direct.at(i, c).str());
      rows.push_back(row);
    }
    j["value"] = rows;
    j["sound"] = sound;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << word_str(w) << " -> " << monomial_str(sm) << "\n";
    for (int i = 0; i < direct.rows(); ++i) {
      std::cout << "  [ ";
      for (int c = 0; c < direct.cols(); ++c)
        std::cout << (c ? ", " : "") << direct.at(i, c).str();
      std::cout << " ]\n";
    }
    if (!sound) std::cout << "SOUNDNESS BREACH: monomial value differs from direct evaluation\n";
  }
  return sound ? kExitOk : kExitDisagreement;
}

int cmd_trace_norm(const std::string& a_text, const std::string& s_text, bool json) {
  GaussianRational a = parse_entry(a_text);
  Rational s = parse_rational(s_text);
  if (a.is_zero()) throw ParseError("a must be nonzero", 0);
  if (s.sign() <= 0) throw ParseError("s must be positive", 0);

  ModulusSolution mod = minimal_modulus_solution(a.abs_sq(), s);
  std::optional<TraceNormWitness> w = decide_trace_norm(a, s);
  std::string failing_stage;
  if (!w) failing_stage = mod.kind == ModulusSolution::Kind::None ? "modulus" : "argument";

  if (json) {
    ordered_json j;
    j["a"] = a.str();
    j["s"] = s.str();
    if (w) {
      j["witness"] = {{"m", w->m}, {"n", w->n}, {"l", w->l}};
      j["verified"] = verify_witness(a, s, *w);
    } else {
      j["witness"] = nullptr;
      j["failing_stage"] = failing_stage;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    if (w) {
      std::cout << "witness (m, n, l) = (" << w->m << ", " << w->n << ", " << w->l << ")\n"
                << "verified: a^m conj(a)^n s^l = 1 exactly\n";
    } else {
      std::cout << "none (" << failing_stage << " stage)\n";
    }
  }
  return kExitOk;
}

int cmd_corpus(bool run_all, int oracle_max_len, int max_elems, bool json) {
  bool clash = false;
  auto rows = run_corpus(run_all, oracle_max_len, max_elems, &clash);
  if (json) {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) arr.push_back(corpus_row_json(row));
    std::cout << arr.dump(2) << "\n";
  } else {
    print_corpus_table(rows, std::cout);
  }
  return clash ? kExitDisagreement : kExitOk;
}

int cmd_crosscheck(int oracle_max_len, int max_elems, std::uint64_t seed, int unitaries,
                   bool json) {
  bool clash = false;
  auto rows = run_corpus(true, oracle_max_len, max_elems, &clash);

  // Unitary-invariance sweep: the classifier verdict may not change under
  // exact unitary conjugation.
  int invariance_failures = 0;
  for (const auto& row : rows) {
    const ExactMatrix& t = row.entry->matrix;
    for (int k = 0; k < unitaries; ++k) {
      ExactUnitary u = exact_unitary(t.rows(), seed + static_cast<std::uint64_t>(k));
      Verdict v = classify(conjugate(t, u));
      if (v.si != row.report.verdict.si || v.simple != row.report.verdict.simple)
        ++invariance_failures;
    }
  }

  if (json) {
    ordered_json j;
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows) arr.push_back(corpus_row_json(row));
    j["rows"] = arr;
    j["unitary_invariance_failures"] = invariance_failures;
    j["disagreement"] = clash;
    std::cout << j.dump(2) << "\n";
  } else {
    print_corpus_table(rows, std::cout);
    std::cout << "unitary invariance: "
              << (invariance_failures == 0 ? "ok" : std::to_string(invariance_failures) + " failures")
              << " (" << unitaries << " unitaries per matrix, seed " << seed << ")\n";
  }
  return (clash || invariance_failures > 0) ? kExitDisagreement : kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"silab: exact classification of singly generated selfadjoint matrix semigroups"};
  app.require_subcommand(1);

  std::string input, inline_json, word_text, a_text, s_text;
  int oracle_max_len = 0;
  int max_elems = default_max_elems();
  bool json = false;
  bool run_all = false;
  bool no_adjoints = false;
  std::uint64_t seed = 1;
  int unitaries = 5;
  int max_len = 8;

  auto add_matrix_opts = [&](CLI::App* cmd) {
    cmd->add_option("INPUT", input, "matrix JSON file, '-' for stdin, or a corpus name");
    cmd->add_option("--inline", inline_json, "matrix JSON given inline");
  };

  auto* classify_cmd = app.add_subcommand("classify", "classify S(T, T*) for a matrix T");
  add_matrix_opts(classify_cmd);
  classify_cmd->add_option("--oracle-max-len", oracle_max_len,
                           "also run the closure oracle up to this word length (0 = off)");
  classify_cmd->add_option("--max-elems", max_elems, "closure element cap");
  classify_cmd->add_flag("--json", json, "emit JSON");

  auto* oracle_cmd = app.add_subcommand("oracle", "enumerate the closure of {T, T*}");
  add_matrix_opts(oracle_cmd);
  oracle_cmd->add_option("--max-len", max_len, "maximum word length");
  oracle_cmd->add_option("--max-elems", max_elems, "closure element cap");
  oracle_cmd->add_flag("--no-adjoints", no_adjoints, "do not adjoin adjoints of the generators");

  auto* reduce_cmd = app.add_subcommand("reduce", "reduce a word over {T, t} to its scaled monomial");
  reduce_cmd->add_option("WORD", word_text, "word over {T, t}, e.g. TtT")->required();
  add_matrix_opts(reduce_cmd);
  reduce_cmd->add_flag("--json", json, "emit JSON");

  auto* tn_cmd = app.add_subcommand("trace-norm", "decide the trace-norm condition for (a, s)");
  tn_cmd->add_option("A", a_text, "trace value a (entry syntax)")->required();
  tn_cmd->add_option("S", s_text, "norm-squared value s (positive rational)")->required();
  tn_cmd->add_flag("--json", json, "emit JSON");

  auto* corpus_cmd = app.add_subcommand("corpus", "classify the built-in corpus");
  corpus_cmd->add_flag("--run-all", run_all, "also run the closure oracle per matrix");
  corpus_cmd->add_option("--oracle-max-len", max_len, "oracle word length for --run-all");
  corpus_cmd->add_option("--max-elems", max_elems, "closure element cap");
  corpus_cmd->add_flag("--json", json, "emit JSON");

  auto* cross_cmd = app.add_subcommand("crosscheck",
                                       "corpus + oracle agreement + unitary invariance");
  cross_cmd->add_option("--oracle-max-len", max_len, "oracle word length");
  cross_cmd->add_option("--max-elems", max_elems, "closure element cap");
  cross_cmd->add_option("--seed", seed, "base seed for the exact unitaries");
  cross_cmd->add_option("--unitaries", unitaries, "unitaries per matrix");
  cross_cmd->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitParse;
  }

  try {
    if (classify_cmd->parsed())
      return cmd_classify(input, inline_json, oracle_max_len, max_elems, json);
    if (oracle_cmd->parsed())
      return cmd_oracle(input, inline_json, max_len, max_elems, !no_adjoints);
    if (reduce_cmd->parsed()) return cmd_reduce(word_text, input, inline_json, json);
    if (tn_cmd->parsed()) return cmd_trace_norm(a_text, s_text, json);
    if (corpus_cmd->parsed()) return cmd_corpus(run_all, max_len, max_elems, json);
    if (cross_cmd->parsed()) return cmd_crosscheck(max_len, max_elems, seed, unitaries, json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace silab
