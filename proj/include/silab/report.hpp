#pragma once

#include <optional>
#include <string>

#include "silab/classifier.hpp"
#include "silab/entry_io.hpp"
#include "silab/oracle.hpp"

namespace silab {

/// Oracle side of a classification report.
struct OracleBlock {
  bool used = false;
  int max_len = 0;
  int max_elems = 0;
  bool saturated = false;
  int element_count = 0;
  std::optional<OracleAnswer> si;
  std::optional<OracleAnswer> simple;
  /// One of "agree", "oracle-inconclusive", "not-run"; "disagree" signals an
  /// exact classifier/oracle contradiction and never occurs on the corpus.
  std::string agreement = "not-run";
};

struct Report {
  MatrixDocument input;
  Verdict verdict;
  OracleBlock oracle;
  double elapsed_ms = 0.0;  // shown in the text rendering only, so JSON stays byte-stable
};

/// Runs the classifier and, when oracle_max_len > 0, the oracle, and fills
/// the agreement field. `disagreement` is set when a saturated oracle
/// verdict contradicts a definite classifier verdict (the CLI exits 3).
Report make_report(const MatrixDocument& doc, int oracle_max_len, int max_elems,
                   bool* disagreement = nullptr);

std::string verdict_json(const Verdict& v);
std::string report_json(const Report& r);
std::string report_text(const Report& r);

std::string ppi_str(const PowerPartialIsometryResult& p);

}  // namespace silab
