#include "silab/report.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace silab {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string answer_str(const OracleAnswer& a) {
  switch (a.value) {
    case OracleAnswer::Value::Yes: return "yes";
    case OracleAnswer::Value::No: return "no";
    default: return "inconclusive";
  }
}

// A definite oracle value compared against a definite classifier value;
// bounded (unsaturated) oracle answers never count as contradictions.
bool contradicts(TriState cls, const OracleAnswer& orc, bool saturated) {
  if (!saturated || cls == TriState::Unknown) return false;
  if (orc.value == OracleAnswer::Value::Inconclusive) return false;
  bool orc_yes = orc.value == OracleAnswer::Value::Yes;
  return (cls == TriState::Yes) != orc_yes;
}

ordered_json witness_node(const Verdict& v) {
  ordered_json w;
  if (v.witness) {
    w["kind"] = "trace-norm";
    w["m"] = v.witness->m;
    w["n"] = v.witness->n;
    w["l"] = v.witness->l;
  } else if (v.certificate) {
    w["kind"] = "certificate";
    w["left"] = word_str(v.certificate->left);
    w["right"] = word_str(v.certificate->right);
  }
  return w;
}

ordered_json verdict_node(const Verdict& v) {
  ordered_json j;
  j["si"] = tri_str(v.si);
  j["simple"] = tri_str(v.simple);
  j["basis"] = v.basis;
  ordered_json w = witness_node(v);
  if (!w.is_null() && !w.empty()) j["witness"] = w;
  ordered_json inv;
  inv["dim"] = v.invariants.dim;
  inv["rank"] = v.invariants.rank;
  inv["trace"] = v.invariants.trace.str();
  inv["norm_sq"] = v.invariants.norm_sq.str();
  inv["selfadjoint"] = v.invariants.selfadjoint;
  inv["normal"] = v.invariants.normal;
  inv["partial_isometry"] = v.invariants.partial_isometry;
  inv["power_partial_isometry"] = ppi_str(v.invariants.power_partial_isometry);
  j["invariants"] = inv;
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

}  // namespace

std::string ppi_str(const PowerPartialIsometryResult& p) {
  if (p.verified) return "verified-up-to-" + std::to_string(p.checked_up_to);
  return "false-at-" + std::to_string(p.failed_at);
}

Report make_report(const MatrixDocument& doc, int oracle_max_len, int max_elems,
                   bool* disagreement) {
  auto t0 = std::chrono::steady_clock::now();
  Report r{doc, classify(doc.matrix), OracleBlock{}, 0.0};
  if (disagreement) *disagreement = false;

  if (oracle_max_len > 0) {
    ClosureResult closure =
        generate_closure({doc.matrix}, /*include_adjoints=*/true, oracle_max_len, max_elems);
    r.oracle.used = true;
    r.oracle.max_len = oracle_max_len;
    r.oracle.max_elems = max_elems;
    r.oracle.saturated = closure.saturated;
    r.oracle.element_count = static_cast<int>(closure.elements.size());
    r.oracle.si = check_si(closure);
    r.oracle.simple = check_simple(closure);

    bool clash = contradicts(r.verdict.si, *r.oracle.si, closure.saturated) ||
                 contradicts(r.verdict.simple, *r.oracle.simple, closure.saturated);
    if (clash) {
      r.oracle.agreement = "disagree";
      if (disagreement) *disagreement = true;
    } else if (r.oracle.si->value == OracleAnswer::Value::Inconclusive &&
               r.oracle.simple->value == OracleAnswer::Value::Inconclusive) {
      r.oracle.agreement = "oracle-inconclusive";
    } else {
      r.oracle.agreement = "agree";
    }
  }

  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string verdict_json(const Verdict& v) { return verdict_node(v).dump(2); }

std::string report_json(const Report& r) {
  ordered_json j;
  ordered_json in;
  if (r.input.name) in["name"] = *r.input.name;
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < r.input.matrix.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < r.input.matrix.cols(); ++c) row.push_back(r.input.matrix.at(i, c).str());
    rows.push_back(row);
  }
  in["rows"] = rows;
  j["input"] = in;
  j["verdict"] = verdict_node(r.verdict);

  ordered_json o;
  o["used"] = r.oracle.used;
  if (r.oracle.used) {
    o["max_len"] = r.oracle.max_len;
    o["max_elems"] = r.oracle.max_elems;
    o["saturated"] = r.oracle.saturated;
    o["element_count"] = r.oracle.element_count;
    o["si"] = answer_str(*r.oracle.si);
    o["si_note"] = r.oracle.si->note;
    if (r.oracle.si->certificate) {
      o["si_certificate"] = {
          {"left", gen_word_str(r.oracle.si->certificate->left, 2)},
          {"right", gen_word_str(r.oracle.si->certificate->right, 2)},
          {"element", r.oracle.si->certificate->element}};
    }
    o["simple"] = answer_str(*r.oracle.simple);
    o["simple_note"] = r.oracle.simple->note;
  }
  o["agreement"] = r.oracle.agreement;
  j["oracle"] = o;
  return j.dump(2);
}

std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "matrix";
  if (r.input.name) os << " \"" << *r.input.name << "\"";
  os << " (" << r.input.matrix.rows() << "x" << r.input.matrix.cols() << ")\n";
  for (int i = 0; i < r.input.matrix.rows(); ++i) {
    os << "  [ ";
    for (int c = 0; c < r.input.matrix.cols(); ++c) {
      if (c) os << ", ";
      os << r.input.matrix.at(i, c).str();
    }
    os << " ]\n";
  }
  const auto& inv = r.verdict.invariants;
  os << "invariants: rank " << inv.rank << ", trace " << inv.trace.str() << ", norm_sq "
     << inv.norm_sq.str() << (inv.selfadjoint ? ", selfadjoint" : "")
     << (inv.normal ? ", normal" : "") << (inv.partial_isometry ? ", partial isometry" : "")
     << ", power partial isometry: " << ppi_str(inv.power_partial_isometry) << "\n";
  os << "verdict: si " << tri_str(r.verdict.si) << ", simple " << tri_str(r.verdict.simple);
  if (!r.verdict.basis.empty()) {
    os << "  [";
    for (size_t i = 0; i < r.verdict.basis.size(); ++i)
      os << (i ? "; " : "") << r.verdict.basis[i];
    os << "]";
  }
  os << "\n";
  if (r.verdict.witness)
    os << "witness: (m, n, l) = (" << r.verdict.witness->m << ", " << r.verdict.witness->n << ", "
       << r.verdict.witness->l << ")\n";
  if (r.verdict.certificate)
    os << "certificate: T* = " << word_str(r.verdict.certificate->left) << " . T . "
       << word_str(r.verdict.certificate->right) << "\n";
  if (!r.verdict.note.empty()) os << "note: " << r.verdict.note << "\n";
  if (r.oracle.used) {
    os << "oracle: max_len " << r.oracle.max_len << ", " << r.oracle.element_count << " elements, "
       << (r.oracle.saturated ? "saturated" : "not saturated") << "\n";
    os << "  si " << answer_str(*r.oracle.si) << " (" << r.oracle.si->note << ")\n";
    if (r.oracle.si->certificate)
      os << "  si certificate for element #" << r.oracle.si->certificate->element << ": X = "
         << gen_word_str(r.oracle.si->certificate->left, 2) << ", Y = "
         << gen_word_str(r.oracle.si->certificate->right, 2) << "\n";
    os << "  simple " << answer_str(*r.oracle.simple) << " (" << r.oracle.simple->note << ")\n";
  }
  os << "agreement: " << r.oracle.agreement << "\n";
  os << "elapsed: " << r.elapsed_ms << " ms\n";
  return os.str();
}

}  // namespace silab
