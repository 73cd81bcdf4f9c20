#include "silab/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace silab {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string gen_word_str(const GenWord& w, int generator_count) {
  if (w.empty()) return "I";
  std::string out;
  if (generator_count <= 2) {
    for (int g : w) out += (g == 0 ? 'T' : 't');
    return out;
  }
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

std::optional<int> ClosureResult::find(const ExactMatrix& m) const {
  auto it = index_by_key.find(canonical_key(m));
  if (it == index_by_key.end()) return std::nullopt;
  return it->second;
}

ClosureResult generate_closure(const std::vector<ExactMatrix>& generators, bool include_adjoints,
                               int max_len, int max_elems) {
  if (generators.empty()) throw std::invalid_argument("generate_closure: no generators");
  if (max_len < 1 || max_elems < 1)
    throw std::invalid_argument("generate_closure: bounds must be positive");
  const int dim = generators.front().rows();
  for (const auto& g : generators) {
    if (!g.is_square() || g.rows() != dim)
      throw std::invalid_argument("generate_closure: generators must be square of equal dimension");
  }

  ClosureResult res;
  res.dim = dim;
  {
    std::unordered_map<std::string, int> seen;
    auto add_gen = [&](const ExactMatrix& g) {
      std::string k = canonical_key(g);
      if (seen.emplace(k, static_cast<int>(res.generators.size())).second)
        res.generators.push_back(g);
    };
    for (const auto& g : generators) add_gen(g);
    if (include_adjoints)
      for (const auto& g : generators) add_gen(adjoint(g));
  }
  res.generator_count = static_cast<int>(res.generators.size());

  // Layer of words of length 1.
  struct Pending {
    std::string key;
    ExactMatrix value;
    GenWord word;
  };
  auto flush_layer = [&](std::vector<Pending>& layer, std::vector<int>& indices) {
    std::sort(layer.begin(), layer.end(),
              [](const Pending& a, const Pending& b) { return a.key < b.key; });
    indices.clear();
    for (auto& p : layer) {
      int idx = static_cast<int>(res.elements.size());
      res.index_by_key.emplace(p.key, idx);
      res.elements.push_back(std::move(p.value));
      res.provenance.push_back(std::move(p.word));
      indices.push_back(idx);
    }
    layer.clear();
  };

  std::vector<Pending> layer;
  std::vector<int> frontier;
  {
    std::unordered_map<std::string, bool> in_layer;
    for (int g = 0; g < res.generator_count; ++g) {
      std::string k = canonical_key(res.generators[g]);
      if (in_layer.emplace(k, true).second)
        layer.push_back({std::move(k), res.generators[g], GenWord{g}});
    }
  }
  flush_layer(layer, frontier);
  res.max_len_reached = 1;

  for (int len = 2; len <= max_len; ++len) {
    std::unordered_map<std::string, bool> in_layer;
    for (int idx : frontier) {
      for (int g = 0; g < res.generator_count; ++g) {
        ExactMatrix prod = res.elements[idx] * res.generators[g];
        std::string k = canonical_key(prod);
        if (res.index_by_key.count(k) || in_layer.count(k)) continue;
        in_layer.emplace(k, true);
        GenWord w = res.provenance[idx];
        w.push_back(g);
        layer.push_back({std::move(k), std::move(prod), std::move(w)});
      }
    }
    res.max_len_reached = len;
    if (layer.empty()) {
      res.saturated = true;
      break;
    }
    flush_layer(layer, frontier);
    if (static_cast<int>(res.elements.size()) >= max_elems) break;
  }
  return res;
}

std::vector<int> principal_ideal(const ClosureResult& s, int element) {
  if (element < 0 || element >= static_cast<int>(s.elements.size()))
    throw std::invalid_argument("principal_ideal: invalid element reference");
  const ExactMatrix& a = s.elements[element];
  std::vector<char> member(s.elements.size(), 0);
  member[element] = 1;

  auto note = [&](const ExactMatrix& m) {
    if (auto idx = s.find(m)) member[*idx] = 1;
    // On a bounded closure the product may fall outside the stored set.
  };

  // XA and AX, collecting the distinct XA values for the XAY pass.
  std::vector<ExactMatrix> left_products;
  {
    std::unordered_map<std::string, bool> seen;
    for (const auto& x : s.elements) {
      ExactMatrix xa = x * a;
      note(xa);
      note(a * x);
      std::string k = canonical_key(xa);
      if (seen.emplace(k, true).second) left_products.push_back(std::move(xa));
    }
  }
  for (const auto& xa : left_products)
    for (const auto& y : s.elements) note(xa * y);

  std::vector<int> out;
  for (size_t i = 0; i < member.size(); ++i)
    if (member[i]) out.push_back(static_cast<int>(i));
  return out;
}

namespace {

// Nonselfadjoint elements in provenance order (shortest generating word
// first), so certificates land on the generators themselves when possible.
std::vector<int> nonselfadjoint_elements(const ClosureResult& s) {
  std::vector<int> out;
  for (size_t i = 0; i < s.elements.size(); ++i)
    if (s.elements[i] != adjoint(s.elements[i])) out.push_back(static_cast<int>(i));
  std::sort(out.begin(), out.end(), [&](int x, int y) {
    if (s.provenance[x].size() != s.provenance[y].size())
      return s.provenance[x].size() < s.provenance[y].size();
    return s.provenance[x] < s.provenance[y];
  });
  return out;
}

// Connected components of the index-support graph of the generators. Every
// element of the true (possibly infinite) semigroup is block-diagonal with
// respect to this partition, because matrices supported inside the blocks
// are closed under products.
std::vector<int> support_components(const ClosureResult& s) {
  const int n = s.dim;
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (const auto& g : s.generators)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!g.at(i, j).is_zero()) unite(i, j);
  std::vector<int> comp(n);
  std::map<int, int> relabel;
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    auto it = relabel.emplace(r, static_cast<int>(relabel.size())).first;
    comp[i] = it->second;
  }
  return comp;
}

std::uint64_t block_mask(const ExactMatrix& m, const std::vector<int>& comp) {
  std::uint64_t mask = 0;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) {
        mask |= 1ULL << comp[i];
        mask |= 1ULL << comp[j];
      }
  return mask;
}

}  // namespace

OracleAnswer check_si(const ClosureResult& s) {
  const auto nsa = nonselfadjoint_elements(s);
  if (nsa.empty())
    return {OracleAnswer::Value::Yes, std::nullopt, "all elements selfadjoint"};

  if (s.saturated) {
    for (int idx : nsa) {
      auto ideal = principal_ideal(s, idx);
      auto aidx = s.find(adjoint(s.elements[idx]));
      bool ok = aidx && std::binary_search(ideal.begin(), ideal.end(), *aidx);
      if (!ok) {
        return {OracleAnswer::Value::No, std::nullopt,
                "adjoint of element #" + std::to_string(idx) + " (word " +
                    gen_word_str(s.provenance[idx], s.generator_count) +
                    ") is not in its principal ideal"};
      }
    }
    int first = nsa.front();
    auto cert = find_certificate(s, adjoint(s.elements[first]), s.elements[first]);
    OracleAnswer ans{OracleAnswer::Value::Yes, std::nullopt,
                     "every principal ideal is selfadjoint (saturated closure)"};
    if (cert) ans.certificate = {cert->first, cert->second, first};
    return ans;
  }

  // Bounded mode: a verified certificate per stored nonselfadjoint element.
  std::optional<OracleAnswer::Certificate> first_cert;
  for (int idx : nsa) {
    auto cert = find_certificate(s, adjoint(s.elements[idx]), s.elements[idx]);
    if (!cert)
      return {OracleAnswer::Value::Inconclusive, std::nullopt,
              "closure not saturated and no certificate found for element #" +
                  std::to_string(idx) + " (word " +
                  gen_word_str(s.provenance[idx], s.generator_count) + ") within bound"};
    if (!first_cert) first_cert = {cert->first, cert->second, idx};
  }
  return {OracleAnswer::Value::Yes, first_cert,
          "certificates verified for all nonselfadjoint elements within bound"};
}

OracleAnswer check_simple(const ClosureResult& s) {
  const int n = static_cast<int>(s.elements.size());

  if (s.saturated) {
    for (int idx = 0; idx < n; ++idx) {
      if (s.elements[idx].is_zero()) continue;  // {0} is disregarded
      auto ideal = principal_ideal(s, idx);
      if (static_cast<int>(ideal.size()) != n) {
        int missing = -1;
        for (int j = 0, k = 0; j < n; ++j) {
          if (k < static_cast<int>(ideal.size()) && ideal[k] == j) {
            ++k;
          } else {
            missing = j;
            break;
          }
        }
        return {OracleAnswer::Value::No, std::nullopt,
                "principal ideal of element #" + std::to_string(idx) + " (word " +
                    gen_word_str(s.provenance[idx], s.generator_count) +
                    ") does not contain element #" + std::to_string(missing) + " (word " +
                    gen_word_str(s.provenance[missing], s.generator_count) + ")"};
      }
    }
    return {OracleAnswer::Value::Yes, std::nullopt,
            "every nonzero principal ideal is the whole semigroup (saturated closure)"};
  }

  // Bounded mode: the block-zero separation argument. All semigroup
  // elements are block-diagonal for the generator support partition, so an
  // ideal generated by an element vanishing on a block stays zero on that
  // block; any element nonzero there lies outside the ideal.
  auto comp = support_components(s);
  int ncomp = 1 + *std::max_element(comp.begin(), comp.end());
  if (ncomp >= 2 && ncomp <= 64) {
    std::vector<std::uint64_t> masks(n);
    for (int i = 0; i < n; ++i) masks[i] = block_mask(s.elements[i], comp);
    for (int a = 0; a < n; ++a) {
      if (s.elements[a].is_zero()) continue;
      for (int b = 0; b < n; ++b) {
        if (s.elements[b].is_zero()) continue;
        if (masks[b] & ~masks[a]) {
          return {OracleAnswer::Value::No, std::nullopt,
                  "block-zero separation: element #" + std::to_string(b) +
                      " is nonzero on a diagonal block where the ideal of element #" +
                      std::to_string(a) + " vanishes"};
        }
      }
    }
  }
  return {OracleAnswer::Value::Inconclusive, std::nullopt,
          "closure not saturated; no separating block invariant found"};
}

std::optional<std::pair<GenWord, GenWord>> find_certificate(const ClosureResult& s,
                                                            const ExactMatrix& target,
                                                            const ExactMatrix& a) {
  if (target.rows() != s.dim || a.rows() != s.dim || !target.is_square() || !a.is_square())
    throw std::invalid_argument("find_certificate: dimension mismatch");

  // Candidates: the identity (empty word) plus all stored elements, ordered
  // by provenance length then lexicographic provenance.
  struct Cand {
    GenWord word;
    const ExactMatrix* value;
  };
  ExactMatrix id = ExactMatrix::identity(s.dim);
  std::vector<Cand> cands;
  cands.push_back({GenWord{}, &id});
  std::vector<int> order(s.elements.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (s.provenance[x].size() != s.provenance[y].size())
      return s.provenance[x].size() < s.provenance[y].size();
    return s.provenance[x] < s.provenance[y];
  });
  for (int i : order) cands.push_back({s.provenance[i], &s.elements[i]});

  std::vector<std::vector<int>> by_len;
  for (size_t c = 0; c < cands.size(); ++c) {
    size_t len = cands[c].word.size();
    if (by_len.size() <= len) by_len.resize(len + 1);
    by_len[len].push_back(static_cast<int>(c));
  }

  // Left products X * A, memoized per candidate.
  std::vector<std::optional<ExactMatrix>> xa(cands.size());
  auto left = [&](int c) -> const ExactMatrix& {
    if (!xa[c]) xa[c] = *cands[c].value * a;
    return *xa[c];
  };

  size_t max_len = by_len.size() - 1;
  for (size_t total = 0; total <= 2 * max_len; ++total) {
    for (size_t lx = 0; lx <= total && lx <= max_len; ++lx) {
      size_t ly = total - lx;
      if (ly > max_len) continue;
      for (int cx : by_len[lx]) {
        for (int cy : by_len[ly]) {
          if (left(cx) * *cands[cy].value == target)
            return std::make_pair(cands[cx].word, cands[cy].word);
        }
      }
    }
  }
  return std::nullopt;
}

std::string closure_json(const ClosureResult& s) {
  ordered_json j;
  j["dim"] = s.dim;
  j["generator_count"] = s.generator_count;
  auto matrix_rows = [](const ExactMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
      ordered_json row = ordered_json::array();
      for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(i, c).str());
      rows.push_back(row);
    }
    return rows;
  };
  j["generators"] = ordered_json::array();
  for (const auto& g : s.generators) j["generators"].push_back(matrix_rows(g));
  j["elements"] = ordered_json::array();
  for (size_t i = 0; i < s.elements.size(); ++i) {
    ordered_json e;
    e["rows"] = matrix_rows(s.elements[i]);
    e["provenance"] = gen_word_str(s.provenance[i], s.generator_count);
    j["elements"].push_back(e);
  }
  j["saturated"] = s.saturated;
  j["max_len_reached"] = s.max_len_reached;
  return j.dump(2);
}

}  // namespace silab
