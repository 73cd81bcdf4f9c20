#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "silab/matrix.hpp"

namespace silab {

/// Word over the closure's generator list, as 0-based generator indices.
/// The empty word stands for the identity.
using GenWord = std::vector<int>;

std::string gen_word_str(const GenWord& w, int generator_count);

/// Deduplicated closure of a generator set under multiplication. Elements
/// appear in BFS layer order, key-sorted within each layer; each carries one
/// shortest generating word. `saturated` is true exactly when a full layer
/// added no new element, i.e. the stored set is closed under products.
struct ClosureResult {
  int dim = 0;
  std::vector<ExactMatrix> generators;  // deduplicated, adjoints appended when requested
  int generator_count = 0;
  std::vector<ExactMatrix> elements;
  std::vector<GenWord> provenance;
  bool saturated = false;
  int max_len_reached = 0;

  std::unordered_map<std::string, int> index_by_key;

  std::optional<int> find(const ExactMatrix& m) const;
};

struct OracleAnswer {
  enum class Value { Yes, No, Inconclusive } value;
  /// For SI "yes": words X, Y with eval(X) . A . eval(Y) = A* for the first
  /// nonselfadjoint element A (referenced by index).
  struct Certificate {
    GenWord left;
    GenWord right;
    int element;
  };
  std::optional<Certificate> certificate;
  std::string note;
};

/// BFS closure with canonical-key dedup. Stops early once saturated; stops
/// with saturated = false when max_len or max_elems is hit.
ClosureResult generate_closure(const std::vector<ExactMatrix>& generators, bool include_adjoints,
                               int max_len, int max_elems);

/// Principal ideal {A} u SA u AS u SAS as element indices, sorted. On a
/// saturated closure this is exact; on a bounded closure products falling
/// outside the stored set are dropped (membership is then a lower bound).
std::vector<int> principal_ideal(const ClosureResult& s, int element);

/// Is every principal ideal selfadjoint? Checks nonselfadjoint elements
/// only (ideals of selfadjoint elements are automatically selfadjoint).
/// Saturated: exact yes/no with certificate words on yes. Bounded: yes when
/// every stored nonselfadjoint element has a verified certificate within the
/// stored set, otherwise inconclusive.
OracleAnswer check_si(const ClosureResult& s);

/// Is the semigroup simple ({0} disregarded)? Saturated: exact, every
/// principal ideal of a nonzero element must be the whole element set.
/// Bounded: "no" only under the sound block-zero separation argument (a
/// common invariant block vanishing on one element's ideal but not on some
/// other element), otherwise inconclusive.
OracleAnswer check_simple(const ClosureResult& s);

/// Shortest-first deterministic search for words X, Y over the generators
/// (empty word = identity) with eval(X) . A . eval(Y) = target.
std::optional<std::pair<GenWord, GenWord>> find_certificate(const ClosureResult& s,
                                                            const ExactMatrix& target,
                                                            const ExactMatrix& a);

/// Closure dump: dims, generators, elements (entries as exact strings),
/// provenance words, saturated flag.
std::string closure_json(const ClosureResult& s);

}  // namespace silab
