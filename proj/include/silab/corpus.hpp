#pragma once

#include <string>
#include <vector>

#include "silab/matrix.hpp"

namespace silab {

/// A named corpus matrix. The six word_designated rank-one entries are the
/// fixed targets of the word-engine soundness sweep.
struct CorpusEntry {
  std::string name;
  ExactMatrix matrix;
  bool word_designated;
  std::string note;
};

/// The built-in corpus: nilpotents, projections and scaled projections,
/// selfadjoint families, partial isometries with real trace, trace-norm
/// witnesses, normal families, direct-sum examples, and non-examples.
/// Embedded in the binary; deterministic order.
const std::vector<CorpusEntry>& corpus();

const CorpusEntry& corpus_entry(const std::string& name);

}  // namespace silab
