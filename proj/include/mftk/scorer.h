#ifndef MFTK_SCORER_H_
#define MFTK_SCORER_H_

#include <cstddef>

#include "mftk/foundation.h"
#include "mftk/text.h"

namespace mftk {

// Anything that maps a tokenized document to five foundation scores.
class Scorer {
 public:
  virtual ~Scorer() = default;

  virtual FoundationScores Score(const TokenizedDoc& tdoc) const = 0;

  // Number of tokens the scorer recognised (lexicon hits, or in-vocabulary
  // tokens for embedding scorers). Used by the length-bias diagnostic.
  virtual std::size_t CountMatches(const TokenizedDoc& tdoc) const = 0;
};

}  // namespace mftk

#endif  // MFTK_SCORER_H_
