#pragma once

#include "asrqe/text_norm.hpp"

namespace asrqe {

struct WerBreakdown {
  int substitutions = 0;
  int deletions = 0;
  int insertions = 0;
  int reference_length = 0;
  double wer = 0.0;

  int edits() const { return substitutions + deletions + insertions; }
};

// Word-level minimum edit distance with unit costs. Ties between one
// substitution and a delete+insert pair resolve to the substitution; only the
// counts are contractual, not the alignment itself.
// Throws DegenerateInputError when the reference is empty.
WerBreakdown wer(const NormalizedText& reference, const NormalizedText& hypothesis);

// Corpus-level aggregation: total errors over total reference words.
double corpus_wer(const std::vector<WerBreakdown>& per_utterance);

}  // namespace asrqe
