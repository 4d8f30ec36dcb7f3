#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace asrqe {

// Lowercased, punctuation-free word token list. Every WER computation in the
// toolkit goes through this normalization, both for evaluation and for the
// pair-weight WER used during training.
struct NormalizedText {
  std::vector<std::string> tokens;

  // Tokens joined by single spaces. normalize(joined()) reproduces `tokens`.
  std::string joined() const;

  bool operator==(const NormalizedText&) const = default;
};

// Unicode-aware lowercasing, strips general categories P*, splits on any
// whitespace run. Empty input yields an empty token list.
NormalizedText normalize(std::string_view text);

}  // namespace asrqe
