#include "asrqe/wer.hpp"

#include <vector>

#include "asrqe/errors.hpp"

namespace asrqe {

WerBreakdown wer(const NormalizedText& reference, const NormalizedText& hypothesis) {
  const auto& ref = reference.tokens;
  const auto& hyp = hypothesis.tokens;
  const int m = static_cast<int>(ref.size());
  const int n = static_cast<int>(hyp.size());
  if (m == 0) {
    throw DegenerateInputError("wer: empty reference after normalization");
  }

  std::vector<std::vector<int>> dist(m + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= m; ++i) dist[i][0] = i;
  for (int j = 0; j <= n; ++j) dist[0][j] = j;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (ref[i - 1] == hyp[j - 1]) {
        dist[i][j] = dist[i - 1][j - 1];
      } else {
        dist[i][j] = 1 + std::min({dist[i - 1][j - 1], dist[i - 1][j], dist[i][j - 1]});
      }
    }
  }

  WerBreakdown out;
  out.reference_length = m;
  int i = m;
  int j = n;
  // Backtrace preferring matches, then substitutions, over delete/insert.
  while (i > 0 || j > 0) {
    if (i > 0 && j > 0 && ref[i - 1] == hyp[j - 1] && dist[i][j] == dist[i - 1][j - 1]) {
      --i;
      --j;
    } else if (i > 0 && j > 0 && dist[i][j] == dist[i - 1][j - 1] + 1) {
      ++out.substitutions;
      --i;
      --j;
    } else if (i > 0 && dist[i][j] == dist[i - 1][j] + 1) {
      ++out.deletions;
      --i;
    } else {
      ++out.insertions;
      --j;
    }
  }
  out.wer = static_cast<double>(out.edits()) / m;
  return out;
}

double corpus_wer(const std::vector<WerBreakdown>& per_utterance) {
  long long errors = 0;
  long long ref_words = 0;
  for (const auto& b : per_utterance) {
    errors += b.edits();
    ref_words += b.reference_length;
  }
  if (ref_words == 0) {
    throw DegenerateInputError("corpus_wer: zero total reference words");
  }
  return static_cast<double>(errors) / static_cast<double>(ref_words);
}

}  // namespace asrqe
