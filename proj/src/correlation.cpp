#include "asrqe/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "asrqe/errors.hpp"

namespace asrqe {
namespace {

void check_lengths(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) {
    throw InvalidArgumentError("correlation: input lengths differ");
  }
  if (x.size() < 2) {
    throw InvalidArgumentError("correlation: need at least two observations");
  }
}

bool is_constant(std::span<const double> v) {
  return std::all_of(v.begin(), v.end(), [&](double a) { return a == v.front(); });
}

}  // namespace

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y);
  if (is_constant(x) || is_constant(y)) return std::nullopt;
  const size_t n = x.size();
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0;
  double sxx = 0.0;
  double syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> rank_within_sample(std::span<const double> values, RankDirection direction) {
  if (values.empty()) {
    throw InvalidArgumentError("rank_within_sample: empty input");
  }
  const size_t n = values.size();
  std::vector<size_t> order(n);
  std::iota(order.begin(), order.end(), size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return direction == RankDirection::ascending ? values[a] < values[b] : values[a] > values[b];
  });
  std::vector<double> ranks(n, 0.0);
  size_t i = 0;
  while (i < n) {
    size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    // Tied block [i, j] shares the average of ranks i+1 .. j+1.
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
    i = j + 1;
  }
  return ranks;
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y);
  if (is_constant(x) || is_constant(y)) return std::nullopt;
  const auto rx = rank_within_sample(x, RankDirection::ascending);
  const auto ry = rank_within_sample(y, RankDirection::ascending);
  return pearson(rx, ry);
}

std::optional<double> kendall(std::span<const double> x, std::span<const double> y) {
  check_lengths(x, y);
  if (is_constant(x) || is_constant(y)) return std::nullopt;
  const size_t n = x.size();
  long long concordant = 0;
  long long discordant = 0;
  long long ties_x = 0;  // tied in x only
  long long ties_y = 0;  // tied in y only
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j];
      const double dy = y[i] - y[j];
      if (dx == 0.0 && dy == 0.0) continue;
      if (dx == 0.0) {
        ++ties_x;
      } else if (dy == 0.0) {
        ++ties_y;
      } else if ((dx > 0.0) == (dy > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const double n1 = static_cast<double>(concordant + discordant + ties_x);
  const double n2 = static_cast<double>(concordant + discordant + ties_y);
  const double denom = std::sqrt(n1) * std::sqrt(n2);
  if (denom == 0.0) return std::nullopt;
  return static_cast<double>(concordant - discordant) / denom;
}

CorrelationTriple correlation_triple(std::span<const double> x, std::span<const double> y) {
  return CorrelationTriple{pearson(x, y), spearman(x, y), kendall(x, y)};
}

}  // namespace asrqe
