#pragma once

#include <optional>
#include <span>
#include <vector>

namespace asrqe {

// Each coefficient is nullopt when undefined (constant input vector), never a
// silent zero.
struct CorrelationTriple {
  std::optional<double> pearson;
  std::optional<double> spearman;
  std::optional<double> kendall;
};

// Standard Pearson product-moment coefficient. Throws InvalidArgumentError on
// length mismatch or fewer than two observations.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);

// Pearson of average-tie ranks.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

// Kendall tau-b (tie-corrected).
std::optional<double> kendall(std::span<const double> x, std::span<const double> y);

CorrelationTriple correlation_triple(std::span<const double> x, std::span<const double> y);

enum class RankDirection { ascending, descending };

// Average ranks with rank 1 the best value under `direction` (ascending:
// smallest value ranks first).
std::vector<double> rank_within_sample(std::span<const double> values, RankDirection direction);

}  // namespace asrqe
