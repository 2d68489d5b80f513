#pragma once

#include <optional>
#include <span>
#include <vector>

namespace lexistat {

/// Pearson correlation; nothing when either side has zero variance.
/// Inputs must have equal length >= 2.
std::optional<double> pearson(std::span<const double> x,
                              std::span<const double> y);

/// 1-based fractional ranks, ties averaged (midranks).
std::vector<double> midranks(std::span<const double> values);

/// Spearman rank correlation (Pearson on midranks).
std::optional<double> spearman(std::span<const double> x,
                               std::span<const double> y);

struct OlsLine {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y = intercept + slope * x; nothing when x is
/// degenerate (fewer than 2 points or zero spread).
std::optional<OlsLine> ols(std::span<const double> x,
                           std::span<const double> y);

}  // namespace lexistat
