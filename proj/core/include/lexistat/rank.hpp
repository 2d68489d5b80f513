#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lexistat/stability.hpp"

namespace lexistat {

/// Uniform histogram over [0,1]. A value exactly on an interior edge falls
/// into the higher bin; 1.0 falls into the last bin.
struct Histogram {
  double bin_width = 0.02;
  std::vector<std::size_t> counts;
  std::size_t total = 0;  // number of defined S values

  double lower_edge(std::size_t bin) const {
    return static_cast<double>(bin) * bin_width;
  }
  double upper_edge(std::size_t bin) const {
    double e = static_cast<double>(bin + 1) * bin_width;
    return e < 1.0 ? e : 1.0;
  }
};

struct RankEntry {
  std::size_t rank = 0;  // 1-based
  std::size_t meaning = 0;
  std::string label;
  double s = 0.0;
};

/// Meanings sorted by descending stability; ties broken by ascending
/// meaning index. Meanings without a defined S are listed separately.
struct RankCurve {
  std::vector<RankEntry> entries;
  std::vector<std::size_t> excluded;
  std::string tie_rule = "ascending-meaning-index";
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t lo = 0;  // fitted rank range, inclusive
  std::size_t hi = 0;
  std::vector<double> residuals;  // over the whole curve, index = rank-1
};

/// Top-n overlap m(n) and its ratio p(n) = m(n) / (n^2 / M) to the random
/// coincidence expectation, over the M meaning labels shared by the two
/// reports. Labels present in only one report are excluded and listed.
struct OverlapPoint {
  std::size_t n = 0;
  std::size_t m = 0;
  double p = 0.0;
};

struct OverlapCurve {
  std::vector<OverlapPoint> points;       // n = 1..shared_labels
  std::size_t shared_labels = 0;
  std::vector<std::string> only_in_a;
  std::vector<std::string> only_in_b;
};

Histogram stability_histogram(const StabilityReport& report,
                              double bin_width = 0.02);

RankCurve rank_curve(const StabilityReport& report);

/// OLS of S against rank over ranks [lo, hi] inclusive (defaults match the
/// 51..180 window used for 200-item lists). Residuals cover every rank.
LinearFit linear_fit(const RankCurve& curve, std::size_t lo = 51,
                     std::size_t hi = 180);

/// Pearson correlation of S over label-matched meanings.
double pearson_correlation(const StabilityReport& a, const StabilityReport& b);

/// Number of labels common to the two top-n ranking prefixes (over the
/// shared-label universe).
std::size_t top_n_overlap(const StabilityReport& a, const StabilityReport& b,
                          std::size_t n);

OverlapCurve overlap_ratio(const StabilityReport& a, const StabilityReport& b);

}  // namespace lexistat
