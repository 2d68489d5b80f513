#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lexistat/matrix.hpp"
#include "lexistat/rank.hpp"
#include "lexistat/simulate.hpp"
#include "lexistat/stability.hpp"

namespace lexistat {

/// Number formatting for CSV output: 6 significant digits by default,
/// shortest round-trip representation when full is set. -0 is written as 0.
struct NumberFormat {
  bool full_precision = false;
  std::string operator()(double value) const;
};

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

// --- stability CSV: header "meaning,label,S,coverage"; S empty when absent.
std::string write_stability_csv(const StabilityReport& report,
                                const NumberFormat& fmt = {});
StabilityReport read_stability_csv(std::string_view content,
                                   const std::string& family = {});

// --- labeled square matrix CSV: header "language,<name>,...".
std::string write_matrix_csv(const DistanceMatrix& matrix,
                             const NumberFormat& fmt = {});
DistanceMatrix read_matrix_csv(std::string_view content);

// --- plot-ready tables.
std::string write_rank_csv(const RankCurve& curve, const LinearFit& fit,
                           const NumberFormat& fmt = {});
std::string write_rank_csv(const RankCurve& curve,
                           const NumberFormat& fmt = {});
std::string write_fit_csv(const LinearFit& fit, const NumberFormat& fmt = {});
std::string write_histogram_csv(const Histogram& histogram,
                                const NumberFormat& fmt = {});

/// Pearson value and shared-label count as leading "#" comment lines,
/// then the overlap table "n,m,p".
std::string write_overlap_csv(const OverlapCurve& curve, double pearson,
                              const NumberFormat& fmt = {});

/// Ground-truth rates of a simulation: configuration echoed as "#" comment
/// lines (including the RNG algorithm), then "label,lambda" rows at full
/// precision.
std::string write_truth_csv(const SimConfig& config,
                            const std::vector<std::string>& labels);

}  // namespace lexistat
