#include "lexistat/rank.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "lexistat/error.hpp"
#include "lexistat/numeric.hpp"

namespace lexistat {

Histogram stability_histogram(const StabilityReport& report, double bin_width) {
  if (!(bin_width > 0.0) || bin_width > 1.0 || !std::isfinite(bin_width)) {
    throw Error("invalid-bin-width", "bin width must be in (0, 1]");
  }
  Histogram hist;
  hist.bin_width = bin_width;
  const auto bins = static_cast<std::size_t>(std::ceil(1.0 / bin_width - 1e-9));
  hist.counts.assign(std::max<std::size_t>(bins, 1), 0);
  for (const auto& item : report.items) {
    if (!item.s) continue;
    const double s = *item.s;
    std::size_t bin;
    if (s >= 1.0) {
      bin = hist.counts.size() - 1;
    } else {
      bin = std::min(hist.counts.size() - 1,
                     static_cast<std::size_t>(std::floor(s / bin_width)));
    }
    ++hist.counts[bin];
    ++hist.total;
  }
  return hist;
}

RankCurve rank_curve(const StabilityReport& report) {
  RankCurve curve;
  for (std::size_t m = 0; m < report.items.size(); ++m) {
    const auto& item = report.items[m];
    if (item.s) {
      curve.entries.push_back({0, m, item.label, *item.s});
    } else {
      curve.excluded.push_back(m);
    }
  }
  if (curve.entries.empty()) {
    throw Error("empty-report", "no meaning has a defined stability value");
  }
  std::sort(curve.entries.begin(), curve.entries.end(),
            [](const RankEntry& a, const RankEntry& b) {
              if (a.s != b.s) return a.s > b.s;
              return a.meaning < b.meaning;
            });
  for (std::size_t i = 0; i < curve.entries.size(); ++i) {
    curve.entries[i].rank = i + 1;
  }
  return curve;
}

LinearFit linear_fit(const RankCurve& curve, std::size_t lo, std::size_t hi) {
  const std::size_t len = curve.entries.size();
  if (lo < 1 || lo >= hi || hi > len) {
    throw Error("range-out-of-bounds",
                "fit range [" + std::to_string(lo) + "," + std::to_string(hi) +
                    "] invalid for a curve of length " + std::to_string(len));
  }
  if (hi - lo + 1 < 2) {
    throw Error("degenerate-range", "fit range holds fewer than 2 points");
  }
  std::vector<double> x, y;
  x.reserve(hi - lo + 1);
  y.reserve(hi - lo + 1);
  for (std::size_t r = lo; r <= hi; ++r) {
    x.push_back(static_cast<double>(r));
    y.push_back(curve.entries[r - 1].s);
  }
  auto line = ols(x, y);
  if (!line) {
    throw Error("degenerate-range", "fit range has zero rank spread");
  }
  LinearFit fit;
  fit.slope = line->slope;
  fit.intercept = line->intercept;
  fit.lo = lo;
  fit.hi = hi;
  fit.residuals.reserve(len);
  for (std::size_t r = 1; r <= len; ++r) {
    const double predicted = fit.intercept + fit.slope * static_cast<double>(r);
    fit.residuals.push_back(curve.entries[r - 1].s - predicted);
  }
  return fit;
}

namespace {

std::unordered_map<std::string, double> defined_by_label(
    const StabilityReport& report) {
  std::unordered_map<std::string, double> map;
  for (const auto& item : report.items) {
    if (item.s) map.emplace(item.label, *item.s);
  }
  return map;
}

// Rank curves of both reports restricted to their shared defined labels,
// order preserved.
struct SharedCurves {
  std::vector<std::string> a;  // labels by ascending rank in a
  std::vector<std::string> b;
  std::vector<std::string> only_in_a;
  std::vector<std::string> only_in_b;
};

SharedCurves shared_rank_curves(const StabilityReport& a,
                                const StabilityReport& b) {
  RankCurve ca = rank_curve(a);
  RankCurve cb = rank_curve(b);
  std::unordered_set<std::string> la, lb;
  for (const auto& e : ca.entries) la.insert(e.label);
  for (const auto& e : cb.entries) lb.insert(e.label);
  SharedCurves out;
  for (const auto& e : ca.entries) {
    if (lb.count(e.label)) {
      out.a.push_back(e.label);
    } else {
      out.only_in_a.push_back(e.label);
    }
  }
  for (const auto& e : cb.entries) {
    if (la.count(e.label)) {
      out.b.push_back(e.label);
    } else {
      out.only_in_b.push_back(e.label);
    }
  }
  return out;
}

}  // namespace

double pearson_correlation(const StabilityReport& a, const StabilityReport& b) {
  auto sb = defined_by_label(b);
  std::vector<double> xs, ys;
  for (const auto& item : a.items) {
    if (!item.s) continue;
    auto it = sb.find(item.label);
    if (it == sb.end()) continue;
    xs.push_back(*item.s);
    ys.push_back(it->second);
  }
  if (xs.size() < 2) {
    throw Error("insufficient-overlap",
                "need at least 2 shared meanings with defined stability, got " +
                    std::to_string(xs.size()));
  }
  auto r = pearson(xs, ys);
  if (!r) {
    throw Error("zero-variance",
                "stability values are constant on one side of the comparison");
  }
  return *r;
}

std::size_t top_n_overlap(const StabilityReport& a, const StabilityReport& b,
                          std::size_t n) {
  SharedCurves shared = shared_rank_curves(a, b);
  const std::size_t m = shared.a.size();
  if (n < 1 || n > m) {
    throw Error("invalid-n", "n must be in [1, " + std::to_string(m) +
                                 "], got " + std::to_string(n));
  }
  std::unordered_set<std::string> top_a(shared.a.begin(), shared.a.begin() + n);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (top_a.count(shared.b[i])) ++count;
  }
  return count;
}

OverlapCurve overlap_ratio(const StabilityReport& a, const StabilityReport& b) {
  SharedCurves shared = shared_rank_curves(a, b);
  const std::size_t m_total = shared.a.size();
  if (m_total == 0) {
    throw Error("insufficient-overlap", "the reports share no meaning labels");
  }
  OverlapCurve curve;
  curve.shared_labels = m_total;
  curve.only_in_a = std::move(shared.only_in_a);
  curve.only_in_b = std::move(shared.only_in_b);
  curve.points.reserve(m_total);

  std::unordered_map<std::string, int> membership;  // 1 = in A prefix, 2 = in B
  std::size_t m = 0;
  auto enter = [&](const std::string& label, int bit) {
    int& flags = membership[label];
    const bool was_shared = flags == 3;
    flags |= bit;
    if (!was_shared && flags == 3) ++m;
  };
  for (std::size_t n = 1; n <= m_total; ++n) {
    enter(shared.a[n - 1], 1);
    enter(shared.b[n - 1], 2);
    // p(n) = m / (n^2 / M), computed as exact integer products so that
    // identical rankings give exactly M/n.
    const double p = static_cast<double>(m * m_total) /
                     static_cast<double>(n * n);
    curve.points.push_back({n, m, p});
  }
  return curve;
}

}  // namespace lexistat
