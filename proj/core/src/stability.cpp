#include "lexistat/stability.hpp"

#include <cmath>
#include <limits>

#include "lexistat/distance.hpp"
#include "lexistat/error.hpp"
#include "parallel.hpp"

namespace lexistat {
namespace {

void check_language(const FamilyDataset& ds, std::size_t index) {
  if (index >= ds.n_languages()) {
    throw Error("index-out-of-bounds",
                "language index " + std::to_string(index) + " out of range");
  }
}

void check_meaning(const FamilyDataset& ds, std::size_t index) {
  if (index >= ds.n_meanings()) {
    throw Error("index-out-of-bounds",
                "meaning index " + std::to_string(index) + " out of range");
  }
}

double form_distance(std::span<const WordForm> a, std::span<const WordForm> b,
                     SynonymPolicy policy) {
  if (policy == SynonymPolicy::First) {
    return normalized_distance(a.front(), b.front());
  }
  double best = std::numeric_limits<double>::infinity();
  for (const auto& wa : a) {
    for (const auto& wb : b) {
      best = std::min(best, normalized_distance(wa, wb));
    }
  }
  return best;
}

}  // namespace

std::optional<double> item_pair_distance(const FamilyDataset& dataset,
                                         std::size_t language_a,
                                         std::size_t language_b,
                                         std::size_t meaning,
                                         SynonymPolicy policy) {
  check_language(dataset, language_a);
  check_language(dataset, language_b);
  check_meaning(dataset, meaning);
  if (language_a == language_b) {
    throw Error("index-out-of-bounds", "language indices must differ");
  }
  auto fa = dataset.forms(language_a, meaning);
  auto fb = dataset.forms(language_b, meaning);
  if (fa.empty() || fb.empty()) return std::nullopt;
  return form_distance(fa, fb, policy);
}

StabilityValue stability(const FamilyDataset& dataset, std::size_t meaning,
                         SynonymPolicy policy) {
  check_meaning(dataset, meaning);
  const std::size_t n = dataset.n_languages();
  double sum = 0.0;
  std::size_t count = 0;
  // Fixed accumulation order: pairs ascending by (a, b).
  for (std::size_t a = 0; a + 1 < n; ++a) {
    auto fa = dataset.forms(a, meaning);
    if (fa.empty()) continue;
    for (std::size_t b = a + 1; b < n; ++b) {
      auto fb = dataset.forms(b, meaning);
      if (fb.empty()) continue;
      sum += form_distance(fa, fb, policy);
      ++count;
    }
  }
  StabilityValue value;
  value.pair_coverage = count;
  if (count > 0) {
    value.s = 1.0 - sum / static_cast<double>(count);
  }
  return value;
}

StabilityReport stability_all(const FamilyDataset& dataset,
                              const StabilityOptions& options) {
  StabilityReport report;
  report.family = options.family;
  report.n_languages = dataset.n_languages();
  report.items.resize(dataset.n_meanings());
  detail::parallel_for(dataset.n_meanings(), options.threads, [&](std::size_t m) {
    StabilityValue value = stability(dataset, m, options.policy);
    MeaningStability& item = report.items[m];
    item.label = dataset.meanings[m];
    item.pair_coverage = value.pair_coverage;
    if (value.s && value.pair_coverage >= options.min_pair_coverage) {
      item.s = value.s;
    }
  });
  return report;
}

namespace {

// Sum and count without throwing; used from worker threads.
std::pair<double, std::size_t> pair_distance_sum(const FamilyDataset& ds,
                                                 std::size_t a, std::size_t b,
                                                 SynonymPolicy policy) {
  double sum = 0.0;
  std::size_t count = 0;
  for (std::size_t m = 0; m < ds.n_meanings(); ++m) {
    auto fa = ds.forms(a, m);
    auto fb = ds.forms(b, m);
    if (fa.empty() || fb.empty()) continue;
    sum += form_distance(fa, fb, policy);
    ++count;
  }
  return {sum, count};
}

}  // namespace

LanguageDistance language_distance(const FamilyDataset& dataset,
                                   std::size_t language_a,
                                   std::size_t language_b,
                                   SynonymPolicy policy) {
  check_language(dataset, language_a);
  check_language(dataset, language_b);
  if (language_a == language_b) {
    throw Error("index-out-of-bounds", "language indices must differ");
  }
  auto [sum, count] = pair_distance_sum(dataset, language_a, language_b, policy);
  if (count == 0) {
    throw Error("no-shared-meanings",
                "languages '" + dataset.languages[language_a] + "' and '" +
                    dataset.languages[language_b] + "' share no defined meaning");
  }
  return {sum / static_cast<double>(count), count};
}

DistanceMatrix distance_matrix(const FamilyDataset& dataset,
                               SynonymPolicy policy, unsigned threads) {
  const std::size_t n = dataset.n_languages();
  DistanceMatrix matrix(dataset.languages);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t a = 0; a + 1 < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  }

  std::vector<std::size_t> coverage(pairs.size(), 0);
  detail::parallel_for(pairs.size(), threads, [&](std::size_t p) {
    auto [a, b] = pairs[p];
    auto [sum, count] = pair_distance_sum(dataset, a, b, policy);
    coverage[p] = count;
    if (count > 0) {
      double d = sum / static_cast<double>(count);
      matrix.at(a, b) = d;
      matrix.at(b, a) = d;
    }
  });

  for (std::size_t p = 0; p < pairs.size(); ++p) {
    if (coverage[p] == 0) {
      auto [a, b] = pairs[p];
      throw Error("no-shared-meanings",
                  "languages '" + dataset.languages[a] + "' and '" +
                      dataset.languages[b] + "' share no defined meaning");
    }
  }
  return matrix;
}

double separation_time(double distance, double rate) {
  if (!(rate > 0.0) || !std::isfinite(rate)) {
    throw Error("non-positive-rate", "rate must be a positive finite number");
  }
  if (!(distance >= 0.0)) {
    throw Error("invalid-argument", "distance must be in [0,1)");
  }
  if (distance >= 1.0) {
    throw Error("saturated-distance",
                "distance >= 1 corresponds to an infinite separation time");
  }
  return -std::log1p(-distance) / (2.0 * rate);
}

}  // namespace lexistat
