#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lexistat/dataset.hpp"
#include "lexistat/matrix.hpp"

namespace lexistat {

/// How a multi-synonym cell enters a word-pair distance.
enum class SynonymPolicy {
  First,  // compare the first listed forms only
  Min,    // minimum distance over the cross product of the form lists
};

/// Normalized distance between the words of one meaning in two languages,
/// or nothing when either entry is missing.
std::optional<double> item_pair_distance(const FamilyDataset& dataset,
                                         std::size_t language_a,
                                         std::size_t language_b,
                                         std::size_t meaning,
                                         SynonymPolicy policy);

struct StabilityValue {
  std::optional<double> s;
  std::size_t pair_coverage = 0;  // unordered language pairs with both words
};

/// S = 1 - mean pair distance for one meaning, averaged over the defined
/// unordered language pairs in ascending pair order. Equals the ordered-pair
/// average because the distance is symmetric.
StabilityValue stability(const FamilyDataset& dataset, std::size_t meaning,
                         SynonymPolicy policy);

struct MeaningStability {
  std::string label;
  std::optional<double> s;
  std::size_t pair_coverage = 0;
};

struct StabilityReport {
  std::string family;
  std::size_t n_languages = 0;
  std::vector<MeaningStability> items;  // index = meaning index
};

struct StabilityOptions {
  SynonymPolicy policy = SynonymPolicy::First;
  std::size_t min_pair_coverage = 1;  // below this S is reported absent
  unsigned threads = 1;
  std::string family;
};

/// Stability of every meaning. Deterministic for any thread count: each
/// meaning is reduced by a single worker in the fixed pair order.
StabilityReport stability_all(const FamilyDataset& dataset,
                              const StabilityOptions& options = {});

struct LanguageDistance {
  double distance = 0.0;
  std::size_t meaning_coverage = 0;  // meanings defined in both languages
};

/// Mean word distance over all meanings the two languages share, in
/// ascending meaning order. Throws "no-shared-meanings" when none.
LanguageDistance language_distance(const FamilyDataset& dataset,
                                   std::size_t language_a,
                                   std::size_t language_b,
                                   SynonymPolicy policy);

/// All-pairs language distance matrix (symmetric, zero diagonal).
/// Bit-identical for any thread count.
DistanceMatrix distance_matrix(const FamilyDataset& dataset,
                               SynonymPolicy policy, unsigned threads = 1);

/// Separation time T = -ln(1 - d) / (2 r): the similarity 1-d of two
/// lineages drifting independently at rate r decays like exp(-2 r T).
/// Throws "saturated-distance" for d >= 1 and "non-positive-rate" for
/// r <= 0.
double separation_time(double distance, double rate);

}  // namespace lexistat
