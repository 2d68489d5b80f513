#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lexistat/dataset.hpp"
#include "lexistat/phylo.hpp"
#include "lexistat/stability.hpp"

namespace lexistat {

/// Synthetic lexical evolution with known per-meaning replacement rates,
/// used to validate stability estimation end to end.
struct SimConfig {
  std::size_t n_languages = 2;
  std::size_t n_meanings = 1;
  std::vector<double> rates;   // replacement rate per meaning, per unit depth
  double mutation_rate = 0.0;  // per character, per unit depth
  std::size_t min_word_length = 3;
  std::size_t max_word_length = 9;
  std::size_t alphabet_size = 26;
  std::uint64_t seed = 0;
};

struct SimResult {
  FamilyDataset dataset;
  std::vector<double> rates;  // ground truth, copied from the config
  PhyloTree tree;
};

/// Yule-style random tree: starting from two lineages, repeatedly split a
/// uniformly chosen active lineage after an exponential wait, then rescale
/// so the root sits at height 1. Deterministic for a given seed.
PhyloTree random_tree(std::size_t n_leaves, std::uint64_t seed);

/// Draws a root lexicon uniformly at random, then evolves it down a random
/// tree: along an edge of length t each meaning is wholly replaced with
/// probability 1 - exp(-rate * t), otherwise each character independently
/// substituted with probability 1 - exp(-mutation_rate * t). The leaves
/// become the dataset. Identical configs produce bitwise identical results.
SimResult evolve(const SimConfig& config);

/// Spearman rank correlation between the true replacement rates and the
/// estimated stabilities (midranks for ties). Strongly negative when the
/// stability index recovers the rate ordering.
double recovery_score(std::span<const double> rates,
                      const StabilityReport& report);

/// Rates drawn log-uniformly from [lo, hi]; the profile used by the
/// simulate subcommand.
std::vector<double> log_uniform_rates(std::size_t count, double lo, double hi,
                                      std::uint64_t seed);

}  // namespace lexistat
