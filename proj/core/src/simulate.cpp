#include "lexistat/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "lexistat/error.hpp"
#include "lexistat/numeric.hpp"
#include "lexistat/rng.hpp"

namespace lexistat {
namespace {

// Substream layout: 0 drives tree growth, 1 the rate profile, 2+i meaning i.
constexpr std::uint64_t kTreeStream = 0;
constexpr std::uint64_t kRateStream = 1;
constexpr std::uint64_t kMeaningStreamBase = 2;

std::string padded_name(char prefix, std::size_t index, std::size_t total) {
  std::size_t width = 1;
  for (std::size_t v = total; v >= 10; v /= 10) ++width;
  std::string digits = std::to_string(index + 1);
  std::string out(1, prefix);
  out.append(width - std::min(width, digits.size()), '0');
  out += digits;
  return out;
}

}  // namespace

PhyloTree random_tree(std::size_t n_leaves, std::uint64_t seed) {
  if (n_leaves < 2) {
    throw Error("invalid-leaf-count",
                "need at least 2 leaves, got " + std::to_string(n_leaves));
  }
  Rng rng(seed, kTreeStream);

  // Grow forward in time: the root splits at t=0; each further split waits
  // Exp(k) with k active lineages and hits a uniformly chosen one.
  struct GrowNode {
    double time = 0.0;
    int left = -1;
    int right = -1;
  };
  std::vector<GrowNode> grow;
  grow.reserve(2 * n_leaves - 1);
  grow.push_back({0.0, 1, 2});
  grow.push_back({});
  grow.push_back({});
  std::vector<int> active = {1, 2};
  double t = 0.0;
  while (active.size() < n_leaves) {
    t += rng.exponential(static_cast<double>(active.size()));
    const std::size_t pick = rng.uniform_below(active.size());
    const int id = active[pick];
    const int a = static_cast<int>(grow.size());
    grow.push_back({});
    const int b = static_cast<int>(grow.size());
    grow.push_back({});
    grow[id] = {t, a, b};
    active[pick] = a;
    active.push_back(b);
  }
  // One more stretch so the youngest split still has positive branches.
  double depth = t + rng.exponential(static_cast<double>(active.size()));
  if (!(depth > t)) depth = t + 1.0;
  for (int id : active) grow[id].time = depth;

  // Renumber: leaves 0..n-1 in depth-first order, internal nodes after,
  // heights rescaled so the root is at 1.
  PhyloTree tree;
  tree.nodes.resize(2 * n_leaves - 1);
  int next_leaf = 0;
  int next_internal = static_cast<int>(n_leaves);
  auto build = [&](auto&& self, int grow_id) -> int {
    const GrowNode& g = grow[grow_id];
    if (g.left < 0) {
      const int id = next_leaf++;
      tree.nodes[id].height = 0.0;
      return id;
    }
    const int left = self(self, g.left);
    const int right = self(self, g.right);
    const int id = next_internal++;
    tree.nodes[id].height = (depth - g.time) / depth;
    tree.nodes[id].left = left;
    tree.nodes[id].right = right;
    tree.nodes[left].parent = id;
    tree.nodes[right].parent = id;
    return id;
  };
  tree.root = build(build, 0);
  for (std::size_t i = 0; i < n_leaves; ++i) {
    tree.nodes[i].name = padded_name('L', i, n_leaves);
  }
  return tree;
}

namespace {

WordForm random_word(Rng& rng, const SimConfig& cfg) {
  const std::size_t span = cfg.max_word_length - cfg.min_word_length + 1;
  const std::size_t len = cfg.min_word_length + rng.uniform_below(span);
  WordForm word(len, U'a');
  for (auto& c : word) {
    c = static_cast<char32_t>(U'a' + rng.uniform_below(cfg.alphabet_size));
  }
  return word;
}

void validate_config(const SimConfig& cfg) {
  if (cfg.n_languages < 2 || cfg.n_meanings < 1) {
    throw Error("invalid-config", "need at least 2 languages and 1 meaning");
  }
  if (cfg.rates.size() != cfg.n_meanings) {
    throw Error("invalid-config", "rate profile length " +
                                      std::to_string(cfg.rates.size()) +
                                      " does not match meaning count");
  }
  for (double r : cfg.rates) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw Error("invalid-config", "replacement rates must be finite and >= 0");
    }
  }
  if (!(cfg.mutation_rate >= 0.0) || !std::isfinite(cfg.mutation_rate)) {
    throw Error("invalid-config", "mutation rate must be finite and >= 0");
  }
  if (cfg.min_word_length < 1 || cfg.min_word_length > cfg.max_word_length) {
    throw Error("invalid-config", "word length range is empty");
  }
  if (cfg.alphabet_size < 1 || cfg.alphabet_size > 26) {
    throw Error("invalid-config", "alphabet size must be in [1, 26]");
  }
}

}  // namespace

SimResult evolve(const SimConfig& config) {
  validate_config(config);

  SimResult result;
  result.tree = random_tree(config.n_languages, config.seed);
  result.rates = config.rates;

  FamilyDataset& ds = result.dataset;
  ds.languages.resize(config.n_languages);
  for (std::size_t l = 0; l < config.n_languages; ++l) {
    ds.languages[l] = result.tree.nodes[l].name;
  }
  ds.meanings.resize(config.n_meanings);
  ds.cells.assign(config.n_languages,
                  std::vector<std::vector<WordForm>>(config.n_meanings));

  const PhyloTree& tree = result.tree;
  for (std::size_t m = 0; m < config.n_meanings; ++m) {
    ds.meanings[m] = padded_name('M', m, config.n_meanings);
    Rng rng(config.seed, kMeaningStreamBase + m);
    const double rate = config.rates[m];

    // Depth-first from the root, left edge first, so the draw order is a
    // fixed function of the tree shape.
    struct Frame {
      int node;
      WordForm word;
    };
    std::vector<Frame> stack;
    stack.push_back({tree.root, random_word(rng, config)});
    while (!stack.empty()) {
      Frame frame = std::move(stack.back());
      stack.pop_back();
      const PhyloNode& node = tree.nodes[frame.node];
      if (node.left < 0) {
        ds.cells[static_cast<std::size_t>(frame.node)][m] = {std::move(frame.word)};
        continue;
      }
      WordForm children[2];
      const int ids[2] = {node.left, node.right};
      for (int k = 0; k < 2; ++k) {
        const double t = node.height - tree.nodes[ids[k]].height;
        if (rng.uniform01() < -std::expm1(-rate * t)) {
          children[k] = random_word(rng, config);
        } else {
          children[k] = frame.word;
          if (config.mutation_rate > 0.0) {
            const double p = -std::expm1(-config.mutation_rate * t);
            for (auto& c : children[k]) {
              if (rng.uniform01() < p) {
                // substitute with a uniformly chosen different letter
                const auto offset = rng.uniform_below(config.alphabet_size - 1) + 1;
                c = static_cast<char32_t>(
                    U'a' + (c - U'a' + offset) % config.alphabet_size);
              }
            }
          }
        }
      }
      // Push right first so the left child is processed first.
      stack.push_back({node.right, std::move(children[1])});
      stack.push_back({node.left, std::move(children[0])});
    }
  }
  return result;
}

double recovery_score(std::span<const double> rates,
                      const StabilityReport& report) {
  if (rates.size() != report.items.size()) {
    throw Error("insufficient-data",
                "rate profile and report cover different meaning counts");
  }
  std::vector<double> xs, ys;
  for (std::size_t m = 0; m < rates.size(); ++m) {
    if (!report.items[m].s) continue;
    xs.push_back(rates[m]);
    ys.push_back(*report.items[m].s);
  }
  if (xs.size() < 2) {
    throw Error("insufficient-data",
                "need at least 2 meanings with defined stability");
  }
  auto rho = spearman(xs, ys);
  if (!rho) {
    throw Error("zero-variance", "rates or stabilities are constant");
  }
  return *rho;
}

std::vector<double> log_uniform_rates(std::size_t count, double lo, double hi,
                                      std::uint64_t seed) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) {
    throw Error("invalid-config", "rate bounds must satisfy 0 < lo <= hi");
  }
  Rng rng(seed, kRateStream);
  std::vector<double> rates(count);
  const double log_lo = std::log(lo);
  const double log_hi = std::log(hi);
  for (auto& r : rates) {
    r = std::exp(log_lo + (log_hi - log_lo) * rng.uniform01());
  }
  return rates;
}

}  // namespace lexistat
