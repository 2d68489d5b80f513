// Acceptance suite: one line per criterion, PASS/FAIL with details, nonzero
// exit when anything fails. The CLI binary path must be argv[1] (criterion 7
// drives the real executable end to end).

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "lexistat/dataset.hpp"
#include "lexistat/distance.hpp"
#include "lexistat/io.hpp"
#include "lexistat/phylo.hpp"
#include "lexistat/rank.hpp"
#include "lexistat/rng.hpp"
#include "lexistat/simulate.hpp"
#include "lexistat/stability.hpp"
#include "support/oracles.hpp"

namespace fs = std::filesystem;
using namespace lexistat;

namespace {

int g_failures = 0;

class Criterion {
 public:
  Criterion(int number, std::string description)
      : number_(number), description_(std::move(description)),
        start_(std::chrono::steady_clock::now()) {}

  void require(bool ok, const std::string& detail) {
    if (!ok && failure_.empty()) failure_ = detail;
    ok_ = ok_ && ok;
  }

  void finish() {
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start_)
                             .count();
    std::printf("%s  [%d] %s (%.1f s%s%s)\n", ok_ ? "PASS" : "FAIL", number_,
                description_.c_str(), elapsed / 1000.0,
                failure_.empty() ? "" : "; ", failure_.c_str());
    std::fflush(stdout);
    if (!ok_) ++g_failures;
  }

  double seconds() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
               .count() /
           1000.0;
  }

 private:
  int number_;
  std::string description_;
  std::chrono::steady_clock::time_point start_;
  bool ok_ = true;
  std::string failure_;
};

// ---------------------------------------------------------------------------
// 1. The normalization examples: one substitution between 2-char words gives
//    0.5, between 8-char words 0.125. Exact.
void criterion_1() {
  Criterion c(1, "normalization examples reproduced exactly");
  c.require(normalized_distance(U"ab", U"ac") == 0.5, "2-char case != 0.5");
  c.require(normalized_distance(U"abcdefgh", U"abcdefgx") == 0.125,
            "8-char case != 0.125");
  c.require(normalized_distance(U"mano", U"mano") == 0.0, "identity != 0");
  c.finish();
}

// ---------------------------------------------------------------------------
// 2. DP Levenshtein equals the exhaustive recursive oracle: all pairs up to
//    length 4 over {a,b,c}, plus 10^5 sampled pairs up to length 7. Exact.
void criterion_2() {
  Criterion c(2, "DP Levenshtein equals the exhaustive recursive oracle");

  std::vector<std::u32string> words;
  std::function<void(std::u32string&)> grow = [&](std::u32string& word) {
    if (!word.empty()) words.push_back(word);
    if (word.size() == 4) return;
    for (char32_t ch : {U'a', U'b', U'c'}) {
      word.push_back(ch);
      grow(word);
      word.pop_back();
    }
  };
  std::u32string scratch;
  grow(scratch);

  std::size_t mismatches = 0;
  for (const auto& a : words) {
    for (const auto& b : words) {
      if (levenshtein(a, b) != oracle::levenshtein(a, b)) ++mismatches;
    }
  }
  c.require(mismatches == 0, "exhaustive sweep found " +
                                 std::to_string(mismatches) + " mismatches");

  Rng rng(20260301, 0);
  auto random_word = [&] {
    const std::size_t len = 1 + rng.uniform_below(7);
    std::u32string word;
    for (std::size_t i = 0; i < len; ++i) {
      word.push_back(static_cast<char32_t>(U'a' + rng.uniform_below(3)));
    }
    return word;
  };
  for (int i = 0; i < 100000; ++i) {
    const auto a = random_word();
    const auto b = random_word();
    if (levenshtein(a, b) != oracle::levenshtein(a, b)) {
      c.require(false, "sampled mismatch at trial " + std::to_string(i));
      break;
    }
  }
  c.require(c.seconds() < 60.0, "runtime exceeded 60 s");
  c.finish();
}

// ---------------------------------------------------------------------------
// 3. stability_all matches an independent ordered-pair recomputation that
//    re-derives every distance from the recursive oracle. Exact, 200 random
//    datasets with N<=5, M<=6, words <=6 chars.
void criterion_3() {
  Criterion c(3, "stability matches ordered-pair brute force on 200 datasets");
  Rng rng(31, 0);
  for (int trial = 0; trial < 200; ++trial) {
    FamilyDataset ds = oracle::random_dataset(rng, 5, 6, 6);
    StabilityReport report = stability_all(ds);
    for (std::size_t m = 0; m < ds.n_meanings(); ++m) {
      const auto expected = oracle::stability_ordered(ds, m);
      if (report.items[m].s.has_value() != expected.defined) {
        c.require(false, "definedness mismatch, trial " + std::to_string(trial));
        break;
      }
      if (expected.defined && *report.items[m].s != expected.s) {
        c.require(false, "value mismatch, trial " + std::to_string(trial) +
                             " meaning " + std::to_string(m));
        break;
      }
      if (expected.defined &&
          report.items[m].pair_coverage * 2 != expected.ordered_pairs) {
        c.require(false, "coverage mismatch, trial " + std::to_string(trial));
        break;
      }
    }
  }
  c.finish();
}

// ---------------------------------------------------------------------------
// 4. Overlap statistics: p(n) = M/n exactly for identical rankings; over
//    1000 shuffle pairs the mean m(n) sits within 3 standard errors of
//    n^2/M for n in {5,10,25,50}.
void criterion_4() {
  Criterion c(4, "overlap statistics: identity exact, shuffle mean near n^2/M");

  const std::size_t m_total = 200;
  std::vector<std::string> labels(m_total);
  for (std::size_t i = 0; i < m_total; ++i) labels[i] = "W" + std::to_string(i);

  auto make_report = [&](const std::vector<std::string>& order) {
    StabilityReport report;
    report.n_languages = 2;
    for (std::size_t i = 0; i < order.size(); ++i) {
      MeaningStability item;
      item.label = order[i];
      item.s = 1.0 - static_cast<double>(i) / (order.size() + 1);
      item.pair_coverage = 1;
      report.items.push_back(item);
    }
    return report;
  };

  StabilityReport identical = make_report(labels);
  OverlapCurve curve = overlap_ratio(identical, identical);
  bool exact = curve.points.size() == m_total;
  for (const auto& point : curve.points) {
    exact = exact && point.m == point.n &&
            point.p == static_cast<double>(m_total) / static_cast<double>(point.n);
  }
  c.require(exact, "identical rankings did not give p(n) = M/n exactly");
  c.require(curve.points[9].p == 20.0, "n=10, M=200 should give exactly 20");

  Rng rng(555, 0);
  auto shuffled = [&] {
    std::vector<std::string> order = labels;
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.uniform_below(i)]);
    }
    return make_report(order);
  };
  const std::vector<std::size_t> ns = {5, 10, 25, 50};
  std::vector<double> sums(ns.size(), 0.0);
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    StabilityReport a = shuffled();
    StabilityReport b = shuffled();
    OverlapCurve shuffle_curve = overlap_ratio(a, b);
    for (std::size_t k = 0; k < ns.size(); ++k) {
      sums[k] += static_cast<double>(shuffle_curve.points[ns[k] - 1].m);
    }
  }
  for (std::size_t k = 0; k < ns.size(); ++k) {
    const double n = static_cast<double>(ns[k]);
    const double mean = sums[k] / trials;
    const double expected = n * n / static_cast<double>(m_total);
    // hypergeometric variance of the overlap count
    const double p = n / static_cast<double>(m_total);
    const double variance =
        n * p * (1.0 - p) * (static_cast<double>(m_total - ns[k]) / (m_total - 1));
    const double se = std::sqrt(variance / trials);
    std::ostringstream detail;
    detail << "n=" << ns[k] << ": mean " << mean << " vs " << expected
           << " (3se=" << 3.0 * se << ")";
    c.require(std::fabs(mean - expected) <= 3.0 * se, detail.str());
  }
  c.require(c.seconds() < 30.0, "runtime exceeded 30 s");
  c.finish();
}

// ---------------------------------------------------------------------------
// 5. Simulator recovery at desk scale: N=50, M=200, rates log-uniform on
//    [0.05,5], mu=0.1, fixed seed. Spearman(rate, S) <= -0.6; rank curve
//    non-increasing; top-decile mean residual above the 51..180 line > 0.
void criterion_5() {
  Criterion c(5, "simulator recovery: rate ordering and rank-curve shape");

  SimConfig config;
  config.n_languages = 50;
  config.n_meanings = 200;
  config.rates = log_uniform_rates(200, 0.05, 5.0, 424242);
  config.mutation_rate = 0.1;
  config.seed = 424242;
  SimResult result = evolve(config);
  StabilityReport report = stability_all(result.dataset);

  const double rho = recovery_score(result.rates, report);
  c.require(rho <= -0.6, "recovery score " + std::to_string(rho) + " > -0.6");

  RankCurve curve = rank_curve(report);
  bool non_increasing = true;
  for (std::size_t i = 1; i < curve.entries.size(); ++i) {
    non_increasing = non_increasing &&
                     curve.entries[i].s <= curve.entries[i - 1].s;
  }
  c.require(non_increasing, "rank curve is not non-increasing");

  LinearFit fit = linear_fit(curve, 51, 180);
  double top_decile = 0.0;
  const std::size_t decile = curve.entries.size() / 10;
  for (std::size_t r = 1; r <= decile; ++r) top_decile += fit.residuals[r - 1];
  top_decile /= static_cast<double>(decile);
  c.require(top_decile > 0.0, "top-decile mean residual " +
                                  std::to_string(top_decile) + " not positive");
  c.require(c.seconds() < 60.0, "runtime exceeded 60 s");
  c.finish();
}

// ---------------------------------------------------------------------------
// 6. UPGMA on 100 random ultrametric matrices (N<=32): cophenetic distances
//    within 1e-9 of the input, Newick round-trips through the independent
//    parser.
void criterion_6() {
  Criterion c(6, "UPGMA reconstructs ultrametric inputs; Newick round-trips");
  Rng rng(66, 0);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.uniform_below(31);

    // random ultrametric input: merge clusters at increasing heights
    std::vector<std::vector<int>> clusters(n);
    std::vector<std::string> labels(n);
    for (std::size_t i = 0; i < n; ++i) {
      clusters[i] = {static_cast<int>(i)};
      labels[i] = "T" + std::to_string(i);
    }
    DistanceMatrix input(labels);
    double height = 0.0;
    while (clusters.size() > 1) {
      height += 0.01 + 0.3 * rng.uniform01();
      const std::size_t i = rng.uniform_below(clusters.size());
      std::size_t j = rng.uniform_below(clusters.size() - 1);
      if (j >= i) ++j;
      for (int a : clusters[i]) {
        for (int b : clusters[j]) input.at(a, b) = input.at(b, a) = 2.0 * height;
      }
      auto merged = clusters[i];
      merged.insert(merged.end(), clusters[j].begin(), clusters[j].end());
      clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
      clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
      clusters.push_back(std::move(merged));
    }

    PhyloTree tree = upgma(input);
    DistanceMatrix cophenetic = cophenetic_matrix(tree);
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        worst = std::max(worst, std::fabs(cophenetic.at(a, b) - input.at(a, b)));
      }
    }
    if (worst > 1e-9) {
      c.require(false, "cophenetic error " + std::to_string(worst) + " at trial " +
                           std::to_string(trial));
      break;
    }

    const std::string newick = to_newick(tree);
    try {
      auto parsed = oracle::NewickParser(newick).parse();
      std::function<bool(const oracle::NewickNode&, int)> same =
          [&](const oracle::NewickNode& node, int id) -> bool {
        if (tree.nodes[id].parent >= 0) {
          const double expected = tree.branch_length(id);
          if (!node.has_length ||
              std::fabs(node.length - expected) >
                  1e-12 * std::max(1.0, std::fabs(expected))) {
            return false;
          }
        }
        if (tree.is_leaf(id)) {
          return node.children.empty() && node.name == tree.nodes[id].name;
        }
        return node.children.size() == 2 &&
               same(*node.children[0], tree.nodes[id].left) &&
               same(*node.children[1], tree.nodes[id].right);
      };
      if (!same(*parsed, tree.root)) {
        c.require(false, "newick round trip mismatch at trial " + std::to_string(trial));
        break;
      }
    } catch (const std::exception& e) {
      c.require(false, std::string("newick parse error: ") + e.what());
      break;
    }
  }
  c.require(c.seconds() < 10.0, "runtime exceeded 10 s");
  c.finish();
}

// ---------------------------------------------------------------------------
// 7. Determinism and performance through the CLI: the simulate + stability +
//    distances pipeline is byte-identical across runs and across --threads,
//    and distance_matrix finishes under 5 s single-threaded at mean word
//    length 8.
struct CliRunner {
  std::string binary;
  fs::path dir;
  int counter = 0;

  // returns exit code; stdout captured to a file
  int run(const std::string& args, std::string* captured = nullptr) {
    const fs::path out = dir / ("stdout" + std::to_string(counter++) + ".txt");
    const std::string cmd =
        "'" + binary + "' " + args + " > " + out.string() + " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    if (captured) *captured = read_file(out.string());
    return WEXITSTATUS(status);
  }
};

struct PipelineResult {
  bool ok = false;
  std::string detail;   // failure description
  std::string content;  // concatenated output bytes
};

void criterion_7(const std::string& cli) {
  Criterion c(7, "pipeline determinism across runs and threads; matrix < 5 s");
  const fs::path dir =
      fs::temp_directory_path() / ("lexistat_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  CliRunner runner{cli, dir};

  auto pipeline = [&](const std::string& tag, unsigned threads) {
    PipelineResult result;
    const std::string stem = (dir / ("sim_" + tag)).string();
    std::string recovery;
    int rc = runner.run("simulate --n 50 --m 200 --seed 7 --out " + stem, &recovery);
    if (rc != 0) {
      result.detail = "simulate exited " + std::to_string(rc);
      return result;
    }
    rc = runner.run("stability --input " + stem + ".tsv --threads " +
                    std::to_string(threads) + " --out " + stem + ".s.csv");
    if (rc != 0) {
      result.detail = "stability exited " + std::to_string(rc);
      return result;
    }
    rc = runner.run("distances --input " + stem + ".tsv --threads " +
                    std::to_string(threads) + " --out " + stem + ".d.csv");
    if (rc != 0) {
      result.detail = "distances exited " + std::to_string(rc);
      return result;
    }
    result.ok = true;
    result.content = recovery + "\x01" + read_file(stem + ".tsv") + "\x01" +
                     read_file(stem + ".truth.csv") + "\x01" +
                     read_file(stem + ".s.csv") + "\x01" +
                     read_file(stem + ".d.csv");
    return result;
  };

  const PipelineResult run_a = pipeline("a", 1);
  const PipelineResult run_b = pipeline("b", 1);
  const PipelineResult run_c = pipeline("c", 4);
  c.require(run_a.ok && run_b.ok && run_c.ok,
            run_a.detail + run_b.detail + run_c.detail);
  c.require(run_a.content == run_b.content,
            "outputs differ between identical runs");
  c.require(run_a.content == run_c.content,
            "outputs differ between --threads 1 and 4");

  // timing: N=50, M=200, words of length 7..9 (mean 8), single-threaded
  SimConfig config;
  config.n_languages = 50;
  config.n_meanings = 200;
  config.rates.assign(200, 1e9);  // fully random words, no shortcuts
  config.min_word_length = 7;
  config.max_word_length = 9;
  config.seed = 99;
  SimResult synthetic = evolve(config);
  const auto start = std::chrono::steady_clock::now();
  DistanceMatrix matrix = distance_matrix(synthetic.dataset, SynonymPolicy::First, 1);
  const double elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count() /
      1000.0;
  c.require(matrix.size() == 50, "unexpected matrix size");
  c.require(elapsed < 5.0,
            "distance_matrix took " + std::to_string(elapsed) + " s");

  fs::remove_all(dir);
  c.finish();
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::fprintf(stderr, "usage: %s <path-to-lexistat-cli>\n", argv[0]);
    return 2;
  }
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7(argv[1]);
  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
