// lexistat -- word-list stability, language distances and trees from the
// command line. Subcommands compose through files: `stability` output feeds
// `rank` and `compare`, `distances` output feeds `tree`. All runs are
// deterministic: identical inputs and flags give byte-identical outputs.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lexistat/dataset.hpp"
#include "lexistat/error.hpp"
#include "lexistat/io.hpp"
#include "lexistat/phylo.hpp"
#include "lexistat/rank.hpp"
#include "lexistat/simulate.hpp"
#include "lexistat/stability.hpp"

namespace {

using namespace lexistat;

struct CommonArgs {
  std::string input;
  std::string out;
  std::string synonyms = "first";
  unsigned threads = 1;
  bool full_precision = false;
};

SynonymPolicy parse_policy(const std::string& name) {
  if (name == "first") return SynonymPolicy::First;
  if (name == "min") return SynonymPolicy::Min;
  throw CLI::ValidationError("--synonyms", "must be 'first' or 'min'");
}

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-") {
    std::cout << content;
  } else {
    write_file(out_path, content);
  }
}

// "d.csv" -> "d" (likewise .tsv); used to derive sibling output names.
std::string strip_extension(const std::string& path) {
  std::filesystem::path p(path);
  const auto ext = p.extension().string();
  if (ext == ".csv" || ext == ".tsv") return (p.parent_path() / p.stem()).string();
  return path;
}

std::string family_id(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

FamilyDataset load_dataset(const std::string& path) {
  FamilyDataset ds = parse_dataset_tsv(read_file(path));
  ValidationReport report = validate(ds);
  std::cerr << "lexistat: " << family_id(path) << ": " << report.n_languages
            << " languages, " << report.n_meanings << " meanings, "
            << report.total_missing << " missing cells\n";
  return ds;
}

int cmd_stability(const CommonArgs& args) {
  FamilyDataset ds = load_dataset(args.input);
  StabilityOptions options;
  options.policy = parse_policy(args.synonyms);
  options.threads = args.threads;
  options.family = family_id(args.input);
  StabilityReport report = stability_all(ds, options);
  emit(args.out, write_stability_csv(report, {args.full_precision}));
  return 0;
}

int cmd_distances(const CommonArgs& args, std::optional<double> rate) {
  FamilyDataset ds = load_dataset(args.input);
  DistanceMatrix matrix =
      distance_matrix(ds, parse_policy(args.synonyms), args.threads);
  emit(args.out, write_matrix_csv(matrix, {args.full_precision}));
  if (rate) {
    if (args.out.empty() || args.out == "-") {
      throw CLI::ValidationError("--rate", "needs --out to place the time matrix");
    }
    DistanceMatrix times(matrix.labels);
    for (std::size_t i = 0; i < matrix.size(); ++i) {
      for (std::size_t j = 0; j < matrix.size(); ++j) {
        if (i != j) times.at(i, j) = separation_time(matrix.at(i, j), *rate);
      }
    }
    write_file(strip_extension(args.out) + ".time.csv",
               write_matrix_csv(times, {args.full_precision}));
  }
  return 0;
}

int cmd_rank(const CommonArgs& args, std::pair<std::size_t, std::size_t> range,
             bool range_is_default, double bin_width) {
  StabilityReport report =
      read_stability_csv(read_file(args.input), family_id(args.input));
  RankCurve curve = rank_curve(report);
  auto [lo, hi] = range;
  bool do_fit = true;
  if (range_is_default && curve.entries.size() < hi) {
    // Adapt the 51:180 default to short curves; explicit ranges stay strict.
    hi = curve.entries.size();
    if (lo >= hi) lo = 1;
    if (lo >= hi) {
      do_fit = false;
    } else {
      std::cerr << "lexistat: fit range clamped to " << lo << ":" << hi << "\n";
    }
  }
  NumberFormat fmt{args.full_precision};
  const std::string stem = strip_extension(args.out);
  if (do_fit) {
    LinearFit fit = linear_fit(curve, lo, hi);
    write_file(args.out, write_rank_csv(curve, fit, fmt));
    write_file(stem + ".fit.csv", write_fit_csv(fit, fmt));
  } else {
    std::cerr << "lexistat: curve too short for a linear fit; skipping\n";
    write_file(args.out, write_rank_csv(curve, fmt));
  }
  write_file(stem + ".hist.csv",
             write_histogram_csv(stability_histogram(report, bin_width), fmt));
  return 0;
}

int cmd_compare(const std::string& a_path, const std::string& b_path,
                const std::string& out, bool full_precision) {
  StabilityReport a = read_stability_csv(read_file(a_path), family_id(a_path));
  StabilityReport b = read_stability_csv(read_file(b_path), family_id(b_path));
  const double r = pearson_correlation(a, b);
  OverlapCurve curve = overlap_ratio(a, b);
  if (!curve.only_in_a.empty() || !curve.only_in_b.empty()) {
    std::cerr << "lexistat: " << curve.only_in_a.size() << "+"
              << curve.only_in_b.size() << " unmatched labels excluded\n";
  }
  emit(out, write_overlap_csv(curve, r, {full_precision}));
  return 0;
}

int cmd_tree(const std::string& input, const std::string& out) {
  DistanceMatrix matrix = read_matrix_csv(read_file(input));
  PhyloTree tree = upgma(matrix);
  emit(out, to_newick(tree) + "\n");
  return 0;
}

struct SimulateArgs {
  std::size_t n = 50;
  std::size_t m = 200;
  std::uint64_t seed = 0;
  double mu = 0.1;
  double lambda_min = 0.05;
  double lambda_max = 5.0;
  std::size_t min_len = 3;
  std::size_t max_len = 9;
  std::size_t alphabet = 26;
  std::string out;
  bool full_precision = false;
};

int cmd_simulate(const SimulateArgs& args) {
  SimConfig config;
  config.n_languages = args.n;
  config.n_meanings = args.m;
  config.rates = log_uniform_rates(args.m, args.lambda_min, args.lambda_max, args.seed);
  config.mutation_rate = args.mu;
  config.min_word_length = args.min_len;
  config.max_word_length = args.max_len;
  config.alphabet_size = args.alphabet;
  config.seed = args.seed;

  SimResult result = evolve(config);
  const std::string stem = strip_extension(args.out);
  write_file(stem + ".tsv", write_dataset_tsv(result.dataset));
  write_file(stem + ".truth.csv",
             write_truth_csv(config, result.dataset.meanings));

  StabilityOptions options;
  options.family = family_id(stem);
  StabilityReport report = stability_all(result.dataset, options);
  std::cout << "recovery," << NumberFormat{args.full_precision}(
                                  recovery_score(result.rates, report))
            << "\n";
  return 0;
}

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  std::pair<std::size_t, std::size_t> range;
  try {
    if (colon == std::string::npos) throw std::invalid_argument("no colon");
    range.first = std::stoul(text.substr(0, colon));
    range.second = std::stoul(text.substr(colon + 1));
  } catch (const std::exception&) {
    throw CLI::ValidationError("--fit-range", "expected LO:HI, got '" + text + "'");
  }
  return range;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automated lexicostatistics: normalized edit distances, "
               "per-meaning stability, ranking statistics, UPGMA trees and a "
               "synthetic evolution oracle."};
  app.require_subcommand(1);

  CommonArgs stab, dist;
  std::optional<double> rate;
  auto* c_stab = app.add_subcommand("stability",
                                    "Per-meaning stability index from a word-list TSV");
  c_stab->add_option("--input,-i", stab.input, "word-list TSV")->required();
  c_stab->add_option("--out,-o", stab.out, "output CSV (default stdout)");
  c_stab->add_option("--synonyms", stab.synonyms, "first|min")
      ->check(CLI::IsMember({"first", "min"}));
  c_stab->add_option("--threads", stab.threads, "worker cap");
  c_stab->add_flag("--full-precision", stab.full_precision,
                   "shortest round-trip numbers instead of 6 digits");

  auto* c_dist = app.add_subcommand("distances",
                                    "Language distance matrix from a word-list TSV");
  c_dist->add_option("--input,-i", dist.input, "word-list TSV")->required();
  c_dist->add_option("--out,-o", dist.out, "output CSV (default stdout)");
  c_dist->add_option("--synonyms", dist.synonyms, "first|min")
      ->check(CLI::IsMember({"first", "min"}));
  c_dist->add_option("--threads", dist.threads, "worker cap");
  c_dist->add_option("--rate", rate,
                     "decay rate; also writes <out>.time.csv with separation times");
  c_dist->add_flag("--full-precision", dist.full_precision);

  CommonArgs rank;
  std::string fit_range = "51:180";
  double bin_width = 0.02;
  auto* c_rank = app.add_subcommand("rank",
                                    "Rank curve, linear fit and histogram from a stability CSV");
  c_rank->add_option("--input,-i", rank.input, "stability CSV")->required();
  c_rank->add_option("--out,-o", rank.out,
                     "rank CSV path; also writes <out>.fit.csv and <out>.hist.csv")
      ->required();
  auto* fit_opt = c_rank->add_option("--fit-range", fit_range, "LO:HI ranks (default 51:180)");
  c_rank->add_option("--bin-width", bin_width, "histogram bin width (default 0.02)");
  c_rank->add_flag("--full-precision", rank.full_precision);

  std::string cmp_a, cmp_b, cmp_out;
  bool cmp_full = false;
  auto* c_cmp = app.add_subcommand("compare",
                                   "Correlation and top-n overlap of two stability CSVs");
  c_cmp->add_option("--a", cmp_a, "first stability CSV")->required();
  c_cmp->add_option("--b", cmp_b, "second stability CSV")->required();
  c_cmp->add_option("--out,-o", cmp_out, "output CSV (default stdout)");
  c_cmp->add_flag("--full-precision", cmp_full);

  std::string tree_in, tree_out;
  auto* c_tree = app.add_subcommand("tree", "UPGMA tree (Newick) from a matrix CSV");
  c_tree->add_option("--input,-i", tree_in, "matrix CSV")->required();
  c_tree->add_option("--out,-o", tree_out, "Newick output (default stdout)");

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate",
                                   "Synthetic family with known replacement rates");
  c_sim->add_option("--n", sim.n, "languages (default 50)");
  c_sim->add_option("--m", sim.m, "meanings (default 200)");
  c_sim->add_option("--seed", sim.seed, "RNG seed")->required();
  c_sim->add_option("--mu", sim.mu, "per-character mutation rate (default 0.1)");
  c_sim->add_option("--lambda-min", sim.lambda_min, "rate range low (default 0.05)");
  c_sim->add_option("--lambda-max", sim.lambda_max, "rate range high (default 5)");
  c_sim->add_option("--min-len", sim.min_len, "shortest word (default 3)");
  c_sim->add_option("--max-len", sim.max_len, "longest word (default 9)");
  c_sim->add_option("--alphabet", sim.alphabet, "alphabet size (default 26)");
  c_sim->add_option("--out,-o", sim.out,
                    "output stem; writes <out>.tsv and <out>.truth.csv")
      ->required();
  c_sim->add_flag("--full-precision", sim.full_precision);

  try {
    app.parse(argc, argv);
    if (c_stab->parsed()) return cmd_stability(stab);
    if (c_dist->parsed()) return cmd_distances(dist, rate);
    if (c_rank->parsed()) {
      return cmd_rank(rank, parse_range(fit_range), fit_opt->count() == 0, bin_width);
    }
    if (c_cmp->parsed()) return cmd_compare(cmp_a, cmp_b, cmp_out, cmp_full);
    if (c_tree->parsed()) return cmd_tree(tree_in, tree_out);
    if (c_sim->parsed()) return cmd_simulate(sim);
    return 1;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error:usage: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error:" << e.code() << ": " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error:internal: " << e.what() << "\n";
    return 2;
  }
}
