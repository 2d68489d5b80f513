#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lexistat/error.hpp"
#include "lexistat/rng.hpp"
#include "lexistat/stability.hpp"
#include "support/oracles.hpp"

using namespace lexistat;

namespace {

FamilyDataset two_language_dataset(const char* word_a, const char* word_b) {
  FamilyDataset ds;
  ds.languages = {"A", "B"};
  ds.meanings = {"W"};
  ds.cells = {{{*normalize_word(word_a)}}, {{*normalize_word(word_b)}}};
  return ds;
}

}  // namespace

TEST_CASE("item_pair_distance") {
  FamilyDataset ds = parse_dataset_tsv(
      "meaning\tItalian\tFrench\nHAND\tmano\tmain\nSUN\tsole\t\n");
  CHECK(item_pair_distance(ds, 0, 1, 0, SynonymPolicy::First) == 0.5);
  CHECK(item_pair_distance(ds, 0, 1, 1, SynonymPolicy::First) == std::nullopt);
  CHECK_THROWS_AS(item_pair_distance(ds, 0, 2, 0, SynonymPolicy::First), Error);
  CHECK_THROWS_AS(item_pair_distance(ds, 0, 0, 0, SynonymPolicy::First), Error);
}

TEST_CASE("synonym policy min takes the best cross pair") {
  FamilyDataset ds =
      parse_dataset_tsv("meaning\tA\tB\nDOG\tdog,hound\thund\n");
  CHECK(item_pair_distance(ds, 0, 1, 0, SynonymPolicy::Min) == 0.2);
  // policy first compares dog vs hund only
  CHECK(item_pair_distance(ds, 0, 1, 0, SynonymPolicy::First) == 1.0);
}

TEST_CASE("stability on two languages") {
  CHECK(stability(two_language_dataset("sun", "sun"), 0, SynonymPolicy::First).s == 1.0);
  CHECK(stability(two_language_dataset("ab", "cd"), 0, SynonymPolicy::First).s == 0.0);
}

TEST_CASE("stability over three languages") {
  FamilyDataset ds = parse_dataset_tsv("meaning\tA\tB\tC\nHAND\tmano\tmano\tmain\n");
  auto value = stability(ds, 0, SynonymPolicy::First);
  CHECK(value.pair_coverage == 3);
  CHECK(*value.s == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("stability_all covers every meaning") {
  FamilyDataset ds = parse_dataset_tsv(
      "meaning\tA\tB\nHAND\tmano\tmano\nSUN\tsole\tsoleil\nMOON\t\tluna\n");
  StabilityReport report = stability_all(ds);
  REQUIRE(report.items.size() == 3);
  CHECK(report.items[0].s == 1.0);
  CHECK(*report.items[1].s == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(report.items[1].pair_coverage == 1);
  CHECK_FALSE(report.items[2].s.has_value());
  CHECK(report.items[2].pair_coverage == 0);
  CHECK(report.n_languages == 2);
}

TEST_CASE("stability_all drops meanings under the coverage minimum") {
  FamilyDataset ds = parse_dataset_tsv(
      "meaning\tA\tB\tC\nHAND\tmano\tmain\thand\nSUN\tsole\tsoleil\t\n");
  StabilityOptions options;
  options.min_pair_coverage = 2;
  StabilityReport report = stability_all(ds, options);
  CHECK(report.items[0].s.has_value());
  CHECK_FALSE(report.items[1].s.has_value());
  CHECK(report.items[1].pair_coverage == 1);  // coverage still reported
}

TEST_CASE("stability_all is bitwise identical across thread counts") {
  Rng rng(45, 0);
  for (int trial = 0; trial < 20; ++trial) {
    FamilyDataset ds = oracle::random_dataset(rng, 6, 12, 6, true, 2);
    StabilityOptions serial;
    StabilityOptions parallel;
    parallel.threads = 3;
    StabilityReport a = stability_all(ds, serial);
    StabilityReport b = stability_all(ds, parallel);
    REQUIRE(a.items.size() == b.items.size());
    for (std::size_t m = 0; m < a.items.size(); ++m) {
      CHECK(a.items[m].s == b.items[m].s);
      CHECK(a.items[m].pair_coverage == b.items[m].pair_coverage);
    }
  }
}

TEST_CASE("stability_all matches the ordered-pair oracle exactly") {
  Rng rng(42, 0);
  for (int trial = 0; trial < 100; ++trial) {
    FamilyDataset ds = oracle::random_dataset(rng);
    StabilityReport report = stability_all(ds);
    for (std::size_t m = 0; m < ds.n_meanings(); ++m) {
      auto expected = oracle::stability_ordered(ds, m);
      REQUIRE(report.items[m].s.has_value() == expected.defined);
      if (expected.defined) {
        CHECK(*report.items[m].s == expected.s);  // bitwise
        CHECK(report.items[m].pair_coverage * 2 == expected.ordered_pairs);
      }
    }
  }
}

TEST_CASE("permuting languages leaves stability unchanged") {
  Rng rng(43, 0);
  for (int trial = 0; trial < 50; ++trial) {
    FamilyDataset ds = oracle::random_dataset(rng);
    StabilityReport base = stability_all(ds);

    std::vector<std::size_t> perm(ds.n_languages());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = perm.size(); i > 1; --i) {
      std::swap(perm[i - 1], perm[rng.uniform_below(i)]);
    }
    FamilyDataset shuffled = ds;
    for (std::size_t l = 0; l < perm.size(); ++l) {
      shuffled.languages[l] = ds.languages[perm[l]];
      shuffled.cells[l] = ds.cells[perm[l]];
    }
    StabilityReport permuted = stability_all(shuffled);
    for (std::size_t m = 0; m < ds.n_meanings(); ++m) {
      CHECK(permuted.items[m].s.has_value() == base.items[m].s.has_value());
      if (base.items[m].s) {
        CHECK(*permuted.items[m].s == doctest::Approx(*base.items[m].s).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("language_distance averages over shared meanings") {
  FamilyDataset ds = parse_dataset_tsv(
      "meaning\tA\tB\nONE\tab\tac\nTWO\tabcdefgh\tabcdefgx\n");
  auto [d, coverage] = language_distance(ds, 0, 1, SynonymPolicy::First);
  CHECK(d == 0.3125);  // mean of 0.5 and 0.125
  CHECK(coverage == 2);

  FamilyDataset gap = parse_dataset_tsv(
      "meaning\tA\tB\nONE\tab\tac\nTWO\tabcdefgh\t\n");
  auto [d2, c2] = language_distance(gap, 0, 1, SynonymPolicy::First);
  CHECK(d2 == 0.5);
  CHECK(c2 == 1);
}

TEST_CASE("identical lexicons are at distance zero") {
  FamilyDataset ds = parse_dataset_tsv("meaning\tA\tB\nONE\tuno\tuno\nTWO\tdue\tdue\n");
  CHECK(language_distance(ds, 0, 1, SynonymPolicy::First).distance == 0.0);
}

TEST_CASE("language_distance with no shared meanings throws") {
  FamilyDataset ds = parse_dataset_tsv("meaning\tA\tB\nONE\tuno\t\nTWO\t\tdva\n");
  CHECK_THROWS_WITH_AS(language_distance(ds, 0, 1, SynonymPolicy::First),
                       doctest::Contains("share no defined meaning"), Error);
}

TEST_CASE("distance_matrix agrees with scalar calls and is deterministic") {
  Rng rng(44, 0);
  for (int trial = 0; trial < 30; ++trial) {
    FamilyDataset ds = oracle::random_dataset(rng, 5, 6, 6, false);
    DistanceMatrix m1 = distance_matrix(ds, SynonymPolicy::First, 1);
    DistanceMatrix m3 = distance_matrix(ds, SynonymPolicy::First, 3);
    CHECK(m1 == m3);  // bitwise across worker counts
    for (std::size_t a = 0; a < ds.n_languages(); ++a) {
      CHECK(m1.at(a, a) == 0.0);
      for (std::size_t b = a + 1; b < ds.n_languages(); ++b) {
        CHECK(m1.at(a, b) == m1.at(b, a));
        CHECK(m1.at(a, b) ==
              language_distance(ds, a, b, SynonymPolicy::First).distance);
      }
    }
  }
}

TEST_CASE("distance_matrix names the offending pair") {
  FamilyDataset ds = parse_dataset_tsv(
      "meaning\tA\tB\tC\nONE\tuno\tuno\t\nTWO\tdue\tdue\t\nTHREE\t\t\ttri\n");
  try {
    distance_matrix(ds, SynonymPolicy::First);
    FAIL("expected no-shared-meanings");
  } catch (const Error& e) {
    CHECK(e.code() == "no-shared-meanings");
    CHECK(std::string(e.what()).find("'C'") != std::string::npos);
  }
}

TEST_CASE("separation_time") {
  CHECK(separation_time(0.0, 0.25) == 0.0);
  CHECK(separation_time(1.0 - std::exp(-1.0), 0.25) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_THROWS_AS(separation_time(1.0, 0.25), Error);
  CHECK_THROWS_AS(separation_time(0.5, 0.0), Error);
  CHECK_THROWS_AS(separation_time(0.5, -1.0), Error);

  // monotone in d for fixed r
  double last = -1.0;
  for (double d = 0.0; d < 0.999; d += 0.037) {
    const double t = separation_time(d, 0.3);
    CHECK(t > last);
    last = t;
  }
}
