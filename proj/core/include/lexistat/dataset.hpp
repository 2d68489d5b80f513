#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lexistat/text.hpp"

namespace lexistat {

/// Languages x meanings table of word forms. Meanings are stored under
/// their canonical uppercase labels; a cell may hold several synonym forms.
/// An empty form list marks missing data -- parsing never produces a present
/// entry with zero forms. Immutable after construction and safe to share
/// across threads read-only.
struct FamilyDataset {
  std::vector<std::string> languages;
  std::vector<std::string> meanings;
  // cells[language][meaning] -> synonym forms; empty vector = missing
  std::vector<std::vector<std::vector<WordForm>>> cells;

  std::size_t n_languages() const { return languages.size(); }
  std::size_t n_meanings() const { return meanings.size(); }

  bool has_entry(std::size_t language, std::size_t meaning) const {
    return !cells[language][meaning].empty();
  }
  std::span<const WordForm> forms(std::size_t language,
                                  std::size_t meaning) const {
    return cells[language][meaning];
  }

  bool operator==(const FamilyDataset&) const = default;
};

/// Parses the tab-separated word-list format:
///   row 1:      meaning <TAB> language name ...
///   rows 2..M+1: MEANING LABEL <TAB> cell ...
/// where a cell is a comma/semicolon-separated synonym list and an empty
/// cell is missing data. Throws Error with codes "duplicate-language",
/// "duplicate-meaning", "ragged-row", "empty-dataset", "empty-name",
/// "empty-label".
FamilyDataset parse_dataset_tsv(std::string_view source,
                                const NormalizeOptions& options = {});

/// Serializes back to the same TSV format (synonyms joined with ",").
/// Re-parsing the output yields an identical dataset. Throws
/// "unserializable-form" when a form or name cannot survive the round trip
/// (tabs or newlines anywhere, separators inside a form).
std::string write_dataset_tsv(const FamilyDataset& dataset);

struct ValidationOptions {
  // Meanings whose defined unordered pair count falls below this are listed.
  std::size_t min_pair_coverage = 1;
};

struct ValidationReport {
  std::size_t n_languages = 0;
  std::size_t n_meanings = 0;
  std::size_t total_missing = 0;
  std::vector<std::size_t> missing_per_language;
  std::vector<std::size_t> missing_per_meaning;
  std::vector<std::pair<std::size_t, std::size_t>> missing_cells;  // (lang, meaning)
  std::vector<std::size_t> low_coverage_meanings;
  std::size_t coverage_threshold = 1;
};

/// Report-only consistency summary; never throws on gaps.
ValidationReport validate(const FamilyDataset& dataset,
                          const ValidationOptions& options = {});

}  // namespace lexistat
