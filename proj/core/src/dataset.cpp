#include "lexistat/dataset.hpp"

#include <algorithm>
#include <unordered_set>

#include "lexistat/error.hpp"

namespace lexistat {
namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      break;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::vector<WordForm> parse_cell(std::string_view cell,
                                 const NormalizeOptions& options) {
  std::vector<WordForm> forms;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= cell.size(); ++i) {
    if (i == cell.size() || cell[i] == ',' || cell[i] == ';') {
      if (auto form = normalize_word(cell.substr(start, i - start), options)) {
        forms.push_back(std::move(*form));
      }
      start = i + 1;
    }
  }
  return forms;
}

}  // namespace

FamilyDataset parse_dataset_tsv(std::string_view source,
                                const NormalizeOptions& options) {
  // Strip a UTF-8 BOM; exported spreadsheets often carry one.
  if (source.substr(0, 3) == "\xEF\xBB\xBF") source.remove_prefix(3);

  std::vector<std::string_view> lines;
  for (std::string_view line : split(source, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;  // blank lines are ignored
    lines.push_back(line);
  }
  if (lines.empty()) throw Error("empty-dataset", "input has no header row");

  auto header = split(lines[0], '\t');
  FamilyDataset ds;
  std::unordered_set<std::string> seen_languages;
  for (std::size_t c = 1; c < header.size(); ++c) {
    std::string name = trim(header[c]);
    if (name.empty()) {
      throw Error("empty-name", "header column " + std::to_string(c + 1) +
                                    " has an empty language name");
    }
    if (!seen_languages.insert(name).second) {
      throw Error("duplicate-language", "language '" + name + "' appears twice");
    }
    ds.languages.push_back(std::move(name));
  }

  const std::size_t n = ds.languages.size();
  std::unordered_set<std::string> seen_meanings;
  std::vector<std::vector<std::vector<WordForm>>> by_meaning;
  for (std::size_t r = 1; r < lines.size(); ++r) {
    auto cells = split(lines[r], '\t');
    if (cells.size() != header.size()) {
      throw Error("ragged-row",
                  "row " + std::to_string(r + 1) + " has " +
                      std::to_string(cells.size()) + " cells, header has " +
                      std::to_string(header.size()));
    }
    std::string label = canonical_label(cells[0]);
    if (label.empty()) {
      throw Error("empty-label",
                  "row " + std::to_string(r + 1) + " has an empty meaning label");
    }
    if (!seen_meanings.insert(label).second) {
      throw Error("duplicate-meaning", "meaning '" + label + "' appears twice");
    }
    ds.meanings.push_back(std::move(label));
    auto& row = by_meaning.emplace_back();
    row.reserve(n);
    for (std::size_t c = 1; c < cells.size(); ++c) {
      row.push_back(parse_cell(cells[c], options));
    }
  }

  if (ds.languages.size() < 2 || ds.meanings.empty()) {
    throw Error("empty-dataset", "need at least 2 languages and 1 meaning, got " +
                                     std::to_string(ds.languages.size()) + " and " +
                                     std::to_string(ds.meanings.size()));
  }

  ds.cells.assign(n, std::vector<std::vector<WordForm>>(ds.meanings.size()));
  for (std::size_t m = 0; m < by_meaning.size(); ++m) {
    for (std::size_t l = 0; l < n; ++l) {
      ds.cells[l][m] = std::move(by_meaning[m][l]);
    }
  }
  return ds;
}

namespace {

void check_serializable_name(const std::string& name, const char* what) {
  if (name.find('\t') != std::string::npos ||
      name.find('\n') != std::string::npos ||
      name.find('\r') != std::string::npos) {
    throw Error("unserializable-form",
                std::string(what) + " '" + name + "' contains a tab or newline");
  }
}

}  // namespace

std::string write_dataset_tsv(const FamilyDataset& dataset) {
  std::string out = "meaning";
  for (const auto& language : dataset.languages) {
    check_serializable_name(language, "language name");
    out += '\t';
    out += language;
  }
  out += '\n';
  for (std::size_t m = 0; m < dataset.n_meanings(); ++m) {
    check_serializable_name(dataset.meanings[m], "meaning label");
    out += dataset.meanings[m];
    for (std::size_t l = 0; l < dataset.n_languages(); ++l) {
      out += '\t';
      auto forms = dataset.forms(l, m);
      for (std::size_t f = 0; f < forms.size(); ++f) {
        std::string encoded = utf8_encode(forms[f]);
        if (encoded.find_first_of(",;\t\n\r") != std::string::npos) {
          throw Error("unserializable-form",
                      "form '" + encoded + "' contains a separator character");
        }
        if (f > 0) out += ',';
        out += encoded;
      }
    }
    out += '\n';
  }
  return out;
}

ValidationReport validate(const FamilyDataset& dataset,
                          const ValidationOptions& options) {
  ValidationReport report;
  report.n_languages = dataset.n_languages();
  report.n_meanings = dataset.n_meanings();
  report.coverage_threshold = options.min_pair_coverage;
  report.missing_per_language.assign(report.n_languages, 0);
  report.missing_per_meaning.assign(report.n_meanings, 0);

  for (std::size_t m = 0; m < report.n_meanings; ++m) {
    std::size_t defined = 0;
    for (std::size_t l = 0; l < report.n_languages; ++l) {
      if (dataset.has_entry(l, m)) {
        ++defined;
      } else {
        ++report.missing_per_language[l];
        ++report.missing_per_meaning[m];
        ++report.total_missing;
        report.missing_cells.emplace_back(l, m);
      }
    }
    std::size_t pairs = defined * (defined - 1) / 2;
    if (pairs < options.min_pair_coverage) {
      report.low_coverage_meanings.push_back(m);
    }
  }
  return report;
}

}  // namespace lexistat
