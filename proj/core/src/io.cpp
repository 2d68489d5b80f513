#include "lexistat/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "lexistat/error.hpp"
#include "lexistat/rng.hpp"
#include "lexistat/text.hpp"

namespace lexistat {

std::string NumberFormat::operator()(double value) const {
  if (value == 0.0) value = 0.0;  // normalize -0
  char buf[40];
  if (full_precision) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, end);
  }
  int len = std::snprintf(buf, sizeof buf, "%.6g", value);
  return std::string(buf, static_cast<std::size_t>(len));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("io", "cannot open '" + path + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw Error("io", "failed while reading '" + path + "'");
  return std::move(buffer).str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("io", "cannot open '" + path + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error("io", "failed while writing '" + path + "'");
}

namespace {

bool needs_quoting(std::string_view field) {
  return field.find_first_of(",\"\n\r") != std::string_view::npos;
}

std::string csv_field(std::string_view field) {
  if (!needs_quoting(field)) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

// Minimal RFC-4180 reader: quoted fields, doubled quotes, CRLF tolerant.
std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;
  auto end_field = [&] {
    row.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_row = [&] {
    end_field();
    if (!(row.size() == 1 && row[0].empty())) rows.push_back(std::move(row));
    row.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        field += c;
      }
    } else if (c == '"' && !field_started) {
      in_quotes = true;
      field_started = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\n') {
      if (!field.empty() && field.back() == '\r') field.pop_back();
      end_row();
    } else {
      field += c;
      field_started = true;
    }
  }
  if (field_started || !field.empty() || !row.empty()) end_row();
  return rows;
}

double parse_double(const std::string& field, const char* what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error("csv-format", std::string("cannot parse ") + what + " '" + field + "'");
  }
  return value;
}

std::size_t parse_size(const std::string& field, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw Error("csv-format", std::string("cannot parse ") + what + " '" + field + "'");
  }
  return value;
}

}  // namespace

std::string write_stability_csv(const StabilityReport& report,
                                const NumberFormat& fmt) {
  std::string out = "meaning,label,S,coverage\n";
  for (std::size_t m = 0; m < report.items.size(); ++m) {
    const auto& item = report.items[m];
    out += std::to_string(m);
    out += ',';
    out += csv_field(item.label);
    out += ',';
    if (item.s) out += fmt(*item.s);
    out += ',';
    out += std::to_string(item.pair_coverage);
    out += '\n';
  }
  return out;
}

StabilityReport read_stability_csv(std::string_view content,
                                   const std::string& family) {
  auto rows = parse_csv(content);
  if (rows.empty() || rows[0] != std::vector<std::string>{"meaning", "label", "S", "coverage"}) {
    throw Error("csv-format", "expected header 'meaning,label,S,coverage'");
  }
  StabilityReport report;
  report.family = family;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() != 4) {
      throw Error("csv-format", "stability row " + std::to_string(r + 1) +
                                    " has " + std::to_string(row.size()) +
                                    " fields, expected 4");
    }
    const std::size_t index = parse_size(row[0], "meaning index");
    if (index != report.items.size()) {
      throw Error("csv-format", "meaning indices must be consecutive from 0");
    }
    MeaningStability item;
    item.label = canonical_label(row[1]);
    if (item.label.empty()) {
      throw Error("csv-format", "empty meaning label in row " + std::to_string(r + 1));
    }
    if (!row[2].empty()) item.s = parse_double(row[2], "stability");
    item.pair_coverage = parse_size(row[3], "coverage");
    report.items.push_back(std::move(item));
  }
  std::unordered_set<std::string> seen;
  for (const auto& item : report.items) {
    if (!seen.insert(item.label).second) {
      throw Error("csv-format", "duplicate meaning label '" + item.label + "'");
    }
  }
  return report;
}

std::string write_matrix_csv(const DistanceMatrix& matrix,
                             const NumberFormat& fmt) {
  std::string out = "language";
  for (const auto& label : matrix.labels) {
    out += ',';
    out += csv_field(label);
  }
  out += '\n';
  for (std::size_t i = 0; i < matrix.size(); ++i) {
    out += csv_field(matrix.labels[i]);
    for (std::size_t j = 0; j < matrix.size(); ++j) {
      out += ',';
      out += fmt(matrix.at(i, j));
    }
    out += '\n';
  }
  return out;
}

DistanceMatrix read_matrix_csv(std::string_view content) {
  auto rows = parse_csv(content);
  if (rows.empty() || rows[0].size() < 2) {
    throw Error("csv-format", "expected a labeled matrix header");
  }
  const std::size_t n = rows[0].size() - 1;
  if (rows.size() != n + 1) {
    throw Error("csv-format", "matrix has " + std::to_string(rows.size() - 1) +
                                  " rows for " + std::to_string(n) + " columns");
  }
  DistanceMatrix matrix(
      std::vector<std::string>(rows[0].begin() + 1, rows[0].end()));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows[i + 1];
    if (row.size() != n + 1) {
      throw Error("csv-format", "matrix row " + std::to_string(i + 2) +
                                    " has " + std::to_string(row.size()) +
                                    " fields, expected " + std::to_string(n + 1));
    }
    if (row[0] != matrix.labels[i]) {
      throw Error("csv-format", "row label '" + row[0] +
                                    "' does not match column label '" +
                                    matrix.labels[i] + "'");
    }
    for (std::size_t j = 0; j < n; ++j) {
      matrix.at(i, j) = parse_double(row[j + 1], "matrix entry");
    }
  }
  return matrix;
}

std::string write_rank_csv(const RankCurve& curve, const LinearFit& fit,
                           const NumberFormat& fmt) {
  std::string out = "rank,meaning,label,S,residual\n";
  for (const auto& entry : curve.entries) {
    out += std::to_string(entry.rank);
    out += ',';
    out += std::to_string(entry.meaning);
    out += ',';
    out += csv_field(entry.label);
    out += ',';
    out += fmt(entry.s);
    out += ',';
    out += fmt(fit.residuals[entry.rank - 1]);
    out += '\n';
  }
  return out;
}

std::string write_rank_csv(const RankCurve& curve, const NumberFormat& fmt) {
  std::string out = "rank,meaning,label,S\n";
  for (const auto& entry : curve.entries) {
    out += std::to_string(entry.rank);
    out += ',';
    out += std::to_string(entry.meaning);
    out += ',';
    out += csv_field(entry.label);
    out += ',';
    out += fmt(entry.s);
    out += '\n';
  }
  return out;
}

std::string write_fit_csv(const LinearFit& fit, const NumberFormat& fmt) {
  std::string out = "slope,intercept,lo,hi\n";
  out += fmt(fit.slope);
  out += ',';
  out += fmt(fit.intercept);
  out += ',';
  out += std::to_string(fit.lo);
  out += ',';
  out += std::to_string(fit.hi);
  out += '\n';
  return out;
}

std::string write_histogram_csv(const Histogram& histogram,
                                const NumberFormat& fmt) {
  std::string out = "bin_lo,bin_hi,count\n";
  for (std::size_t b = 0; b < histogram.counts.size(); ++b) {
    out += fmt(histogram.lower_edge(b));
    out += ',';
    out += fmt(histogram.upper_edge(b));
    out += ',';
    out += std::to_string(histogram.counts[b]);
    out += '\n';
  }
  return out;
}

std::string write_overlap_csv(const OverlapCurve& curve, double pearson,
                              const NumberFormat& fmt) {
  std::string out = "# pearson,";
  out += fmt(pearson);
  out += "\n# shared_labels,";
  out += std::to_string(curve.shared_labels);
  out += '\n';
  out += "n,m,p\n";
  for (const auto& point : curve.points) {
    out += std::to_string(point.n);
    out += ',';
    out += std::to_string(point.m);
    out += ',';
    out += fmt(point.p);
    out += '\n';
  }
  return out;
}

std::string write_truth_csv(const SimConfig& config,
                            const std::vector<std::string>& labels) {
  NumberFormat full{true};
  std::string out;
  out += "# generator,";
  out += Rng::kAlgorithm;
  out += '\n';
  out += "# seed," + std::to_string(config.seed) + '\n';
  out += "# languages," + std::to_string(config.n_languages) + '\n';
  out += "# meanings," + std::to_string(config.n_meanings) + '\n';
  out += "# mutation_rate," + full(config.mutation_rate) + '\n';
  out += "# word_length," + std::to_string(config.min_word_length) + '-' +
         std::to_string(config.max_word_length) + '\n';
  out += "# alphabet," + std::to_string(config.alphabet_size) + '\n';
  out += "label,lambda\n";
  for (std::size_t m = 0; m < config.n_meanings; ++m) {
    out += csv_field(labels[m]);
    out += ',';
    out += full(config.rates[m]);
    out += '\n';
  }
  return out;
}

}  // namespace lexistat
