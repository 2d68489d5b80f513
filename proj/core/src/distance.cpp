#include "lexistat/distance.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace lexistat {

// Two rolling rows over the shorter word, O(min(m,n)) memory. Any faster
// variant must stay exactly equal to this recurrence; the test suite pins
// it against an exhaustive recursive oracle.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  if (b.empty()) return a.size();

  std::vector<std::size_t> row(b.size() + 1);
  std::iota(row.begin(), row.end(), std::size_t{0});

  for (std::size_t i = 0; i < a.size(); ++i) {
    std::size_t diagonal = row[0];
    row[0] = i + 1;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t up = row[j + 1];
      std::size_t cost = (a[i] == b[j]) ? diagonal
                                        : 1 + std::min({row[j], up, diagonal});
      diagonal = up;
      row[j + 1] = cost;
    }
  }
  return row[b.size()];
}

double normalized_distance(std::u32string_view a, std::u32string_view b) {
  std::size_t longer = std::max(a.size(), b.size());
  if (longer == 0) return 0.0;
  return static_cast<double>(levenshtein(a, b)) / static_cast<double>(longer);
}

}  // namespace lexistat
