#pragma once

#include <cstddef>
#include <string_view>

namespace lexistat {

/// Minimum number of single-character insertions, deletions or
/// substitutions transforming one word into the other.
std::size_t levenshtein(std::u32string_view a, std::u32string_view b);

/// Levenshtein distance divided by the length of the longer word.
/// Symmetric, in [0,1], zero iff the sequences are equal. A single
/// substitution between 2-char words gives 0.5, between 8-char words 0.125.
double normalized_distance(std::u32string_view a, std::u32string_view b);

}  // namespace lexistat
