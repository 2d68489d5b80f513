#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace lexistat {

/// A word as a sequence of Unicode scalar values after normalization.
/// Lengths (and therefore distance denominators) count scalar values.
using WordForm = std::u32string;

struct NormalizeOptions {
  /// Strip diacritics and fold a few special Latin letters to ASCII
  /// (s-caron -> s, o-macron -> o, eszett -> ss, ...). On by default so
  /// differently transcribed sources compare fairly.
  bool fold_diacritics = true;
};

/// Decodes UTF-8 into scalar values; malformed bytes become U+FFFD.
std::u32string utf8_decode(std::string_view text);
std::string utf8_encode(std::u32string_view text);

/// Simple per-code-point case mappings for Latin (ASCII, Latin-1,
/// Extended-A and the common Extended-B/Additional letters), Greek and
/// Cyrillic. Code points without a mapping pass through unchanged.
char32_t to_lower(char32_t cp);
char32_t to_upper(char32_t cp);

bool is_space(char32_t cp);
bool is_combining_mark(char32_t cp);

/// Canonical composition pass: combining marks following a base letter are
/// merged into the precomposed code point where one exists ("s" + caron
/// becomes the single s-caron scalar).
std::u32string compose_canonical(std::u32string_view text);

/// Replaces letters carrying diacritics by their base letters, drops stray
/// combining marks and expands ligature-like letters (eszett, ae, oe...).
/// Input is expected to be composed and lowercased.
std::u32string fold_diacritics(std::u32string_view text);

/// Full pipeline: compose, lowercase, optionally fold, trim surrounding
/// whitespace. Returns nothing when the result is empty. Idempotent on its
/// own output.
std::optional<WordForm> normalize_word(std::string_view raw,
                                       const NormalizeOptions& options = {});

/// Canonical meaning label: composed, uppercased, trimmed UTF-8.
/// Cross-family matching compares these byte-wise.
std::string canonical_label(std::string_view raw);

/// Trims ASCII + common Unicode whitespace from both ends of UTF-8 text.
std::string trim(std::string_view text);

}  // namespace lexistat
