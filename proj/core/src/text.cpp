#include "lexistat/text.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace lexistat {
namespace {

// Canonical decompositions for the precomposed Latin letters that show up
// in practice in word-list transcriptions: Latin-1 Supplement, all of
// Latin Extended-A, and the Extended-B / Extended Additional letters common
// in linguistic sources (caron vowels, comma-below, dot-below). Each entry
// is {composed, base, combining mark}; bases may be composed themselves
// (u-diaeresis-acute decomposes to u-diaeresis + acute).
struct Decomposition {
  char32_t composed;
  char32_t base;
  char32_t mark;
};

constexpr Decomposition kDecompositions[] = {
    // Latin-1 Supplement, uppercase
    {0x00C0, U'A', 0x0300}, {0x00C1, U'A', 0x0301}, {0x00C2, U'A', 0x0302},
    {0x00C3, U'A', 0x0303}, {0x00C4, U'A', 0x0308}, {0x00C5, U'A', 0x030A},
    {0x00C7, U'C', 0x0327}, {0x00C8, U'E', 0x0300}, {0x00C9, U'E', 0x0301},
    {0x00CA, U'E', 0x0302}, {0x00CB, U'E', 0x0308}, {0x00CC, U'I', 0x0300},
    {0x00CD, U'I', 0x0301}, {0x00CE, U'I', 0x0302}, {0x00CF, U'I', 0x0308},
    {0x00D1, U'N', 0x0303}, {0x00D2, U'O', 0x0300}, {0x00D3, U'O', 0x0301},
    {0x00D4, U'O', 0x0302}, {0x00D5, U'O', 0x0303}, {0x00D6, U'O', 0x0308},
    {0x00D9, U'U', 0x0300}, {0x00DA, U'U', 0x0301}, {0x00DB, U'U', 0x0302},
    {0x00DC, U'U', 0x0308}, {0x00DD, U'Y', 0x0301},
    // Latin-1 Supplement, lowercase
    {0x00E0, U'a', 0x0300}, {0x00E1, U'a', 0x0301}, {0x00E2, U'a', 0x0302},
    {0x00E3, U'a', 0x0303}, {0x00E4, U'a', 0x0308}, {0x00E5, U'a', 0x030A},
    {0x00E7, U'c', 0x0327}, {0x00E8, U'e', 0x0300}, {0x00E9, U'e', 0x0301},
    {0x00EA, U'e', 0x0302}, {0x00EB, U'e', 0x0308}, {0x00EC, U'i', 0x0300},
    {0x00ED, U'i', 0x0301}, {0x00EE, U'i', 0x0302}, {0x00EF, U'i', 0x0308},
    {0x00F1, U'n', 0x0303}, {0x00F2, U'o', 0x0300}, {0x00F3, U'o', 0x0301},
    {0x00F4, U'o', 0x0302}, {0x00F5, U'o', 0x0303}, {0x00F6, U'o', 0x0308},
    {0x00F9, U'u', 0x0300}, {0x00FA, U'u', 0x0301}, {0x00FB, U'u', 0x0302},
    {0x00FC, U'u', 0x0308}, {0x00FD, U'y', 0x0301}, {0x00FF, U'y', 0x0308},
    // Latin Extended-A
    {0x0100, U'A', 0x0304}, {0x0101, U'a', 0x0304}, {0x0102, U'A', 0x0306},
    {0x0103, U'a', 0x0306}, {0x0104, U'A', 0x0328}, {0x0105, U'a', 0x0328},
    {0x0106, U'C', 0x0301}, {0x0107, U'c', 0x0301}, {0x0108, U'C', 0x0302},
    {0x0109, U'c', 0x0302}, {0x010A, U'C', 0x0307}, {0x010B, U'c', 0x0307},
    {0x010C, U'C', 0x030C}, {0x010D, U'c', 0x030C}, {0x010E, U'D', 0x030C},
    {0x010F, U'd', 0x030C}, {0x0112, U'E', 0x0304}, {0x0113, U'e', 0x0304},
    {0x0114, U'E', 0x0306}, {0x0115, U'e', 0x0306}, {0x0116, U'E', 0x0307},
    {0x0117, U'e', 0x0307}, {0x0118, U'E', 0x0328}, {0x0119, U'e', 0x0328},
    {0x011A, U'E', 0x030C}, {0x011B, U'e', 0x030C}, {0x011C, U'G', 0x0302},
    {0x011D, U'g', 0x0302}, {0x011E, U'G', 0x0306}, {0x011F, U'g', 0x0306},
    {0x0120, U'G', 0x0307}, {0x0121, U'g', 0x0307}, {0x0122, U'G', 0x0327},
    {0x0123, U'g', 0x0327}, {0x0124, U'H', 0x0302}, {0x0125, U'h', 0x0302},
    {0x0128, U'I', 0x0303}, {0x0129, U'i', 0x0303}, {0x012A, U'I', 0x0304},
    {0x012B, U'i', 0x0304}, {0x012C, U'I', 0x0306}, {0x012D, U'i', 0x0306},
    {0x012E, U'I', 0x0328}, {0x012F, U'i', 0x0328}, {0x0130, U'I', 0x0307},
    {0x0134, U'J', 0x0302}, {0x0135, U'j', 0x0302}, {0x0136, U'K', 0x0327},
    {0x0137, U'k', 0x0327}, {0x0139, U'L', 0x0301}, {0x013A, U'l', 0x0301},
    {0x013B, U'L', 0x0327}, {0x013C, U'l', 0x0327}, {0x013D, U'L', 0x030C},
    {0x013E, U'l', 0x030C}, {0x0143, U'N', 0x0301}, {0x0144, U'n', 0x0301},
    {0x0145, U'N', 0x0327}, {0x0146, U'n', 0x0327}, {0x0147, U'N', 0x030C},
    {0x0148, U'n', 0x030C}, {0x014C, U'O', 0x0304}, {0x014D, U'o', 0x0304},
    {0x014E, U'O', 0x0306}, {0x014F, U'o', 0x0306}, {0x0150, U'O', 0x030B},
    {0x0151, U'o', 0x030B}, {0x0154, U'R', 0x0301}, {0x0155, U'r', 0x0301},
    {0x0156, U'R', 0x0327}, {0x0157, U'r', 0x0327}, {0x0158, U'R', 0x030C},
    {0x0159, U'r', 0x030C}, {0x015A, U'S', 0x0301}, {0x015B, U's', 0x0301},
    {0x015C, U'S', 0x0302}, {0x015D, U's', 0x0302}, {0x015E, U'S', 0x0327},
    {0x015F, U's', 0x0327}, {0x0160, U'S', 0x030C}, {0x0161, U's', 0x030C},
    {0x0162, U'T', 0x0327}, {0x0163, U't', 0x0327}, {0x0164, U'T', 0x030C},
    {0x0165, U't', 0x030C}, {0x0168, U'U', 0x0303}, {0x0169, U'u', 0x0303},
    {0x016A, U'U', 0x0304}, {0x016B, U'u', 0x0304}, {0x016C, U'U', 0x0306},
    {0x016D, U'u', 0x0306}, {0x016E, U'U', 0x030A}, {0x016F, U'u', 0x030A},
    {0x0170, U'U', 0x030B}, {0x0171, U'u', 0x030B}, {0x0172, U'U', 0x0328},
    {0x0173, U'u', 0x0328}, {0x0174, U'W', 0x0302}, {0x0175, U'w', 0x0302},
    {0x0176, U'Y', 0x0302}, {0x0177, U'y', 0x0302}, {0x0178, U'Y', 0x0308},
    {0x0179, U'Z', 0x0301}, {0x017A, U'z', 0x0301}, {0x017B, U'Z', 0x0307},
    {0x017C, U'z', 0x0307}, {0x017D, U'Z', 0x030C}, {0x017E, U'z', 0x030C},
    // Latin Extended-B (caron vowels, g/o variants, comma below)
    {0x01CD, U'A', 0x030C}, {0x01CE, U'a', 0x030C}, {0x01CF, U'I', 0x030C},
    {0x01D0, U'i', 0x030C}, {0x01D1, U'O', 0x030C}, {0x01D2, U'o', 0x030C},
    {0x01D3, U'U', 0x030C}, {0x01D4, U'u', 0x030C},
    {0x01D5, 0x00DC, 0x0304}, {0x01D6, 0x00FC, 0x0304},
    {0x01D7, 0x00DC, 0x0301}, {0x01D8, 0x00FC, 0x0301},
    {0x01D9, 0x00DC, 0x030C}, {0x01DA, 0x00FC, 0x030C},
    {0x01DB, 0x00DC, 0x0300}, {0x01DC, 0x00FC, 0x0300},
    {0x01E6, U'G', 0x030C}, {0x01E7, U'g', 0x030C},
    {0x01EA, U'O', 0x0328}, {0x01EB, U'o', 0x0328},
    {0x01F4, U'G', 0x0301}, {0x01F5, U'g', 0x0301},
    {0x0218, U'S', 0x0326}, {0x0219, U's', 0x0326},
    {0x021A, U'T', 0x0326}, {0x021B, U't', 0x0326},
    // Latin Extended Additional (dot below / dot above, used in
    // Indological and Semitic transcription; dot-below vowels)
    {0x1E0C, U'D', 0x0323}, {0x1E0D, U'd', 0x0323},
    {0x1E24, U'H', 0x0323}, {0x1E25, U'h', 0x0323},
    {0x1E36, U'L', 0x0323}, {0x1E37, U'l', 0x0323},
    {0x1E40, U'M', 0x0307}, {0x1E41, U'm', 0x0307},
    {0x1E42, U'M', 0x0323}, {0x1E43, U'm', 0x0323},
    {0x1E44, U'N', 0x0307}, {0x1E45, U'n', 0x0307},
    {0x1E46, U'N', 0x0323}, {0x1E47, U'n', 0x0323},
    {0x1E5A, U'R', 0x0323}, {0x1E5B, U'r', 0x0323},
    {0x1E62, U'S', 0x0323}, {0x1E63, U's', 0x0323},
    {0x1E6C, U'T', 0x0323}, {0x1E6D, U't', 0x0323},
    {0x1E92, U'Z', 0x0323}, {0x1E93, U'z', 0x0323},
    {0x1EA0, U'A', 0x0323}, {0x1EA1, U'a', 0x0323},
    {0x1EB8, U'E', 0x0323}, {0x1EB9, U'e', 0x0323},
    {0x1ECA, U'I', 0x0323}, {0x1ECB, U'i', 0x0323},
    {0x1ECC, U'O', 0x0323}, {0x1ECD, U'o', 0x0323},
    {0x1EE4, U'U', 0x0323}, {0x1EE5, U'u', 0x0323},
    {0x1EF4, U'Y', 0x0323}, {0x1EF5, U'y', 0x0323},
};

// Letters without a diacritic decomposition that still fold to ASCII.
// Lowercase only: folding runs after the lowercasing step.
struct LetterFold {
  char32_t from;
  const char32_t* to;
};

constexpr char32_t kSs[] = U"ss";
constexpr char32_t kAe[] = U"ae";
constexpr char32_t kOe[] = U"oe";
constexpr char32_t kO[] = U"o";
constexpr char32_t kD[] = U"d";
constexpr char32_t kH[] = U"h";
constexpr char32_t kL[] = U"l";
constexpr char32_t kI[] = U"i";
constexpr char32_t kK[] = U"k";
constexpr char32_t kS[] = U"s";
constexpr char32_t kTh[] = U"th";
constexpr char32_t kNg[] = U"ng";
constexpr char32_t kT[] = U"t";

constexpr LetterFold kLetterFolds[] = {
    {0x00DF, kSs},  // eszett
    {0x00E6, kAe},  // ae ligature
    {0x0153, kOe},  // oe ligature
    {0x00F8, kO},   // o with stroke
    {0x0111, kD},   // d with stroke
    {0x00F0, kD},   // eth
    {0x0127, kH},   // h with stroke
    {0x0142, kL},   // l with stroke
    {0x0131, kI},   // dotless i
    {0x0138, kK},   // kra
    {0x017F, kS},   // long s
    {0x00FE, kTh},  // thorn
    {0x014B, kNg},  // eng
    {0x0167, kT},   // t with stroke
};

const std::unordered_map<char32_t, std::pair<char32_t, char32_t>>&
decompose_map() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<char32_t, std::pair<char32_t, char32_t>>;
    for (const auto& d : kDecompositions) m->emplace(d.composed, std::make_pair(d.base, d.mark));
    return m;
  }();
  return *map;
}

const std::unordered_map<std::uint64_t, char32_t>& compose_map() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<std::uint64_t, char32_t>;
    for (const auto& d : kDecompositions) {
      std::uint64_t key = (std::uint64_t(d.base) << 32) | d.mark;
      m->emplace(key, d.composed);
    }
    return m;
  }();
  return *map;
}

const std::unordered_map<char32_t, const char32_t*>& letter_fold_map() {
  static const auto* map = [] {
    auto* m = new std::unordered_map<char32_t, const char32_t*>;
    for (const auto& f : kLetterFolds) m->emplace(f.from, f.to);
    return m;
  }();
  return *map;
}

}  // namespace

std::u32string utf8_decode(std::string_view text) {
  std::u32string out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto n = text.size();
  while (i < n) {
    unsigned char b0 = static_cast<unsigned char>(text[i]);
    char32_t cp = 0xFFFD;
    std::size_t len = 1;
    if (b0 < 0x80) {
      cp = b0;
    } else if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
    } else {
      out.push_back(0xFFFD);
      ++i;
      continue;
    }
    if (len > 1) {
      if (i + len > n) {
        out.push_back(0xFFFD);
        ++i;
        continue;
      }
      bool ok = true;
      for (std::size_t k = 1; k < len; ++k) {
        unsigned char bk = static_cast<unsigned char>(text[i + k]);
        if ((bk & 0xC0) != 0x80) {
          ok = false;
          break;
        }
        cp = (cp << 6) | (bk & 0x3F);
      }
      // reject overlong encodings and surrogates
      if (!ok || (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
          (len == 4 && cp < 0x10000) || cp > 0x10FFFF ||
          (cp >= 0xD800 && cp <= 0xDFFF)) {
        out.push_back(0xFFFD);
        ++i;
        continue;
      }
    }
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::string utf8_encode(std::u32string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) cp = 0xFFFD;
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
  if ((cp >= 0x0100 && cp <= 0x012F) || (cp >= 0x0132 && cp <= 0x0137) ||
      (cp >= 0x014A && cp <= 0x0177)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E)) {
    return (cp % 2 == 1) ? cp + 1 : cp;
  }
  if (cp == 0x0130) return U'i';  // I with dot above
  if (cp == 0x0178) return 0x00FF;
  if (cp >= 0x01CD && cp <= 0x01DB) return (cp % 2 == 1) ? cp + 1 : cp;
  if ((cp >= 0x01DE && cp <= 0x01EF) || cp == 0x01F4 ||
      (cp >= 0x0218 && cp <= 0x021B) || (cp >= 0x1E00 && cp <= 0x1E95) ||
      (cp >= 0x1EA0 && cp <= 0x1EFE)) {
    return (cp % 2 == 0) ? cp + 1 : cp;
  }
  if (cp >= 0x0391 && cp <= 0x03A9 && cp != 0x03A2) return cp + 0x20;  // Greek
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;                 // Cyrillic
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  return cp;
}

char32_t to_upper(char32_t cp) {
  if (cp >= U'a' && cp <= U'z') return cp - 0x20;
  if (cp >= 0x00E0 && cp <= 0x00FE && cp != 0x00F7) return cp - 0x20;
  if (cp == 0x00FF) return 0x0178;
  if ((cp >= 0x0100 && cp <= 0x012F) || (cp >= 0x0132 && cp <= 0x0137) ||
      (cp >= 0x014A && cp <= 0x0177)) {
    return (cp % 2 == 1) ? cp - 1 : cp;
  }
  if ((cp >= 0x0139 && cp <= 0x0148) || (cp >= 0x0179 && cp <= 0x017E)) {
    return (cp % 2 == 0) ? cp - 1 : cp;
  }
  if (cp == 0x0131) return U'I';  // dotless i
  if (cp == 0x017F) return U'S';  // long s
  if (cp >= 0x01CE && cp <= 0x01DC) return (cp % 2 == 0) ? cp - 1 : cp;
  if ((cp >= 0x01DE && cp <= 0x01EF) || cp == 0x01F5 ||
      (cp >= 0x0218 && cp <= 0x021B) || (cp >= 0x1E00 && cp <= 0x1E95) ||
      (cp >= 0x1EA0 && cp <= 0x1EFE)) {
    return (cp % 2 == 1) ? cp - 1 : cp;
  }
  if (cp >= 0x03B1 && cp <= 0x03C9 && cp != 0x03C2) return cp - 0x20;
  if (cp == 0x03C2) return 0x03A3;  // final sigma
  if (cp >= 0x0430 && cp <= 0x044F) return cp - 0x20;
  if (cp >= 0x0450 && cp <= 0x045F) return cp - 0x50;
  return cp;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09:
    case 0x0A:
    case 0x0B:
    case 0x0C:
    case 0x0D:
    case 0x20:
    case 0x85:
    case 0xA0:
    case 0x1680:
    case 0x2028:
    case 0x2029:
    case 0x202F:
    case 0x205F:
    case 0x3000:
    case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200B;
  }
}

bool is_combining_mark(char32_t cp) {
  return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x1AB0 && cp <= 0x1AFF) ||
         (cp >= 0x1DC0 && cp <= 0x1DFF) || (cp >= 0x20D0 && cp <= 0x20FF) ||
         (cp >= 0xFE20 && cp <= 0xFE2F);
}

std::u32string compose_canonical(std::u32string_view text) {
  const auto& table = compose_map();
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (is_combining_mark(cp) && !out.empty()) {
      std::uint64_t key = (std::uint64_t(out.back()) << 32) | cp;
      auto it = table.find(key);
      if (it != table.end()) {
        out.back() = it->second;
        continue;
      }
    }
    out.push_back(cp);
  }
  return out;
}

std::u32string fold_diacritics(std::u32string_view text) {
  const auto& decomp = decompose_map();
  const auto& folds = letter_fold_map();
  std::u32string out;
  out.reserve(text.size());
  for (char32_t cp : text) {
    if (is_combining_mark(cp)) continue;
    // Walk down to the undecorated base letter; table bases may themselves
    // be decomposable (u-diaeresis-acute -> u-diaeresis -> u).
    auto it = decomp.find(cp);
    while (it != decomp.end()) {
      cp = it->second.first;
      it = decomp.find(cp);
    }
    auto fit = folds.find(cp);
    if (fit != folds.end()) {
      for (const char32_t* p = fit->second; *p; ++p) out.push_back(*p);
    } else {
      out.push_back(cp);
    }
  }
  return out;
}

namespace {

std::u32string trim_u32(std::u32string_view text) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;
  return std::u32string(text.substr(begin, end - begin));
}

}  // namespace

std::optional<WordForm> normalize_word(std::string_view raw,
                                       const NormalizeOptions& options) {
  std::u32string cps = compose_canonical(utf8_decode(raw));
  for (char32_t& cp : cps) cp = to_lower(cp);
  if (options.fold_diacritics) cps = fold_diacritics(cps);
  cps = trim_u32(cps);
  if (cps.empty()) return std::nullopt;
  return cps;
}

std::string canonical_label(std::string_view raw) {
  std::u32string cps = compose_canonical(utf8_decode(raw));
  for (char32_t& cp : cps) cp = to_upper(cp);
  return utf8_encode(trim_u32(cps));
}

std::string trim(std::string_view text) {
  return utf8_encode(trim_u32(utf8_decode(text)));
}

}  // namespace lexistat
