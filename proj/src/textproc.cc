#include "xling/textproc.h"

#include <algorithm>
#include <array>
#include <unordered_map>

#include "utf8.h"
#include "xling/error.h"

namespace xling {

namespace utf8 {

std::u32string decode(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  std::size_t i = 0;
  while (i < s.size()) {
    const auto b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    std::size_t len = 0;
    char32_t cp = 0;
    char32_t min = 0;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2, cp = b0 & 0x1F, min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3, cp = b0 & 0x0F, min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4, cp = b0 & 0x07, min = 0x10000;
    }
    bool ok = len != 0 && i + len <= s.size();
    for (std::size_t k = 1; ok && k < len; ++k) {
      const auto b = static_cast<unsigned char>(s[i + k]);
      if ((b & 0xC0) != 0x80) {
        ok = false;
      } else {
        cp = (cp << 6) | (b & 0x3F);
      }
    }
    if (ok && (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF))) ok = false;
    if (!ok) {
      out.push_back(kReplacement);
      ++i;
    } else {
      out.push_back(cp);
      i += len;
    }
  }
  return out;
}

void append(std::string& out, char32_t cp) {
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

bool is_space(char32_t c) {
  return (c >= 0x09 && c <= 0x0D) || c == 0x20 || c == 0x85 || c == 0xA0 || c == 0x1680 ||
         (c >= 0x2000 && c <= 0x200A) || c == 0x2028 || c == 0x2029 || c == 0x202F ||
         c == 0x205F || c == 0x3000;
}

std::string encode(std::u32string_view cps) {
  std::string out;
  out.reserve(cps.size());
  for (char32_t cp : cps) append(out, cp);
  return out;
}

}  // namespace utf8

namespace {

bool is_punct(char32_t c) {
  if (c < 0x80) {
    return (c >= 0x21 && c <= 0x2F) || (c >= 0x3A && c <= 0x40) || (c >= 0x5B && c <= 0x60) ||
           (c >= 0x7B && c <= 0x7E);
  }
  if (c >= 0xA1 && c <= 0xBF) {
    // Latin-1 ordinal indicators, superscripts and fractions are not punctuation.
    return c != 0xAA && c != 0xB2 && c != 0xB3 && c != 0xB9 && c != 0xBA &&
           !(c >= 0xBC && c <= 0xBE);
  }
  if (c == 0xD7 || c == 0xF7) return true;
  if ((c >= 0x2010 && c <= 0x2027) || (c >= 0x2030 && c <= 0x205E)) return true;
  if (c == 0x060C || c == 0x060D || c == 0x061B || c == 0x061E || c == 0x061F ||
      (c >= 0x066A && c <= 0x066D) || c == 0x06D4) {
    return true;
  }
  if ((c >= 0x3001 && c <= 0x3003) || (c >= 0x3008 && c <= 0x3011)) return true;
  return (c >= 0xFF01 && c <= 0xFF0F) || (c >= 0xFF1A && c <= 0xFF20);
}

char32_t to_lower_latin(char32_t c) {
  if (c >= 'A' && c <= 'Z') return c + 0x20;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 0x20;
  if (c >= 0x100 && c <= 0x17F) {
    // Latin Extended-A alternates upper/lower in pairs; the parity flips
    // between U+0138 and U+0149, and U+0178 maps back to Latin-1.
    if (c == 0x130) return 'i';
    if (c == 0x178) return 0xFF;
    if ((c <= 0x137 || (c >= 0x14A && c <= 0x177)) && c % 2 == 0) return c + 1;
    if (((c >= 0x139 && c <= 0x148) || (c >= 0x179 && c <= 0x17E)) && c % 2 == 1) return c + 1;
  }
  return c;
}

constexpr char32_t kTatweel = 0x0640;
constexpr char32_t kAlef = 0x0627;
constexpr char32_t kAlefMadda = 0x0622;
constexpr char32_t kAlefHamzaAbove = 0x0623;
constexpr char32_t kAlefHamzaBelow = 0x0625;
constexpr char32_t kAlefMaksura = 0x0649;
constexpr char32_t kYeh = 0x064A;
constexpr char32_t kTehMarbuta = 0x0629;
constexpr char32_t kHeh = 0x0647;

bool is_haraka(char32_t c) { return c >= 0x064B && c <= 0x0652; }

// Ordered longest first; entries of equal length keep the listed order.
const std::array<std::u32string, 7> kArabicPrefixes = {U"وال", U"بال", U"كال", U"فال",
                                                       U"ال",  U"لل",  U"و"};
const std::array<std::u32string, 9> kArabicSuffixes = {U"ها", U"ان", U"ات", U"ون", U"ين",
                                                       U"يه", U"ية", U"ه",  U"ي"};

constexpr std::size_t kMinStemLength = 2;

bool starts_with(std::u32string_view s, std::u32string_view p) {
  return s.size() >= p.size() && s.substr(0, p.size()) == p;
}

bool ends_with(std::u32string_view s, std::u32string_view p) {
  return s.size() >= p.size() && s.substr(s.size() - p.size()) == p;
}

const std::unordered_map<std::string_view, std::string_view>& english_exceptions() {
  static const std::unordered_map<std::string_view, std::string_view> table = {
      {"men", "man"},         {"women", "woman"},     {"children", "child"},
      {"feet", "foot"},       {"teeth", "tooth"},     {"mice", "mouse"},
      {"geese", "goose"},     {"people", "person"},   {"lives", "life"},
      {"wives", "wife"},      {"knives", "knife"},    {"does", "do"},
      {"news", "news"},       {"series", "series"},   {"species", "species"},
      {"always", "always"},   {"perhaps", "perhaps"}, {"during", "during"},
      {"nothing", "nothing"}, {"something", "something"}, {"anything", "anything"},
      {"everything", "everything"},
  };
  return table;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool has_vowel(std::string_view s) { return std::any_of(s.begin(), s.end(), is_vowel); }

// Removes a -ing / -ed ending when what remains is a plausible stem, then
// undoes consonant doubling ("runn" -> "run"). Returns false if not applied.
bool strip_verbal(std::string& w, std::string_view suffix) {
  if (!w.ends_with(suffix)) return false;
  std::string stem = w.substr(0, w.size() - suffix.size());
  if (stem.size() < 3 || !has_vowel(stem)) return false;
  if (suffix == "ed" && stem.back() == 'e') return false;  // agreed, freed
  const char last = stem.back();
  if (stem.size() >= 2 && last == stem[stem.size() - 2] && !is_vowel(last) && last != 'l' &&
      last != 's' && last != 'z') {
    stem.pop_back();
  }
  w = std::move(stem);
  return true;
}

}  // namespace

std::string NGram::key() const {
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out += kNGramSeparator;
    out += terms[i];
  }
  return out;
}

NGram NGram::from_key(std::string_view key) {
  NGram g;
  std::size_t start = 0;
  while (true) {
    const auto pos = key.find(kNGramSeparator, start);
    g.terms.emplace_back(key.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + kNGramSeparator.size();
  }
  return g;
}

std::vector<Token> tokenize(std::string_view text, Language /*lang*/) {
  // Both languages share the same rules; Arabic has no case so lowercasing
  // Latin letters is harmless there.
  const std::u32string cps = utf8::decode(text);
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < cps.size()) {
    while (i < cps.size() && utf8::is_space(cps[i])) ++i;
    std::size_t j = i;
    while (j < cps.size() && !utf8::is_space(cps[j])) ++j;
    std::size_t b = i;
    std::size_t e = j;
    while (b < e && is_punct(cps[b])) ++b;
    while (e > b && is_punct(cps[e - 1])) --e;
    if (b < e) {
      std::string tok;
      for (std::size_t k = b; k < e; ++k) utf8::append(tok, to_lower_latin(cps[k]));
      tokens.push_back(std::move(tok));
    }
    i = j;
  }
  return tokens;
}

Token normalize_arabic(std::string_view token) {
  std::u32string out;
  for (char32_t c : utf8::decode(token)) {
    if (is_haraka(c) || c == kTatweel) continue;
    if (c == kAlefMadda || c == kAlefHamzaAbove || c == kAlefHamzaBelow) c = kAlef;
    if (c == kTehMarbuta) c = kHeh;
    out.push_back(c);
  }
  if (!out.empty() && out.back() == kAlefMaksura) out.back() = kYeh;
  return utf8::encode(out);
}

std::string light_stem_arabic(std::string_view token) {
  std::u32string w = utf8::decode(token);
  for (const auto& p : kArabicPrefixes) {
    if (starts_with(w, p) && w.size() - p.size() >= kMinStemLength) {
      w.erase(0, p.size());
      break;
    }
  }
  for (const auto& s : kArabicSuffixes) {
    if (ends_with(w, s) && w.size() - s.size() >= kMinStemLength) {
      w.erase(w.size() - s.size());
      break;
    }
  }
  return utf8::encode(w);
}

std::string stem_english(std::string_view token) {
  const auto& exceptions = english_exceptions();
  if (auto it = exceptions.find(token); it != exceptions.end()) return std::string(it->second);

  std::string w(token);
  if (w.ends_with("sses")) {
    w.resize(w.size() - 2);
  } else if (w.ends_with("ies")) {
    if (w.size() >= 5) {
      w.resize(w.size() - 3);
      w += 'y';
    } else {
      w.pop_back();  // ties -> tie
    }
  } else if (w.ends_with("s")) {
    if (w.size() >= 4 && !w.ends_with("ss") && !w.ends_with("us") && !w.ends_with("is")) {
      w.pop_back();
    }
  } else if (!strip_verbal(w, "ing")) {
    strip_verbal(w, "ed");
  }
  return w;
}

std::string stem_token(std::string_view token, Language lang) {
  if (lang == Language::kArabic) return light_stem_arabic(normalize_arabic(token));
  return stem_english(token);
}

std::vector<NGram> extract_ngrams(const std::vector<Token>& tokens, const std::set<int>& orders) {
  for (int n : orders) {
    if (n < 1 || n > kMaxNGramOrder) {
      throw ValidationError("n-gram order " + std::to_string(n) + " outside 1.." +
                            std::to_string(kMaxNGramOrder));
    }
  }
  std::vector<NGram> out;
  for (int n : orders) {
    const auto order = static_cast<std::size_t>(n);
    for (std::size_t i = 0; i + order <= tokens.size(); ++i) {
      out.push_back(NGram{{tokens.begin() + i, tokens.begin() + i + order}});
    }
  }
  return out;
}

BagOfWords bag_of_words(std::string_view text, Language lang) {
  BagOfWords bow;
  for (const auto& tok : tokenize(text, lang)) {
    std::string stem = stem_token(tok, lang);
    if (!stem.empty()) bow.insert(std::move(stem));
  }
  return bow;
}

std::size_t utf8_length(std::string_view s) { return utf8::decode(s).size(); }

}  // namespace xling
