#ifndef XLING_TEXTPROC_H_
#define XLING_TEXTPROC_H_

// Tokenization, Arabic normalization, stemming and n-gram extraction for
// English and Arabic. All functions operate on UTF-8 and are pure.

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "xling/labels.h"

namespace xling {

// A token is a non-empty UTF-8 string without whitespace.
using Token = std::string;

// Key separator used when an n-gram is flattened to a single string
// (U+241F SYMBOL FOR UNIT SEPARATOR).
inline constexpr std::string_view kNGramSeparator = "\xE2\x90\x9F";

inline constexpr int kMaxNGramOrder = 3;

struct NGram {
  std::vector<Token> terms;

  int order() const { return static_cast<int>(terms.size()); }
  std::string key() const;
  static NGram from_key(std::string_view key);

  auto operator<=>(const NGram&) const = default;
  bool operator==(const NGram&) const = default;
};

using BagOfWords = std::set<std::string>;

// Splits on Unicode whitespace, strips punctuation from both token edges
// (inner hyphens and apostrophes survive) and lowercases Latin letters.
// Invalid UTF-8 bytes are decoded as U+FFFD.
std::vector<Token> tokenize(std::string_view text, Language lang);

// Drops harakat and tatweel, folds alef variants to bare alef, word-final
// alef maqsura to yeh and teh marbuta to heh. Idempotent.
Token normalize_arabic(std::string_view token);

// Single-pass light stemmer: at most one prefix then at most one suffix,
// longest first, never leaving fewer than two letters.
std::string light_stem_arabic(std::string_view token);

// Rule-based suffix normalizer for lowercase English tokens.
std::string stem_english(std::string_view token);

// The stemmer bag_of_words applies to a single token of `lang`
// (normalize + light stem for Arabic).
std::string stem_token(std::string_view token, Language lang);

// Every contiguous n-gram of each requested order, ascending by order then
// by position. Throws ValidationError for orders outside 1..3.
std::vector<NGram> extract_ngrams(const std::vector<Token>& tokens, const std::set<int>& orders);

BagOfWords bag_of_words(std::string_view text, Language lang);

// Number of Unicode code points in a UTF-8 string.
std::size_t utf8_length(std::string_view s);

}  // namespace xling

#endif  // XLING_TEXTPROC_H_
