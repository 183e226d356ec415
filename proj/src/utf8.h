#ifndef XLING_SRC_UTF8_H_
#define XLING_SRC_UTF8_H_

// Minimal UTF-8 <-> code point conversion used internally.

#include <string>
#include <string_view>

namespace xling::utf8 {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes `s`; malformed or overlong sequences yield U+FFFD per byte.
std::u32string decode(std::string_view s);

void append(std::string& out, char32_t cp);
std::string encode(std::u32string_view cps);

// Unicode White_Space property.
bool is_space(char32_t c);

}  // namespace xling::utf8

#endif  // XLING_SRC_UTF8_H_
