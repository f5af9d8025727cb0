#ifndef KPAS_UTF8_HPP
#define KPAS_UTF8_HPP

#include <cstddef>
#include <string>
#include <string_view>

namespace kpas::utf8 {

// Decodes the sequence starting at byte s[i]. On success stores the codepoint
// in cp, advances i past the sequence and returns true. Rejects overlong
// forms, surrogates and out-of-range values.
bool decode_next(std::string_view s, std::size_t& i, char32_t& cp);

bool is_valid(std::string_view s);

// Throws InvalidEncoding on malformed input.
std::u32string decode(std::string_view s);

std::string encode(char32_t cp);
std::string encode(std::u32string_view cps);

}  // namespace kpas::utf8

#endif  // KPAS_UTF8_HPP
