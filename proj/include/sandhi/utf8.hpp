#pragma once

#include <string>
#include <string_view>

namespace sandhi {

// Throws DecodeError on malformed input.
std::u32string to_u32(std::string_view s);
std::string to_utf8(std::u32string_view s);
std::string to_utf8(char32_t c);

// NFC via ICU. Input must be valid UTF-8.
std::string nfc(std::string_view s);

}  // namespace sandhi
