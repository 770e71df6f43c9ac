#include "sandhi/utf8.hpp"

#include <cstdio>

#include <unicode/normalizer2.h>
#include <unicode/unistr.h>
#include <unicode/utf8.h>

#include "sandhi/error.hpp"

namespace sandhi {

UnsupportedCodePoint::UnsupportedCodePoint(std::size_t pos, char32_t cp)
    : Error("unsupported code point U+" + [cp] {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%04X", static_cast<unsigned>(cp));
        return std::string(buf);
      }() + " at position " + std::to_string(pos)),
      position(pos), code_point(cp) {}

std::u32string to_u32(std::string_view s) {
  std::u32string out;
  out.reserve(s.size());
  const auto* p = reinterpret_cast<const std::uint8_t*>(s.data());
  std::int32_t len = static_cast<std::int32_t>(s.size());
  std::int32_t i = 0;
  while (i < len) {
    std::int32_t start = i;
    UChar32 c;
    U8_NEXT(p, i, len, c);
    if (c < 0) throw DecodeError(static_cast<std::size_t>(start));
    out.push_back(static_cast<char32_t>(c));
  }
  return out;
}

std::string to_utf8(char32_t c) {
  std::string out;
  std::uint8_t buf[4];
  std::int32_t n = 0;
  UBool err = false;
  U8_APPEND(buf, n, 4, static_cast<UChar32>(c), err);
  if (!err) out.assign(reinterpret_cast<char*>(buf), n);
  return out;
}

std::string to_utf8(std::u32string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char32_t c : s) out += to_utf8(c);
  return out;
}

std::string nfc(std::string_view s) {
  to_u32(s);  // validates
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw Error("ICU NFC normalizer unavailable");
  auto src = icu::UnicodeString::fromUTF8(icu::StringPiece(s.data(), static_cast<std::int32_t>(s.size())));
  if (n->isNormalized(src, status) && U_SUCCESS(status)) return std::string(s);
  status = U_ZERO_ERROR;
  icu::UnicodeString dst = n->normalize(src, status);
  if (U_FAILURE(status)) throw Error("NFC normalization failed");
  std::string out;
  dst.toUTF8String(out);
  return out;
}

}  // namespace sandhi
