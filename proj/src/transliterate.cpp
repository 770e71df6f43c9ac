#include "sandhi/transliterate.hpp"

#include <map>
#include <sstream>
#include <unicode/uchar.h>

#include "sandhi/error.hpp"
#include "sandhi/phoneme.hpp"
#include "sandhi/utf8.hpp"
#include "tables.hpp"

namespace sandhi {

namespace {

constexpr char32_t kVirama = 0x094D;
constexpr char32_t kCandrabindu = 0x0901;
constexpr char32_t kVisarga = 0x0903;

struct Mapping {
  std::map<char32_t, std::string> vowel, sign, consonant, mark;
  std::map<std::u32string, std::string> nasal;
  std::map<std::string, std::u32string> to_vowel, to_sign, to_consonant, to_mark, to_nasal;

  Mapping() {
    std::istringstream in{std::string(tables::devanagari)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream cells(line);
      std::string deva, iast, kind;
      std::getline(cells, deva, '\t');
      std::getline(cells, iast, '\t');
      std::getline(cells, kind, '\t');
      auto d = to_u32(deva);
      if (kind == "nasal") {
        nasal[d] = iast;
        to_nasal[iast] = d;
        continue;
      }
      if (kind == "virama") continue;
      auto& fwd = kind == "vowel" ? vowel : kind == "sign" ? sign : kind == "consonant" ? consonant : mark;
      auto& back = kind == "vowel" ? to_vowel : kind == "sign" ? to_sign : kind == "consonant" ? to_consonant : to_mark;
      fwd[d.at(0)] = iast;
      back[iast] = d;
    }
  }
};

const Mapping& mapping() {
  static const Mapping m;
  return m;
}

bool passes_through(char32_t c) {
  if (c == 0x0964 || c == 0x0965) return true;  // daṇḍas
  if (c >= 0x0966 && c <= 0x096F) return true;  // digits
  if (c >= 0x0900 && c <= 0x097F) return false;
  return u_isspace(static_cast<UChar32>(c)) || u_ispunct(static_cast<UChar32>(c)) ||
         u_isdigit(static_cast<UChar32>(c));
}

}  // namespace

std::string deva_to_iast(std::string_view input) {
  const auto& m = mapping();
  auto t = to_u32(nfc(input));
  std::string out;
  for (std::size_t i = 0; i < t.size();) {
    char32_t c = t[i];
    auto next = [&](std::size_t k) { return i + k < t.size() ? t[i + k] : 0; };
    if (auto it = m.consonant.find(c); it != m.consonant.end()) {
      if (next(1) == kVirama && next(2) == kCandrabindu) {
        auto n = m.nasal.find(t.substr(i, 3));
        if (n == m.nasal.end()) throw UnsupportedCodePoint(i + 2, kCandrabindu);
        out += n->second;
        i += 3;
        continue;
      }
      out += it->second;
      if (next(1) == kVirama) {
        i += 2;
      } else if (auto s = m.sign.find(next(1)); s != m.sign.end()) {
        out += s->second;
        i += 2;
      } else {
        out += "a";
        i += 1;
      }
      continue;
    }
    if (auto it = m.vowel.find(c); it != m.vowel.end()) {
      out += it->second;
    } else if (auto mk = m.mark.find(c); mk != m.mark.end()) {
      out += mk->second;
    } else if (passes_through(c)) {
      out += to_utf8(c);
    } else {
      throw UnsupportedCodePoint(i, c);
    }
    ++i;
  }
  return out;
}

namespace {

void letters_to_deva(const Word& w, std::u32string& out, std::vector<std::string>* warnings) {
  const auto& m = mapping();
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& g = grapheme(w[i]);
    if (auto c = m.to_consonant.find(g); c != m.to_consonant.end()) {
      out += c->second;
      if (i + 1 < w.size() && repr(w[i + 1]).has(kVowel)) {
        const auto& v = grapheme(w[i + 1]);
        if (v != "a") out += m.to_sign.at(v);
        ++i;
      } else {
        out += kVirama;
      }
    } else if (auto n = m.to_nasal.find(g); n != m.to_nasal.end()) {
      out += n->second;
    } else if (auto v = m.to_vowel.find(g); v != m.to_vowel.end()) {
      out += v->second;
    } else if (auto k = m.to_mark.find(g); k != m.to_mark.end()) {
      out += k->second;
    } else {
      // #, Λ, Υ
      out += kVisarga;
      if (warnings) warnings->push_back("'" + g + "' has no Devanagari letter; written as visarga");
    }
  }
}

}  // namespace

std::string iast_to_deva(std::string_view input, std::vector<std::string>* warnings) {
  auto t = to_u32(nfc(input));
  std::u32string out;
  for (std::size_t i = 0; i < t.size();) {
    auto in_word = [&](char32_t c) { return is_letter_codepoint(c) || !passes_through(c); };
    if (!in_word(t[i])) {
      out += t[i++];
      continue;
    }
    std::size_t j = i;
    while (j < t.size() && in_word(t[j])) ++j;
    Word w;
    try {
      w = tokenize(to_utf8(std::u32string_view(t).substr(i, j - i)));
    } catch (const UnknownGrapheme& e) {
      throw UnknownGrapheme(i + e.position);
    }
    letters_to_deva(w, out, warnings);
    i = j;
  }
  return to_utf8(out);
}

}  // namespace sandhi
