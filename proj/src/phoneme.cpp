#include "sandhi/phoneme.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sandhi/error.hpp"
#include "sandhi/utf8.hpp"
#include "tables.hpp"

namespace sandhi {

namespace {

struct Schema {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> graphemes;
  std::vector<PhonemeRepr> reprs;
  std::vector<Phoneme> alphabet;
  std::unordered_map<std::string, Phoneme> by_grapheme;
  std::unordered_set<char32_t> letter_cps;
  std::size_t longest = 0;  // bytes

  Schema() {
    std::istringstream in{std::string(tables::categories)};
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      auto tab = line.find('\t');
      int n = std::stoi(line.substr(0, tab));
      if (n != static_cast<int>(rows.size())) throw Error("category table out of order at row " + std::to_string(n));
      std::vector<std::string> row;
      std::istringstream cells(line.substr(tab + 1));
      std::string cell;
      while (std::getline(cells, cell, ',')) row.push_back(cell);
      rows.push_back(std::move(row));
    }
    if (rows.size() != kCategories) throw Error("category table must have 47 rows");

    for (int n = 0; n <= kSpecial; ++n)
      for (const auto& g : rows[n]) {
        Phoneme p{static_cast<std::uint8_t>(graphemes.size())};
        graphemes.push_back(g);
        alphabet.push_back(p);
        by_grapheme.emplace(g, p);
        longest = std::max(longest, g.size());
        for (char32_t c : to_u32(g)) letter_cps.insert(c);
      }

    reprs.resize(graphemes.size());
    for (int n = 0; n < kCategories; ++n)
      for (std::size_t i = 0; i < rows[n].size(); ++i) {
        auto it = by_grapheme.find(rows[n][i]);
        if (it == by_grapheme.end()) continue;  // replacement sequence such as "ar"
        auto& r = reprs[it->second.id];
        r.categories.set(n);
        if (n > kSpecial) r.index_mask[n] |= static_cast<std::uint8_t>(1u << i);
      }
  }
};

const Schema& schema() {
  static const Schema s;
  return s;
}

Word sequence(const std::string& entry) {
  // row entries are inventory graphemes or runs of them
  return tokenize(entry);
}

}  // namespace

std::optional<int> PhonemeRepr::index_in(int category) const {
  if (!has(category) || index_mask[category] == 0) return std::nullopt;
  for (int i = 0; i < 8; ++i)
    if (index_mask[category] & (1u << i)) return i;
  return std::nullopt;
}

std::vector<std::pair<int, int>> PhonemeRepr::entries() const {
  std::vector<std::pair<int, int>> out;
  for (int n = 0; n < kCategories; ++n) {
    if (!categories[n]) continue;
    if (n <= kSpecial) {
      out.emplace_back(n, -1);
      continue;
    }
    for (int i = 0; i < 8; ++i)
      if (index_mask[n] & (1u << i)) out.emplace_back(n, i);
  }
  return out;
}

const std::vector<std::string>& category_members(int n) {
  static const std::vector<std::string> none;
  if (n < 0 || n >= kCategories) return none;
  return schema().rows[n];
}

const std::vector<Phoneme>& alphabet() { return schema().alphabet; }

std::optional<Phoneme> find_phoneme(std::string_view g) {
  const auto& s = schema();
  auto it = s.by_grapheme.find(std::string(g));
  if (it == s.by_grapheme.end()) return std::nullopt;
  return it->second;
}

Phoneme phoneme(std::string_view g) {
  auto p = find_phoneme(g);
  if (!p) throw UnknownGrapheme(0);
  return *p;
}

const std::string& grapheme(Phoneme p) { return schema().graphemes.at(p.id); }

const PhonemeRepr& repr(Phoneme p) { return schema().reprs.at(p.id); }

PhonemeRepr encode(std::string_view g) { return repr(phoneme(g)); }

bool bit(Phoneme p, int part, int n, int context) {
  const auto& r = repr(p);
  if (part == 1) return r.has(n);
  if (part != 2 || n < 0 || n >= 8 || !r.has(context)) return false;
  return r.index_mask[context] & (1u << n);
}

bool bit(std::string_view g, int part, int n, int context) { return bit(phoneme(g), part, n, context); }

Word mutate(Phoneme p, int category, std::optional<int> index) {
  const auto& row = category_members(category);
  if (row.empty()) throw IndexOutOfRow(category, index.value_or(0));
  if (!index) {
    if (row.size() == 1) {
      index = 0;
    } else {
      const auto& r = repr(p);
      for (int n = kSpecial + 1; n < kCategories && !index; ++n)
        if (r.has(n) && category_members(n).size() == row.size()) index = r.index_in(n);
      if (!index) throw IndexOutOfRow(category, -1);
    }
  }
  if (*index < 0 || *index >= static_cast<int>(row.size())) throw IndexOutOfRow(category, *index);
  return sequence(row[*index]);
}

Word mutate_like(Phoneme p, int category, int from_category) {
  auto i = repr(p).index_in(from_category);
  if (!i) throw IndexOutOfRow(from_category, -1);
  return mutate(p, category, *i);
}

Word tokenize(std::string_view text) {
  const auto& s = schema();
  Word out;
  std::size_t pos = 0, cp = 0;
  while (pos < text.size()) {
    if (text[pos] == ' ') {
      ++pos;
      ++cp;
      continue;
    }
    std::size_t best = 0;
    Phoneme found{};
    for (std::size_t len = std::min(s.longest, text.size() - pos); len > 0; --len) {
      auto it = s.by_grapheme.find(std::string(text.substr(pos, len)));
      if (it != s.by_grapheme.end()) {
        best = len;
        found = it->second;
        break;
      }
    }
    if (best == 0) throw UnknownGrapheme(cp);
    out.push_back(found);
    cp += to_u32(text.substr(pos, best)).size();
    pos += best;
  }
  return out;
}

std::string render(const Word& w) {
  std::string out;
  for (auto p : w) out += grapheme(p);
  return out;
}

bool is_letter_codepoint(char32_t c) { return schema().letter_cps.count(c) > 0; }

}  // namespace sandhi
