#pragma once

#include <array>
#include <bitset>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sandhi {

inline constexpr int kCategories = 47;

// overall classes (rows 0..3)
inline constexpr int kVowel = 0;
inline constexpr int kSemivowel = 1;
inline constexpr int kConsonant = 2;
inline constexpr int kSpecial = 3;

// An alphabet letter, identified by its position in the inventory.
struct Phoneme {
  std::uint8_t id = 0;
  auto operator<=>(const Phoneme&) const = default;
};

using Word = std::vector<Phoneme>;

struct PhonemeRepr {
  std::bitset<kCategories> categories;
  // bit i set when the letter is entry i of the row; rows 0..3 carry no index, and
  // rows beyond 3 have at most 8 entries
  std::array<std::uint8_t, kCategories> index_mask{};

  bool has(int category) const { return category >= 0 && category < kCategories && categories[category]; }
  // lowest index within the row
  std::optional<int> index_in(int category) const;
  // (category, index) pairs in category order; index -1 is the no-index sentinel
  std::vector<std::pair<int, int>> entries() const;
  bool operator==(const PhonemeRepr&) const = default;
};

const std::vector<std::string>& category_members(int n);

// Inventory in row 0..3 order.
const std::vector<Phoneme>& alphabet();
std::optional<Phoneme> find_phoneme(std::string_view grapheme);
Phoneme phoneme(std::string_view grapheme);  // throws UnknownGrapheme(0)
const std::string& grapheme(Phoneme p);
const PhonemeRepr& repr(Phoneme p);
PhonemeRepr encode(std::string_view grapheme);

// part 1: membership of category n. part 2: index n within `context` category.
bool bit(Phoneme p, int part, int n, int context = -1);
bool bit(std::string_view grapheme, int part, int n, int context = -1);

// Row entries may be letter sequences ("ar", "ava"), hence a Word.
// Without an index, p's index in the first row >= 4 of the same length is used.
Word mutate(Phoneme p, int category, std::optional<int> index = std::nullopt);
// Keeps p's index within from_category.
Word mutate_like(Phoneme p, int category, int from_category);

Word tokenize(std::string_view text);
std::string render(const Word& w);

// True for code points that occur in some inventory grapheme.
bool is_letter_codepoint(char32_t c);

}  // namespace sandhi
