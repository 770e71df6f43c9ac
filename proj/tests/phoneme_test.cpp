#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "sandhi/error.hpp"
#include "sandhi/phoneme.hpp"

using namespace sandhi;

namespace {

std::vector<std::string> graphemes(const Word& w) {
  std::vector<std::string> out;
  for (auto p : w) out.push_back(grapheme(p));
  return out;
}

using Entries = std::vector<std::pair<int, int>>;

// All segmentations of s into inventory graphemes, shortest first.
void segmentations(const std::string& s, std::size_t pos, std::vector<std::string>& cur,
                   std::vector<std::vector<std::string>>& out) {
  if (pos == s.size()) {
    out.push_back(cur);
    return;
  }
  for (auto p : alphabet()) {
    const auto& g = grapheme(p);
    if (s.compare(pos, g.size(), g) == 0) {
      cur.push_back(g);
      segmentations(s, pos + g.size(), cur, out);
      cur.pop_back();
    }
  }
}

}  // namespace

TEST_CASE("tokenize splits aspirates and diphthongs") {
  CHECK(graphemes(tokenize("kha")) == std::vector<std::string>{"kh", "a"});
  CHECK(graphemes(tokenize("devau")) == std::vector<std::string>{"d", "e", "v", "au"});
  CHECK(graphemes(tokenize("mahāl̐")) == std::vector<std::string>{"m", "a", "h", "ā", "l̐"});
}

TEST_CASE("tokenize agrees with the fewest-token exhaustive segmentation") {
  for (std::string s : {"devau", "kha", "bhaiṣajya", "gaccchati", "ḍhauṭhī", "aiau"}) {
    std::vector<std::vector<std::string>> all;
    std::vector<std::string> cur;
    segmentations(s, 0, cur, all);
    REQUIRE(!all.empty());
    auto best = *std::min_element(all.begin(), all.end(),
                                  [](auto& a, auto& b) { return a.size() < b.size(); });
    CHECK(graphemes(tokenize(s)) == best);
  }
}

TEST_CASE("tokenize reports unknown graphemes by code-point position") {
  try {
    tokenize("q");
    FAIL("expected UnknownGrapheme");
  } catch (const UnknownGrapheme& e) {
    CHECK(e.position == 0);
  }
  try {
    tokenize("rāmq");
    FAIL("expected UnknownGrapheme");
  } catch (const UnknownGrapheme& e) {
    CHECK(e.position == 3);
  }
}

TEST_CASE("encode reads memberships off the table") {
  CHECK(encode("a").entries() == Entries{{0, -1}, {4, 0}, {8, 4}});
  CHECK(encode("ḥ").entries() == Entries{{3, -1}, {44, 0}});
  CHECK(encode("k").entries() == Entries{{2, -1}, {31, 0}, {36, 0}, {41, 0}});
  CHECK_THROWS_AS(encode("q"), UnknownGrapheme);
}

TEST_CASE("bit tests") {
  CHECK(bit("a", 1, 4));
  CHECK_FALSE(bit("a", 1, 5));
  CHECK(bit("r", 1, 21));
  CHECK(bit("n", 2, 2, 27));
  CHECK_FALSE(bit("n", 2, 2, 29));
  CHECK(bit("n", 2, 0, 29));
  CHECK_FALSE(bit("a", 1, 47));
  CHECK_FALSE(bit("a", 2, 64, 4));
}

TEST_CASE("category rows") {
  CHECK(category_members(13) == std::vector<std::string>{"o", "e"});
  CHECK(category_members(46) == std::vector<std::string>{"#"});
  CHECK(category_members(41) == std::vector<std::string>{"k", "kh", "p", "ph"});
}

TEST_CASE("mutate") {
  CHECK(render(mutate(phoneme("s"), 46, 0)) == "#");
  CHECK(render(mutate(phoneme("ḥ"), 24, 0)) == "s");
  CHECK(render(mutate(phoneme("n"), 22, 3)) == "l̐");
  CHECK(render(mutate(phoneme("o"), 18, std::nullopt)) == "av");
  CHECK(render(mutate_like(phoneme("k"), 38, 36)) == "g");
  CHECK_THROWS_AS(mutate(phoneme("a"), 13, 2), IndexOutOfRow);
}

TEST_CASE("every repr has exactly one overall class") {
  for (auto p : alphabet()) {
    const auto& r = repr(p);
    int classes = r.has(0) + r.has(1) + r.has(2) + r.has(3);
    CHECK(classes == 1);
  }
}

TEST_CASE("membership agrees with bit tests") {
  for (int n = 0; n < kCategories; ++n) {
    const auto& row = category_members(n);
    for (auto p : alphabet()) {
      bool member = std::find(row.begin(), row.end(), grapheme(p)) != row.end();
      CHECK(member == bit(p, 1, n));
    }
  }
}

TEST_CASE("mutate lands on the row entry") {
  for (int n = 4; n < kCategories; ++n) {
    const auto& row = category_members(n);
    for (int i = 0; i < static_cast<int>(row.size()); ++i)
      CHECK(render(mutate(phoneme("a"), n, i)) == row[i]);
  }
}

TEST_CASE("round trip on inventory and random strings") {
  for (auto p : alphabet()) CHECK(render(tokenize(grapheme(p))) == grapheme(p));
  std::mt19937 rng(7);
  const auto& abc = alphabet();
  std::uniform_int_distribution<std::size_t> pick(0, abc.size() - 1), len(1, 12);
  for (int i = 0; i < 1000; ++i) {
    Word w;
    std::size_t n = len(rng);
    for (std::size_t j = 0; j < n; ++j) w.push_back(abc[pick(rng)]);
    auto s = render(w);
    CHECK(render(tokenize(s)) == s);
  }
}
