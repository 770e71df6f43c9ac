#include <doctest.h>

#include "sandhi/error.hpp"
#include "sandhi/search.hpp"
#include "sandhi/utf8.hpp"

using namespace sandhi;

namespace {

std::string slice(const Corpus& c, const Match& m) { return to_utf8(std::u32string_view(c.text).substr(m.offset, m.length)); }

}  // namespace

TEST_CASE("ingest") {
  auto c = ingest("rāmo gacchati\n", Script::iast);
  CHECK(to_utf8(c.text) == "rāmo gacchati\n");
  CHECK(c.line_index == std::vector<std::size_t>{0});
  auto d = ingest("रामो गच्छति\nवनम्\n", Script::devanagari);
  CHECK(to_utf8(d.text) == "rāmo gacchati\nvanam\n");
  CHECK(d.line_index == std::vector<std::size_t>{0, 14});
  CHECK_THROWS_AS(ingest("a\xff", Script::iast), DecodeError);
}

TEST_CASE("ingest normalizes to NFC and folds the dot-above anusvara") {
  auto c = ingest("ra\xcc\x84ma sam\xcc\x87", Script::iast);
  CHECK(to_utf8(c.text) == "rāma saṃ");
  auto d = ingest("saṁsāra", Script::iast);
  CHECK(to_utf8(d.text) == "saṃsāra");
}

TEST_CASE("visarga word in running text") {
  auto c = ingest("tasmād asamṛddhir bhavati\n", Script::iast);
  auto m = search("asamṛddhiḥ", c);
  REQUIRE(m.size() == 1);
  CHECK(m[0].surface == "asamṛddhir");
  CHECK(slice(c, m[0]) == "asamṛddhir");
  CHECK(m[0].line == 1);
}

TEST_CASE("transformed and exact occurrences") {
  auto c = ingest("rāmo gacchati\nrāmaḥ vanam\nrāmeṇa saha\n", Script::iast);
  auto m = search("rāmaḥ", c);
  REQUIRE(m.size() == 2);
  CHECK(m[0].surface == "rāmo");
  CHECK(m[0].offset == 0);
  CHECK(m[1].surface == "rāmaḥ");
  CHECK(m[1].line == 2);
  CHECK(search("kṛṣṇaḥ", c).empty());
}

TEST_CASE("boundaries") {
  auto c = ingest("ārāmo gacchati\n", Script::iast);
  CHECK(search("rāmaḥ", c, {true}).empty());
  auto joined = ingest("rāmogacchati\n", Script::iast);
  CHECK(search("rāmaḥ", joined, {true}).empty());
  auto loose = search("rāmaḥ", joined, {false});
  REQUIRE(loose.size() == 1);
  CHECK(loose[0].surface == "rāmo");
}

TEST_CASE("fused forms match inside words") {
  auto c = ingest("devālayam paśya\n", Script::iast);
  auto m = search("deva", c, {true});
  REQUIRE(m.size() == 1);
  CHECK(m[0].kind == FormKind::fused);
  CHECK(slice(c, m[0]) == m[0].surface);
}

TEST_CASE("every match is a form and a substring") {
  auto c = ingest("tac chivaḥ tad api tan mama tat tvam tallabhate\n", Script::iast);
  auto f = generate_all_word_forms(tokenize("tat"));
  auto m = search(f, c);
  CHECK(m.size() >= 5);
  for (const auto& x : m) {
    CHECK(slice(c, x) == x.surface);
    CHECK(f.find(x.surface) != nullptr);
  }
}
