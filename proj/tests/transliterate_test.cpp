#include <doctest.h>

#include "sandhi/error.hpp"
#include "sandhi/phoneme.hpp"
#include "sandhi/transliterate.hpp"

using namespace sandhi;

TEST_CASE("devanagari to iast") {
  CHECK(deva_to_iast("राम") == "rāma");
  CHECK(deva_to_iast("क्") == "k");
  CHECK(deva_to_iast("ते ऽपि") == "te 'pi");
  CHECK(deva_to_iast("") == "");
  CHECK(deva_to_iast("कृष्णः") == "kṛṣṇaḥ");
  CHECK(deva_to_iast("संस्कृतम्") == "saṃskṛtam");
  CHECK(deva_to_iast("ऐरावतः औषधम्") == "airāvataḥ auṣadham");
  CHECK(deva_to_iast("धर्मक्षेत्रे कुरुक्षेत्रे ॥१॥") == "dharmakṣetre kurukṣetre ॥१॥");
  CHECK(deva_to_iast("सय्ँयन्ता") == "saỹyantā");
}

TEST_CASE("iast to devanagari") {
  CHECK(iast_to_deva("rāma") == "राम");
  CHECK(iast_to_deva("") == "");
  CHECK(iast_to_deva("te 'pi") == "ते ऽपि");
  CHECK(iast_to_deva("k") == "क्");
  CHECK(iast_to_deva("ṛṣiḥ") == "ऋषिः");
  CHECK(iast_to_deva("saỹyantā") == "सय्ँयन्ता");
  CHECK_THROWS_AS(iast_to_deva("rāq"), UnknownGrapheme);
}

TEST_CASE("engine-only letters fall back to visarga with a warning") {
  std::vector<std::string> warnings;
  CHECK(iast_to_deva("namaΛ", &warnings) == "नमः");
  CHECK(warnings.size() == 1);
}

TEST_CASE("unsupported code points") {
  try {
    deva_to_iast("राम x");
    FAIL("expected UnsupportedCodePoint");
  } catch (const UnsupportedCodePoint& e) {
    CHECK(e.position == 4);
  }
  CHECK_THROWS_AS(deva_to_iast("ळ"), UnsupportedCodePoint);
}

TEST_CASE("round trips") {
  for (auto s : {"rāmaḥ", "bhagavadgītā", "sarvadharmān parityajya", "aiśvaryam", "oṃ", "ḷ ṝ au",
                 "tacchivaḥ", "mahāl̐lābhaḥ"}) {
    CAPTURE(s);
    CHECK(deva_to_iast(iast_to_deva(s)) == s);
    CHECK_NOTHROW(tokenize(deva_to_iast(iast_to_deva(s)).substr(0, 0)));
  }
}
