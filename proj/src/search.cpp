#include "sandhi/search.hpp"

#include <algorithm>

#include "aho_corasick.hpp"
#include "sandhi/error.hpp"
#include "sandhi/transliterate.hpp"
#include "sandhi/utf8.hpp"

namespace sandhi {

std::string normalize_iast(std::string_view s) {
  auto t = nfc(s);
  const std::string dot_above = "ṁ";
  const std::string dot_below = "ṃ";
  for (std::size_t p = t.find(dot_above); p != std::string::npos; p = t.find(dot_above, p))
    t.replace(p, dot_above.size(), dot_below);
  return t;
}

Corpus ingest(std::string_view raw, Script script, std::string source) {
  to_u32(raw);  // DecodeError before anything else
  std::string iast = script == Script::devanagari ? deva_to_iast(raw) : std::string(raw);
  Corpus c;
  c.text = to_u32(normalize_iast(iast));
  c.source = std::move(source);
  c.line_index.push_back(0);
  for (std::size_t i = 0; i < c.text.size(); ++i)
    if (c.text[i] == U'\n' && i + 1 < c.text.size()) c.line_index.push_back(i + 1);
  return c;
}

std::vector<Match> search(const WordFormSet& forms, const Corpus& c, SearchOptions opt) {
  std::vector<std::u32string> patterns;
  patterns.reserve(forms.forms.size());
  for (const auto& f : forms.forms) patterns.push_back(to_u32(f.surface));
  AhoCorasick ac(patterns);

  const auto& text = c.text;
  auto joins = [&](char32_t a, char32_t b) { return !opt.strict_boundaries && forms.junctions.count({a, b}); };
  auto start_ok = [&](std::size_t pos, char32_t first) {
    return pos == 0 || !is_letter_codepoint(text[pos - 1]) || joins(text[pos - 1], first);
  };
  auto end_ok = [&](std::size_t end, char32_t last) {
    return end == text.size() || !is_letter_codepoint(text[end]) || joins(last, text[end]);
  };

  std::vector<Match> found;
  ac.scan(text, [&](std::size_t end, std::size_t id) {
    const auto& p = patterns[id];
    std::size_t start = end - p.size();
    const auto& f = forms.forms[id];
    if (f.kind != FormKind::fused && !(start_ok(start, p.front()) && end_ok(end, p.back()))) return;
    Match m;
    m.offset = start;
    m.length = p.size();
    m.surface = f.surface;
    m.kind = f.kind;
    found.push_back(std::move(m));
  });

  std::sort(found.begin(), found.end(), [](const Match& a, const Match& b) {
    return a.offset != b.offset ? a.offset < b.offset : a.length > b.length;
  });
  std::vector<Match> out;
  std::size_t covered_end = 0;
  for (auto& m : found) {
    // drop duplicates and matches inside an earlier, longer one
    if (!out.empty() && m.offset + m.length <= covered_end) continue;
    covered_end = std::max(covered_end, m.offset + m.length);
    auto line = std::upper_bound(c.line_index.begin(), c.line_index.end(), m.offset);
    m.line = static_cast<std::size_t>(line - c.line_index.begin());
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Match> search(std::string_view query, const Corpus& c, SearchOptions opt) {
  return search(generate_all_word_forms(tokenize(normalize_iast(query))), c, opt);
}

}  // namespace sandhi
