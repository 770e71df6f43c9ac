#include "sandhi/wordforms.hpp"

#include <unordered_map>

#include "sandhi/error.hpp"
#include "sandhi/utf8.hpp"

namespace sandhi {

const char* to_string(FormKind k) {
  switch (k) {
    case FormKind::exact: return "exact";
    case FormKind::right_context: return "right-context";
    case FormKind::left_context: return "left-context";
    case FormKind::fused: return "fused";
  }
  return "?";
}

const WordForm* WordFormSet::find(const std::string& s) const {
  for (const auto& f : forms)
    if (f.surface == s) return &f;
  return nullptr;
}

namespace {

std::vector<std::string> single_letters() {
  std::vector<std::string> out;
  for (int n : {kVowel, kSemivowel, kConsonant})
    for (const auto& g : category_members(n)) {
      // nasalized semivowels only arise from rules, never as a neighbour's first letter
      if (n == kSemivowel && g != "y" && g != "v" && g != "r" && g != "l") continue;
      out.push_back(g);
    }
  return out;
}

}  // namespace

std::vector<std::string> right_contexts() {
  auto out = single_letters();
  // rules that look one letter past the junction need a two-letter neighbour
  for (int n : {kSemivowel, kConsonant})
    for (const auto& g : category_members(n))
      if (n == kConsonant || g == "y" || g == "v" || g == "r" || g == "l") out.push_back(g + "a");
  for (auto g : {"hm", "hn", "hy", "hv", "hl"}) out.push_back(g);
  return out;
}

std::vector<std::string> left_contexts() {
  auto out = single_letters();
  for (auto g : {"ḥ", "ṃ", "#"}) out.push_back(g);
  return out;
}

Stripped strip_context(const RuleState& s, Side context_side) {
  Letters all = s.X;
  all.insert(all.end(), s.Y.begin(), s.Y.end());
  Origin own = context_side == Side::right ? Origin::left : Origin::right;
  Letters keep;
  for (const auto& l : all) {
    if (l.origin == Origin::both) return {surface(all), FormKind::fused};
    if (l.origin == own) keep.push_back(l);
  }
  return {surface(keep), context_side == Side::right ? FormKind::right_context : FormKind::left_context};
}

namespace {

// Records the code points on either side of a junction that rendering closed up.
void note_junction(const RuleState& s, std::set<std::pair<char32_t, char32_t>>& out) {
  Letters all = s.X;
  all.insert(all.end(), s.Y.begin(), s.Y.end());
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i].origin == Origin::both || all[i + 1].origin == Origin::both) return;
  }
  for (std::size_t i = 0; i + 1 < all.size(); ++i) {
    if (all[i].origin == all[i + 1].origin) continue;
    auto a = to_u32(surface({all[i]}));
    auto b = to_u32(surface({all[i + 1]}));
    if (!a.empty() && !b.empty()) out.emplace(a.back(), b.front());
  }
}

}  // namespace

WordFormSet generate_all_word_forms(const Word& z) {
  if (z.empty()) throw EmptyWord();
  WordFormSet out;
  out.base = z;
  std::unordered_map<std::string, std::size_t> seen;
  auto add = [&](WordForm f) {
    if (f.surface.empty() || seen.count(f.surface)) return;
    seen.emplace(f.surface, out.forms.size());
    out.forms.push_back(std::move(f));
  };

  const std::string base = render(z);
  add({base, FormKind::exact, "", Side::right, "", {}});

  for (const auto& ctx : right_contexts()) {
    for (const auto& alt : sandhi_process(z, tokenize(ctx))) {
      auto st = strip_context(alt.state, Side::right);
      add({st.surface, st.kind, ctx, Side::right, base, alt.fired});
      note_junction(alt.state, out.junctions);
    }
  }

  std::vector<std::string> phase1;
  for (const auto& f : out.forms) phase1.push_back(f.surface);
  const auto lefts = left_contexts();
  for (const auto& y : phase1) {
    Word w = tokenize(y);
    for (const auto& ctx : lefts) {
      for (const auto& alt : sandhi_process(tokenize(ctx), w)) {
        auto st = strip_context(alt.state, Side::left);
        add({st.surface, st.kind, ctx, Side::left, y, alt.fired});
        note_junction(alt.state, out.junctions);
      }
    }
  }
  return out;
}

}  // namespace sandhi
