#include <array>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include "sandhi/error.hpp"
#include "sandhi/rules.hpp"
#include "tables.hpp"

namespace sandhi {

namespace {

// category shorthands
constexpr int kSpecialRow = 3;
constexpr int A = 4, AA = 5, IU = 6, IU_LONG = 7, SIMPLE = 8, SIMPLE_LONG = 9, IK = 10, IK_LONG = 11;
constexpr int RL = 12, EO = 13, AIAU = 14, EC = 15, GUNA = 16, VRDDHI_R = 17, AYAV = 18, AVA = 19;
constexpr int YAN = 20, R = 21, NASAL_YAN = 22, SS = 23, S = 24, SH = 25, H = 26;
constexpr int NASAL = 27, NN = 28, N = 29, M = 30;
constexpr int PALATAL = 32, CEREBRAL = 33, DENTAL = 34, LABIAL = 35;
constexpr int COL1 = 36, COL2 = 37, COL3 = 38, COL4 = 39, CHATVA = 40, KUPVOH = 41, JIHVA = 42;
constexpr int ANUSVARA = 43, VISARGA = 44, AVAGRAHA = 45, RU = 46;

const std::initializer_list<int> kMutes = {COL1, COL2, COL3, COL4};
const std::initializer_list<int> kHard = {COL1, COL2, SS, S, SH};
const std::initializer_list<int> kSibilants = {SS, S, SH};
const std::initializer_list<int> kSoft = {kVowel, kSemivowel, COL3, COL4, H, NASAL};

bool in(const Letter* l, int cat) { return l && repr(l->p).has(cat); }

bool in_any(const Letter* l, std::initializer_list<int> cats) {
  for (int c : cats)
    if (in(l, c)) return true;
  return false;
}

bool at(const Letter* l, int cat, int i) { return l && bit(l->p, 2, i, cat); }

bool is(const Letter* l, std::string_view g) { return l && grapheme(l->p) == g; }

// the first of `cats` the letter belongs to, -1 if none
int row_of(const Letter* l, std::initializer_list<int> cats) {
  for (int c : cats)
    if (in(l, c)) return c;
  return -1;
}

int index_of(const Letter* l, int cat) { return repr(l->p).index_in(cat).value_or(0); }

std::string text(const Letters& ls, std::size_t drop_last = 0) {
  std::string out;
  for (std::size_t i = 0; i + drop_last < ls.size(); ++i) out += grapheme(ls[i].p);
  return out;
}

bool word_in(const Letters& ls, std::initializer_list<std::string_view> words) {
  auto t = text(ls);
  for (auto w : words)
    if (t == w) return true;
  return false;
}

bool begins(const Letters& ls, std::initializer_list<std::string_view> prefixes) {
  auto t = text(ls);
  for (auto p : prefixes)
    if (t.rfind(p, 0) == 0) return true;
  return false;
}

Letters with_origin(const Word& w, Origin o) { return letters(w, o); }

Word row_entry(int cat, int i) { return mutate(phoneme("a"), cat, i); }

void set_x(RuleState& s, const Word& w) {
  Origin o = s.X.back().origin;
  s.X.pop_back();
  for (auto& l : with_origin(w, o)) s.X.push_back(l);
}

void set_y(RuleState& s, const Word& w) {
  Origin o = s.Y.front().origin;
  s.Y.erase(s.Y.begin());
  auto ls = with_origin(w, o);
  s.Y.insert(s.Y.begin(), ls.begin(), ls.end());
}

void append_x(RuleState& s, const Word& w) {
  Origin o = s.X.back().origin;
  for (auto& l : with_origin(w, o)) s.X.push_back(l);
}

// One letter replaces both x and y: x is removed, y becomes `w`, and the junction closes.
void merge(RuleState& s, const Word& w) {
  Origin o = s.X.back().origin | s.Y.front().origin;
  s.X.pop_back();
  s.Y.erase(s.Y.begin());
  auto ls = with_origin(w, o);
  s.Y.insert(s.Y.begin(), ls.begin(), ls.end());
  s.junction_closed = true;
}

RuleResult fired() { return {Outcome::fired, 0, {}}; }
RuleResult none() { return {}; }
RuleResult queue(const RuleState& s) { return {Outcome::branched, 0, {s}}; }

// Runs `body` over X then Y. body(letters, note) must call note() before each change;
// optional loops queue the state at that point as an alternative.
template <class Body>
RuleResult each_word(RuleState& s, bool optional, Body body) {
  RuleResult res;
  bool changed = false;
  auto note = [&] {
    changed = true;
    if (optional) res.branches.push_back(s);
  };
  body(s.X, note);
  body(s.Y, note);
  if (changed) res.outcome = optional ? Outcome::branched : Outcome::fired;
  return res;
}

void replace_at(Letters& ls, std::size_t i, const Word& w) {
  Origin o = ls[i].origin;
  ls.erase(ls.begin() + static_cast<long>(i));
  auto add = with_origin(w, o);
  ls.insert(ls.begin() + static_cast<long>(i), add.begin(), add.end());
}

// ---- Set 1 ----

RuleResult r1(RuleState& s) {
  if (!in(s.x(), VISARGA)) return none();
  set_x(s, row_entry(S, 0));
  return fired();
}

RuleResult r2(RuleState& s) {
  if (!in(s.x(), S)) return none();
  set_x(s, row_entry(RU, 0));
  return fired();
}

RuleResult r3(RuleState& s) {
  if (!(at(s.x(), EC, 0) && at(s.u(), 31, 3) && in(s.y(), kVowel))) return none();
  auto r = queue(s);
  set_x(s, row_entry(AVA, 0));
  return r;
}

RuleResult shift_u(RuleState& s) {
  Letter x = s.X.back();
  s.X.pop_back();
  auto u = mutate(phoneme("a"), IU, 0);  // x2 = u2 with u = a (index 0 of row 4)
  s.Y.insert(s.Y.begin(), Letter{u.front(), x.origin});
  return fired();
}

RuleResult r4(RuleState& s) {
  if (!(in_any(s.x(), {RU, R}) && in(s.u(), A) && in_any(s.y(), {kSemivowel, H, NASAL, COL3, COL4})))
    return none();
  return shift_u(s);
}

RuleResult r5(RuleState& s) {
  if (!(in_any(s.x(), {RU, R}) && in(s.u(), A) && in(s.y(), A))) return none();
  return shift_u(s);
}

RuleResult r6(RuleState& s) {
  if (!(in(s.x(), EO) && in(s.y(), A))) return none();
  set_y(s, row_entry(AVAGRAHA, 0));
  return fired();
}

RuleResult r7(RuleState& s) {
  int xr = row_of(s.x(), {SIMPLE, SIMPLE_LONG});
  int yr = row_of(s.y(), {SIMPLE, SIMPLE_LONG});
  if (xr < 0 || yr < 0 || index_of(s.x(), xr) != index_of(s.y(), yr)) return none();
  Origin o = s.X.back().origin | s.Y.front().origin;
  auto long_vowel = row_entry(SIMPLE_LONG, index_of(s.x(), xr));
  s.Y.erase(s.Y.begin());
  set_x(s, long_vowel);
  s.X.back().origin = o;
  s.junction_closed = true;
  return {Outcome::terminate, 0, {}};
}

RuleResult r8(RuleState& s) {
  if (!(in_any(s.x(), {A, AA}) && word_in(s.Y, {"om", "oṃ"}))) return none();
  merge(s, {s.Y.front().p});
  return fired();
}

RuleResult r9(RuleState& s) {
  if (!in_any(s.x(), {A, AA})) return none();
  const Letter* y = s.y();
  bool pra = word_in(s.X, {"pra"});
  int from = -1;
  if (at(y, EO, 1)) {
    if (begins(s.Y, {"et", "edhat"}) || (pra && begins(s.Y, {"eṣ", "eṣy"}))) from = EO;
  } else if (at(y, IU_LONG, 0)) {
    if (is(s.w(), "h") || (pra && begins(s.Y, {"ūḍh"}))) from = IU_LONG;
  } else if (word_in(s.X, {"sva"}) && at(y, IU_LONG, 1) && in(s.w(), R)) {
    from = IU_LONG;
  }
  if (from < 0) return none();
  merge(s, row_entry(AIAU, index_of(y, from)));
  return fired();
}

const std::initializer_list<std::string_view> kPrepositions = {"pra", "ava", "apa", "upa", "parā"};

RuleResult r10(RuleState& s) {
  if (!(word_in(s.X, kPrepositions) && in(s.y(), EO))) return none();
  merge(s, {s.Y.front().p});
  return fired();
}

RuleResult r11(RuleState& s) {
  const Letter* y = s.y();
  bool prep = word_in(s.X, kPrepositions) && in(y, RL);
  bool rna = word_in(s.X, {"vatsara", "kambala", "vasana", "daśa", "ṛṇa"}) && at(y, RL, 0) &&
             word_in(s.Y, {"ṛṇa"});
  if (!prep && !rna) return none();
  merge(s, row_entry(VRDDHI_R, index_of(y, RL)));
  return fired();
}

RuleResult r12(RuleState& s) {
  int yr = row_of(s.y(), {EO, AIAU});
  if (!in_any(s.x(), {A, AA}) || yr < 0) return none();
  merge(s, row_entry(AIAU, index_of(s.y(), yr)));
  return fired();
}

RuleResult r13(RuleState& s) {
  int yr = row_of(s.y(), {IK, IK_LONG});
  if (!in_any(s.x(), {A, AA}) || yr < 0) return none();
  merge(s, row_entry(GUNA, index_of(s.y(), yr)));
  return fired();
}

RuleResult r14(RuleState& s) {
  if (!(in(s.x(), EC) && in(s.y(), kVowel))) return none();
  set_x(s, row_entry(AYAV, index_of(s.x(), EC)));
  return fired();
}

RuleResult r15(RuleState& s) {
  int xr = row_of(s.x(), {IK, IK_LONG});
  if (xr < 0 || !in(s.y(), kVowel)) return none();
  set_x(s, row_entry(YAN, index_of(s.x(), xr)));
  return fired();
}

RuleResult add_t(RuleState& s) {
  append_x(s, row_entry(DENTAL, index_of(s.y(), CHATVA)));
  return fired();
}

RuleResult r16(RuleState& s) {
  if (!(in(s.x(), SIMPLE) && at(s.y(), CHATVA, 0))) return none();
  return add_t(s);
}

RuleResult r17(RuleState& s) {
  if (!(s.x() && word_in(s.X, {"ā", "mā"}) && at(s.y(), CHATVA, 0))) return none();
  return add_t(s);
}

RuleResult r18(RuleState& s) {
  if (!(in(s.x(), SIMPLE_LONG) && at(s.y(), CHATVA, 0))) return none();
  return add_t(s);
}

// ---- Set 2 ----

RuleResult r19(RuleState& s) {
  if (!(in(s.x(), kConsonant) && in(s.u(), kConsonant))) return none();
  s.X.pop_back();
  return fired();
}

RuleResult r20(RuleState& s) {
  int xr = row_of(s.x(), kMutes);
  if (xr < 0) return none();
  set_x(s, mutate_like(s.x()->p, COL3, xr));
  return fired();
}

// final nasal becomes ru, with an anusvāra on the preceding vowel
void nasal_to_ru(RuleState& s) {
  Word w = row_entry(ANUSVARA, 0);
  w.push_back(row_entry(RU, 0).front());
  set_x(s, w);
}

bool before_vowel_semivowel_nasal(const Letter* w) { return in_any(w, {kVowel, kSemivowel, NASAL}); }

RuleResult r21(RuleState& s) {
  if (!(s.x() && word_in(s.X, {"pum", "puṃ"}) && in_any(s.y(), {COL1, COL2}) &&
        before_vowel_semivowel_nasal(s.w())))
    return none();
  nasal_to_ru(s);
  return fired();
}

RuleResult r22(RuleState& s) {
  if (!(s.x() && !word_in(s.X, {"prasān"}) && at(s.x(), NASAL, 2) && in(s.y(), CHATVA) &&
        before_vowel_semivowel_nasal(s.w())))
    return none();
  nasal_to_ru(s);
  return fired();
}

RuleResult r23(RuleState& s) {
  if (!(s.x() && word_in(s.X, {"nṝn"}) && at(s.y(), LABIAL, 0))) return none();
  auto r = queue(s);
  nasal_to_ru(s);
  return r;
}

RuleResult r24(RuleState& s) {
  if (!(in_any(s.x(), {RU, R}) && in(s.y(), R))) return none();
  s.X.pop_back();
  const Letter* u = s.x();
  if (in(u, IU))
    set_x(s, row_entry(IU_LONG, index_of(u, IU)));
  else if (in(u, A))
    set_x(s, row_entry(AA, 0));
  return fired();
}

RuleResult r25(RuleState& s) {
  if (!(in_any(s.x(), {RU, R}) && in_any(s.y(), kHard))) return none();
  set_x(s, row_entry(VISARGA, 0));
  return fired();
}

RuleResult r26(RuleState& s) {
  if (!in_any(s.x(), {RU, R}) || !in_any(s.y(), kSoft)) return none();
  auto rest = text(s.X, 1);
  bool ok = rest == "bho" || rest == "bhago" || rest == "agho" || in_any(s.u(), {A, AA});
  if (!ok) return none();
  set_x(s, row_entry(YAN, 1));
  return fired();
}

RuleResult r27(RuleState& s) {
  if (!((at(s.x(), YAN, 0) || at(s.x(), YAN, 1)) && in_any(s.u(), {A, AA}) && in_any(s.y(), kSoft)))
    return none();
  auto r = queue(s);
  s.X.pop_back();
  return r;
}

RuleResult r28(RuleState& s) {
  if (!(at(s.x(), YAN, 1) && at(s.u(), EO, 0) && in_any(s.y(), kSoft))) return none();
  auto r = queue(s);
  s.X.pop_back();
  return r;
}

RuleResult r29(RuleState& s) {
  if (!((at(s.x(), YAN, 0) || at(s.x(), YAN, 1)) && in_any(s.u(), {A, AA}) && word_in(s.Y, {"u"})))
    return none();
  s.X.pop_back();
  return fired();
}

RuleResult r30(RuleState& s) {
  if (!(at(s.x(), YAN, 1) && in_any(s.y(), {kSemivowel, kConsonant}))) return none();
  s.X.pop_back();
  return fired();
}

RuleResult r31(RuleState& s) {
  if (!(in(s.x(), M) && in(s.y(), H))) return none();
  const Letter* w = s.w();
  if (in(w, M)) {
    auto r = queue(s);
    set_x(s, row_entry(ANUSVARA, 0));
    return r;
  }
  if (in(w, YAN) && !in(w, R)) {
    auto r = queue(s);
    set_x(s, row_entry(NASAL_YAN, index_of(w, YAN)));
    return r;
  }
  return none();
}

RuleResult r32(RuleState& s) {
  if (!(in(s.x(), M) && in(s.y(), H) && at(s.w(), NASAL, 2))) return none();
  auto r = queue(s);
  set_x(s, {s.w()->p});
  return r;
}

RuleResult r33(RuleState& s) {
  return each_word(s, false, [](Letters& ls, auto note) {
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      const Letter* x = &ls[i];
      const Letter* y = &ls[i + 1];
      if (!in(x, N)) continue;
      int yr = row_of(y, kMutes);
      if (yr >= 0) {
        auto nasal = mutate_like(y->p, NASAL, yr);
        if (nasal.front() == x->p) continue;
        note();
        replace_at(ls, i, nasal);
      } else if (in_any(y, {SS, S, SH, H})) {
        note();
        replace_at(ls, i, row_entry(ANUSVARA, 0));
      }
    }
  });
}

RuleResult r34(RuleState& s) {
  if (!(s.x() && word_in(s.X, {"sam", "sām"}) && begins(s.Y, {"rāj", "rāṭ", "rāñ"}))) return none();
  return {Outcome::skip, 36, {}};
}

RuleResult r35(RuleState& s) {
  if (!(in(s.x(), M) && in(s.y(), kConsonant))) return none();
  set_x(s, row_entry(ANUSVARA, 0));
  return fired();
}

RuleResult add_after_x(RuleState& s, int cat, int from) {
  auto r = queue(s);
  append_x(s, row_entry(cat, index_of(s.x(), from)));
  return r;
}

RuleResult r36(RuleState& s) {
  if (!(in(s.x(), NN) && in_any(s.y(), kSibilants))) return none();
  return add_after_x(s, COL1, NN);
}

RuleResult r37(RuleState& s) {
  if (!(at(s.x(), COL3, 1) && in(s.y(), S))) return none();
  return add_after_x(s, DENTAL, COL3);
}

RuleResult r38(RuleState& s) {
  if (!(at(s.x(), NASAL, 2) && in(s.y(), S))) return none();
  return add_after_x(s, COL4, NASAL);
}

RuleResult r39(RuleState& s) {
  if (!(at(s.x(), NASAL, 2) && in(s.y(), SH))) return none();
  return add_after_x(s, COL1, NASAL);
}

RuleResult r40(RuleState& s) {
  const Letter* x = s.x();
  if (!((at(x, NASAL, 0) || at(x, NASAL, 1) || at(x, NASAL, 2)) && in(s.u(), SIMPLE) && in(s.y(), kVowel)))
    return none();
  append_x(s, {x->p});
  return fired();
}

RuleResult r41(RuleState& s) {
  if (!(in(s.x(), VISARGA) && in_any(s.y(), kHard) && in_any(s.w(), kSibilants))) return none();
  return {Outcome::skip, 53, {}};
}

RuleResult r42(RuleState& s) {
  if (!(in(s.x(), VISARGA) && in_any(s.y(), kSibilants))) return none();
  auto r = queue(s);
  s.X.pop_back();
  return r;
}

RuleResult r43(RuleState& s) {
  if (!(in(s.x(), VISARGA) && in(s.y(), KUPVOH))) return none();
  s.kupvoh_fired = true;
  auto r = queue(s);
  set_x(s, row_entry(JIHVA, index_of(s.y(), KUPVOH)));
  return r;
}

const std::initializer_list<std::string_view> kPasa = {"pāśa", "kalpa", "ka", "kāmya"};

RuleResult r44(RuleState& s) {
  if (!(in(s.x(), VISARGA) && !in(s.u(), IU) && begins(s.Y, kPasa))) return none();
  set_x(s, row_entry(S, 0));
  return fired();
}

RuleResult r45(RuleState& s) {
  if (!(in(s.x(), VISARGA) && in(s.u(), IU) && begins(s.Y, kPasa))) return none();
  set_x(s, row_entry(SS, 0));
  return fired();
}

RuleResult visarga_before_kupvoh(RuleState& s, std::initializer_list<std::string_view> words, bool optional,
                                 int cat) {
  if (!(s.x() && word_in(s.X, words) && in(s.y(), KUPVOH))) return none();
  RuleResult r = optional ? queue(s) : fired();
  set_x(s, row_entry(cat, 0));
  return r;
}

RuleResult r46(RuleState& s) { return visarga_before_kupvoh(s, {"namaḥ", "puraḥ"}, true, S); }

RuleResult r47(RuleState& s) {
  return visarga_before_kupvoh(s, {"niḥ", "duḥ", "bahiḥ", "āviḥ", "catuḥ", "prāduḥ"}, false, SS);
}

RuleResult r48(RuleState& s) { return visarga_before_kupvoh(s, {"tiraḥ"}, true, S); }

RuleResult r49(RuleState& s) { return visarga_before_kupvoh(s, {"dviḥ", "triḥ", "catuḥ"}, true, SS); }

RuleResult r50(RuleState& s) {
  if (!(in(s.x(), VISARGA) && in(s.u(), A) &&
        begins(s.Y, {"kṛ", "kar", "kur", "kam", "kām", "kaṃsa", "kumbha", "pātra", "kuśā", "karṇī"})))
    return none();
  set_x(s, row_entry(S, 0));
  return fired();
}

RuleResult r51(RuleState& s) {
  if (!(s.x() && word_in(s.X, {"adhaḥ", "śiraḥ"}) && begins(s.Y, {"pad"}))) return none();
  auto r = queue(s);
  set_x(s, row_entry(S, 0));
  return r;
}

RuleResult r52(RuleState& s) {
  if (s.kupvoh_fired) return none();
  if (!(in(s.x(), VISARGA) && in_any(s.y(), kHard))) return none();
  set_x(s, row_entry(S, 0));
  return fired();
}

RuleResult r53(RuleState& s) {
  return each_word(s, false, [](Letters& ls, auto note) {
    for (std::size_t j = 0; j + 1 < ls.size(); ++j) {
      if (!at(&ls[j], NASAL, 2)) continue;
      for (std::size_t k = j; k-- > 0;) {
        const Letter* q = &ls[k];
        if ((in(q, RL) && !at(q, RL, 2)) || in(q, R) || in(q, SS)) {
          note();
          replace_at(ls, j, row_entry(NASAL, 1));
          break;
        }
        if (in_any(q, {PALATAL, CEREBRAL, DENTAL, S, SH}) || at(q, YAN, 3)) break;
      }
    }
  });
}

RuleResult r54(RuleState& s) {
  const Letter* x = s.x();
  const Letter* y = s.y();
  if (in(x, PALATAL) && !in(x, SH) && in(y, DENTAL)) {
    set_y(s, row_entry(PALATAL, index_of(y, DENTAL)));
    return fired();
  }
  if (in(x, DENTAL) && in(y, PALATAL)) {
    set_x(s, row_entry(PALATAL, index_of(x, DENTAL)));
    return fired();
  }
  return none();
}

RuleResult r55(RuleState& s) {
  const Letter* x = s.x();
  const Letter* y = s.y();
  if (in(x, DENTAL) && !in(y, SS) && in(y, CEREBRAL)) {
    set_x(s, row_entry(CEREBRAL, index_of(x, DENTAL)));
    return fired();
  }
  if (at(x, CEREBRAL, 0) && begins(s.Y, {"nām", "navat", "nagar"})) {
    set_y(s, row_entry(CEREBRAL, index_of(y, DENTAL)));
    return fired();
  }
  if (in(x, CEREBRAL) && in(y, DENTAL)) {
    set_y(s, row_entry(CEREBRAL, index_of(y, DENTAL)));
    return fired();
  }
  return none();
}

RuleResult r56(RuleState& s) {
  int xr = row_of(s.x(), kMutes);
  if (xr < 0) return none();
  if (begins(s.Y, {"maya", "mātra"})) {
    set_x(s, mutate_like(s.x()->p, NASAL, xr));
    return fired();
  }
  if (!in(s.y(), NASAL)) return none();
  auto r = queue(s);
  set_x(s, mutate_like(s.x()->p, NASAL, xr));
  return r;
}

RuleResult r57(RuleState& s) {
  return each_word(s, true, [](Letters& ls, auto note) {
    for (std::size_t i = 1; i + 1 < ls.size(); ++i) {
      const Letter* u = &ls[i - 1];
      const Letter* x = &ls[i];
      const Letter* y = &ls[i + 1];
      if (in_any(x, {R, H}) && in(y, kConsonant) && !in(y, H) && in(u, kVowel)) {
        note();
        Letter copy = *y;
        ls.insert(ls.begin() + static_cast<long>(i + 1), copy);
        ++i;
      }
    }
  });
}

RuleResult r58(RuleState& s) {
  return each_word(s, true, [](Letters& ls, auto note) {
    for (std::size_t i = 0; i + 2 < ls.size(); ++i) {
      const Letter* x = &ls[i];
      const Letter* y = &ls[i + 1];
      const Letter* w = &ls[i + 2];
      if (in(x, SIMPLE) && in(y, kConsonant) && !in(y, H) && in_any(w, {kSemivowel, kConsonant, kSpecialRow})) {
        note();
        Letter copy = *y;
        ls.insert(ls.begin() + static_cast<long>(i + 1), copy);
        ++i;
      }
    }
  });
}

RuleResult r59(RuleState& s) {
  return each_word(s, false, [](Letters& ls, auto note) {
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      const Letter* x = &ls[i];
      if (!in_any(&ls[i + 1], {COL3, COL4})) continue;
      Word to;
      int xr = row_of(x, kMutes);
      if (xr >= 0)
        to = mutate_like(x->p, COL3, xr);
      else if (in(x, SS))
        to = row_entry(COL3, 1);
      else if (in(x, S))
        to = row_entry(COL3, 2);
      else if (in(x, SH))
        to = row_entry(COL3, 3);
      if (to.empty() || to.front() == x->p) continue;
      note();
      replace_at(ls, i, to);
    }
  });
}

RuleResult r60(RuleState& s) {
  RuleResult boundary;
  int xr = row_of(s.x(), kMutes);
  if (xr >= 0 && in_any(s.y(), kHard)) {
    auto to = mutate_like(s.x()->p, COL1, xr);
    if (to.front() != s.x()->p) {
      set_x(s, to);
      boundary = fired();
    }
  }
  auto internal = each_word(s, false, [](Letters& ls, auto note) {
    for (std::size_t i = 0; i + 1 < ls.size(); ++i) {
      const Letter* x = &ls[i];
      int r = row_of(x, kMutes);
      if (r < 0 || !in_any(&ls[i + 1], kHard)) continue;
      auto to = mutate_like(x->p, COL1, r);
      if (to.front() == x->p) continue;
      note();
      replace_at(ls, i, to);
    }
  });
  return internal.outcome == Outcome::fired ? internal : boundary;
}

RuleResult r61(RuleState& s) {
  const Letter* y = s.y();
  if (!in(s.x(), ANUSVARA)) return none();
  if (in(y, YAN)) {
    if (in(y, R)) return none();
    set_x(s, row_entry(NASAL_YAN, index_of(y, YAN)));
    return fired();
  }
  int yr = row_of(y, kMutes);
  if (yr < 0) return none();
  set_x(s, mutate_like(y->p, NASAL, yr));
  return fired();
}

RuleResult r62(RuleState& s) {
  const Letter* x = s.x();
  const Letter* y = s.y();
  if (!at(y, YAN, 3)) return none();
  if (at(x, NASAL, 2)) {
    set_x(s, row_entry(NASAL_YAN, 3));
    return fired();
  }
  if (in(x, DENTAL) && !(at(x, DENTAL, 4) || at(x, DENTAL, 5))) {
    set_x(s, {y->p});
    return fired();
  }
  return none();
}

RuleResult r63(RuleState& s) {
  int xr = row_of(s.x(), kMutes);
  if (xr < 0 || !in(s.y(), H)) return none();
  auto r = queue(s);
  set_y(s, row_entry(COL4, index_of(s.x(), xr)));
  return r;
}

RuleResult r64(RuleState& s) {
  if (!(in_any(s.x(), kMutes) && in(s.y(), SH) && before_vowel_semivowel_nasal(s.w()))) return none();
  auto r = queue(s);
  set_y(s, row_entry(CHATVA, 0));
  return r;
}

RuleResult r65(RuleState& s) {
  const Letter* x = s.x();
  if (!(in(s.u(), kConsonant) && in_any(x, {YAN, NASAL}) && s.y() && s.y()->p == x->p)) return none();
  s.X.pop_back();
  return fired();
}

RuleResult r66(RuleState& s) {
  return each_word(s, true, [](Letters& ls, auto note) {
    for (std::size_t i = 1; i + 1 < ls.size(); ++i) {
      const Letter* u = &ls[i - 1];
      const Letter* x = &ls[i];
      const Letter* y = &ls[i + 1];
      if (in_any(u, {kSemivowel, kConsonant}) && in_any(x, {COL1, COL2, COL3, COL4, SS, S, SH}) &&
          repr(x->p).categories == repr(y->p).categories) {
        note();
        ls.erase(ls.begin() + static_cast<long>(i));
      }
    }
  });
}

constexpr std::array<RuleFn, 66> kRules = {
    r1,  r2,  r3,  r4,  r5,  r6,  r7,  r8,  r9,  r10, r11, r12, r13, r14, r15, r16, r17,
    r18, r19, r20, r21, r22, r23, r24, r25, r26, r27, r28, r29, r30, r31, r32, r33, r34,
    r35, r36, r37, r38, r39, r40, r41, r42, r43, r44, r45, r46, r47, r48, r49, r50, r51,
    r52, r53, r54, r55, r56, r57, r58, r59, r60, r61, r62, r63, r64, r65, r66};

std::vector<SandhiRule> load_catalogue() {
  std::vector<SandhiRule> out;
  std::istringstream in{std::string(tables::rules)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream cells(line);
    std::string id, sutra, set, name, opt;
    std::getline(cells, id, '\t');
    std::getline(cells, sutra, '\t');
    std::getline(cells, set, '\t');
    std::getline(cells, name, '\t');
    std::getline(cells, opt, '\t');
    SandhiRule r;
    r.id = std::stoi(id);
    if (r.id != static_cast<int>(out.size()) + 1) throw Error("rule table out of order at " + id);
    r.sutra = sutra;
    r.set = std::stoi(set);
    r.common_name = name;
    r.optional = opt == "optional";
    r.fn = kRules.at(static_cast<std::size_t>(r.id - 1));
    out.push_back(std::move(r));
  }
  if (out.size() != kRules.size()) throw Error("rule table must list 66 rules");
  return out;
}

}  // namespace

const std::vector<SandhiRule>& rule_catalogue() {
  static const std::vector<SandhiRule> c = load_catalogue();
  return c;
}

}  // namespace sandhi
