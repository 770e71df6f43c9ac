#include <algorithm>
#include <deque>

#include "sandhi/error.hpp"
#include "sandhi/rules.hpp"

namespace sandhi {

Letters letters(const Word& w, Origin o) {
  Letters out;
  out.reserve(w.size());
  for (auto p : w) out.push_back({p, o});
  return out;
}

Word phonemes(const Letters& ls) {
  Word out;
  out.reserve(ls.size());
  for (const auto& l : ls) out.push_back(l.p);
  return out;
}

const Letter* RuleState::x() const { return junction_closed || X.empty() ? nullptr : &X.back(); }
const Letter* RuleState::u() const { return junction_closed || X.size() < 2 ? nullptr : &X[X.size() - 2]; }
const Letter* RuleState::y() const { return junction_closed || Y.empty() ? nullptr : &Y.front(); }
const Letter* RuleState::w() const { return junction_closed || Y.size() < 2 ? nullptr : &Y[1]; }

RuleState make_state(const Word& X, const Word& Y) {
  RuleState s;
  s.X = letters(X, Origin::left);
  s.Y = letters(Y, Origin::right);
  return s;
}

std::vector<int> rule_order() {
  std::vector<int> ids;
  for (const auto& r : rule_catalogue()) ids.push_back(r.id);
  return ids;
}

const SandhiRule& rule(int id) {
  const auto& c = rule_catalogue();
  if (id < 1 || id > static_cast<int>(c.size())) throw Error("no rule " + std::to_string(id));
  return c[id - 1];
}

RuleResult apply_rule(int id, RuleState& s) {
  const auto& r = rule(id);
  RuleState before = s;
  RuleResult res = r.fn(s);
  // a transform that rewrites a letter into itself is not a firing
  if (res.outcome == Outcome::fired && s == before) res.outcome = Outcome::not_fired;
  return res;
}

WordList sandhi_process(const Word& X, const Word& Y) {
  if (X.empty() || Y.empty()) throw EmptyWord();
  const auto order = rule_order();
  auto position = [&](int id) {
    return static_cast<std::size_t>(std::find(order.begin(), order.end(), id) - order.begin());
  };

  struct Item {
    Alternative alt;
    std::size_t next = 0;
  };
  std::deque<Item> queue;
  queue.push_back({{make_state(X, Y), {}, {}}, 0});

  WordList out;
  while (!queue.empty()) {
    Item item = std::move(queue.front());
    queue.pop_front();
    auto& alt = item.alt;
    std::size_t i = item.next;
    while (i < order.size()) {
      int id = order[i++];
      alt.evaluated.push_back(id);
      auto fired_before = alt.fired;
      RuleResult r = apply_rule(id, alt.state);
      if (r.outcome == Outcome::not_fired) continue;
      alt.fired.push_back(id);
      for (auto& b : r.branches) queue.push_back({{std::move(b), fired_before, alt.evaluated}, i});
      if (r.outcome == Outcome::skip) i = position(r.skip_to);
      if (r.outcome == Outcome::terminate) break;
    }
    bool seen = std::any_of(out.begin(), out.end(), [&](const Alternative& a) { return a.state == alt.state; });
    if (!seen) out.push_back(std::move(alt));
  }
  return out;
}

Word internal_sandhi(const Word& w) {
  if (w.empty()) throw EmptyWord();
  RuleState s;
  s.X = letters(w, Origin::left);
  for (int id : {33, 53, 59, 60}) apply_rule(id, s);
  return phonemes(s.X);
}

std::string surface(const Letters& ls) {
  std::string out;
  for (const auto& l : ls) {
    const auto& g = grapheme(l.p);
    out += g == "#" ? "r" : g;
  }
  return out;
}

std::vector<std::string> renderings(const RuleState& s) {
  Letters all = s.X;
  all.insert(all.end(), s.Y.begin(), s.Y.end());
  Letters left, right;
  bool fused = false;
  for (const auto& l : all) {
    if (l.origin == Origin::both) fused = true;
    (l.origin == Origin::left ? left : right).push_back(l);
  }
  if (fused || left.empty() || right.empty()) return {surface(all)};
  return {surface(left) + " " + surface(right), surface(all)};
}

std::vector<std::string> renderings(const WordList& list) {
  std::vector<std::string> out;
  for (const auto& alt : list)
    for (auto& r : renderings(alt.state))
      if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  return out;
}

}  // namespace sandhi
