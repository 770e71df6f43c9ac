#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sandhi/phoneme.hpp"

namespace sandhi {

// Which input word a letter came from. Letters fused from both words carry both bits.
enum class Origin : std::uint8_t { left = 1, right = 2, both = 3 };

inline Origin operator|(Origin a, Origin b) {
  return static_cast<Origin>(static_cast<std::uint8_t>(a) | static_cast<std::uint8_t>(b));
}

struct Letter {
  Phoneme p;
  Origin origin = Origin::left;
  bool operator==(const Letter&) const = default;
};

using Letters = std::vector<Letter>;

Letters letters(const Word& w, Origin o);
Word phonemes(const Letters& ls);

struct RuleState {
  Letters X;
  Letters Y;
  bool kupvoh_fired = false;
  // set once a vowel rule has replaced both junction letters
  bool junction_closed = false;

  // junction letters; null when absent or when the junction is closed
  const Letter* x() const;
  const Letter* u() const;
  const Letter* y() const;
  const Letter* w() const;

  bool operator==(const RuleState&) const = default;
};

RuleState make_state(const Word& X, const Word& Y);

enum class Outcome { not_fired, fired, branched, skip, terminate };

struct RuleResult {
  Outcome outcome = Outcome::not_fired;
  int skip_to = 0;                  // next rule id for Outcome::skip
  std::vector<RuleState> branches;  // untransformed alternatives queued by optional rules
};

using RuleFn = RuleResult (*)(RuleState&);

struct SandhiRule {
  int id = 0;
  std::string sutra;
  int set = 0;
  bool optional = false;
  std::string common_name;  // "-" when there is none
  RuleFn fn = nullptr;
};

const std::vector<SandhiRule>& rule_catalogue();
std::vector<int> rule_order();
const SandhiRule& rule(int id);

RuleResult apply_rule(int id, RuleState& s);

struct Alternative {
  RuleState state;
  std::vector<int> fired;
  std::vector<int> evaluated;
};

using WordList = std::vector<Alternative>;

// One pass over the rule order; optional rules queue branches that resume at the next rule.
WordList sandhi_process(const Word& X, const Word& Y);

// The obligatory word-internal loops (rules 33, 53, 59, 60) applied to a single word.
Word internal_sandhi(const Word& w);

// Output strings of one alternative: "left right" when the words stay apart, then the
// joined form. A leftover # is written as r.
std::vector<std::string> renderings(const RuleState& s);
// Deduplicated renderings of the whole list, mainline first.
std::vector<std::string> renderings(const WordList& list);

std::string surface(const Letters& ls);

}  // namespace sandhi
