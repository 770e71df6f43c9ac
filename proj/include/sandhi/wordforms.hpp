#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sandhi/phoneme.hpp"
#include "sandhi/rules.hpp"

namespace sandhi {

enum class FormKind { exact, right_context, left_context, fused };
const char* to_string(FormKind k);

enum class Side { left, right };

struct WordForm {
  std::string surface;
  FormKind kind = FormKind::exact;
  std::string context;  // context word that produced the form, empty for the base
  Side side = Side::right;
  std::string partner;  // form the context was joined to (the base, or a phase-1 form)
  std::vector<int> fired;
};

struct WordFormSet {
  Word base;
  std::vector<WordForm> forms;  // first producer wins, base first
  // code-point pairs seen across a joined junction, used for non-strict boundaries
  std::set<std::pair<char32_t, char32_t>> junctions;

  const WordForm* find(const std::string& surface) const;
};

WordFormSet generate_all_word_forms(const Word& z);

struct Stripped {
  std::string surface;
  FormKind kind = FormKind::right_context;
};

// The part of a joined alternative that belongs to the query word, the context being on
// `context_side`. When a letter fused across the junction the whole joined string is kept.
Stripped strip_context(const RuleState& s, Side context_side);

// Context letters tried by the generator.
std::vector<std::string> right_contexts();
std::vector<std::string> left_contexts();

}  // namespace sandhi
