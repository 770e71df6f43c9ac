#include "sandhi/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <json.hpp>
#include <map>
#include <sstream>

#include "sandhi/error.hpp"
#include "sandhi/rules.hpp"
#include "sandhi/search.hpp"
#include "sandhi/transliterate.hpp"
#include "sandhi/utf8.hpp"
#include "sandhi/wordforms.hpp"

namespace sandhi {

namespace {

struct Config {
  Script script = Script::iast;
  bool strict = false;
  bool records = false;
};

std::string to_iast(const std::string& s, const Config& c) {
  return c.script == Script::devanagari ? deva_to_iast(s) : normalize_iast(s);
}

std::string from_iast(const std::string& s, const Config& c, std::ostream& err) {
  if (c.script != Script::devanagari) return s;
  std::vector<std::string> warnings;
  auto out = iast_to_deva(s, &warnings);
  for (const auto& w : warnings) err << "warning: " << w << "\n";
  return out;
}

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (int id : ids) {
    if (!out.empty()) out += ",";
    out += std::to_string(id);
  }
  return out;
}

void cmd_join(const std::string& a, const std::string& b, const Config& c, std::ostream& out, std::ostream& err) {
  if (a.empty() || b.empty()) throw EmptyWord();
  auto left = tokenize(to_iast(a, c));
  auto right = tokenize(to_iast(b, c));
  auto list = sandhi_process(left, right);
  if (!c.records) {
    for (const auto& r : renderings(list)) out << from_iast(r, c, err) << "\n";
    return;
  }
  std::vector<std::string> done;
  for (const auto& alt : list)
    for (const auto& r : renderings(alt.state)) {
      if (std::find(done.begin(), done.end(), r) != done.end()) continue;
      done.push_back(r);
      nlohmann::json j = {{"surface", from_iast(r, c, err)}, {"rules", alt.fired}};
      out << j.dump() << "\n";
    }
}

void cmd_forms(const std::string& z, const Config& c, std::ostream& out, std::ostream& err) {
  auto set = generate_all_word_forms(tokenize(to_iast(z, c)));
  auto forms = set.forms;
  std::stable_sort(forms.begin(), forms.end(),
                   [](const WordForm& a, const WordForm& b) { return a.surface < b.surface; });
  for (const auto& f : forms) {
    auto shown = from_iast(f.surface, c, err);
    if (c.records) {
      nlohmann::json j = {{"surface", shown},
                          {"kind", to_string(f.kind)},
                          {"context", f.context},
                          {"side", f.side == Side::left ? "left" : "right"},
                          {"partner", f.partner},
                          {"rules", f.fired}};
      out << j.dump() << "\n";
    } else {
      out << shown << "\t" << to_string(f.kind) << "\t" << (f.context.empty() ? "-" : f.context) << "\t"
          << (f.fired.empty() ? "-" : join_ids(f.fired)) << "\n";
    }
  }
}

class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void cmd_search(const std::string& z, const std::string& path, const Config& c, std::ostream& out) {
  auto corpus = ingest(read_input(path), c.script, path);
  auto matches = search(to_iast(z, c), corpus, {c.strict});
  for (const auto& m : matches) {
    if (c.records) {
      nlohmann::json j = {{"offset", m.offset},
                          {"length", m.length},
                          {"line", m.line},
                          {"surface", m.surface},
                          {"kind", to_string(m.kind)}};
      out << j.dump() << "\n";
    } else {
      out << m.line << ":" << m.offset << "\t" << m.surface << "\t" << to_string(m.kind) << "\n";
    }
  }
}

void cmd_rules(std::ostream& out) {
  for (const auto& r : rule_catalogue())
    out << r.id << "  " << r.sutra << "  " << r.common_name << "  " << (r.optional ? "optional" : "obligatory")
        << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sanskrit sandhi joiner, word-form generator and corpus search", "sandhi"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  std::string script = "iast", output = "text";
  app.add_option("--script", script, "Script of words and corpus")
      ->check(CLI::IsMember({"iast", "devanagari"}))
      ->capture_default_str();
  app.add_flag("--strict-boundaries", cfg.strict, "Only whitespace and punctuation delimit words");
  app.add_option("--output", output, "Output format")
      ->check(CLI::IsMember({"text", "records"}))
      ->capture_default_str();

  std::string a, b, file;
  auto* join = app.add_subcommand("join", "Join two words, printing every alternative");
  join->add_option("first", a)->required();
  join->add_option("second", b)->required();
  auto* forms = app.add_subcommand("forms", "List the sandhi forms of a word");
  forms->add_option("word", a)->required();
  auto* srch = app.add_subcommand("search", "Find every form of a word in a text file ('-' for stdin)");
  srch->add_option("word", a)->required();
  srch->add_option("file", file)->required();
  auto* rules = app.add_subcommand("rules", "Print the rule catalogue");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  cfg.script = script == "devanagari" ? Script::devanagari : Script::iast;
  cfg.records = output == "records";

  try {
    if (*join) cmd_join(a, b, cfg, out, err);
    if (*forms) cmd_forms(a, cfg, out, err);
    if (*srch) cmd_search(a, file, cfg, out);
    if (*rules) cmd_rules(out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sandhi
