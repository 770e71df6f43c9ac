#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sandhi/wordforms.hpp"

namespace sandhi {

enum class Script { iast, devanagari };

struct Corpus {
  std::u32string text;
  std::vector<std::size_t> line_index;
  std::string source;
};

struct Match {
  std::size_t offset = 0;
  std::size_t length = 0;
  std::string surface;
  FormKind kind = FormKind::exact;
  std::size_t line = 0;  // 1-based
};

Corpus ingest(std::string_view raw, Script script, std::string source = {});

struct SearchOptions {
  bool strict_boundaries = false;
};

std::vector<Match> search(const WordFormSet& forms, const Corpus& c, SearchOptions opt = {});
std::vector<Match> search(std::string_view query, const Corpus& c, SearchOptions opt = {});

std::string normalize_iast(std::string_view s);

}  // namespace sandhi
