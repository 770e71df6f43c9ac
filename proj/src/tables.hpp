#pragma once

#include <string_view>

namespace sandhi::tables {

extern const std::string_view categories;
extern const std::string_view rules;
extern const std::string_view devanagari;

}  // namespace sandhi::tables
