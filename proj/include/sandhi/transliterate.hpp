#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sandhi {

// Input is NFC-normalized before conversion. Digits, daṇḍas, whitespace and punctuation pass through.
std::string deva_to_iast(std::string_view text);

// #, Λ and Υ have no Devanagari letter; they are written as visarga and a warning is recorded.
std::string iast_to_deva(std::string_view text, std::vector<std::string>* warnings = nullptr);

}  // namespace sandhi
