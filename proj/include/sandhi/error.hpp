#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sandhi {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// position is a code-point offset into the input
class UnknownGrapheme : public Error {
 public:
  explicit UnknownGrapheme(std::size_t pos)
      : Error("unknown grapheme at position " + std::to_string(pos)), position(pos) {}
  std::size_t position;
};

class IndexOutOfRow : public Error {
 public:
  IndexOutOfRow(int category, int index)
      : Error("index " + std::to_string(index) + " out of row " + std::to_string(category)),
        category(category), index(index) {}
  int category;
  int index;
};

class EmptyWord : public Error {
 public:
  EmptyWord() : Error("empty word") {}
};

class DecodeError : public Error {
 public:
  explicit DecodeError(std::size_t byte)
      : Error("invalid UTF-8 at byte " + std::to_string(byte)), byte_offset(byte) {}
  std::size_t byte_offset;
};

class UnsupportedCodePoint : public Error {
 public:
  UnsupportedCodePoint(std::size_t pos, char32_t cp);
  std::size_t position;
  char32_t code_point;
};

}  // namespace sandhi
