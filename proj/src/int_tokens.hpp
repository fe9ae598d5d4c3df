#pragma once

#include <cctype>
#include <string>

#include "rackenum/errors.hpp"

namespace rackenum {

// Whitespace-separated integer tokens with line tracking; '#' starts a
// comment running to end of line.  Shared by the table, matrix and
// multiplication-table parsers.
struct IntTokens {
  explicit IntTokens(const std::string& text) : text_(text) {}

  bool next(long long& value) {
    for (;;) {
      while (pos_ < text_.size() &&
             std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        if (text_[pos_] == '\n') ++line_;
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
        continue;
      }
      break;
    }
    if (pos_ >= text_.size()) return false;
    bool neg = false;
    if (text_[pos_] == '-') {
      neg = true;
      ++pos_;
    }
    if (pos_ >= text_.size())
      throw ParseError("expected digits after '-'", line_);
    if (!std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError(std::string("expected integer, got '") + text_[pos_] + "'",
                       line_);
    long long v = 0;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000000) throw ParseError("integer too large", line_);
      ++pos_;
    }
    value = neg ? -v : v;
    return true;
  }

  int line() const { return line_; }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1;
};

}  // namespace rackenum
