#pragma once

#include <stdexcept>
#include <string>

namespace rackenum {

// Input text (table, cycle list, blueprint, matrix) could not be parsed.
// The CLI maps this to exit status 2.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& msg, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg
                                    : msg),
        line_(line) {}

  int line() const { return line_; }

private:
  int line_;
};

// A configured resource cap was exceeded (group order, search degree,
// brute-force size). The CLI maps this to exit status 3.
class CapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace rackenum
