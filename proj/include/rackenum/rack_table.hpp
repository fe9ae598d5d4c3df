#pragma once

#include <string>
#include <vector>

#include "rackenum/perm_group.hpp"
#include "rackenum/permutation.hpp"

namespace rackenum {

enum class RackClass { not_rack, rack, quandle, kei };

std::string to_string(RackClass c);

// Parses "rack", "quandle" or "kei"; throws ParseError otherwise.
RackClass parse_rack_class(const std::string& s);

// An n x n operation table over points 1..n, stored row-major.
// at(x, y) is x > y, the image of x under the translation by y.
// The constructor checks only that entries are in range; whether the
// table satisfies the rack axioms is a separate question (validate).
class RackTable {
public:
  RackTable(int n, std::vector<int> cells);

  int order() const { return n_; }
  int at(int x, int y) const { return cells_[(x - 1) * n_ + (y - 1)]; }
  const std::vector<int>& cells() const { return cells_; }

  // Text form: a comment header is not emitted; first token is n,
  // then n rows of n entries.
  std::string format() const;

  // Parses a single table.  '#' starts a comment running to end of
  // line.  Throws ParseError (with a line number) on malformed input.
  static RackTable parse(const std::string& text);

  // Parses zero or more concatenated table records from one stream.
  static std::vector<RackTable> parse_many(const std::string& text);

  friend auto operator<=>(const RackTable&, const RackTable&) = default;

private:
  int n_;
  std::vector<int> cells_;
};

struct ValidationResult {
  RackClass cls = RackClass::not_rack;
  std::string witness;  // set only when cls == not_rack
};

// Checks the axioms and reports the most specific class that holds:
// every column a bijection and self-distributivity make a rack; idempotent
// diagonal upgrades to quandle; involutive columns upgrade to kei.
// When the table is not a rack, witness names the first violated axiom
// and where it fails.
ValidationResult validate(const RackTable& t);

RackClass classify(const RackTable& t);

// Column y as a permutation (the translation x -> x > y).  Throws
// std::invalid_argument if that column is not a bijection.
Permutation translation(const RackTable& t, int y);

// Group generated by all translations.
PermGroup operator_group(const RackTable& t,
                         std::uint64_t order_cap = kDefaultOrderCap);

}  // namespace rackenum
