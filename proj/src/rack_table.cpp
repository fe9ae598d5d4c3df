#include "rackenum/rack_table.hpp"

#include <sstream>
#include <stdexcept>

#include "int_tokens.hpp"
#include "rackenum/errors.hpp"

namespace rackenum {

std::string to_string(RackClass c) {
  switch (c) {
    case RackClass::not_rack: return "not_rack";
    case RackClass::rack: return "rack";
    case RackClass::quandle: return "quandle";
    case RackClass::kei: return "kei";
  }
  throw std::logic_error("bad RackClass value");
}

RackClass parse_rack_class(const std::string& s) {
  if (s == "rack") return RackClass::rack;
  if (s == "quandle") return RackClass::quandle;
  if (s == "kei") return RackClass::kei;
  throw ParseError("unknown kind '" + s + "' (expected rack, quandle or kei)");
}

RackTable::RackTable(int n, std::vector<int> cells) : n_(n) {
  if (n < 1) throw std::invalid_argument("table order must be >= 1");
  if (cells.size() != static_cast<size_t>(n) * n)
    throw std::invalid_argument("table needs n*n entries");
  for (int v : cells)
    if (v < 1 || v > n)
      throw std::invalid_argument("table entry out of range: " +
                                  std::to_string(v));
  cells_ = std::move(cells);
}

std::string RackTable::format() const {
  std::ostringstream out;
  out << n_ << "\n";
  for (int x = 1; x <= n_; ++x) {
    for (int y = 1; y <= n_; ++y) {
      if (y > 1) out << ' ';
      out << at(x, y);
    }
    out << "\n";
  }
  return out.str();
}

namespace {

RackTable parse_one(IntTokens& tok) {
  long long n;
  if (!tok.next(n)) throw ParseError("missing table order", tok.line());
  if (n < 1 || n > 4096)
    throw ParseError("table order out of range: " + std::to_string(n),
                     tok.line());
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(n) * n);
  for (long long i = 0; i < n * n; ++i) {
    long long v;
    if (!tok.next(v))
      throw ParseError("table ends early: expected " + std::to_string(n * n) +
                           " entries, got " + std::to_string(i),
                       tok.line());
    if (v < 1 || v > n)
      throw ParseError("entry " + std::to_string(v) + " out of range 1.." +
                           std::to_string(n),
                       tok.line());
    cells.push_back(static_cast<int>(v));
  }
  return RackTable(static_cast<int>(n), std::move(cells));
}

}  // namespace

RackTable RackTable::parse(const std::string& text) {
  IntTokens tok(text);
  RackTable t = parse_one(tok);
  long long extra;
  if (tok.next(extra))
    throw ParseError("trailing input after table", tok.line());
  return t;
}

std::vector<RackTable> RackTable::parse_many(const std::string& text) {
  IntTokens tok(text);
  std::vector<RackTable> out;
  // Peek by attempting to read the next order token.
  for (;;) {
    size_t save_pos = tok.pos_;
    int save_line = tok.line_;
    long long n;
    if (!tok.next(n)) break;
    tok.pos_ = save_pos;
    tok.line_ = save_line;
    out.push_back(parse_one(tok));
  }
  return out;
}

ValidationResult validate(const RackTable& t) {
  const int n = t.order();
  for (int y = 1; y <= n; ++y) {
    std::vector<char> seen(n, 0);
    for (int x = 1; x <= n; ++x) {
      const int v = t.at(x, y);
      if (seen[v - 1])
        return {RackClass::not_rack,
                "column " + std::to_string(y) + " is not a permutation (" +
                    std::to_string(v) + " repeats)"};
      seen[v - 1] = 1;
    }
  }
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      for (int z = 1; z <= n; ++z)
        if (t.at(t.at(x, y), z) != t.at(t.at(x, z), t.at(y, z)))
          return {RackClass::not_rack,
                  "self-distributivity fails at (x, y, z) = (" +
                      std::to_string(x) + ", " + std::to_string(y) + ", " +
                      std::to_string(z) + ")"};
  bool idempotent = true;
  for (int x = 1; x <= n; ++x)
    if (t.at(x, x) != x) {
      idempotent = false;
      break;
    }
  if (!idempotent) return {RackClass::rack, ""};
  bool involutive = true;
  for (int y = 1; y <= n && involutive; ++y)
    for (int x = 1; x <= n; ++x)
      if (t.at(t.at(x, y), y) != x) {
        involutive = false;
        break;
      }
  return {involutive ? RackClass::kei : RackClass::quandle, ""};
}

RackClass classify(const RackTable& t) { return validate(t).cls; }

Permutation translation(const RackTable& t, int y) {
  if (y < 1 || y > t.order())
    throw std::invalid_argument("translation: point out of range");
  std::vector<int> img(t.order());
  for (int x = 1; x <= t.order(); ++x) img[x - 1] = t.at(x, y);
  return Permutation::from_images(std::move(img));
}

PermGroup operator_group(const RackTable& t, std::uint64_t order_cap) {
  std::vector<Permutation> gens;
  gens.reserve(t.order());
  for (int y = 1; y <= t.order(); ++y) gens.push_back(translation(t, y));
  return PermGroup::generated(t.order(), std::move(gens), order_cap);
}

}  // namespace rackenum
