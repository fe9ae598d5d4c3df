#include "rackenum/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rackenum/errors.hpp"

namespace rackenum {

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("permutation degree must be >= 0");
  img_.resize(degree);
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<char> seen(n, 0);
  for (int v : images) {
    if (v < 1 || v > n)
      throw std::invalid_argument("image out of range: " + std::to_string(v));
    if (seen[v - 1])
      throw std::invalid_argument("image repeated: " + std::to_string(v));
    seen[v - 1] = 1;
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i + 1) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  const int n = degree();
  std::vector<char> seen(n, 0);
  std::vector<int> lens;
  for (int x = 1; x <= n; ++x) {
    if (seen[x - 1]) continue;
    int len = 0;
    for (int y = x; !seen[y - 1]; y = apply(y)) {
      seen[y - 1] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.rbegin(), lens.rend());
  return lens;
}

std::uint64_t Permutation::order() const {
  std::uint64_t ord = 1;
  for (int len : cycle_type()) ord = std::lcm<std::uint64_t>(ord, len);
  return ord;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[x - 1] = q.apply(p.apply(x));
  return Permutation::from_images(std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[p.apply(x) - 1] = x;
  return Permutation::from_images(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  if (p.degree() != g.degree())
    throw std::invalid_argument("conjugate: degree mismatch");
  // g^-1 p g sends g(x) to g(p(x)), so build the image vector directly
  // instead of composing three times.
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[g.apply(x) - 1] = g.apply(p.apply(x));
  return Permutation::from_images(std::move(img));
}

bool commute(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("commute: degree mismatch");
  for (int x = 1; x <= p.degree(); ++x)
    if (q.apply(p.apply(x)) != p.apply(q.apply(x))) return false;
  return true;
}

std::string format_cycles(const Permutation& p) {
  const int n = p.degree();
  std::vector<char> seen(n, 0);
  std::ostringstream out;
  bool wrote = false;
  for (int x = 1; x <= n; ++x) {
    if (seen[x - 1] || p.apply(x) == x) {
      seen[x - 1] = 1;
      continue;
    }
    out << '(';
    bool first = true;
    for (int y = x; !seen[y - 1]; y = p.apply(y)) {
      seen[y - 1] = 1;
      if (!first) out << ' ';
      out << y;
      first = false;
    }
    out << ')';
    wrote = true;
  }
  if (!wrote) return "()";
  return out.str();
}

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::vector<char> used(degree, 0);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };

  skip_ws();
  if (i == text.size()) throw ParseError("empty permutation");
  bool any_cycle = false;
  while (i < text.size()) {
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '(')
      throw ParseError(std::string("expected '(' in cycle notation, got '") +
                       text[i] + "'");
    ++i;
    std::vector<int> cyc;
    for (;;) {
      skip_ws();
      if (i == text.size()) throw ParseError("unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError(std::string("expected point or ')' in cycle, got '") +
                         text[i] + "'");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      if (v < 1 || v > degree)
        throw ParseError("point " + std::to_string(v) + " out of range 1.." +
                         std::to_string(degree));
      if (used[v - 1])
        throw ParseError("point " + std::to_string(v) + " repeated");
      used[v - 1] = 1;
      cyc.push_back(v);
    }
    if (cyc.size() == 1)
      throw ParseError("cycle of length 1; fixed points are omitted");
    for (size_t j = 0; j < cyc.size(); ++j)
      img[cyc[j] - 1] = cyc[(j + 1) % cyc.size()];
    any_cycle = true;
  }
  (void)any_cycle;  // "()" is the identity: one empty cycle, no points
  return Permutation::from_images(std::move(img));
}

std::vector<Permutation> parse_cycle_list(const std::string& text, int degree) {
  std::vector<Permutation> out;
  std::string cur;
  int depth = 0;
  bool saw_content = false;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') {
      --depth;
      if (depth < 0) throw ParseError("unbalanced ')'");
    }
    if (ch == ',' && depth == 0) {
      out.push_back(parse_cycles(cur, degree));
      cur.clear();
      saw_content = false;
      continue;
    }
    if (!std::isspace(static_cast<unsigned char>(ch))) saw_content = true;
    cur += ch;
  }
  if (depth != 0) throw ParseError("unbalanced '('");
  if (saw_content)
    out.push_back(parse_cycles(cur, degree));
  else if (!out.empty())
    throw ParseError("trailing ',' in permutation list");
  return out;
}

std::string format_cycle_list(const std::vector<Permutation>& ps) {
  std::string out;
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += format_cycles(ps[i]);
  }
  return out;
}

}  // namespace rackenum
