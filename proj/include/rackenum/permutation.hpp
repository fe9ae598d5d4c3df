#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace rackenum {

// A permutation of {1, ..., n}, stored as its image vector.  Points are
// 1-based everywhere; image(x) is the point x is mapped to.
class Permutation {
public:
  // Identity on {1, ..., degree}.
  explicit Permutation(int degree);

  // Builds from an image vector (images[i] is the image of point i+1).
  // Throws std::invalid_argument if the vector is not a bijection.
  static Permutation from_images(std::vector<int> images);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int x) const { return img_[x - 1]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;

  // Cycle lengths in decreasing order, fixed points included.  Two
  // permutations of equal degree are conjugate in the full symmetric
  // group exactly when these agree.
  std::vector<int> cycle_type() const;

  // Order of the permutation as a group element (lcm of cycle lengths).
  std::uint64_t order() const;

  // Comparison is lexicographic on image vectors, so sorting a set of
  // permutations is deterministic.
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  explicit Permutation(std::vector<int> img) : img_(std::move(img)) {}
  std::vector<int> img_;
};

// result(x) = q(p(x)); matches the right-action convention where x.(pq)
// means (x.p).q.
Permutation compose(const Permutation& p, const Permutation& q);

Permutation inverse(const Permutation& p);

// g^-1 * p * g.
Permutation conjugate(const Permutation& p, const Permutation& g);

bool commute(const Permutation& p, const Permutation& q);

// Cycle notation: "(1 2)(3 4)"; the identity prints as "()".  Fixed
// points are omitted.
std::string format_cycles(const Permutation& p);

// Parses cycle notation at a given degree.  Accepts "()" for the
// identity.  Throws ParseError on malformed text, out-of-range points,
// or repeated points.
Permutation parse_cycles(const std::string& text, int degree);

// Parses a comma-separated list of cycle-notation permutations, e.g.
// "(1 2), (1 2 3 4)".  An empty or all-whitespace string is an empty list.
std::vector<Permutation> parse_cycle_list(const std::string& text, int degree);

std::string format_cycle_list(const std::vector<Permutation>& ps);

}  // namespace rackenum
