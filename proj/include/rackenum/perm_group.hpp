#pragma once

#include <cstdint>
#include <vector>

#include "rackenum/permutation.hpp"

namespace rackenum {

// Hard ceiling on materialized group order; generation beyond this
// throws CapError.  10! covers every degree this tool works at.
inline constexpr std::uint64_t kDefaultOrderCap = 3628800;

// Subgroup-class listing is only supported up to this degree.
inline constexpr int kDefaultDegreeCap = 6;

// A finite permutation group on {1, ..., degree}, materialized as its
// sorted element list.  Groups at the scales handled here are small
// (order <= 10!), so explicit element lists keep membership, conjugacy
// and closure code straightforward.
class PermGroup {
public:
  // Closure of the generators under composition.  Throws CapError if
  // the order would exceed order_cap.
  static PermGroup generated(int degree, std::vector<Permutation> gens,
                             std::uint64_t order_cap = kDefaultOrderCap);

  static PermGroup trivial(int degree);

  // Full symmetric group on {1, ..., degree}.
  static PermGroup symmetric(int degree,
                             std::uint64_t order_cap = kDefaultOrderCap);

  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  const std::vector<Permutation>& elements() const { return elements_; }
  const std::vector<Permutation>& generators() const { return gens_; }

  bool contains(const Permutation& p) const;

  // Index of p in the sorted element list; -1 if absent.
  int index_of(const Permutation& p) const;

  bool is_subgroup_of(const PermGroup& other) const;

  // Equality is equality of degree and element set.
  bool operator==(const PermGroup& other) const {
    return degree_ == other.degree_ && elements_ == other.elements_;
  }

private:
  PermGroup(int degree, std::vector<Permutation> gens,
            std::vector<Permutation> elements)
      : degree_(degree), gens_(std::move(gens)), elements_(std::move(elements)) {}

  int degree_;
  std::vector<Permutation> gens_;
  std::vector<Permutation> elements_;  // sorted, closed under composition
};

// Orbits of a group on its points, listed with their minimal elements
// ascending.  transversal[x-1] maps the orbit representative of x to x,
// so f at any point can be recovered from f at the representative by
// conjugation.
struct OrbitData {
  std::vector<std::vector<int>> orbits;  // each sorted ascending
  std::vector<int> representatives;      // minimal point of each orbit
  std::vector<int> orbit_index;          // orbit_index[x-1] = orbit id of x
  std::vector<Permutation> transversal;  // transversal[x-1] sends rep(x) to x
};

OrbitData orbit_data(const PermGroup& g);

// Elements of g fixing the point (a subgroup, returned as a group).
PermGroup stabilizer(const PermGroup& g, int point);

// Elements of g commuting with p.
PermGroup centralizer(const PermGroup& g, const Permutation& p);

// Conjugacy classes of g, each sorted, ordered by (class size, minimal
// element).  Verifies the class equation and the class-count bound
// count^2 <= 3^(degree-1) for degree > 2; failure of either is a bug.
std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g);

// Smallest normal subgroup of g containing the given elements; each
// must lie in g.
PermGroup normal_closure(const PermGroup& g, const std::vector<Permutation>& seeds);

// Representatives of the conjugacy classes of subgroups of Sym(degree),
// sorted by (order, element list).  Throws CapError when degree exceeds
// degree_cap; the search is exhaustive, not sampled.
std::vector<PermGroup> subgroup_classes(int degree,
                                        int degree_cap = kDefaultDegreeCap);

// True if some g in sym conjugates a onto b (as subgroups).  Both must
// have equal degree; sym must be the full symmetric group of that degree.
bool subgroups_conjugate(const PermGroup& a, const PermGroup& b,
                         const PermGroup& sym);

}  // namespace rackenum
