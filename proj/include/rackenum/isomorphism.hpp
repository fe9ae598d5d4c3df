#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rackenum/rack_table.hpp"

namespace rackenum {

// Label-independent summary of a rack.  Equal fingerprints are
// necessary, not sufficient, for isomorphism; the point keys drive
// candidate pruning in the isomorphism search.
struct Fingerprint {
  int order = 0;
  std::uint64_t group_order = 0;
  std::vector<int> orbit_sizes;  // sorted descending
  // per point: (cycle type of its translation, x > x == x, size of the
  // operator-group orbit containing it); stored as a sorted multiset
  std::vector<std::tuple<std::vector<int>, bool, int>> point_keys;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const RackTable& t);

// First field where the two fingerprints disagree, as readable text;
// empty string when they are equal.
std::string describe_difference(const Fingerprint& a, const Fingerprint& b);

// The table with points renamed by sigma: sigma(x) > sigma(y) = sigma(x > y).
RackTable relabel(const RackTable& t, const Permutation& sigma);

// Searches for a bijection theta with theta(x) >_b theta(y) = theta(x >_a y).
// Any returned witness is verified on all pairs before being returned.
std::optional<Permutation> is_isomorphic(const RackTable& a, const RackTable& b);

// Lexicographically least table (row-major) over all n! relabelings.
// Idempotent, so equal canonical forms exactly characterize isomorphism.
RackTable canonical_form(const RackTable& t);

}  // namespace rackenum
