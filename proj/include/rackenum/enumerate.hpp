#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rackenum/rack_table.hpp"

namespace rackenum {

enum class Engine { brute, structured, both };

std::string to_string(Engine e);
Engine parse_engine(const std::string& s);

// Brute search is exponential in n; 4 is comfortable, 5 is tolerable
// and flagged experimental, beyond that is out of reach.
inline constexpr int kBruteCapDefault = 4;
inline constexpr int kBruteCapMax = 5;

struct EnumerationRequest {
  int n = 1;
  RackClass kind = RackClass::rack;
  Engine engine = Engine::both;
  bool emit_tables = false;
  int brute_cap = kBruteCapDefault;
  int degree_cap = kDefaultDegreeCap;
  int jobs = 1;
};

struct GroupClassRow {
  std::uint64_t group_order = 0;
  std::vector<int> orbit_sizes;  // sorted descending
  std::uint64_t classes = 0;
};

struct EnumerationResult {
  int n = 1;
  RackClass kind = RackClass::rack;
  Engine engine = Engine::brute;
  std::uint64_t count = 0;
  std::vector<RackTable> representatives;  // canonical forms, sorted
  std::vector<GroupClassRow> breakdown;
};

// Counts isomorphism classes by depth-first assignment of translation
// columns with incremental self-distributivity checking; every found
// table is canonicalized and deduplicated.  Complete by exhaustion.
EnumerationResult enumerate_brute(const EnumerationRequest& req);

// Counts the same classes by walking subgroup classes G of Sym(n) and,
// per G, the sequences (pi_1, ..., pi_s) over orbit representatives
// that satisfy the centralizer condition, keeping those whose normal
// closure is all of G.  Complete because every rack decomposes into
// such data over its operator group, and isomorphic racks have
// conjugate operator groups.
EnumerationResult enumerate_structured(const EnumerationRequest& req);

struct DualResult {
  EnumerationResult brute;
  EnumerationResult structured;
  bool agree = false;  // equal counts and equal representative sets
};

DualResult enumerate_both(const EnumerationRequest& req);

// Predicate pre-filtering candidate pi for an orbit of the given
// length: the centralizer condition forces pi's conjugacy class in G
// to have size at most the orbit length, which is cheap to test first.
class ClassSizeFilter {
public:
  ClassSizeFilter(const PermGroup& g, int orbit_len);
  bool operator()(const Permutation& pi) const;

private:
  const PermGroup* g_;
  std::vector<std::uint64_t> class_size_;  // by element index in g
  std::uint64_t limit_;
};

// Observed log2(count)/n^2 ratios next to the constants that frame
// them; finite-n data points only, no asymptotic claim.
struct BoundsReport {
  double c1 = 0.25;
  double c = 0;  // (1/6) log2 24 + (1/2) log2 3
  struct Row {
    int n = 0;
    RackClass kind = RackClass::rack;
    std::uint64_t count = 0;
    double log2_count_over_n2 = 0;
  };
  std::vector<Row> rows;
};

BoundsReport bounds_report(const std::vector<EnumerationResult>& results);

std::string format_bounds_report(const BoundsReport& r);

}  // namespace rackenum
