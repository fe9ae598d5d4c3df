#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rackenum/perm_group.hpp"
#include "rackenum/rack_table.hpp"

namespace rackenum {

// The well-definedness condition fails: some stabilizer element of an
// orbit representative does not commute with that orbit's pi.
class BlueprintError : public std::runtime_error {
public:
  BlueprintError(int rep, const std::string& witness_cycles,
                 const std::string& pi_cycles)
      : std::runtime_error("condition (A) fails at rep " + std::to_string(rep) +
                           ": stabilizer element " + witness_cycles +
                           " does not commute with pi " + pi_cycles),
        rep_(rep) {}

  int rep() const { return rep_; }

private:
  int rep_;
};

// The data a rack is built from and decomposes into: a permutation
// group, its orbit representatives (minimal points), and one group
// element pi per orbit.  The translation at the representative is pi;
// translations elsewhere in the orbit are its transversal conjugates.
struct RackBlueprint {
  PermGroup group;
  OrbitData orbits;  // derived from group; reps are orbits.representatives
  std::vector<Permutation> pis;
};

struct BlueprintFlags {
  bool condition_b = false;  // normal closure of the pis is all of group
  bool quandle_ok = false;   // every pi fixes its representative
  bool kei_ok = false;       // quandle_ok and every pi squares to identity
};

// Validates and assembles a blueprint: one pi per orbit, each pi in the
// group, and condition (A) (the centralizer of pi_i contains the
// stabilizer of rep_i).  Throws BlueprintError on a condition (A)
// violation, std::invalid_argument otherwise.
RackBlueprint make_blueprint(PermGroup group, std::vector<Permutation> pis);

BlueprintFlags check_blueprint(const RackBlueprint& b);

// Theorem-of-operation: translation at rep_i g is g^-1 pi_i g, which
// condition (A) makes independent of the choice of g.  The result is
// always a rack; its operator group is a subgroup of b.group, equal
// exactly when condition_b holds.
RackTable build_rack(const RackBlueprint& b);

// Inverse direction: operator group, minimal orbit representatives,
// pi_i = translation at rep_i.  Self-checks that condition (A) and
// condition_b hold and that rebuilding reproduces t exactly; a failure
// throws std::logic_error and means a bug, not bad input.
RackBlueprint decompose(const RackTable& t);

std::string format_blueprint(const RackBlueprint& b);

// Text format mirrors format_blueprint:
//   degree 7
//   generators (3 4)(5 6), (1 2)
//   rep 1 pi (3 4)(5 6)
//   ...
// Rep lines must list the minimal orbit representatives of the
// generated group, in ascending order.  '#' comments allowed.
RackBlueprint parse_blueprint(const std::string& text);

// Abstract finite groups enter as multiplication tables only.
inline constexpr int kMultTableCap = 64;

struct MultTable {
  int m = 0;
  std::vector<int> cell;  // row-major, entry (i,j) = i*j, values 1..m

  MultTable(int m, std::vector<int> cells);
  int at(int i, int j) const { return cell[(i - 1) * m + (j - 1)]; }

  // First token m, then m rows of m entries.  Throws CapError beyond
  // the order cap, ParseError on malformed text.
  static MultTable parse(const std::string& text, int cap = kMultTableCap);

  // Checks identity, associativity and inverses; returns the identity
  // element.  Throws std::invalid_argument naming the failed axiom.
  int validate_group() const;
};

// Builds a quandle whose operator group is isomorphic to the given
// abstract group: a regular copy of the group plus, per seed s, the
// right-coset space of the centralizer of s.  Seeds default to all
// non-identity elements; explicit seeds must be non-identity, distinct,
// and have full normal closure.  The isomorphism claim is verified
// before returning (order plus a multiplication-respecting bijection);
// verification failure throws std::logic_error.
RackTable realize_operator_group(const MultTable& mt,
                                 std::optional<std::vector<int>> seeds = {});

// First element (in sort order) whose normal closure is the whole
// group, if any.  A transitive group with no such element is not the
// operator group of any rack on its points.
std::optional<Permutation> has_full_normal_closure_element(const PermGroup& g);

}  // namespace rackenum
