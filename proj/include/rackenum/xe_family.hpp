#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "rackenum/rack_table.hpp"

namespace rackenum {

// k x k matrix over {0,1} with zero diagonal; selects which of the k
// disjoint transpositions enter each column's pi.
struct EMatrix {
  int k = 0;
  std::vector<int> e;  // row-major

  EMatrix(int k, std::vector<int> entries);
  int at(int i, int j) const { return e[(i - 1) * k + (j - 1)]; }

  // First token k, then k rows of k entries, each 0 or 1.  '#' comments
  // allowed.
  static EMatrix parse(const std::string& text);
  std::string format() const;

  friend auto operator<=>(const EMatrix&, const EMatrix&) = default;
};

// Matrix whose off-diagonal entries, row-major, are the low bits of
// 'bits' (least significant bit first).
EMatrix ematrix_from_bits(int k, std::uint64_t bits);

// All 2^(k(k-1)) valid matrices, in bit order.  Guarded by a cap since
// the family is exponential.
std::vector<EMatrix> all_ematrices(int k);

// The kei on n points built from E: the group generated by the k = n/2
// disjoint transpositions (2i-1, 2i); representative 2i-1 carries
// pi_i = product of transposition j over rows j with e_ji = 1 (column i
// of E); an odd leftover point carries the identity.
RackTable build_xe(int n, const EMatrix& E);

// True exactly when the built tables are pairwise distinct as raw
// tables (no relabeling considered).
bool xe_distinctness(int n, const std::vector<EMatrix>& matrices);

// Exact counting for the family at order n: how many matrices there
// are, how many tables a single isomorphism class can absorb (n!), and
// the guaranteed number of isomorphism classes that follows.
struct LowerBoundReport {
  int n = 0;
  int k = 0;
  mpz_class matrix_count;        // 2^((k-1)k)
  mpz_class factorial;           // n!
  mpz_class guaranteed_classes;  // max(1, ceil(matrix_count / factorial))
  double log2_bound = 0;         // (k-1)k - log2(n!)
};

LowerBoundReport lower_bound_report(int n);

}  // namespace rackenum
