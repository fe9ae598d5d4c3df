#include "rackenum/xe_family.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "int_tokens.hpp"
#include "rackenum/blueprint.hpp"
#include "rackenum/errors.hpp"

namespace rackenum {

EMatrix::EMatrix(int k_, std::vector<int> entries) : k(k_) {
  if (k < 1) throw std::invalid_argument("matrix size must be >= 1");
  if (entries.size() != static_cast<size_t>(k) * k)
    throw std::invalid_argument("matrix needs k*k entries");
  for (int v : entries)
    if (v != 0 && v != 1)
      throw std::invalid_argument("matrix entries must be 0 or 1");
  for (int i = 0; i < k; ++i)
    if (entries[static_cast<size_t>(i) * k + i] != 0)
      throw std::invalid_argument("diagonal entry (" + std::to_string(i + 1) +
                                  ", " + std::to_string(i + 1) +
                                  ") must be 0");
  e = std::move(entries);
}

EMatrix EMatrix::parse(const std::string& text) {
  IntTokens tok(text);
  long long k;
  if (!tok.next(k)) throw ParseError("missing matrix size", tok.line());
  if (k < 1 || k > 16)
    throw ParseError("matrix size out of range: " + std::to_string(k),
                     tok.line());
  std::vector<int> entries;
  entries.reserve(static_cast<size_t>(k) * k);
  for (long long i = 0; i < k * k; ++i) {
    long long v;
    if (!tok.next(v)) throw ParseError("matrix ends early", tok.line());
    if (v != 0 && v != 1)
      throw ParseError("matrix entries must be 0 or 1, got " +
                           std::to_string(v),
                       tok.line());
    entries.push_back(static_cast<int>(v));
  }
  long long extra;
  if (tok.next(extra)) throw ParseError("trailing input", tok.line());
  try {
    return EMatrix(static_cast<int>(k), std::move(entries));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string EMatrix::format() const {
  std::ostringstream out;
  out << k << "\n";
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (j > 1) out << ' ';
      out << at(i, j);
    }
    out << "\n";
  }
  return out.str();
}

EMatrix ematrix_from_bits(int k, std::uint64_t bits) {
  std::vector<int> entries(static_cast<size_t>(k) * k, 0);
  int pos = 0;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      entries[static_cast<size_t>(i) * k + j] =
          static_cast<int>((bits >> pos) & 1u);
      ++pos;
    }
  if (pos < 64 && (bits >> pos) != 0)
    throw std::invalid_argument("bits beyond the k(k-1) free entries");
  return EMatrix(k, std::move(entries));
}

std::vector<EMatrix> all_ematrices(int k) {
  if (k < 1) throw std::invalid_argument("matrix size must be >= 1");
  const int free_entries = k * (k - 1);
  if (free_entries > 24)
    throw CapError("exhaustive matrix family of 2^" +
                   std::to_string(free_entries) + " is beyond the cap");
  std::vector<EMatrix> out;
  out.reserve(1ull << free_entries);
  for (std::uint64_t bits = 0; bits < (1ull << free_entries); ++bits)
    out.push_back(ematrix_from_bits(k, bits));
  return out;
}

RackTable build_xe(int n, const EMatrix& E) {
  if (n < 2) throw std::invalid_argument("order must be >= 2");
  const int k = n / 2;
  if (E.k != k)
    throw std::invalid_argument("matrix size " + std::to_string(E.k) +
                                " does not match floor(n/2) = " +
                                std::to_string(k));
  std::vector<Permutation> taus;
  taus.reserve(k);
  for (int i = 1; i <= k; ++i) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = x + 1;
    std::swap(img[2 * i - 2], img[2 * i - 1]);
    taus.push_back(Permutation::from_images(std::move(img)));
  }
  PermGroup g = PermGroup::generated(n, taus);
  std::vector<Permutation> pis;
  for (int i = 1; i <= k; ++i) {
    Permutation pi(n);
    for (int j = 1; j <= k; ++j)
      if (E.at(j, i) == 1) pi = compose(pi, taus[j - 1]);
    pis.push_back(std::move(pi));
  }
  if (n % 2 == 1) pis.push_back(Permutation(n));
  return build_rack(make_blueprint(std::move(g), std::move(pis)));
}

bool xe_distinctness(int n, const std::vector<EMatrix>& matrices) {
  std::set<std::vector<int>> tables;
  for (const auto& m : matrices)
    if (!tables.insert(build_xe(n, m).cells()).second) return false;
  return true;
}

LowerBoundReport lower_bound_report(int n) {
  if (n < 2) throw std::invalid_argument("order must be >= 2");
  LowerBoundReport r;
  r.n = n;
  r.k = n / 2;
  r.matrix_count = 1;
  r.matrix_count <<= static_cast<unsigned>((r.k - 1) * r.k);
  mpz_fac_ui(r.factorial.get_mpz_t(), static_cast<unsigned long>(n));
  mpz_cdiv_q(r.guaranteed_classes.get_mpz_t(), r.matrix_count.get_mpz_t(),
             r.factorial.get_mpz_t());
  if (r.guaranteed_classes < 1) r.guaranteed_classes = 1;
  double log2_fact = 0;
  for (int i = 2; i <= n; ++i) log2_fact += std::log2(static_cast<double>(i));
  r.log2_bound = static_cast<double>((r.k - 1) * r.k) - log2_fact;
  return r;
}

}  // namespace rackenum
