#include "rackenum/isomorphism.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rackenum {

namespace {

using PointKey = std::tuple<std::vector<int>, bool, int>;

struct Profile {
  Fingerprint fp;
  std::vector<PointKey> key;  // key[x-1], per point, unsorted
};

Profile make_profile(const RackTable& t) {
  const int n = t.order();
  PermGroup g = operator_group(t);
  OrbitData od = orbit_data(g);
  Profile pr;
  pr.fp.order = n;
  pr.fp.group_order = g.order();
  for (const auto& o : od.orbits)
    pr.fp.orbit_sizes.push_back(static_cast<int>(o.size()));
  std::sort(pr.fp.orbit_sizes.rbegin(), pr.fp.orbit_sizes.rend());
  pr.key.reserve(n);
  for (int x = 1; x <= n; ++x) {
    const int osz =
        static_cast<int>(od.orbits[od.orbit_index[x - 1]].size());
    pr.key.emplace_back(translation(t, x).cycle_type(), t.at(x, x) == x, osz);
  }
  pr.fp.point_keys = pr.key;
  std::sort(pr.fp.point_keys.begin(), pr.fp.point_keys.end());
  return pr;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out << ',';
    out << v[i];
  }
  return out.str();
}

}  // namespace

Fingerprint fingerprint(const RackTable& t) { return make_profile(t).fp; }

std::string describe_difference(const Fingerprint& a, const Fingerprint& b) {
  if (a.order != b.order)
    return "orders differ (" + std::to_string(a.order) + " vs " +
           std::to_string(b.order) + ")";
  if (a.group_order != b.group_order)
    return "operator-group orders differ (" + std::to_string(a.group_order) +
           " vs " + std::to_string(b.group_order) + ")";
  if (a.orbit_sizes != b.orbit_sizes)
    return "operator-group orbit sizes differ (" + join(a.orbit_sizes) +
           " vs " + join(b.orbit_sizes) + ")";
  if (a.point_keys != b.point_keys) {
    for (size_t i = 0; i < a.point_keys.size(); ++i) {
      if (a.point_keys[i] != b.point_keys[i])
        return "point invariants differ (translation cycle types " +
               join(std::get<0>(a.point_keys[i])) + " vs " +
               join(std::get<0>(b.point_keys[i])) + ")";
    }
  }
  return "";
}

RackTable relabel(const RackTable& t, const Permutation& sigma) {
  const int n = t.order();
  if (sigma.degree() != n)
    throw std::invalid_argument("relabel: degree mismatch");
  std::vector<int> cells(static_cast<size_t>(n) * n);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      cells[(sigma.apply(x) - 1) * n + (sigma.apply(y) - 1)] =
          sigma.apply(t.at(x, y));
  return RackTable(n, std::move(cells));
}

namespace {

struct IsoSearch {
  const RackTable& a;
  const RackTable& b;
  int n;
  std::vector<std::vector<int>> cand;  // cand[x-1]: possible images of x
  std::vector<int> theta;              // theta[x-1], 0 = unassigned
  std::vector<char> used;

  bool consistent(int x) {
    // Check every product equation whose three table references are all
    // assigned and involve the newly placed x.
    for (int u = 1; u <= n; ++u) {
      if (theta[u - 1] == 0) continue;
      for (auto [p, q] : {std::pair{x, u}, std::pair{u, x}}) {
        const int w = a.at(p, q);
        if (theta[w - 1] == 0) continue;
        if (b.at(theta[p - 1], theta[q - 1]) != theta[w - 1]) return false;
      }
    }
    // Products landing on x from fully assigned pairs.
    for (int u = 1; u <= n; ++u) {
      if (theta[u - 1] == 0) continue;
      for (int v = 1; v <= n; ++v) {
        if (theta[v - 1] == 0) continue;
        const int w = a.at(u, v);
        if (w == x && b.at(theta[u - 1], theta[v - 1]) != theta[x - 1])
          return false;
      }
    }
    return true;
  }

  bool search(int x) {
    if (x > n) return true;
    for (int v : cand[x - 1]) {
      if (used[v - 1]) continue;
      theta[x - 1] = v;
      used[v - 1] = 1;
      if (consistent(x) && search(x + 1)) return true;
      theta[x - 1] = 0;
      used[v - 1] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<Permutation> is_isomorphic(const RackTable& a,
                                         const RackTable& b) {
  if (a.order() != b.order()) return std::nullopt;
  Profile pa = make_profile(a);
  Profile pb = make_profile(b);
  if (pa.fp != pb.fp) return std::nullopt;

  const int n = a.order();
  IsoSearch s{a, b, n, {}, std::vector<int>(n, 0), std::vector<char>(n, 0)};
  s.cand.resize(n);
  for (int x = 1; x <= n; ++x)
    for (int v = 1; v <= n; ++v)
      if (pa.key[x - 1] == pb.key[v - 1]) s.cand[x - 1].push_back(v);
  if (!s.search(1)) return std::nullopt;

  Permutation theta = Permutation::from_images(s.theta);
  for (int x = 1; x <= n; ++x)
    for (int y = 1; y <= n; ++y)
      if (b.at(theta.apply(x), theta.apply(y)) != theta.apply(a.at(x, y)))
        throw std::logic_error("isomorphism witness failed verification");
  return theta;
}

namespace {

struct CanonSearch {
  const RackTable& t;
  int n;
  std::vector<int> best;       // row-major cells of best relabeling so far
  std::vector<int> pos_to_pt;  // pos_to_pt[m-1]: original point at position m
  std::vector<int> pt_to_pos;  // 0 = unassigned
  std::vector<int> order;      // branch order for candidate points

  // Compares the determined prefix of row 1 against the incumbent.
  // Returns +1 if the current branch is already lexicographically
  // worse (prune), -1 if strictly better (nothing below can prune),
  // 0 if still tied or undecided.
  int prefix_cmp(int m) {
    for (int y = 1; y <= m; ++y) {
      const int w = t.at(pos_to_pt[0], pos_to_pt[y - 1]);
      const int bv = best[y - 1];
      const int v = pt_to_pos[w - 1];
      if (v == 0) {
        // Unassigned points get labels > m, so the cell is at least m+1.
        if (bv <= m) return +1;
        return 0;
      }
      if (v != bv) return v < bv ? -1 : +1;
    }
    return 0;
  }

  void leaf() {
    // Full relabeling known: compare the whole table row-major.
    bool smaller = false;
    std::vector<int> cur(best.size());
    for (int x = 1; x <= n && !smaller; ++x) {
      for (int y = 1; y <= n; ++y) {
        const int v = pt_to_pos[t.at(pos_to_pt[x - 1], pos_to_pt[y - 1]) - 1];
        const size_t idx = static_cast<size_t>(x - 1) * n + (y - 1);
        cur[idx] = v;
        if (v != best[idx]) {
          if (v > best[idx]) return;
          smaller = true;
          break;
        }
      }
    }
    if (!smaller) return;  // equal to incumbent
    // Finish filling and adopt.
    for (size_t idx = 0; idx < cur.size(); ++idx) {
      const int x = static_cast<int>(idx) / n + 1;
      const int y = static_cast<int>(idx) % n + 1;
      cur[idx] = pt_to_pos[t.at(pos_to_pt[x - 1], pos_to_pt[y - 1]) - 1];
    }
    best = std::move(cur);
  }

  void search(int m) {
    if (m > n) {
      leaf();
      return;
    }
    for (int p : order) {
      if (pt_to_pos[p - 1] != 0) continue;
      pos_to_pt[m - 1] = p;
      pt_to_pos[p - 1] = m;
      if (prefix_cmp(m) <= 0) search(m + 1);
      pt_to_pos[p - 1] = 0;
    }
  }
};

}  // namespace

RackTable canonical_form(const RackTable& t) {
  const int n = t.order();
  Profile pr = make_profile(t);
  CanonSearch s{t, n, t.cells(), std::vector<int>(n, 0),
                std::vector<int>(n, 0), std::vector<int>(n)};
  // Branching by point invariants first finds a strong incumbent early;
  // correctness does not depend on this order.
  for (int i = 0; i < n; ++i) s.order[i] = i + 1;
  std::sort(s.order.begin(), s.order.end(), [&](int p, int q) {
    if (pr.key[p - 1] != pr.key[q - 1]) return pr.key[p - 1] < pr.key[q - 1];
    return p < q;
  });
  s.search(1);
  return RackTable(n, std::move(s.best));
}

}  // namespace rackenum
