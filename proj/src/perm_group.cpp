#include "rackenum/perm_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

#include "rackenum/errors.hpp"

namespace rackenum {

namespace {

struct ImgHash {
  size_t operator()(const Permutation& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::vector<Permutation> dedup_gens(int degree, std::vector<Permutation> gens) {
  std::vector<Permutation> out;
  for (auto& g : gens) {
    if (g.degree() != degree)
      throw std::invalid_argument("generator degree mismatch");
    if (std::find(out.begin(), out.end(), g) == out.end())
      out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

PermGroup PermGroup::generated(int degree, std::vector<Permutation> gens,
                               std::uint64_t order_cap) {
  gens = dedup_gens(degree, std::move(gens));
  std::unordered_set<Permutation, ImgHash> closed;
  closed.insert(Permutation(degree));
  std::vector<Permutation> frontier(closed.begin(), closed.end());
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& w : frontier) {
      for (const auto& g : gens) {
        Permutation p = compose(w, g);
        if (closed.insert(p).second) {
          if (closed.size() > order_cap)
            throw CapError("group order exceeds cap " +
                           std::to_string(order_cap));
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<Permutation> elems(closed.begin(), closed.end());
  std::sort(elems.begin(), elems.end());
  return PermGroup(degree, std::move(gens), std::move(elems));
}

PermGroup PermGroup::trivial(int degree) { return generated(degree, {}); }

PermGroup PermGroup::symmetric(int degree, std::uint64_t order_cap) {
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  std::uint64_t fact = 1;
  for (int i = 2; i <= degree; ++i) {
    fact *= static_cast<std::uint64_t>(i);
    if (fact > order_cap)
      throw CapError("symmetric group order exceeds cap " +
                     std::to_string(order_cap));
  }
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> elems;
  elems.reserve(fact);
  do {
    elems.push_back(Permutation::from_images(img));
  } while (std::next_permutation(img.begin(), img.end()));
  // next_permutation walks image vectors in lexicographic order, so the
  // element list comes out sorted.
  std::vector<Permutation> gens;
  if (degree >= 2) {
    std::vector<int> t(degree);
    std::iota(t.begin(), t.end(), 1);
    std::swap(t[0], t[1]);
    gens.push_back(Permutation::from_images(t));
  }
  if (degree >= 3) {
    std::vector<int> c(degree);
    for (int i = 0; i < degree; ++i) c[i] = (i + 1) % degree + 1;
    gens.push_back(Permutation::from_images(c));
  }
  return PermGroup(degree, std::move(gens), std::move(elems));
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

int PermGroup::index_of(const Permutation& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  for (const auto& p : elements_)
    if (!other.contains(p)) return false;
  return true;
}

namespace {

// Wraps a filtered element list as a group.  The caller promises the
// list is a subgroup; closure is rechecked because every caller is a
// place where a silent mistake would corrupt results downstream.
PermGroup from_closed_elements(int degree, std::vector<Permutation> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (elems.empty() || !elems.front().is_identity())
    throw std::logic_error("element list lacks the identity");
  for (const auto& p : elems)
    for (const auto& q : elems)
      if (!std::binary_search(elems.begin(), elems.end(), compose(p, q)))
        throw std::logic_error("element list is not closed under composition");
  return PermGroup::generated(degree, elems, elems.size());
}

}  // namespace

OrbitData orbit_data(const PermGroup& g) {
  const int n = g.degree();
  OrbitData od;
  od.orbit_index.assign(n, -1);
  od.transversal.assign(n, Permutation(n));
  for (int x = 1; x <= n; ++x) {
    if (od.orbit_index[x - 1] != -1) continue;
    const int id = static_cast<int>(od.orbits.size());
    std::vector<int> orbit;
    // The identity is lexicographically least, hence elements()[0], so
    // the representative's transversal entry is the identity.
    for (const auto& p : g.elements()) {
      const int y = p.apply(x);
      if (od.orbit_index[y - 1] == -1) {
        od.orbit_index[y - 1] = id;
        od.transversal[y - 1] = p;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    od.orbits.push_back(std::move(orbit));
    od.representatives.push_back(x);
  }
  return od;
}

PermGroup stabilizer(const PermGroup& g, int point) {
  if (point < 1 || point > g.degree())
    throw std::invalid_argument("stabilizer: point out of range");
  std::vector<Permutation> keep;
  for (const auto& p : g.elements())
    if (p.apply(point) == point) keep.push_back(p);
  return from_closed_elements(g.degree(), std::move(keep));
}

PermGroup centralizer(const PermGroup& g, const Permutation& p) {
  if (p.degree() != g.degree())
    throw std::invalid_argument("centralizer: degree mismatch");
  std::vector<Permutation> keep;
  for (const auto& h : g.elements())
    if (commute(h, p)) keep.push_back(h);
  return from_closed_elements(g.degree(), std::move(keep));
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g) {
  const auto& elems = g.elements();
  std::vector<char> visited(elems.size(), 0);
  std::vector<std::vector<Permutation>> classes;
  std::uint64_t covered = 0;
  for (size_t i = 0; i < elems.size(); ++i) {
    if (visited[i]) continue;
    std::set<Permutation> cls;
    for (const auto& h : elems) cls.insert(conjugate(elems[i], h));
    for (const auto& c : cls) {
      const int idx = g.index_of(c);
      if (idx < 0) throw std::logic_error("conjugate escaped the group");
      visited[idx] = 1;
    }
    if (g.order() % cls.size() != 0)
      throw std::logic_error("class size does not divide group order");
    covered += cls.size();
    classes.emplace_back(cls.begin(), cls.end());
  }
  if (covered != g.order())
    throw std::logic_error("conjugacy classes do not partition the group");
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a.front() < b.front();
            });
  // Class-count ceiling for subgroups of Sym(n), n > 2: count^2 <= 3^(n-1).
  // Any violation means the group arithmetic above is broken.
  const int n = g.degree();
  if (n > 2 && n - 1 <= 80) {
    unsigned __int128 bound = 1;
    for (int i = 0; i < n - 1; ++i) bound *= 3;
    const unsigned __int128 k = classes.size();
    if (k * k > bound)
      throw std::logic_error("conjugacy class count exceeds 3^((n-1)/2)");
  }
  return classes;
}

PermGroup normal_closure(const PermGroup& g,
                         const std::vector<Permutation>& seeds) {
  for (const auto& s : seeds)
    if (!g.contains(s))
      throw std::invalid_argument("normal_closure: seed not in group");
  std::set<Permutation> conjs;
  for (const auto& s : seeds)
    for (const auto& h : g.elements()) conjs.insert(conjugate(s, h));
  PermGroup result = PermGroup::generated(
      g.degree(), std::vector<Permutation>(conjs.begin(), conjs.end()),
      g.order());
  if (!result.is_subgroup_of(g))
    throw std::logic_error("normal closure escaped the group");
  return result;
}

bool subgroups_conjugate(const PermGroup& a, const PermGroup& b,
                         const PermGroup& sym) {
  if (a.degree() != b.degree() || a.degree() != sym.degree())
    throw std::invalid_argument("subgroups_conjugate: degree mismatch");
  if (a.order() != b.order()) return false;
  for (const auto& s : sym.elements()) {
    bool maps_in = true;
    for (const auto& gen : a.generators()) {
      if (!b.contains(conjugate(gen, s))) {
        maps_in = false;
        break;
      }
    }
    // Generators land in b and orders agree, so conjugation by s is an
    // isomorphism of a onto b.
    if (maps_in) return true;
  }
  return false;
}

namespace {

using ClassKey = std::tuple<std::uint64_t, std::vector<std::vector<int>>,
                            std::vector<int>>;

ClassKey make_class_key(const PermGroup& g) {
  std::vector<std::vector<int>> types;
  types.reserve(g.order());
  for (const auto& p : g.elements()) types.push_back(p.cycle_type());
  std::sort(types.begin(), types.end());
  std::vector<int> orbit_sizes;
  for (const auto& o : orbit_data(g).orbits)
    orbit_sizes.push_back(static_cast<int>(o.size()));
  std::sort(orbit_sizes.begin(), orbit_sizes.end());
  return {g.order(), std::move(types), std::move(orbit_sizes)};
}

}  // namespace

std::vector<PermGroup> subgroup_classes(int degree, int degree_cap) {
  if (degree < 1) throw std::invalid_argument("degree must be >= 1");
  if (degree > degree_cap)
    throw CapError("subgroup classification capped at degree " +
                   std::to_string(degree_cap));
  const PermGroup sym = PermGroup::symmetric(degree);
  const auto& all = sym.elements();

  struct Entry {
    PermGroup grp;
    ClassKey key;
  };
  std::vector<Entry> reps;
  {
    PermGroup triv = PermGroup::trivial(degree);
    ClassKey key = make_class_key(triv);
    reps.push_back({std::move(triv), std::move(key)});
  }

  // Every subgroup arises from some representative by adjoining one
  // element, so growing each representative by all candidates and
  // deduplicating up to conjugacy reaches every class.  Candidates in
  // the same double coset H g H give the same extension, so each double
  // coset is tried once.
  for (size_t i = 0; i < reps.size(); ++i) {
    const PermGroup h = reps[i].grp;  // copy: reps may reallocate below
    std::vector<char> skip(all.size(), 0);
    for (size_t gi = 0; gi < all.size(); ++gi) {
      if (skip[gi] || h.contains(all[gi])) continue;
      for (const auto& l : h.elements()) {
        const Permutation lg = compose(l, all[gi]);
        for (const auto& r : h.elements())
          skip[sym.index_of(compose(lg, r))] = 1;
      }
      std::vector<Permutation> gens = h.generators();
      gens.push_back(all[gi]);
      PermGroup k = PermGroup::generated(degree, std::move(gens));
      ClassKey key = make_class_key(k);
      bool known = false;
      for (const auto& e : reps) {
        if (e.key == key && subgroups_conjugate(k, e.grp, sym)) {
          known = true;
          break;
        }
      }
      if (!known) reps.push_back({std::move(k), std::move(key)});
    }
  }

  std::vector<PermGroup> out;
  out.reserve(reps.size());
  for (auto& e : reps) out.push_back(std::move(e.grp));
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements() < b.elements();
  });
  return out;
}

}  // namespace rackenum
