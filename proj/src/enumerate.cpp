#include "rackenum/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "rackenum/blueprint.hpp"
#include "rackenum/errors.hpp"
#include "rackenum/isomorphism.hpp"

namespace rackenum {

std::string to_string(Engine e) {
  switch (e) {
    case Engine::brute: return "brute";
    case Engine::structured: return "structured";
    case Engine::both: return "both";
  }
  throw std::logic_error("bad Engine value");
}

Engine parse_engine(const std::string& s) {
  if (s == "brute") return Engine::brute;
  if (s == "structured") return Engine::structured;
  if (s == "both") return Engine::both;
  throw ParseError("unknown engine '" + s +
                   "' (expected brute, structured or both)");
}

namespace {

RackClass require_kind(RackClass kind) {
  if (kind == RackClass::not_rack)
    throw std::invalid_argument("enumeration kind must be rack, quandle or kei");
  return kind;
}

// Shared by both engines: aggregate representative tables into rows
// keyed by (operator-group order, orbit-size multiset).
std::vector<GroupClassRow> breakdown_by_group(
    const std::vector<RackTable>& reps) {
  std::map<std::pair<std::uint64_t, std::vector<int>>, std::uint64_t> rows;
  for (const auto& t : reps) {
    PermGroup g = operator_group(t);
    std::vector<int> sizes;
    for (const auto& o : orbit_data(g).orbits)
      sizes.push_back(static_cast<int>(o.size()));
    std::sort(sizes.rbegin(), sizes.rend());
    ++rows[{g.order(), std::move(sizes)}];
  }
  std::vector<GroupClassRow> out;
  out.reserve(rows.size());
  for (auto& [key, classes] : rows)
    out.push_back({key.first, key.second, classes});
  return out;
}

std::vector<RackTable> sorted_reps(std::set<RackTable>&& reps) {
  return std::vector<RackTable>(std::make_move_iterator(reps.begin()),
                                std::make_move_iterator(reps.end()));
}

// Work items split round-robin across jobs; each worker returns its own
// result set and the merge is order-independent, so the outcome is
// identical at any parallelism degree.
template <typename Task, typename Out>
std::vector<Out> fan_out(const std::vector<Task>& tasks, int jobs,
                         std::function<Out(const Task&)> run) {
  std::vector<Out> outs(tasks.size());
  if (jobs <= 1 || tasks.size() <= 1) {
    for (size_t i = 0; i < tasks.size(); ++i) outs[i] = run(tasks[i]);
    return outs;
  }
  const int lanes = std::min<int>(jobs, static_cast<int>(tasks.size()));
  std::vector<std::future<void>> futs;
  futs.reserve(lanes);
  for (int lane = 0; lane < lanes; ++lane) {
    futs.push_back(std::async(std::launch::async, [&, lane] {
      for (size_t i = lane; i < tasks.size(); i += lanes)
        outs[i] = run(tasks[i]);
    }));
  }
  for (auto& f : futs) f.get();
  return outs;
}

struct BruteSearch {
  int n;
  RackClass kind;
  const std::vector<Permutation>& all;  // Sym(n), sorted
  std::vector<const Permutation*> cols;
  std::set<RackTable> reps;

  bool column_allowed(int y, const Permutation& p) const {
    if (kind == RackClass::rack) return true;
    if (p.apply(y) != y) return false;
    if (kind == RackClass::kei && !compose(p, p).is_identity()) return false;
    return true;
  }

  // After placing column c, check every self-distributivity triple all
  // of whose referenced columns now exist and at least one of which is
  // new.  Each (y, z) pair is checked exactly once over the whole
  // search, at depth max(y, z, y > z).
  bool consistent(int c) const {
    for (int z = 1; z <= c; ++z) {
      const Permutation& f_z = *cols[z - 1];
      for (int y = 1; y <= c; ++y) {
        const int w = f_z.apply(y);
        if (w > c) continue;
        if (y != c && z != c && w != c) continue;
        const Permutation& f_y = *cols[y - 1];
        const Permutation& f_w = *cols[w - 1];
        for (int x = 1; x <= n; ++x)
          if (f_z.apply(f_y.apply(x)) != f_w.apply(f_z.apply(x))) return false;
      }
    }
    return true;
  }

  void found() {
    std::vector<int> cells(static_cast<size_t>(n) * n);
    for (int x = 1; x <= n; ++x)
      for (int y = 1; y <= n; ++y)
        cells[(x - 1) * n + (y - 1)] = cols[y - 1]->apply(x);
    reps.insert(canonical_form(RackTable(n, std::move(cells))));
  }

  void search(int c) {
    if (c > n) {
      found();
      return;
    }
    for (const auto& p : all) {
      if (!column_allowed(c, p)) continue;
      cols[c - 1] = &p;
      if (consistent(c)) search(c + 1);
    }
  }
};

}  // namespace

EnumerationResult enumerate_brute(const EnumerationRequest& req) {
  require_kind(req.kind);
  const int cap = std::min(req.brute_cap, kBruteCapMax);
  if (req.n < 1) throw std::invalid_argument("order must be >= 1");
  if (req.n > cap)
    throw CapError("brute engine capped at order " + std::to_string(cap));

  const PermGroup sym = PermGroup::symmetric(req.n);
  const auto& all = sym.elements();

  // Fan out over the choice of the first column; dedup across workers
  // happens in the set union below.
  std::vector<const Permutation*> firsts;
  for (const auto& p : all) {
    BruteSearch probe{req.n, req.kind, all, {}, {}};
    if (probe.column_allowed(1, p)) firsts.push_back(&p);
  }
  auto run = [&](const Permutation* const& first) {
    BruteSearch s{req.n, req.kind, all,
                  std::vector<const Permutation*>(req.n, nullptr), {}};
    s.cols[0] = first;
    if (s.consistent(1)) s.search(2);
    return std::move(s.reps);
  };
  std::vector<std::set<RackTable>> parts =
      fan_out<const Permutation*, std::set<RackTable>>(firsts, req.jobs, run);

  std::set<RackTable> reps;
  for (auto& part : parts) reps.merge(part);

  EnumerationResult res;
  res.n = req.n;
  res.kind = req.kind;
  res.engine = Engine::brute;
  res.count = reps.size();
  res.representatives = sorted_reps(std::move(reps));
  res.breakdown = breakdown_by_group(res.representatives);
  return res;
}

ClassSizeFilter::ClassSizeFilter(const PermGroup& g, int orbit_len)
    : g_(&g), class_size_(g.order(), 0),
      limit_(static_cast<std::uint64_t>(orbit_len)) {
  for (const auto& cls : conjugacy_classes(g))
    for (const auto& p : cls) class_size_[g.index_of(p)] = cls.size();
}

bool ClassSizeFilter::operator()(const Permutation& pi) const {
  const int idx = g_->index_of(pi);
  if (idx < 0) throw std::invalid_argument("element not in the group");
  return class_size_[idx] <= limit_;
}

namespace {

struct StructuredClassOutcome {
  std::set<RackTable> reps;
  GroupClassRow row;
};

StructuredClassOutcome structured_for_group(const PermGroup& g,
                                            RackClass kind) {
  StructuredClassOutcome out;
  const OrbitData od = orbit_data(g);
  const size_t s = od.orbits.size();

  out.row.group_order = g.order();
  for (const auto& o : od.orbits)
    out.row.orbit_sizes.push_back(static_cast<int>(o.size()));
  std::sort(out.row.orbit_sizes.rbegin(), out.row.orbit_sizes.rend());

  // Candidate pis per orbit: conjugacy-class size at most the orbit
  // length (cheap necessary condition), then the exact centralizer
  // containment, then the kind constraints.
  std::vector<std::vector<Permutation>> cands(s);
  for (size_t i = 0; i < s; ++i) {
    const int rep = od.representatives[i];
    const int len = static_cast<int>(od.orbits[i].size());
    ClassSizeFilter quick(g, len);
    std::vector<Permutation> stab;
    for (const auto& h : g.elements())
      if (h.apply(rep) == rep) stab.push_back(h);
    for (const auto& pi : g.elements()) {
      if (!quick(pi)) continue;
      if (kind != RackClass::rack && pi.apply(rep) != rep) continue;
      if (kind == RackClass::kei && !compose(pi, pi).is_identity()) continue;
      bool ok = true;
      for (const auto& h : stab)
        if (!commute(h, pi)) {
          ok = false;
          break;
        }
      if (ok) cands[i].push_back(pi);
    }
  }

  // Lexicographic walk over the candidate product; the identity is
  // always a candidate, so no set is empty.
  std::vector<size_t> pick(s, 0);
  for (;;) {
    std::vector<Permutation> pis;
    pis.reserve(s);
    for (size_t i = 0; i < s; ++i) pis.push_back(cands[i][pick[i]]);
    if (normal_closure(g, pis) == g)
      out.reps.insert(canonical_form(build_rack(make_blueprint(g, pis))));
    size_t i = s;
    while (i > 0 && ++pick[i - 1] == cands[i - 1].size()) pick[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

}  // namespace

EnumerationResult enumerate_structured(const EnumerationRequest& req) {
  require_kind(req.kind);
  if (req.n < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<PermGroup> groups = subgroup_classes(req.n, req.degree_cap);

  auto run = [&](const PermGroup& g) {
    return structured_for_group(g, req.kind);
  };
  std::vector<StructuredClassOutcome> outcomes =
      fan_out<PermGroup, StructuredClassOutcome>(groups, req.jobs, run);

  std::set<RackTable> reps;
  std::vector<GroupClassRow> rows;
  std::uint64_t rowsum = 0;
  for (auto& oc : outcomes) {
    oc.row.classes = oc.reps.size();
    rowsum += oc.row.classes;
    const size_t before = reps.size();
    reps.merge(oc.reps);
    if (reps.size() != before + oc.row.classes)
      throw std::logic_error(
          "isomorphic racks appeared under two subgroup classes");
    if (oc.row.classes > 0) rows.push_back(std::move(oc.row));
  }

  EnumerationResult res;
  res.n = req.n;
  res.kind = req.kind;
  res.engine = Engine::structured;
  res.count = reps.size();
  if (res.count != rowsum)
    throw std::logic_error("per-class counts do not sum to the total");
  res.representatives = sorted_reps(std::move(reps));
  res.breakdown = std::move(rows);
  return res;
}

DualResult enumerate_both(const EnumerationRequest& req) {
  DualResult d;
  d.brute = enumerate_brute(req);
  d.structured = enumerate_structured(req);
  d.agree = d.brute.count == d.structured.count &&
            d.brute.representatives == d.structured.representatives;
  return d;
}

BoundsReport bounds_report(const std::vector<EnumerationResult>& results) {
  BoundsReport r;
  r.c1 = 0.25;
  r.c = std::log2(24.0) / 6.0 + std::log2(3.0) / 2.0;
  for (const auto& res : results) {
    BoundsReport::Row row;
    row.n = res.n;
    row.kind = res.kind;
    row.count = res.count;
    row.log2_count_over_n2 =
        res.count == 0
            ? 0
            : std::log2(static_cast<double>(res.count)) /
                  (static_cast<double>(res.n) * res.n);
    r.rows.push_back(row);
  }
  return r;
}

std::string format_bounds_report(const BoundsReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << "c1 " << r.c1 << "\n";
  out << "c " << r.c << "\n";
  out << "note: ratios below are finite-n observations, not asymptotic claims\n";
  for (const auto& row : r.rows)
    out << "n=" << row.n << " f_" << to_string(row.kind) << "=" << row.count
        << " log2(f)/n^2=" << row.log2_count_over_n2 << "\n";
  return out.str();
}

}  // namespace rackenum
