#include "rackenum/blueprint.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "int_tokens.hpp"
#include "rackenum/errors.hpp"

namespace rackenum {

RackBlueprint make_blueprint(PermGroup group, std::vector<Permutation> pis) {
  OrbitData od = orbit_data(group);
  if (pis.size() != od.orbits.size())
    throw std::invalid_argument("expected one pi per orbit (" +
                                std::to_string(od.orbits.size()) + " orbits, " +
                                std::to_string(pis.size()) + " pis)");
  for (size_t i = 0; i < pis.size(); ++i)
    if (!group.contains(pis[i]))
      throw std::invalid_argument("pi " + std::to_string(i + 1) + " = " +
                                  format_cycles(pis[i]) +
                                  " is not in the group");
  for (size_t i = 0; i < pis.size(); ++i) {
    const int rep = od.representatives[i];
    for (const auto& h : group.elements()) {
      if (h.apply(rep) != rep) continue;
      if (!commute(h, pis[i]))
        throw BlueprintError(rep, format_cycles(h), format_cycles(pis[i]));
    }
  }
  return RackBlueprint{std::move(group), std::move(od), std::move(pis)};
}

BlueprintFlags check_blueprint(const RackBlueprint& b) {
  BlueprintFlags flags;
  flags.condition_b = normal_closure(b.group, b.pis) == b.group;
  flags.quandle_ok = true;
  for (size_t i = 0; i < b.pis.size(); ++i)
    if (b.pis[i].apply(b.orbits.representatives[i]) !=
        b.orbits.representatives[i]) {
      flags.quandle_ok = false;
      break;
    }
  flags.kei_ok = flags.quandle_ok;
  if (flags.kei_ok)
    for (const auto& pi : b.pis)
      if (!compose(pi, pi).is_identity()) {
        flags.kei_ok = false;
        break;
      }
  return flags;
}

RackTable build_rack(const RackBlueprint& b) {
  const int n = b.group.degree();
  std::vector<int> cells(static_cast<size_t>(n) * n);
  for (int x = 1; x <= n; ++x) {
    const int i = b.orbits.orbit_index[x - 1];
    const Permutation f_x = conjugate(b.pis[i], b.orbits.transversal[x - 1]);
    for (int z = 1; z <= n; ++z)
      cells[(z - 1) * n + (x - 1)] = f_x.apply(z);
  }
  return RackTable(n, std::move(cells));
}

RackBlueprint decompose(const RackTable& t) {
  PermGroup g = operator_group(t);
  OrbitData od = orbit_data(g);
  std::vector<Permutation> pis;
  pis.reserve(od.representatives.size());
  for (int rep : od.representatives) pis.push_back(translation(t, rep));
  RackBlueprint b = make_blueprint(std::move(g), std::move(pis));
  if (!check_blueprint(b).condition_b)
    throw std::logic_error(
        "decompose: translations do not normally generate the operator group");
  if (build_rack(b) != t)
    throw std::logic_error("decompose: rebuilt table differs from input");
  return b;
}

std::string format_blueprint(const RackBlueprint& b) {
  std::ostringstream out;
  out << "degree " << b.group.degree() << "\n";
  out << "generators " << format_cycle_list(b.group.generators()) << "\n";
  for (size_t i = 0; i < b.pis.size(); ++i)
    out << "rep " << b.orbits.representatives[i] << " pi "
        << format_cycles(b.pis[i]) << "\n";
  return out.str();
}

namespace {

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

RackBlueprint parse_blueprint(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, std::string>> lines;  // (line number, content)
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = strip_comment(line);
    if (!blank(s)) lines.emplace_back(lineno, s);
  }
  if (lines.size() < 2)
    throw ParseError("blueprint needs a degree line and a generators line");

  int degree = 0;
  {
    std::istringstream ls(lines[0].second);
    std::string kw;
    if (!(ls >> kw) || kw != "degree" || !(ls >> degree) || degree < 1 ||
        degree > 4096)
      throw ParseError("expected 'degree <n>'", lines[0].first);
    std::string rest;
    if (ls >> rest) throw ParseError("trailing text after degree", lines[0].first);
  }

  std::vector<Permutation> gens;
  {
    std::istringstream ls(lines[1].second);
    std::string kw;
    ls >> kw;
    if (kw != "generators")
      throw ParseError("expected 'generators <cycle list>'", lines[1].first);
    std::string rest;
    std::getline(ls, rest);
    if (!blank(rest)) {
      try {
        gens = parse_cycle_list(rest, degree);
      } catch (const ParseError& e) {
        throw ParseError(std::string("generators: ") + e.what(),
                         lines[1].first);
      }
    }
  }

  PermGroup group = PermGroup::generated(degree, std::move(gens));
  OrbitData od = orbit_data(group);

  std::vector<int> reps;
  std::vector<Permutation> pis;
  for (size_t li = 2; li < lines.size(); ++li) {
    std::istringstream ls(lines[li].second);
    std::string kw1, kw2;
    int rep = 0;
    if (!(ls >> kw1 >> rep >> kw2) || kw1 != "rep" || kw2 != "pi")
      throw ParseError("expected 'rep <point> pi <cycles>'", lines[li].first);
    std::string rest;
    std::getline(ls, rest);
    if (blank(rest)) throw ParseError("missing pi cycles", lines[li].first);
    try {
      pis.push_back(parse_cycles(rest, degree));
    } catch (const ParseError& e) {
      throw ParseError(std::string("pi: ") + e.what(), lines[li].first);
    }
    reps.push_back(rep);
  }

  if (reps != od.representatives) {
    std::ostringstream want;
    for (size_t i = 0; i < od.representatives.size(); ++i) {
      if (i) want << ", ";
      want << od.representatives[i];
    }
    throw ParseError(
        "rep lines must list the orbit representatives in order: expected " +
        want.str());
  }
  return make_blueprint(std::move(group), std::move(pis));
}

MultTable::MultTable(int m_, std::vector<int> cells) : m(m_) {
  if (m < 1) throw std::invalid_argument("group order must be >= 1");
  if (cells.size() != static_cast<size_t>(m) * m)
    throw std::invalid_argument("multiplication table needs m*m entries");
  for (int v : cells)
    if (v < 1 || v > m)
      throw std::invalid_argument("entry out of range: " + std::to_string(v));
  cell = std::move(cells);
}

MultTable MultTable::parse(const std::string& text, int cap) {
  IntTokens tok(text);
  long long m;
  if (!tok.next(m)) throw ParseError("missing group order", tok.line());
  if (m < 1) throw ParseError("group order must be >= 1", tok.line());
  if (m > cap)
    throw CapError("multiplication table order " + std::to_string(m) +
                   " exceeds cap " + std::to_string(cap));
  std::vector<int> cells;
  cells.reserve(static_cast<size_t>(m) * m);
  for (long long i = 0; i < m * m; ++i) {
    long long v;
    if (!tok.next(v)) throw ParseError("table ends early", tok.line());
    if (v < 1 || v > m)
      throw ParseError("entry " + std::to_string(v) + " out of range 1.." +
                           std::to_string(m),
                       tok.line());
    cells.push_back(static_cast<int>(v));
  }
  long long extra;
  if (tok.next(extra)) throw ParseError("trailing input", tok.line());
  return MultTable(static_cast<int>(m), std::move(cells));
}

int MultTable::validate_group() const {
  int e = 0;
  for (int i = 1; i <= m; ++i) {
    bool ok = true;
    for (int x = 1; x <= m; ++x)
      if (at(i, x) != x || at(x, i) != x) {
        ok = false;
        break;
      }
    if (ok) {
      e = i;
      break;
    }
  }
  if (e == 0)
    throw std::invalid_argument("multiplication table has no identity element");
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      for (int k = 1; k <= m; ++k)
        if (at(at(i, j), k) != at(i, at(j, k)))
          throw std::invalid_argument(
              "multiplication is not associative at (" + std::to_string(i) +
              ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
  for (int i = 1; i <= m; ++i) {
    bool ok = false;
    for (int j = 1; j <= m; ++j)
      if (at(i, j) == e && at(j, i) == e) {
        ok = true;
        break;
      }
    if (!ok)
      throw std::invalid_argument("element " + std::to_string(i) +
                                  " has no inverse");
  }
  return e;
}

RackTable realize_operator_group(const MultTable& mt,
                                 std::optional<std::vector<int>> seeds_opt) {
  const int m = mt.m;
  const int e = mt.validate_group();

  std::vector<int> inv(m + 1);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      if (mt.at(i, j) == e) inv[i] = j;

  std::vector<int> seeds;
  if (seeds_opt) {
    seeds = *seeds_opt;
    std::set<int> seen;
    for (int s : seeds) {
      if (s < 1 || s > m)
        throw std::invalid_argument("seed out of range: " + std::to_string(s));
      if (s == e)
        throw std::invalid_argument("seed " + std::to_string(s) +
                                    " is the identity element");
      if (!seen.insert(s).second)
        throw std::invalid_argument("seed repeated: " + std::to_string(s));
    }
  } else {
    for (int s = 1; s <= m; ++s)
      if (s != e) seeds.push_back(s);
  }

  // The seeds must normally generate the whole group, otherwise the
  // operator group of the output would be a proper subgroup.
  {
    std::set<int> closure;
    std::vector<int> frontier;
    auto add = [&](int x) {
      if (closure.insert(x).second) frontier.push_back(x);
    };
    add(e);
    for (int s : seeds)
      for (int g = 1; g <= m; ++g) add(mt.at(mt.at(inv[g], s), g));
    while (!frontier.empty()) {
      int x = frontier.back();
      frontier.pop_back();
      for (int y : std::vector<int>(closure.begin(), closure.end())) {
        add(mt.at(x, y));
        add(mt.at(y, x));
      }
    }
    if (static_cast<int>(closure.size()) != m)
      throw std::invalid_argument(
          "seeds do not normally generate the group (closure has " +
          std::to_string(closure.size()) + " of " + std::to_string(m) +
          " elements)");
  }

  // Point layout: the regular copy of the group first (point g is
  // element g), then one block of centralizer cosets per seed, cosets
  // ordered by minimal element.
  struct Block {
    int seed;
    int base;                   // points base+1 .. base+cosets.size()
    std::vector<int> coset_of;  // 1-based element -> coset id
    std::vector<int> coset_rep; // coset id -> minimal element
  };
  std::vector<Block> blocks;
  int npoints = m;
  for (int s : seeds) {
    Block b;
    b.seed = s;
    b.base = npoints;
    b.coset_of.assign(m + 1, -1);
    for (int g = 1; g <= m; ++g) {
      if (b.coset_of[g] != -1) continue;
      const int id = static_cast<int>(b.coset_rep.size());
      b.coset_rep.push_back(g);
      // members of (centralizer of s) * g
      for (int c = 1; c <= m; ++c)
        if (mt.at(c, s) == mt.at(s, c)) b.coset_of[mt.at(c, g)] = id;
    }
    npoints += static_cast<int>(b.coset_rep.size());
    blocks.push_back(std::move(b));
  }

  auto action = [&](int g) {
    std::vector<int> img(npoints);
    for (int p = 1; p <= m; ++p) img[p - 1] = mt.at(p, g);
    for (const auto& b : blocks)
      for (size_t c = 0; c < b.coset_rep.size(); ++c)
        img[b.base + c] = b.base + 1 + b.coset_of[mt.at(b.coset_rep[c], g)];
    return Permutation::from_images(std::move(img));
  };

  std::vector<Permutation> elems;
  elems.reserve(m);
  for (int g = 1; g <= m; ++g) elems.push_back(action(g));
  std::sort(elems.begin(), elems.end());
  PermGroup star = PermGroup::generated(npoints, elems, m);
  if (star.order() != static_cast<std::uint64_t>(m))
    throw std::logic_error("action of the group is not faithful or not closed");

  // One pi per orbit: identity on the regular copy; on a seed block,
  // the action of s conjugated to the block's first coset representative.
  std::vector<Permutation> pis;
  pis.push_back(Permutation(npoints));
  for (const auto& b : blocks) {
    const int h = b.coset_rep[0];
    pis.push_back(action(mt.at(mt.at(inv[h], b.seed), h)));
  }

  RackTable out = build_rack(make_blueprint(star, std::move(pis)));

  // Verify the operator group really is the input group: equal order,
  // and the map "where the identity's point goes" respects multiplication.
  {
    std::set<Permutation> tset;
    for (int y = 1; y <= out.order(); ++y) tset.insert(translation(out, y));
    PermGroup op = PermGroup::generated(
        npoints, std::vector<Permutation>(tset.begin(), tset.end()),
        static_cast<std::uint64_t>(m));
    if (op.order() != static_cast<std::uint64_t>(m))
      throw std::logic_error("operator group order differs from the input");
    std::vector<char> hit(m + 1, 0);
    for (const auto& p : op.elements()) {
      const int label = p.apply(e);
      if (label < 1 || label > m || hit[label])
        throw std::logic_error("operator group does not act regularly");
      hit[label] = 1;
    }
    for (const auto& p : op.elements())
      for (const auto& q : op.elements())
        if (compose(p, q).apply(e) != mt.at(p.apply(e), q.apply(e)))
          throw std::logic_error(
              "operator group multiplication differs from the input");
  }
  return out;
}

std::optional<Permutation> has_full_normal_closure_element(const PermGroup& g) {
  for (const auto& p : g.elements())
    if (normal_closure(g, {p}).order() == g.order()) return p;
  return std::nullopt;
}

}  // namespace rackenum
