#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rackenum/errors.hpp"
#include "rackenum/perm_group.hpp"

using namespace rackenum;

namespace {

Permutation perm(std::vector<int> img) {
  return Permutation::from_images(std::move(img));
}

}  // namespace

TEST_CASE("generated closes the generators") {
  PermGroup s3 = PermGroup::generated(3, {perm({2, 1, 3}), perm({2, 3, 1})});
  CHECK(s3.order() == 6);
  CHECK(s3.degree() == 3);
  CHECK(std::is_sorted(s3.elements().begin(), s3.elements().end()));
  for (const auto& a : s3.elements())
    for (const auto& b : s3.elements()) CHECK(s3.contains(compose(a, b)));
}

TEST_CASE("trivial and symmetric groups") {
  CHECK(PermGroup::trivial(4).order() == 1);
  CHECK(PermGroup::symmetric(1).order() == 1);
  CHECK(PermGroup::symmetric(4).order() == 24);
  CHECK(PermGroup::symmetric(5).order() == 120);
  CHECK(PermGroup::symmetric(3).elements().front().is_identity());
}

TEST_CASE("order cap stops generation") {
  CHECK_THROWS_AS(PermGroup::symmetric(5, 100), CapError);
  std::vector<Permutation> gens{perm({2, 3, 4, 5, 1}), perm({2, 1, 3, 4, 5})};
  CHECK_THROWS_AS(PermGroup::generated(5, gens, 119), CapError);
  CHECK(PermGroup::generated(5, gens, 120).order() == 120);
}

TEST_CASE("membership and indexing") {
  PermGroup a3 = PermGroup::generated(3, {perm({2, 3, 1})});
  CHECK(a3.order() == 3);
  CHECK(a3.contains(perm({3, 1, 2})));
  CHECK(!a3.contains(perm({2, 1, 3})));
  CHECK(a3.index_of(Permutation(3)) == 0);
  CHECK(a3.index_of(perm({2, 1, 3})) == -1);
  for (std::uint64_t i = 0; i < a3.order(); ++i)
    CHECK(a3.index_of(a3.elements()[i]) == static_cast<int>(i));
}

TEST_CASE("subgroup relation and equality") {
  PermGroup s3 = PermGroup::symmetric(3);
  PermGroup a3 = PermGroup::generated(3, {perm({2, 3, 1})});
  CHECK(a3.is_subgroup_of(s3));
  CHECK(!s3.is_subgroup_of(a3));
  CHECK(s3 == PermGroup::generated(3, {perm({2, 1, 3}), perm({1, 3, 2})}));
}

TEST_CASE("orbit data lists orbits by minimal element") {
  PermGroup g = PermGroup::generated(4, {perm({2, 1, 3, 4})});  // <(1 2)>
  OrbitData od = orbit_data(g);
  REQUIRE(od.orbits.size() == 3);
  CHECK(od.orbits[0] == std::vector<int>{1, 2});
  CHECK(od.orbits[1] == std::vector<int>{3});
  CHECK(od.orbits[2] == std::vector<int>{4});
  CHECK(od.representatives == std::vector<int>{1, 3, 4});
  CHECK(od.orbit_index == std::vector<int>{0, 0, 1, 2});
}

TEST_CASE("transversal maps each representative to its point") {
  PermGroup g = PermGroup::generated(
      6, {perm({2, 3, 1, 4, 5, 6}), perm({1, 2, 3, 5, 4, 6})});
  OrbitData od = orbit_data(g);
  for (int x = 1; x <= 6; ++x) {
    const int rep = od.representatives[od.orbit_index[x - 1]];
    CHECK(g.contains(od.transversal[x - 1]));
    CHECK(od.transversal[x - 1].apply(rep) == x);
  }
}

TEST_CASE("stabilizer and centralizer") {
  PermGroup s4 = PermGroup::symmetric(4);
  PermGroup st = stabilizer(s4, 4);
  CHECK(st.order() == 6);
  for (const auto& h : st.elements()) CHECK(h.apply(4) == 4);

  // Orbit-stabilizer: |orbit| * |stabilizer| = |G|.
  OrbitData od = orbit_data(s4);
  CHECK(od.orbits[0].size() * st.order() == s4.order());

  PermGroup c = centralizer(s4, perm({2, 1, 3, 4}));
  CHECK(c.order() == 4);  // <(1 2)> x <(3 4)>
  for (const auto& h : c.elements()) CHECK(commute(h, perm({2, 1, 3, 4})));
}

TEST_CASE("conjugacy classes of the symmetric group") {
  PermGroup s3 = PermGroup::symmetric(3);
  auto classes = conjugacy_classes(s3);
  REQUIRE(classes.size() == 3);
  // Ordered by (size, minimal element): sizes 1, 2, 3.
  CHECK(classes[0].size() == 1);
  CHECK(classes[1].size() == 2);
  CHECK(classes[2].size() == 3);
  CHECK(classes[0][0].is_identity());

  // S_4 has 5 classes matching its cycle types.
  CHECK(conjugacy_classes(PermGroup::symmetric(4)).size() == 5);

  // All members of one class share a cycle type.
  for (const auto& cls : classes)
    for (const auto& p : cls) CHECK(p.cycle_type() == cls[0].cycle_type());
}

TEST_CASE("normal closure") {
  PermGroup s3 = PermGroup::symmetric(3);
  CHECK(normal_closure(s3, {perm({2, 1, 3})}) == s3);
  PermGroup a3 = PermGroup::generated(3, {perm({2, 3, 1})});
  CHECK(normal_closure(s3, {perm({2, 3, 1})}) == a3);
  CHECK(normal_closure(s3, {}).order() == 1);
  CHECK_THROWS_AS(normal_closure(a3, {perm({2, 1, 3})}), std::invalid_argument);
}

TEST_CASE("subgroup conjugacy test") {
  PermGroup sym = PermGroup::symmetric(4);
  PermGroup a = PermGroup::generated(4, {perm({2, 1, 3, 4})});  // <(1 2)>
  PermGroup b = PermGroup::generated(4, {perm({1, 2, 4, 3})});  // <(3 4)>
  PermGroup c = PermGroup::generated(4, {perm({2, 1, 4, 3})});  // <(1 2)(3 4)>
  CHECK(subgroups_conjugate(a, b, sym));
  CHECK(!subgroups_conjugate(a, c, sym));
  CHECK(subgroups_conjugate(a, a, sym));
}

TEST_CASE("subgroup classes of small symmetric groups") {
  const std::vector<std::uint64_t> expected{1, 2, 4, 11, 19, 56};
  for (int n = 1; n <= 6; ++n) {
    std::vector<PermGroup> classes = subgroup_classes(n);
    CHECK(classes.size() == expected[n - 1]);
    // No two representatives are conjugate, and each really is a group
    // on the right points.
    PermGroup sym = PermGroup::symmetric(n);
    for (size_t i = 0; i < classes.size(); ++i) {
      CHECK(classes[i].degree() == n);
      CHECK(classes[i].is_subgroup_of(sym));
      for (size_t j = i + 1; j < classes.size(); ++j)
        CHECK(!subgroups_conjugate(classes[i], classes[j], sym));
    }
  }
}

TEST_CASE("subgroup class orders partition correctly for degree 4") {
  std::vector<std::uint64_t> orders;
  for (const auto& g : subgroup_classes(4)) orders.push_back(g.order());
  CHECK(std::is_sorted(orders.begin(), orders.end()));
  CHECK(orders == std::vector<std::uint64_t>{1, 2, 2, 3, 4, 4, 4, 6, 8, 12, 24});
}

TEST_CASE("subgroup classes refuse large degrees") {
  CHECK_THROWS_AS(subgroup_classes(7), CapError);
  CHECK_THROWS_AS(subgroup_classes(5, 4), CapError);
}
