#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "subshift/pattern.hpp"

using namespace subshift;

TEST_CASE("consistency detects element-level collisions") {
  GroupSpec z2 = GroupSpec::lattice(2);
  CHECK_FALSE(is_consistent(PatternCoding({"x1 x2", "x2 x1"}, {1, 2}), z2));
  GroupSpec f2 = GroupSpec::free_group(2);
  CHECK(is_consistent(PatternCoding({"a b", "b a"}, {1, 2}), f2));
  CHECK(is_consistent(PatternCoding({"x1 x2"}, {1}), z2));
}

TEST_CASE("consistency is invariant under support permutation") {
  GroupSpec z2 = GroupSpec::lattice(2);
  PatternCoding c({"x1", "x2", "x1 x1-"}, {0, 1, 0});
  PatternCoding permuted({"x2", "x1 x1-", "x1"}, {1, 0, 0});
  CHECK(is_consistent(c, z2) == is_consistent(permuted, z2));
  PatternCoding bad({"x1 x2", "x2 x1", "x1"}, {1, 2, 0});
  PatternCoding bad_permuted({"x1", "x2 x1", "x1 x2"}, {0, 2, 1});
  CHECK(is_consistent(bad, z2) == is_consistent(bad_permuted, z2));
}

TEST_CASE("realize collapses consistent collisions") {
  GroupSpec z2 = GroupSpec::lattice(2);
  Pattern p = realize(PatternCoding({"x1 x1-"}, {3}), z2);
  CHECK(p.size() == 1);
  CHECK(p.value_at(z2.identity()) == 3);

  Pattern q = realize(PatternCoding({"x1", "x2"}, {1, 2}), z2);
  CHECK(q.value_at(GroupElement::lattice({1, 0})) == 1);
  CHECK(q.value_at(GroupElement::lattice({0, 1})) == 2);

  Pattern r = realize(PatternCoding({"x1 x2", "x2 x1"}, {1, 1}), z2);
  CHECK(r.size() == 1);
  CHECK(r.value_at(GroupElement::lattice({1, 1})) == 1);

  CHECK_THROWS_AS(realize(PatternCoding({"x1 x2", "x2 x1"}, {1, 2}), z2),
                  InconsistentCodingError);
}

TEST_CASE("translate shifts supports and is an action") {
  GroupSpec z2 = GroupSpec::lattice(2);
  Pattern p = realize(PatternCoding({""}, {7}), z2);
  Pattern moved = translate(p, GroupElement::lattice({1, 0}), z2);
  CHECK(moved.value_at(GroupElement::lattice({1, 0})) == 7);
  CHECK(translate(p, z2.identity(), z2) == p);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    GroupElement g = GroupElement::lattice({coord(rng), coord(rng)});
    GroupElement h = GroupElement::lattice({coord(rng), coord(rng)});
    Pattern base = realize(PatternCoding({"", "x1", "x2 x2"}, {1, 2, 3}), z2);
    Pattern lhs = translate(base, z2.multiply(g, h), z2);
    Pattern rhs = translate(translate(base, h, z2), g, z2);
    CHECK(lhs == rhs);
    CHECK(translate(translate(base, g, z2), z2.inverse(g), z2) == base);
  }
}

TEST_CASE("round trip: realize of coding_of_pattern is the identity") {
  GroupSpec f2 = GroupSpec::free_group(2);
  Pattern p = realize(PatternCoding({"", "a", "a b", "b-"}, {0, 1, 2, 3}), f2);
  CHECK(realize(coding_of_pattern(p, f2), f2) == p);
}

TEST_CASE("fits_inside finds translates") {
  GroupSpec z2 = GroupSpec::lattice(2);
  Pattern q = realize(PatternCoding({"", "x1", "x2", "x1 x2"}, {0, 1, 0, 1}), z2);
  Pattern cell1 = realize(PatternCoding({""}, {1}), z2);
  Pattern cell5 = realize(PatternCoding({""}, {5}), z2);
  CHECK(fits_inside(cell1, q, z2));
  CHECK_FALSE(fits_inside(cell5, q, z2));
  CHECK(fits_inside(q, q, z2));
  CHECK(fits_inside(Pattern{}, q, z2));  // empty pattern fits everywhere
}

TEST_CASE("fits_inside agrees with exhaustive translate search") {
  GroupSpec z = GroupSpec::lattice(1);
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> sym(0, 1);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Pattern::Cell> pc, qc;
    for (int i = 0; i < 2; ++i) pc.emplace_back(GroupElement::lattice({i}), sym(rng));
    for (int i = -2; i <= 2; ++i) qc.emplace_back(GroupElement::lattice({i}), sym(rng));
    Pattern p(z, pc), q(z, qc);
    bool expected = false;
    for (int g = -5; g <= 5; ++g) {
      bool all = true;
      for (const auto& [h, v] : p.cells()) {
        auto x = q.value_at(GroupElement::lattice({g + h.as_lattice()[0]}));
        if (!x || *x != v) {
          all = false;
          break;
        }
      }
      if (all) expected = true;
    }
    CHECK(fits_inside(p, q, z) == expected);
  }
}
