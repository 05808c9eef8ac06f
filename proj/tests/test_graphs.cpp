#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <deque>
#include <random>

#include "subshift/graph.hpp"

using namespace subshift;

TEST_CASE("cayley neighbors match the generating set") {
  CayleyGraph z2(GroupSpec::lattice(2));
  Vertex origin = z2.vertex(z2.spec().identity());
  CHECK(origin == 0);
  auto nbrs = z2.neighbors(origin);
  CHECK(nbrs.size() == 4);
  std::set<GroupElement, bool (*)(const GroupElement&, const GroupElement&)> dummy(
      +[](const GroupElement&, const GroupElement&) { return false; });
  std::set<Vertex> got(nbrs.begin(), nbrs.end());
  std::set<Vertex> expected;
  for (const auto& g : {GroupElement::lattice({1, 0}), GroupElement::lattice({-1, 0}),
                        GroupElement::lattice({0, 1}), GroupElement::lattice({0, -1})})
    expected.insert(z2.vertex(g));
  CHECK(got == expected);

  CayleyGraph z(GroupSpec::lattice(1));
  auto zn = z.neighbors(0);
  std::set<Vertex> zgot(zn.begin(), zn.end());
  CHECK(zgot == std::set<Vertex>{z.vertex(GroupElement::lattice({-1})),
                                 z.vertex(GroupElement::lattice({1}))});
}

TEST_CASE("finite graph neighbors and degrees") {
  // Path a-b-c with ids 0, 1, 2.
  FiniteGraph path({0, 1, 2}, {{0, 1}, {1, 2}});
  CHECK(path.neighbors(1) == std::vector<Vertex>{0, 2});
  CHECK(path.degree(0) == 1);
  CHECK(path.connected());
  FiniteGraph loop({0}, {{0, 0}});
  CHECK(loop.degree(0) == 2);  // loops count twice
  FiniteGraph split({0, 1}, {});
  CHECK_FALSE(split.connected());
}

TEST_CASE("cayley adjacency matches the word metric") {
  CayleyGraph z2(GroupSpec::lattice(2));
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coord(-3, 3);
  const GroupSpec& spec = z2.spec();
  for (int trial = 0; trial < 50; ++trial) {
    GroupElement g = GroupElement::lattice({coord(rng), coord(rng)});
    GroupElement h = GroupElement::lattice({coord(rng), coord(rng)});
    std::int64_t d = spec.word_length(spec.multiply(spec.inverse(g), h));
    CHECK(z2.adjacent(z2.vertex(g), z2.vertex(h)) == (d == 1));
  }
}

TEST_CASE("ball subgraphs") {
  CayleyGraph z2(GroupSpec::lattice(2));
  FiniteGraph b1 = ball_subgraph(z2, 0, 1);
  CHECK(b1.vertices().size() == 5);
  CHECK(b1.edges().size() == 4);
  FiniteGraph b0 = ball_subgraph(z2, 0, 0);
  CHECK(b0.vertices().size() == 1);
  CHECK(b0.edges().empty());
  CayleyGraph f2(GroupSpec::free_group(2));
  FiniteGraph fb2 = ball_subgraph(f2, 0, 2);
  CHECK(fb2.vertices().size() == 17);
  CHECK(fb2.edges().size() == 16);  // a tree
}

TEST_CASE("finite component detection") {
  CayleyGraph z(GroupSpec::lattice(1));
  Vertex m1 = z.vertex(GroupElement::lattice({-1}));
  Vertex p1 = z.vertex(GroupElement::lattice({1}));
  ComponentResult r = finite_component(z, 0, {m1, p1}, 100);
  CHECK(r.finite);
  CHECK(r.component == std::set<Vertex>{0});

  CayleyGraph z2(GroupSpec::lattice(2));
  std::set<Vertex> ring;
  for (Vertex v : z2.neighbors(0)) ring.insert(v);
  ComponentResult r2 = finite_component(z2, 0, ring, 100);
  CHECK(r2.finite);
  CHECK(r2.component == std::set<Vertex>{0});

  ComponentResult r3 = finite_component(z2, 0, {}, 100);
  CHECK_FALSE(r3.finite);  // exceeds budget: the graph is infinite

  // When finite, the component is closed under neighbors.
  for (Vertex v : r2.component)
    for (Vertex w : z2.neighbors(v))
      CHECK((ring.count(w) || r2.component.count(w)));
}

TEST_CASE("connectivity after removal under end promises") {
  CayleyGraph z2(GroupSpec::lattice(2));
  ConnectivityResult one = connectivity_after_removal(z2, {0}, EndPromise::one_end());
  CHECK(one.kind == ConnectivityResult::Kind::NoFiniteComponent);

  CayleyGraph z(GroupSpec::lattice(1));
  Vertex m1 = z.vertex(GroupElement::lattice({-1}));
  Vertex p1 = z.vertex(GroupElement::lattice({1}));
  ConnectivityResult two = connectivity_after_removal(z, {0}, EndPromise::two_ends({0}));
  CHECK(two.kind == ConnectivityResult::Kind::NoFiniteComponent);
  REQUIRE(two.classes.size() == 2);
  CHECK(two.classes[0] == std::set<Vertex>{m1});
  CHECK(two.classes[1] == std::set<Vertex>{p1});

  ConnectivityResult has =
      connectivity_after_removal(z, {m1, p1}, EndPromise::two_ends({m1, p1}));
  CHECK(has.kind == ConnectivityResult::Kind::HasFiniteComponent);
  CHECK(has.witness == std::set<Vertex>{0});

  // A promise whose witness is not inside the removed set degrades.
  ConnectivityResult degraded =
      connectivity_after_removal(z, {m1}, EndPromise::two_ends({0}));
  CHECK(degraded.kind == ConnectivityResult::Kind::Unknown);

  // An untruthful one-end promise on Z exhausts its budget, not a verdict.
  ConnectivityResult wrong = connectivity_after_removal(z, {0}, EndPromise::one_end(), 500);
  CHECK(wrong.kind == ConnectivityResult::Kind::Unknown);
}

TEST_CASE("one-end removals of short paths never leave finite components") {
  CayleyGraph z2(GroupSpec::lattice(2));
  // Straight 3-paths from the origin of growing length.
  for (int len = 1; len <= 6; ++len) {
    std::set<Vertex> removed;
    for (int i = 0; i < len; ++i)
      removed.insert(z2.vertex(GroupElement::lattice({i, 0})));
    ConnectivityResult r = connectivity_after_removal(z2, removed, EndPromise::one_end());
    CHECK(r.kind == ConnectivityResult::Kind::NoFiniteComponent);
    // Exhaustive cross-check in B_8: every non-removed vertex of B_6
    // reaches the sphere of radius 8 without entering the removed set.
    FiniteGraph b8 = ball_subgraph(z2, 0, 8);
    const GroupSpec& spec = z2.spec();
    for (Vertex v : b8.vertices()) {
      GroupElement g = z2.element(v);
      if (spec.word_length(g) > 6 || removed.count(v)) continue;
      std::set<Vertex> seen{v};
      std::deque<Vertex> queue{v};
      bool escaped = false;
      while (!queue.empty() && !escaped) {
        Vertex x = queue.front();
        queue.pop_front();
        if (spec.word_length(z2.element(x)) == 8) escaped = true;
        for (Vertex w : b8.neighbors(x))
          if (!removed.count(w) && seen.insert(w).second) queue.push_back(w);
      }
      CHECK(escaped);
    }
  }
}

TEST_CASE("end count estimates") {
  CayleyGraph z(GroupSpec::lattice(1));
  CHECK(end_count_estimate(z, 0, 1, 6) == 2);
  CayleyGraph z2(GroupSpec::lattice(2));
  CHECK(end_count_estimate(z2, 0, 2, 8) == 1);
  CayleyGraph f2(GroupSpec::free_group(2));
  CHECK(end_count_estimate(f2, 0, 1, 5) == 4);
}

TEST_CASE("removing any short self-avoiding walk from the origin leaves no finite component") {
  CayleyGraph z2(GroupSpec::lattice(2));
  const GroupSpec& spec = z2.spec();
  // Enumerate all unit-step self-avoiding walks from the origin with at
  // most 6 vertices; none of them can wall off a finite region.
  std::vector<std::vector<GroupElement>> walks;
  std::function<void(std::vector<GroupElement>&)> grow = [&](std::vector<GroupElement>& walk) {
    walks.push_back(walk);
    if (walk.size() == 6) return;
    for (const auto& gen : spec.generators()) {
      GroupElement next = spec.multiply(walk.back(), gen.element);
      bool fresh = true;
      for (const auto& g : walk)
        if (g == next) fresh = false;
      if (!fresh) continue;
      walk.push_back(next);
      grow(walk);
      walk.pop_back();
    }
  };
  std::vector<GroupElement> start{spec.identity()};
  grow(start);
  int checked = 0;
  for (const auto& walk : walks) {
    std::set<Vertex> removed;
    for (const auto& g : walk) removed.insert(z2.vertex(g));
    ConnectivityResult r = connectivity_after_removal(z2, removed, EndPromise::one_end());
    CHECK(r.kind == ConnectivityResult::Kind::NoFiniteComponent);
    ++checked;
  }
  CHECK(checked == 437);  // 1 + 4 + 12 + 36 + 100 + 284 walks of 0..5 steps

  // A genuine 3-path (jumps of length 2) can wall off a vertex, and the
  // decision detects it; the exhaustive search in B_8 agrees.
  std::set<Vertex> diamond;
  for (const char* w : {"", "x1 x2", "x1 x1", "x1 x2-"})
    diamond.insert(z2.vertex(spec.evaluate(w)));
  ConnectivityResult r = connectivity_after_removal(z2, diamond, EndPromise::one_end());
  CHECK(r.kind == ConnectivityResult::Kind::HasFiniteComponent);
  CHECK(r.witness == std::set<Vertex>{z2.vertex(spec.evaluate("x1"))});
}

TEST_CASE("cayley graph of a finite group") {
  GroupSpec z3 = GroupSpec::finite({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CayleyGraph g(z3);
  CHECK(g.vertex_count() == 3);
  CHECK(g.neighbors(0).size() == 2);  // the triangle
  CHECK_FALSE(g.has_vertex(3));
  FiniteGraph ball = ball_subgraph(g, 0, 2);
  CHECK(ball.vertices().size() == 3);
  CHECK(ball.edges().size() == 3);
}
