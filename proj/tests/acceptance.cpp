// Acceptance suite: desk-scale quantitative checks, one pass/fail line
// per criterion. Exit 0 iff every criterion passes within its stated
// runtime.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "subshift/bounded_actions.hpp"
#include "subshift/sft.hpp"
#include "subshift/threepath.hpp"

using namespace subshift;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, double seconds, double limit,
            const std::string& note = "") {
  bool timed_out = limit > 0 && seconds > limit;
  bool ok = pass && !timed_out;
  if (!ok) ++g_failures;
  std::printf("%s  criterion %2d  %-34s  %6.2fs%s%s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              seconds, timed_out ? "  (over time limit)" : "",
              note.empty() ? "" : ("  " + note).c_str());
  std::fflush(stdout);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

SftPresentation full_shift(const GroupSpec& g, int nsyms) {
  SftPresentation x;
  x.group = g;
  std::vector<int> syms(static_cast<std::size_t>(nsyms));
  for (int i = 0; i < nsyms; ++i) syms[static_cast<std::size_t>(i)] = i;
  x.alphabet = Alphabet(std::move(syms));
  return x;
}

SftPresentation golden_mean_z() {
  SftPresentation x = full_shift(GroupSpec::lattice(1), 2);
  x.forbidden.push_back(PatternCoding({"", "x1"}, {1, 1}));
  return x;
}

// --- criterion 1: golden-mean entropy ---------------------------------

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  double oracle = std::log((1.0 + std::sqrt(5.0)) / 2.0);  // dominant root of x^2 = x + 1
  SftPresentation g = golden_mean_z();
  double exact = z_decide(g).entropy();
  double bound = entropy_upper_bound(g, 12, 0);
  bool pass = std::abs(exact - oracle) < 1e-9 && bound >= oracle && bound - oracle < 0.05;
  char note[96];
  std::snprintf(note, sizeof note, "entropy %.10f, bound %.10f", exact, bound);
  report(1, "golden-mean entropy", pass, seconds_since(t0), 5.0, note);
}

// --- criterion 2: emptiness certificate --------------------------------

SftPresentation checkerboard_contradiction() {
  SftPresentation x = full_shift(GroupSpec::lattice(2), 2);
  for (int a = 0; a < 2; ++a) {
    x.forbidden.push_back(PatternCoding({"", "x1"}, {a, a}));
    x.forbidden.push_back(PatternCoding({"", "x2"}, {a, a}));
    x.forbidden.push_back(PatternCoding({"", "x1 x2"}, {a, a}));
    x.forbidden.push_back(PatternCoding({"", "x1 x2-"}, {a, a}));
  }
  return x;
}

void criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  SftPresentation cb = checkerboard_contradiction();
  Certificate cert = check_empty(cb, {3, 2, 1000000});
  bool certified = cert.verdict == Certificate::Verdict::Empty && cert.radius <= 2;

  // Oracle: exhaustive 3x3 window enumeration, 2^9 cases. A window
  // survives iff no equal horizontal/vertical pair and no equal diagonal
  // pair sits fully inside it.
  int survivors = 0;
  for (int mask = 0; mask < 512; ++mask) {
    auto at = [&](int x, int y) { return (mask >> (3 * y + x)) & 1; };
    bool ok = true;
    for (int y = 0; y < 3 && ok; ++y)
      for (int x = 0; x < 2 && ok; ++x)
        if (at(x, y) == at(x + 1, y)) ok = false;          // horizontal equal
    for (int y = 0; y < 2 && ok; ++y)
      for (int x = 0; x < 3 && ok; ++x)
        if (at(x, y) == at(x, y + 1)) ok = false;          // vertical equal
    for (int y = 0; y < 2 && ok; ++y)
      for (int x = 0; x < 2 && ok; ++x)
        if (at(x, y) == at(x + 1, y + 1)) ok = false;      // diagonal equal
    for (int y = 1; y < 3 && ok; ++y)
      for (int x = 0; x < 2 && ok; ++x)
        if (at(x, y) == at(x + 1, y - 1)) ok = false;      // antidiagonal equal
    if (ok) ++survivors;
  }
  bool pass = certified && survivors == 0;
  char note[64];
  std::snprintf(note, sizeof note, "EmptyAt(%d), oracle survivors %d", cert.radius, survivors);
  report(2, "checkerboard emptiness", pass, seconds_since(t0), 1.0, note);
}

// --- criterion 3: fixed points vs brute force --------------------------

void criterion_3() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(90210);
  std::uniform_int_distribution<int> nsyms_dist(1, 4);
  std::uniform_int_distribution<int> ncodings(0, 4);
  bool pass = true;
  for (int trial = 0; trial < 200 && pass; ++trial) {
    bool over_z2 = trial % 2 == 1;
    GroupSpec group = over_z2 ? GroupSpec::lattice(2) : GroupSpec::lattice(1);
    int nsyms = nsyms_dist(rng);
    SftPresentation x = full_shift(group, nsyms);
    std::uniform_int_distribution<int> sym(0, nsyms - 1);
    std::vector<std::vector<std::string>> shapes = {
        {""}, {"x1"}, {"", "x1"}, {"", "x1 x1"}};
    if (over_z2) {
      shapes.push_back({"", "x2"});
      shapes.push_back({"", "x1 x2"});
      shapes.push_back({"x1 x2", "x2 x1"});  // may be inconsistent
    }
    std::uniform_int_distribution<std::size_t> shape(0, shapes.size() - 1);
    int n = ncodings(rng);
    for (int i = 0; i < n; ++i) {
      const auto& sup = shapes[shape(rng)];
      std::vector<int> values;
      for (std::size_t k = 0; k < sup.size(); ++k) values.push_back(sym(rng));
      x.forbidden.push_back(PatternCoding(sup, values));
    }

    // Brute force over constant configurations: symbol a is a fixed
    // point iff no realized forbidden pattern appears in x_a.
    std::set<int> oracle;
    for (int a : x.alphabet.symbols) {
      bool blocked = false;
      for (const auto& c : x.forbidden) {
        if (!is_consistent(c, group)) continue;  // empty cylinder, never appears
        Pattern p = realize(c, group);
        bool appears = true;  // constant configurations are shift-invariant
        for (const auto& [g, v] : p.cells())
          if (v != a) appears = false;
        if (appears) {
          blocked = true;
          break;
        }
      }
      if (!blocked) oracle.insert(a);
    }
    auto got = fixed_point_symbols(x);
    pass = oracle == std::set<int>(got.begin(), got.end()) &&
           has_fixed_point(x) == !oracle.empty();
  }
  report(3, "fixed points vs brute force", pass, seconds_since(t0), 30.0);
}

// --- criterion 4: product/union language laws --------------------------

std::set<std::vector<int>> brute_force_rows(const SftPresentation& X,
                                            const std::vector<GroupElement>& cells) {
  std::set<std::vector<int>> out;
  std::vector<Pattern> realized;
  for (const auto& c : X.forbidden) {
    if (!is_consistent(c, X.group)) continue;
    realized.push_back(realize(c, X.group));
  }
  std::vector<std::size_t> idx(cells.size(), 0);
  while (true) {
    std::vector<int> row(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) row[i] = X.alphabet.symbols[idx[i]];
    auto value_of = [&](const GroupElement& g) -> const int* {
      for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i] == g) return &row[i];
      return nullptr;
    };
    bool ok = true;
    for (const auto& p : realized) {
      if (p.empty()) {
        ok = false;
        break;
      }
      for (const auto& anchor : cells) {
        GroupElement g = X.group.multiply(anchor, X.group.inverse(p.cells().front().first));
        bool inside = true, match = true;
        for (const auto& [h, v] : p.cells()) {
          const int* x = value_of(X.group.multiply(g, h));
          if (!x) {
            inside = false;
            break;
          }
          if (*x != v) match = false;
        }
        if (inside && match) {
          ok = false;
          break;
        }
      }
      if (!ok) break;
    }
    if (ok) out.insert(row);
    std::size_t j = 0;
    while (j < cells.size() && ++idx[j] == X.alphabet.symbols.size()) idx[j++] = 0;
    if (j == cells.size() || cells.empty()) break;
  }
  return out;
}

std::set<std::vector<int>> loc_rows(const SftPresentation& X, int n) {
  std::set<std::vector<int>> out;
  for (const auto& p : locally_admissible(X, n, 0).patterns) {
    std::vector<int> row;
    for (const auto& [g, v] : p.cells()) row.push_back(v);
    out.insert(row);
  }
  return out;
}

void criterion_4() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> nsyms_dist(2, 3);
  std::uniform_int_distribution<int> ncodings(0, 3);
  bool pass = true;
  GroupSpec z = GroupSpec::lattice(1);
  for (int trial = 0; trial < 50 && pass; ++trial) {
    // One binary factor keeps the full-shift-pair worst case desk-scale.
    SftPresentation x = full_shift(z, 2);
    SftPresentation y = full_shift(z, nsyms_dist(rng));
    for (SftPresentation* s : {&x, &y}) {
      std::uniform_int_distribution<int> sym(0, static_cast<int>(s->alphabet.size()) - 1);
      int n = ncodings(rng);
      for (int i = 0; i < n; ++i)
        s->forbidden.push_back(PatternCoding({"", "x1"}, {sym(rng), sym(rng)}));
    }
    for (int n = 0; n <= 3 && pass; ++n) {
      Ball b = z.ball(n);
      auto lx = brute_force_rows(x, b.elements);
      auto ly = brute_force_rows(y, b.elements);
      // Product law: Loc_n(product) is the alpha-pairing of factor rows.
      std::set<std::vector<int>> expected_prod;
      for (const auto& rx : lx) {
        for (const auto& ry : ly) {
          std::vector<int> row(rx.size());
          for (std::size_t i = 0; i < rx.size(); ++i) row[i] = pair_symbols(rx[i], ry[i]);
          expected_prod.insert(row);
        }
      }
      pass = loc_rows(product(x, y), n) == expected_prod;
      if (!pass) break;
      // Union law: tagged disjoint union of the factor rows.
      std::set<std::vector<int>> expected_union;
      for (const auto& rx : lx) {
        std::vector<int> row(rx.size());
        for (std::size_t i = 0; i < rx.size(); ++i) row[i] = 2 * rx[i];
        expected_union.insert(row);
      }
      for (const auto& ry : ly) {
        std::vector<int> row(ry.size());
        for (std::size_t i = 0; i < ry.size(); ++i) row[i] = 2 * ry[i] + 1;
        expected_union.insert(row);
      }
      pass = loc_rows(disjoint_union(x, y), n) == expected_union;
    }
  }
  report(4, "product/union language laws", pass, seconds_since(t0), 30.0);
}

// --- criterion 5: cube-Hamiltonicity on all small graphs ----------------

struct SmallGraphEnumerator {
  int n;
  std::vector<std::pair<int, int>> edge_list;
  std::vector<std::vector<int>> perms;

  explicit SmallGraphEnumerator(int n_) : n(n_) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) edge_list.emplace_back(i, j);
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
  }

  int edge_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    for (std::size_t e = 0; e < edge_list.size(); ++e)
      if (edge_list[e] == std::make_pair(i, j)) return static_cast<int>(e);
    return -1;
  }

  bool connected(unsigned mask) const {
    unsigned seen = 1u;
    std::deque<int> queue{0};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (std::size_t e = 0; e < edge_list.size(); ++e) {
        if (!(mask & (1u << e))) continue;
        auto [a, b] = edge_list[e];
        int w = -1;
        if (a == v) w = b;
        if (b == v) w = a;
        if (w >= 0 && !(seen & (1u << w))) {
          seen |= 1u << w;
          queue.push_back(w);
        }
      }
    }
    return seen == (1u << n) - 1;
  }

  // Lexicographically minimal among all vertex relabelings.
  bool canonical(unsigned mask) const {
    for (const auto& p : perms) {
      bool identity = true;
      for (int i = 0; i < n; ++i)
        if (p[static_cast<std::size_t>(i)] != i) identity = false;
      if (identity) continue;
      for (std::size_t e = 0; e < edge_list.size(); ++e) {
        auto [i, j] = edge_list[e];
        unsigned orig = (mask >> e) & 1u;
        unsigned perm = (mask >> edge_index(p[static_cast<std::size_t>(i)],
                                            p[static_cast<std::size_t>(j)])) &
                        1u;
        if (perm == orig) continue;
        if (perm > orig) break;       // permuted image is larger: next perm
        goto not_canonical;           // a smaller isomorph exists
      }
      continue;
    not_canonical:
      return false;
    }
    return true;
  }
};

// Independent five-clause validator with its own distance table.
bool validate_small(const std::vector<std::pair<int, int>>& edges, int n,
                    const std::vector<Vertex>& order) {
  std::vector<std::vector<int>> dist(static_cast<std::size_t>(n),
                                     std::vector<int>(static_cast<std::size_t>(n), 99));
  for (int i = 0; i < n; ++i) dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  for (auto [a, b] : edges) {
    dist[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    dist[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = 1;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::min(
            dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
            dist[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] +
                dist[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);

  std::set<Vertex> seen(order.begin(), order.end());
  if (seen.size() != order.size()) return false;                    // injective
  if (static_cast<int>(order.size()) != n) return false;            // Hamiltonian
  std::vector<int> jumps;
  for (std::size_t i = 0; i + 1 < order.size(); ++i)
    jumps.push_back(dist[static_cast<std::size_t>(order[i])]
                        [static_cast<std::size_t>(order[i + 1])]);
  for (int j : jumps)
    if (j > 3) return false;                                        // jumps <= 3
  if (!jumps.empty() && (jumps.front() > 2 || jumps.back() > 2)) return false;  // end jumps
  for (std::size_t i = 0; i + 1 < jumps.size(); ++i)
    if (jumps[i] == 3 && jumps[i + 1] == 3) return false;           // no 3-3
  return true;
}

void criterion_5() {
  auto t0 = std::chrono::steady_clock::now();
  // Connected graphs on 1..7 vertices up to isomorphism.
  const std::vector<std::int64_t> expected_counts = {1, 1, 2, 6, 21, 112, 853};
  bool pass = true;
  std::int64_t graphs_tested = 0, paths_tested = 0;
  for (int n = 2; n <= 7 && pass; ++n) {
    SmallGraphEnumerator en(n);
    std::int64_t classes = 0;
    unsigned total = 1u << en.edge_list.size();
    for (unsigned mask = 0; mask < total && pass; ++mask) {
      if (!en.connected(mask)) continue;
      if (!en.canonical(mask)) continue;
      ++classes;
      ++graphs_tested;
      std::vector<std::pair<int, int>> edges;
      std::vector<std::pair<Vertex, Vertex>> vedges;
      for (std::size_t e = 0; e < en.edge_list.size(); ++e) {
        if (mask & (1u << e)) {
          edges.push_back(en.edge_list[e]);
          vedges.emplace_back(en.edge_list[e].first, en.edge_list[e].second);
        }
      }
      std::vector<Vertex> verts;
      for (int v = 0; v < n; ++v) verts.push_back(v);
      FiniteGraph g(verts, vedges);
      for (int u = 0; u < n && pass; ++u) {
        for (int v = 0; v < n && pass; ++v) {
          if (u == v) continue;
          ThreePath f = finite_hamiltonian(g, u, v);
          ++paths_tested;
          pass = f.initial() == u && f.final() == v && validate_small(edges, n, f.verts);
        }
      }
    }
    if (classes != expected_counts[static_cast<std::size_t>(n - 1)]) pass = false;
  }
  char note[96];
  std::snprintf(note, sizeof note, "%lld graphs, %lld endpoint pairs",
                static_cast<long long>(graphs_tested), static_cast<long long>(paths_tested));
  report(5, "cube-Hamiltonicity <= 7 vertices", pass, seconds_since(t0), 120.0, note);
}

// --- criteria 6 and 7: streaming paths and action laws -----------------

struct StreamSetup {
  std::unique_ptr<CayleyGraph> graph;
  ThreePath seed;
  EndPromise promise;
};

StreamSetup make_setup(int dim) {
  StreamSetup s;
  s.graph = std::make_unique<CayleyGraph>(GroupSpec::lattice(dim));
  s.seed = bi_extensible_visiting(*s.graph, 0, {});
  s.promise = dim == 1
                  ? EndPromise::two_ends({s.seed.verts.begin(), s.seed.verts.end()})
                  : EndPromise::one_end();
  return s;
}

void criterion_6() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  std::string note;
  for (int dim : {2, 1}) {
    StreamSetup s = make_setup(dim);
    const CayleyGraph& g = *s.graph;
    std::int64_t b5 = g.numbering().ball_size(5);
    std::int64_t b3 = g.numbering().ball_size(3);
    PathGenerator gen(g, s.seed, s.promise, {});
    gen.run_until_targets(b5);
    // B_3 fully visited after the first |B_5| targets.
    for (Vertex v = 0; v < b3; ++v)
      if (!gen.current().visits(v)) pass = false;
    // Keep streaming until 500 vertices are on the path.
    while (gen.current().size() < 500) gen.step();
    const ThreePath& f = gen.current();
    std::set<Vertex> seen;
    for (std::size_t i = 0; i < 500; ++i)
      if (!seen.insert(f.verts[i]).second) pass = false;  // injectivity
    for (std::size_t i = 0; i + 1 < f.verts.size(); ++i)
      if (!bounded_distance(g, f.verts[i], f.verts[i + 1], 3)) pass = false;
    note += (dim == 2 ? "Z^2:" : "Z:") + std::to_string(f.size()) + "v ";
    if (!pass) break;
  }
  report(6, "streaming Hamiltonian 3-paths", pass, seconds_since(t0), 30.0, note);
}

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  bool pass = true;
  for (int dim : {2, 1}) {
    StreamSetup s = make_setup(dim);
    TranslationAction act(*s.graph, s.seed, s.promise, {});
    act.generator().run_until_targets(s.graph->numbering().ball_size(dim == 2 ? 3 : 6));
    std::vector<Vertex> window(act.generator().current().verts);
    std::mt19937 rng(dim == 2 ? 555 : 556);
    std::uniform_int_distribution<std::size_t> pick(0, window.size() - 1);
    std::uniform_int_distribution<std::int64_t> step(-10, 10);
    for (int trial = 0; trial < 100 && pass; ++trial) {
      Vertex v = window[pick(rng)];
      std::int64_t m = step(rng), n = step(rng);
      if (act.apply(v, 0) != v) pass = false;
      if (act.apply(act.apply(v, m), n) != act.apply(v, m + n)) pass = false;
      if (!bounded_distance(*s.graph, v, act.apply(v, 1), 3)) pass = false;
      if (m != 0 && act.apply(v, m) == v) pass = false;  // freeness
    }
    if (!pass) break;
  }
  report(7, "translation-like action laws", pass, seconds_since(t0), 60.0);
}

// --- criterion 8: orbit partition on the free group --------------------

void criterion_8() {
  auto t0 = std::chrono::steady_clock::now();
  CayleyGraph f2(GroupSpec::free_group(2));
  auto fragments = orbit_partition(f2, f2, 3, {});
  bool pass = true;
  std::set<Vertex> seen;
  for (const auto& frag : fragments) {
    if (!is_three_path(f2, frag)) pass = false;
    for (Vertex v : frag.verts)
      if (!seen.insert(v).second) pass = false;  // pairwise disjoint
  }
  std::int64_t b3 = f2.numbering().ball_size(3);
  for (Vertex v = 0; v < b3; ++v)
    if (!seen.count(v)) pass = false;  // jointly exhaustive on B_3
  char note[64];
  std::snprintf(note, sizeof note, "%zu fragments cover %lld vertices", fragments.size(),
                static_cast<long long>(b3));
  report(8, "orbit partition on F_2", pass, seconds_since(t0), 60.0, note);
}

// --- criterion 9: T[X] overlay -----------------------------------------

void criterion_9() {
  auto t0 = std::chrono::steady_clock::now();
  GroupSpec z2 = GroupSpec::lattice(2);
  HPresentation h;
  h.generators = {{"s", "s-"}, {"s-", "s"}};
  std::vector<GroupElement> f = {z2.evaluate("x1"), z2.evaluate("x1-"), z2.evaluate("x2"),
                                 z2.evaluate("x2-")};
  ArrowAlphabet arrows(h, f);
  SftPresentation T = build_T(z2, arrows);
  SftPresentation TX = build_TX(T, z2, arrows, golden_mean_z(), 3);
  int east = arrows.encode({0, 1});

  auto window = [&](const std::function<int(std::int64_t, std::int64_t)>& sym) {
    std::vector<Pattern::Cell> cells;
    for (const auto& g : z2.ball(3).elements) {
      const auto& v = g.as_lattice();
      cells.emplace_back(g, pair_symbols(sym(v[0], v[1]), east));
    }
    return Pattern(z2, std::move(cells));
  };
  Pattern good = window([](std::int64_t x, std::int64_t) { return x % 2 == 0 ? 1 : 0; });
  Pattern bad = window([](std::int64_t x, std::int64_t y) {
    return (y == 0 && (x == 0 || x == 1)) ? 1 : 0;
  });
  bool pass = validate_window(TX, good) && !validate_window(TX, bad);
  report(9, "T[X] east-arrow golden overlay", pass, seconds_since(t0), 30.0);
}

// --- criterion 10: Rice reduction fixed-point counts --------------------

void criterion_10() {
  auto t0 = std::chrono::steady_clock::now();
  GroupSpec z = GroupSpec::lattice(1);
  SftPresentation one_fp = full_shift(z, 1);
  SftPresentation two_fp = full_shift(z, 2);
  for (const auto& gen : {std::string("x1"), std::string("x1-")})
    for (int a = 0; a < 2; ++a)
      two_fp.forbidden.push_back(PatternCoding({"", gen}, {a, 1 - a}));
  SftPresentation empty_in = full_shift(z, 1);
  empty_in.forbidden.push_back(PatternCoding({""}, {0}));
  SftPresentation full_in = full_shift(z, 1);

  std::size_t on_empty = fixed_point_symbols(rice_reduction(one_fp, two_fp, empty_in)).size();
  std::size_t on_full = fixed_point_symbols(rice_reduction(one_fp, two_fp, full_in)).size();
  bool pass = on_empty == 1 && on_full >= 3;
  char note[64];
  std::snprintf(note, sizeof note, "empty input: %zu, full input: %zu", on_empty, on_full);
  report(10, "Rice reduction fixed points", pass, seconds_since(t0), 10.0, note);
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  if (g_failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criteria FAILED\n", g_failures);
  return 1;
}
