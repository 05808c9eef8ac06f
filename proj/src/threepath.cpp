#include "subshift/threepath.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace subshift {

std::optional<std::int64_t> ThreePath::index_of(Vertex v) const {
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == v) return lo + static_cast<std::int64_t>(i);
  return std::nullopt;
}

bool ThreePath::extends(const ThreePath& prefix) const {
  if (prefix.lo < lo || prefix.hi() > hi()) return false;
  for (std::int64_t i = prefix.lo; i <= prefix.hi(); ++i)
    if (at(i) != prefix.at(i)) return false;
  return true;
}

namespace {

std::vector<Vertex> sorted_neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out = g.neighbors(v);
  std::sort(out.begin(), out.end());
  return out;
}

// BFS shortest path from `from` to `to`; vertices explored in id order.
std::optional<std::vector<Vertex>> bfs_path(const Graph& g, Vertex from, Vertex to,
                                            std::size_t budget) {
  if (from == to) return std::vector<Vertex>{from};
  std::map<Vertex, Vertex> parent{{from, from}};
  std::deque<Vertex> queue{from};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : sorted_neighbors(g, v)) {
      if (!parent.emplace(w, v).second) continue;
      if (parent.size() > budget)
        throw BudgetExceededError("path search budget exhausted");
      if (w == to) {
        std::vector<Vertex> path{to};
        Vertex x = to;
        while (x != from) {
          x = parent.at(x);
          path.push_back(x);
        }
        std::reverse(path.begin(), path.end());
        return path;
      }
      queue.push_back(w);
    }
  }
  return std::nullopt;  // component exhausted
}

// Induced subgraph on a vertex set (simple edges; loops dropped).
FiniteGraph induced_subgraph(const Graph& g, const std::set<Vertex>& verts) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v : verts)
    for (Vertex w : g.neighbors(v))
      if (w > v && verts.count(w)) edges.emplace_back(v, w);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return FiniteGraph(std::vector<Vertex>(verts.begin(), verts.end()), std::move(edges));
}

// base together with every finite component of g - base that closes
// within the absorption cap; larger components are treated as infinite.
std::set<Vertex> absorb_finite_components(const Graph& g, const std::set<Vertex>& base,
                                          const SearchBudget& budget) {
  std::set<Vertex> lambda = base;
  std::set<Vertex> infinite_mark;
  std::set<Vertex> boundary;
  for (Vertex v : base)
    for (Vertex w : sorted_neighbors(g, v))
      if (!base.count(w)) boundary.insert(w);
  for (Vertex b : boundary) {
    if (lambda.count(b) || infinite_mark.count(b)) continue;
    std::set<Vertex> seen{b};
    std::deque<Vertex> queue{b};
    bool infinite = false;
    while (!queue.empty() && !infinite) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : sorted_neighbors(g, v)) {
        if (base.count(w)) continue;
        if (infinite_mark.count(w)) {
          infinite = true;
          break;
        }
        if (seen.insert(w).second) {
          if (seen.size() > budget.absorb_cap) {
            infinite = true;
            break;
          }
          queue.push_back(w);
        }
      }
    }
    if (infinite)
      infinite_mark.insert(seen.begin(), seen.end());
    else
      lambda.insert(seen.begin(), seen.end());
  }
  return lambda;
}

// Internal recursion for finite Hamiltonian 3-paths, on index space.
class HamiltonianBuilder {
 public:
  explicit HamiltonianBuilder(const FiniteGraph& g) : ids_(g.vertices()) {
    index_.clear();
    for (std::size_t i = 0; i < ids_.size(); ++i) index_[ids_[i]] = static_cast<int>(i);
    adj_.assign(ids_.size(), {});
    for (std::size_t i = 0; i < ids_.size(); ++i) {
      for (Vertex w : g.neighbors(ids_[i])) {
        if (w == ids_[i]) continue;
        int j = index_.at(w);
        adj_[i].push_back(j);
      }
      std::sort(adj_[i].begin(), adj_[i].end());
      adj_[i].erase(std::unique(adj_[i].begin(), adj_[i].end()), adj_[i].end());
    }
  }

  std::vector<Vertex> build(Vertex u, Vertex v) {
    std::vector<char> mask(ids_.size(), 1);
    std::vector<int> order = ham(mask, index_.at(u), index_.at(v));
    std::vector<Vertex> out;
    out.reserve(order.size());
    for (int i : order) out.push_back(ids_[static_cast<std::size_t>(i)]);
    return out;
  }

 private:
  std::vector<int> component_of(const std::vector<char>& mask, int seed) const {
    std::vector<char> seen(ids_.size(), 0);
    seen[static_cast<std::size_t>(seed)] = 1;
    std::deque<int> queue{seed};
    std::vector<int> out{seed};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w : adj_[static_cast<std::size_t>(v)]) {
        if (!mask[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        out.push_back(w);
        queue.push_back(w);
      }
    }
    return out;
  }

  bool adjacent(int a, int b) const {
    return std::binary_search(adj_[static_cast<std::size_t>(a)].begin(),
                              adj_[static_cast<std::size_t>(a)].end(), b);
  }

  static std::size_t count(const std::vector<char>& mask) {
    std::size_t c = 0;
    for (char m : mask) c += static_cast<std::size_t>(m);
    return c;
  }

  // The split recursion: cut at v, solve the side containing u toward a
  // vertex near v, solve the rest from a neighbor of v, concatenate.
  std::vector<int> ham(std::vector<char>& mask, int u, int v) {
    std::size_t n = count(mask);
    if (n == 2) return {u, v};

    std::vector<char> mask_without_v = mask;
    mask_without_v[static_cast<std::size_t>(v)] = 0;
    std::vector<int> comp_u = component_of(mask_without_v, u);
    std::sort(comp_u.begin(), comp_u.end());

    std::vector<char> mask_u(ids_.size(), 0);
    for (int x : comp_u) mask_u[static_cast<std::size_t>(x)] = 1;
    std::vector<char> mask_v = mask;
    for (int x : comp_u) mask_v[static_cast<std::size_t>(x)] = 0;

    std::vector<int> fu;
    if (comp_u.size() == 1) {
      fu = {u};
    } else {
      int u2 = -1;
      for (int w : comp_u) {
        if (w != u && adjacent(w, v)) {
          u2 = w;
          break;
        }
      }
      if (u2 < 0) {
        for (int w : adj_[static_cast<std::size_t>(u)]) {
          if (mask_u[static_cast<std::size_t>(w)]) {
            u2 = w;
            break;
          }
        }
      }
      fu = ham(mask_u, u, u2);
    }

    std::vector<int> fv;
    if (count(mask_v) == 1) {
      fv = {v};
    } else {
      int v2 = -1;
      for (int w : adj_[static_cast<std::size_t>(v)]) {
        if (mask_v[static_cast<std::size_t>(w)]) {
          v2 = w;
          break;
        }
      }
      fv = ham(mask_v, v2, v);
    }

    fu.insert(fu.end(), fv.begin(), fv.end());
    return fu;
  }

  std::vector<Vertex> ids_;
  std::map<Vertex, int> index_;
  std::vector<std::vector<int>> adj_;
};

}  // namespace

ThreePath finite_hamiltonian(const FiniteGraph& g, Vertex u, Vertex v) {
  if (!g.has_vertex(u) || !g.has_vertex(v))
    throw UnknownVertexError("endpoint not in graph");
  if (u == v) throw EqualEndpointsError("endpoints must differ");
  if (!g.connected()) throw DisconnectedError("graph must be connected");
  HamiltonianBuilder builder(g);
  ThreePath f;
  f.lo = 0;
  f.verts = builder.build(u, v);
  return f;
}

PathReport validate_hamiltonian_three_path(const FiniteGraph& g, const ThreePath& f) {
  PathReport rep;
  std::set<Vertex> seen(f.verts.begin(), f.verts.end());
  rep.injective = seen.size() == f.verts.size();
  rep.hamiltonian = g.vertex_count() && seen.size() == static_cast<std::size_t>(*g.vertex_count());
  auto dist = [&g](Vertex a, Vertex b) {
    auto d = bounded_distance(g, a, b, 4);
    return d ? *d : 5;
  };
  rep.jumps_at_most_3 = true;
  rep.end_jumps_at_most_2 = true;
  rep.no_consecutive_3_jumps = true;
  std::vector<int> jumps;
  for (std::size_t i = 0; i + 1 < f.verts.size(); ++i)
    jumps.push_back(dist(f.verts[i], f.verts[i + 1]));
  for (int j : jumps)
    if (j > 3) rep.jumps_at_most_3 = false;
  if (!jumps.empty()) {
    if (jumps.front() > 2 || jumps.back() > 2) rep.end_jumps_at_most_2 = false;
    for (std::size_t i = 0; i + 1 < jumps.size(); ++i)
      if (jumps[i] == 3 && jumps[i + 1] == 3) rep.no_consecutive_3_jumps = false;
  }
  return rep;
}

bool is_three_path(const Graph& g, const ThreePath& f) {
  std::set<Vertex> seen(f.verts.begin(), f.verts.end());
  if (seen.size() != f.verts.size()) return false;
  for (std::size_t i = 0; i + 1 < f.verts.size(); ++i) {
    auto d = bounded_distance(g, f.verts[i], f.verts[i + 1], 3);
    if (!d) return false;
  }
  return true;
}

ThreePath right_extensible_from(const Graph& g, Vertex u, Vertex visit,
                                const SearchBudget& budget) {
  auto path = bfs_path(g, u, visit, budget.max_explored);
  if (!path) throw TargetUnreachableError("visit target unreachable");
  std::set<Vertex> base(path->begin(), path->end());
  std::set<Vertex> lambda = absorb_finite_components(g, base, budget);
  if (lambda.size() == 1) {
    ThreePath f;
    f.lo = 0;
    f.verts = {u};
    return f;
  }
  // Final vertex: minimal vertex of Lambda adjacent to the outside,
  // preferring one different from u; fall back to distance <= 3.
  Vertex w_final = -1;
  std::optional<Vertex> u_boundary;
  for (Vertex v : lambda) {
    bool touches = false;
    for (Vertex w : sorted_neighbors(g, v)) {
      if (!lambda.count(w)) {
        touches = true;
        break;
      }
    }
    if (!touches) continue;
    if (v == u) {
      u_boundary = v;
      continue;
    }
    w_final = v;
    break;
  }
  if (w_final < 0) {
    for (Vertex v : lambda) {
      if (v == u) continue;
      for (Vertex x : closed_ball_vertices(g, v, 3)) {
        if (!lambda.count(x)) {
          w_final = v;
          break;
        }
      }
      if (w_final >= 0) break;
    }
  }
  if (w_final < 0) throw BudgetExceededError("no extensible endpoint found");
  FiniteGraph sub = induced_subgraph(g, lambda);
  return finite_hamiltonian(sub, u, w_final);
}

ThreePath bi_extensible_visiting(const Graph& g, Vertex u, const SearchBudget& budget) {
  Vertex v = -1;
  for (Vertex w : sorted_neighbors(g, u)) {
    if (w != u) {
      v = w;
      break;
    }
  }
  if (v < 0) throw Error("vertex has no distinct neighbor");
  std::set<Vertex> base{u, v};
  std::set<Vertex> lambda = absorb_finite_components(g, base, budget);
  // Initial vertex: minimal vertex of Lambda adjacent to the outside;
  // final vertex: a neighbor of it inside Lambda.
  Vertex w_init = -1;
  for (Vertex x : lambda) {
    for (Vertex w : sorted_neighbors(g, x)) {
      if (!lambda.count(w)) {
        w_init = x;
        break;
      }
    }
    if (w_init >= 0) break;
  }
  if (w_init < 0) throw BudgetExceededError("no boundary vertex in absorbed set");
  Vertex z = -1;
  for (Vertex w : sorted_neighbors(g, w_init)) {
    if (w != w_init && lambda.count(w)) {
      z = w;
      break;
    }
  }
  if (z < 0) throw Error("boundary vertex has no neighbor inside the absorbed set");
  FiniteGraph sub = induced_subgraph(g, lambda);
  return finite_hamiltonian(sub, w_init, z);
}

BiExtensibleVerdict is_bi_extensible(const Graph& g, const ThreePath& f,
                                     const EndPromise& promise, const SearchBudget& budget) {
  BiExtensibleVerdict verdict;
  std::set<Vertex> fset = f.vertex_set();
  std::vector<Vertex> near_final, near_initial;
  for (Vertex x : closed_ball_vertices(g, f.final(), 3))
    if (!fset.count(x)) near_final.push_back(x);
  for (Vertex x : closed_ball_vertices(g, f.initial(), 3))
    if (!fset.count(x)) near_initial.push_back(x);
  bool have_pair = false;
  for (Vertex a : near_final) {
    for (Vertex b : near_initial) {
      if (a != b) {
        have_pair = true;
        break;
      }
    }
    if (have_pair) break;
  }
  if (!have_pair) {
    verdict.kind = BiExtensibleVerdict::Kind::No;
    verdict.reason = "no pair of distinct extension vertices near the endpoints";
    return verdict;
  }
  ConnectivityResult conn = connectivity_after_removal(g, fset, promise, budget.max_explored);
  switch (conn.kind) {
    case ConnectivityResult::Kind::NoFiniteComponent:
      verdict.kind = BiExtensibleVerdict::Kind::Yes;
      return verdict;
    case ConnectivityResult::Kind::HasFiniteComponent:
      verdict.kind = BiExtensibleVerdict::Kind::No;
      verdict.reason = "removal leaves a finite component";
      return verdict;
    case ConnectivityResult::Kind::Unknown:
      verdict.kind = BiExtensibleVerdict::Kind::Unknown;
      verdict.reason = conn.detail;
      return verdict;
  }
  return verdict;
}

namespace {

ThreePath concat_around(const std::vector<Vertex>& before, const ThreePath& f,
                        const std::vector<Vertex>& after) {
  ThreePath out;
  out.lo = f.lo - static_cast<std::int64_t>(before.size());
  out.verts.reserve(before.size() + f.verts.size() + after.size());
  for (Vertex v : before) out.verts.push_back(v);
  for (Vertex v : f.verts) out.verts.push_back(v);
  for (Vertex v : after) out.verts.push_back(v);
  return out;
}

// Class id of x's component in g - f, through the certified boundary
// classes. Returns -1 when x's component closes without meeting any
// boundary vertex (a finite pocket missed by the classes).
int component_class(const Graph& g, const std::set<Vertex>& fset,
                    const std::vector<std::set<Vertex>>& classes, Vertex x,
                    std::size_t budget) {
  auto locate = [&classes](Vertex v) -> int {
    for (std::size_t i = 0; i < classes.size(); ++i)
      if (classes[i].count(v)) return static_cast<int>(i);
    return -1;
  };
  if (int c = locate(x); c >= 0) return c;
  std::set<Vertex> seen{x};
  std::deque<Vertex> queue{x};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : sorted_neighbors(g, v)) {
      if (fset.count(w)) continue;
      if (!seen.insert(w).second) continue;
      if (int c = locate(w); c >= 0) return c;
      if (seen.size() > budget) throw BudgetExceededError("component classification budget");
      queue.push_back(w);
    }
  }
  return -1;
}

ThreePath extend_same_component(const Graph& g, const ThreePath& f, Vertex u, Vertex v,
                                Vertex w, const SearchBudget& budget) {
  std::set<Vertex> fset = f.vertex_set();
  MaskedGraph rest(g, fset);
  auto path_u = bfs_path(rest, u, w, budget.max_explored);
  if (!path_u) throw TargetUnreachableError("target not reachable from the final-side arm");
  auto path_v = bfs_path(rest, v, w, budget.max_explored);
  if (!path_v) throw TargetUnreachableError("target not reachable from the initial-side arm");
  std::set<Vertex> base(path_u->begin(), path_u->end());
  base.insert(path_v->begin(), path_v->end());
  std::set<Vertex> lambda0 = absorb_finite_components(rest, base, budget);

  FiniteGraph sub = induced_subgraph(rest, lambda0);
  ThreePath p = finite_hamiltonian(sub, u, v);

  // Split vertex: minimal vertex of Lambda_0 adjacent to the rest of the
  // component.
  Vertex u0 = -1;
  for (Vertex x : lambda0) {
    for (Vertex y : sorted_neighbors(rest, x)) {
      if (!lambda0.count(y)) {
        u0 = x;
        break;
      }
    }
    if (u0 >= 0) break;
  }
  if (u0 < 0) throw BudgetExceededError("no split vertex adjacent to the unabsorbed component");
  std::int64_t b = *p.index_of(u0);
  auto dist_in_sub = [&sub](Vertex a, Vertex c) {
    auto d = bounded_distance(sub, a, c, 3);
    return d ? *d : 4;
  };
  bool split_after =
      b + 1 <= p.hi() && dist_in_sub(p.at(b), p.at(b + 1)) <= 2;
  std::vector<Vertex> piece_start;  // starts at u
  std::vector<Vertex> piece_end;    // ends at v
  if (split_after) {
    for (std::int64_t i = p.lo; i <= b; ++i) piece_start.push_back(p.at(i));
    for (std::int64_t i = b + 1; i <= p.hi(); ++i) piece_end.push_back(p.at(i));
  } else {
    for (std::int64_t i = p.lo; i <= b - 1; ++i) piece_start.push_back(p.at(i));
    for (std::int64_t i = b; i <= p.hi(); ++i) piece_end.push_back(p.at(i));
  }
  // piece_end is prepended (it ends at v, within 3 of the initial vertex);
  // piece_start is appended (it starts at u, within 3 of the final vertex).
  return concat_around(piece_end, f, piece_start);
}

}  // namespace

namespace {

// A finite component created by removing `added` on top of `rest` must
// touch one of the added vertices; detect those by capped BFS from their
// surviving neighbors.
bool creates_no_pocket(const Graph& g, const std::set<Vertex>& removed_after,
                       const std::vector<Vertex>& added, const SearchBudget& budget) {
  std::set<Vertex> checked;
  for (Vertex a : added) {
    for (Vertex b : sorted_neighbors(g, a)) {
      if (removed_after.count(b) || checked.count(b)) continue;
      std::set<Vertex> seen{b};
      std::deque<Vertex> queue{b};
      bool infinite = false;
      while (!queue.empty() && !infinite) {
        Vertex v = queue.front();
        queue.pop_front();
        for (Vertex x : sorted_neighbors(g, v)) {
          if (removed_after.count(x)) continue;
          if (seen.insert(x).second) {
            if (seen.size() > budget.absorb_cap) {
              infinite = true;
              break;
            }
            queue.push_back(x);
          }
        }
      }
      if (!infinite) return false;  // the exploration closed: finite pocket
      checked.insert(seen.begin(), seen.end());
    }
  }
  return true;
}

// Distinct extension vertices within distance 3 of both endpoints.
bool has_extension_pair(const Graph& g, const ThreePath& f, const std::set<Vertex>& fset) {
  std::vector<Vertex> near_final, near_initial;
  for (Vertex x : closed_ball_vertices(g, f.final(), 3))
    if (!fset.count(x)) near_final.push_back(x);
  for (Vertex x : closed_ball_vertices(g, f.initial(), 3))
    if (!fset.count(x)) near_initial.push_back(x);
  for (Vertex a : near_final)
    for (Vertex b : near_initial)
      if (a != b) return true;
  return false;
}

}  // namespace

ThreePath extend(const Graph& g, const ThreePath& f, Vertex w, const EndPromise& promise,
                 const SearchBudget& budget) {
  std::set<Vertex> fset = f.vertex_set();
  std::vector<Vertex> near_final, near_initial;
  for (Vertex x : closed_ball_vertices(g, f.final(), 3))
    if (!fset.count(x)) near_final.push_back(x);
  for (Vertex x : closed_ball_vertices(g, f.initial(), 3))
    if (!fset.count(x)) near_initial.push_back(x);
  std::sort(near_final.begin(), near_final.end());
  std::sort(near_initial.begin(), near_initial.end());
  if (near_final.empty() || near_initial.empty())
    throw Error("path is not bi-extensible: no extension vertices");

  if (fset.count(w)) {
    // Minimal two-sided extension keeping bi-extensibility: the only
    // conditions a one-step pair can break are new finite pockets next to
    // the added vertices and the fresh-extension-vertex pair.
    for (Vertex a : near_initial) {
      for (Vertex b : near_final) {
        if (a == b) continue;
        ThreePath cand = concat_around({a}, f, {b});
        std::set<Vertex> cset = cand.vertex_set();
        if (!creates_no_pocket(g, cset, {a, b}, budget)) continue;
        if (!has_extension_pair(g, cand, cset)) continue;
        return cand;
      }
    }
    // No single-step pair works; grow toward a fresh vertex instead.
    return extend(g, f, near_final.front(), promise, budget);
  }

  if (promise.kind == EndPromise::Kind::OneEnd) {
    // One component: any distinct extension pair works.
    Vertex u = near_final.front();
    Vertex v = -1;
    for (Vertex x : near_initial) {
      if (x != u) {
        v = x;
        break;
      }
    }
    if (v < 0) {
      // near_initial == {u}; swap roles.
      v = near_initial.front();
      u = -1;
      for (Vertex x : near_final) {
        if (x != v) {
          u = x;
          break;
        }
      }
      if (u < 0) throw Error("path is not bi-extensible: single shared extension vertex");
    }
    return extend_same_component(g, f, u, v, w, budget);
  }

  // Two ends: classify boundary components first.
  ConnectivityResult conn =
      connectivity_after_removal(g, fset, promise, budget.max_explored);
  if (conn.kind == ConnectivityResult::Kind::HasFiniteComponent)
    throw Error("path is not bi-extensible: removal leaves a finite component");
  if (conn.kind == ConnectivityResult::Kind::Unknown)
    throw BudgetExceededError("connectivity decision budget exhausted: " + conn.detail);
  int class_w = component_class(g, fset, conn.classes, w, budget.max_explored);
  if (class_w < 0) throw TargetUnreachableError("target lies in an unclassified component");
  // Pick extension vertices whose components cover the target's.
  std::vector<std::pair<Vertex, int>> finals, initials;
  for (Vertex x : near_final)
    finals.emplace_back(x, component_class(g, fset, conn.classes, x, budget.max_explored));
  for (Vertex x : near_initial)
    initials.emplace_back(x, component_class(g, fset, conn.classes, x, budget.max_explored));
  for (const auto& [u, cu] : finals) {
    for (const auto& [v, cv] : initials) {
      if (u == v) continue;
      if (cu != class_w && cv != class_w) continue;
      if (cu == cv) return extend_same_component(g, f, u, v, w, budget);
      // Different components: one right-extensible arm per side; the arm
      // in the target's component visits it.
      MaskedGraph rest(g, fset);
      ThreePath arm_final = right_extensible_from(rest, u, cu == class_w ? w : u, budget);
      ThreePath arm_initial = right_extensible_from(rest, v, cv == class_w ? w : v, budget);
      std::vector<Vertex> before(arm_initial.verts.rbegin(), arm_initial.verts.rend());
      return concat_around(before, f, arm_final.verts);
    }
  }
  throw TargetUnreachableError("no extension pair covers the target's component");
}

PathGenerator::PathGenerator(const Graph& g, ThreePath seed, EndPromise promise,
                             SearchBudget budget)
    : g_(g), path_(std::move(seed)), promise_(std::move(promise)), budget_(budget) {}

const ThreePath& PathGenerator::step() {
  while (!g_.has_vertex(next_target_)) ++next_target_;
  Vertex target = next_target_;
  path_ = extend(g_, path_, target, promise_, budget_);
  ++next_target_;
  return path_;
}

const ThreePath& PathGenerator::run_until_targets(std::int64_t n) {
  while (next_target_ < n) step();
  return path_;
}

Vertex PathGenerator::require_visited(Vertex v) {
  while (!path_.visits(v)) step();
  return v;
}

void PathGenerator::require_index(std::int64_t index) {
  while (!path_.contains_index(index)) step();
}

ThreePath hamiltonian_stream(const Graph& g, const ThreePath& seed, const EndPromise& promise,
                             std::int64_t steps, const SearchBudget& budget) {
  PathGenerator gen(g, seed, promise, budget);
  gen.run_until_targets(steps);
  return gen.current();
}

namespace {

// Promise-free fragment extension for the orbit partition: the target is
// adopted only when its component meets one of the fragment's canonical
// extension vertices (the extension lemma's hypothesis); otherwise the
// caller starts a new fragment in the target's own component.
std::optional<ThreePath> try_extend_fragment(const Graph& view, const ThreePath& f, Vertex w,
                                             const SearchBudget& budget) {
  std::set<Vertex> fset = f.vertex_set();
  std::vector<Vertex> near_final, near_initial;
  for (Vertex x : closed_ball_vertices(view, f.final(), 3))
    if (!fset.count(x)) near_final.push_back(x);
  for (Vertex x : closed_ball_vertices(view, f.initial(), 3))
    if (!fset.count(x)) near_initial.push_back(x);
  std::sort(near_final.begin(), near_final.end());
  std::sort(near_initial.begin(), near_initial.end());
  if (near_final.empty() || near_initial.empty()) return std::nullopt;
  Vertex u = near_final.front();
  Vertex v = -1;
  for (Vertex x : near_initial)
    if (x != u) {
      v = x;
      break;
    }
  if (v < 0) {
    v = near_initial.front();
    u = -1;
    for (Vertex x : near_final)
      if (x != v) {
        u = x;
        break;
      }
    if (u < 0) return std::nullopt;
  }

  // Classify w's component against {u, v} by a capped search.
  MaskedGraph rest(view, fset);
  bool found_u = (w == u), found_v = (w == v);
  {
    std::set<Vertex> seen{w};
    std::deque<Vertex> queue{w};
    while (!queue.empty() && !(found_u && found_v)) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : sorted_neighbors(rest, x)) {
        if (!seen.insert(y).second) continue;
        if (y == u) found_u = true;
        if (y == v) found_v = true;
        if (seen.size() > budget.absorb_cap) {
          queue.clear();
          break;
        }
        queue.push_back(y);
      }
    }
  }
  if (!found_u && !found_v) return std::nullopt;
  if (found_u && found_v) return extend_same_component(view, f, u, v, w, budget);

  Vertex arm_w_start = found_u ? u : v;
  Vertex arm_o_start = found_u ? v : u;
  ThreePath arm_w = right_extensible_from(rest, arm_w_start, w, budget);
  ThreePath arm_o = right_extensible_from(rest, arm_o_start, arm_o_start, budget);
  std::set<Vertex> wset = arm_w.vertex_set();
  bool collide = false;
  for (Vertex x : arm_o.verts)
    if (wset.count(x)) collide = true;
  if (collide)  // the arms met: one component after all
    return extend_same_component(view, f, u, v, w, budget);
  const ThreePath& arm_final = found_u ? arm_w : arm_o;
  const ThreePath& arm_initial = found_u ? arm_o : arm_w;
  std::vector<Vertex> before(arm_initial.verts.rbegin(), arm_initial.verts.rend());
  ThreePath out = concat_around(before, f, arm_final.verts);
  std::vector<Vertex> added;
  for (Vertex x : arm_w.verts) added.push_back(x);
  for (Vertex x : arm_o.verts) added.push_back(x);
  if (!creates_no_pocket(view, out.vertex_set(), added, budget))
    return extend_same_component(view, f, u, v, w, budget);
  return out;
}

}  // namespace

std::vector<ThreePath> orbit_partition(const Graph& g, const CayleyGraph& cayley, int r,
                                       const SearchBudget& budget) {
  std::int64_t ball = cayley.numbering().ball_size(r);
  std::set<Vertex> removed;
  std::vector<ThreePath> fragments;
  for (Vertex target = 0; target < ball; ++target) {
    if (removed.count(target)) continue;
    bool adopted = false;
    for (std::size_t i = 0; i < fragments.size() && !adopted; ++i) {
      std::set<Vertex> others = removed;
      for (Vertex x : fragments[i].verts) others.erase(x);
      MaskedGraph view(g, std::move(others));
      auto grown = try_extend_fragment(view, fragments[i], target, budget);
      if (grown) {
        for (Vertex x : grown->verts) removed.insert(x);
        fragments[i] = std::move(*grown);
        adopted = true;
      }
    }
    if (adopted) continue;
    MaskedGraph rest(g, removed);
    ThreePath f = bi_extensible_visiting(rest, target, budget);
    for (Vertex x : f.verts) removed.insert(x);
    fragments.push_back(std::move(f));
  }
  return fragments;
}

Vertex TranslationAction::apply(Vertex v, std::int64_t n) {
  gen_.require_visited(v);
  std::int64_t k = *gen_.current().index_of(v);
  gen_.require_index(k + n);
  return gen_.current().at(k + n);
}

}  // namespace subshift
