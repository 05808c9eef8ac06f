#include "subshift/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace subshift {

bool Graph::adjacent(Vertex u, Vertex v) const {
  for (Vertex w : neighbors(u))
    if (w == v) return true;
  return false;
}

FiniteGraph::FiniteGraph(std::vector<Vertex> vertices,
                         std::vector<std::pair<Vertex, Vertex>> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (const auto& [u, v] : edges_) {
    if (!has_vertex(u) || !has_vertex(v))
      throw UnknownVertexError("edge endpoint is not a declared vertex");
    adj_[u].push_back(v);
    if (u != v)
      adj_[v].push_back(u);
    else
      adj_[u].push_back(u);  // loop counts twice
  }
  for (auto& [v, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool FiniteGraph::has_vertex(Vertex v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Vertex> FiniteGraph::neighbors(Vertex v) const {
  if (!has_vertex(v)) throw UnknownVertexError("vertex not in graph");
  auto it = adj_.find(v);
  return it == adj_.end() ? std::vector<Vertex>{} : it->second;
}

bool FiniteGraph::connected() const {
  if (vertices_.empty()) return true;
  std::set<Vertex> seen{vertices_.front()};
  std::deque<Vertex> queue{vertices_.front()};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : neighbors(v))
      if (seen.insert(w).second) queue.push_back(w);
  }
  return seen.size() == vertices_.size();
}

bool CayleyGraph::has_vertex(Vertex v) const {
  if (v < 0) return false;
  if (auto n = vertex_count(); n && v >= *n) return false;
  return true;
}

std::vector<Vertex> CayleyGraph::neighbors(Vertex v) const {
  if (!has_vertex(v)) throw UnknownVertexError("vertex not in Cayley graph");
  GroupElement g = numbering_->element_at(v);
  std::vector<Vertex> out;
  out.reserve(spec_.generators().size());
  for (const auto& gen : spec_.generators())
    out.push_back(numbering_->index_of(spec_.multiply(g, gen.element)));
  return out;
}

std::optional<std::int64_t> CayleyGraph::vertex_count() const {
  if (!spec_.is_finite_group()) return std::nullopt;
  std::int64_t n = 1;
  // Finite product of finite groups: the ball eventually stabilizes.
  int r = 0;
  std::int64_t prev = -1;
  while (prev != (n = numbering_->ball_size(r))) {
    prev = n;
    ++r;
  }
  return n;
}

std::vector<Vertex> MaskedGraph::neighbors(Vertex v) const {
  if (removed_.count(v)) throw UnknownVertexError("vertex is masked out");
  std::vector<Vertex> out;
  for (Vertex w : base_.neighbors(v))
    if (!removed_.count(w)) out.push_back(w);
  return out;
}

std::optional<std::int64_t> MaskedGraph::vertex_count() const {
  auto n = base_.vertex_count();
  if (!n) return std::nullopt;
  std::int64_t masked = 0;
  for (Vertex v : removed_)
    if (base_.has_vertex(v)) ++masked;
  return *n - masked;
}

FiniteGraph ball_subgraph(const Graph& g, Vertex center, int r, std::size_t cap) {
  if (!g.has_vertex(center)) throw UnknownVertexError("ball center not in graph");
  std::map<Vertex, int> dist{{center, 0}};
  std::deque<Vertex> queue{center};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (dist[v] == r) continue;
    for (Vertex w : g.neighbors(v)) {
      if (dist.emplace(w, dist[v] + 1).second) {
        if (dist.size() > cap) throw ResourceLimitError("ball subgraph exceeds vertex cap");
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> vertices;
  for (const auto& [v, d] : dist) vertices.push_back(v);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& [v, d] : dist) {
    for (Vertex w : g.neighbors(v)) {
      if (w == v) {
        edges.emplace_back(v, v);  // keep loops; dedup below halves doubles
      } else if (dist.count(w) && v < w) {
        edges.emplace_back(v, w);
      }
    }
  }
  // A loop appears once per traversal of its vertex's neighbor list twice.
  std::sort(edges.begin(), edges.end());
  std::vector<std::pair<Vertex, Vertex>> dedup;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first == edges[i].second) {
      // neighbors() lists a loop twice; emit one edge per two entries
      if (i + 1 < edges.size() && edges[i + 1] == edges[i]) {
        dedup.push_back(edges[i]);
        ++i;
      }
    } else {
      dedup.push_back(edges[i]);
    }
  }
  return FiniteGraph(std::move(vertices), std::move(dedup));
}

ComponentResult finite_component(const Graph& g, Vertex seed, const std::set<Vertex>& removed,
                                 std::size_t budget) {
  if (removed.count(seed) || !g.has_vertex(seed))
    throw UnknownVertexError("seed must lie outside the removed set");
  ComponentResult res;
  std::set<Vertex> seen{seed};
  std::deque<Vertex> queue{seed};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (removed.count(w)) continue;
      if (seen.insert(w).second) {
        if (seen.size() > budget) return res;  // ExceedsBudget
        queue.push_back(w);
      }
    }
  }
  res.finite = true;
  res.component = std::move(seen);
  return res;
}

ConnectivityResult connectivity_after_removal(const Graph& g, const std::set<Vertex>& removed,
                                              const EndPromise& promise, std::size_t budget) {
  ConnectivityResult res;
  if (promise.kind == EndPromise::Kind::TwoEnds) {
    for (Vertex v : promise.split_witness) {
      if (!removed.count(v)) {
        res.kind = ConnectivityResult::Kind::Unknown;
        res.detail = "two-ended decision requires the removed set to contain the split witness";
        return res;
      }
    }
  }
  // Boundary vertices: outside `removed`, adjacent to it.
  std::set<Vertex> boundary;
  for (Vertex v : removed) {
    if (!g.has_vertex(v)) continue;
    for (Vertex w : g.neighbors(v))
      if (!removed.count(w)) boundary.insert(w);
  }
  if (boundary.empty()) {
    res.kind = ConnectivityResult::Kind::NoFiniteComponent;
    res.detail = "no boundary vertices";
    return res;
  }
  std::vector<Vertex> bverts(boundary.begin(), boundary.end());
  std::size_t nb = bverts.size();

  // Union-find over boundary vertices; a union records a discovered path.
  std::vector<std::size_t> parent(nb);
  for (std::size_t i = 0; i < nb; ++i) parent[i] = i;
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Frontiers are held at class roots; merging classes merges frontiers.
  std::vector<std::deque<Vertex>> frontier(nb);
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    std::size_t root = std::min(a, b), other = std::max(a, b);
    parent[other] = root;
    for (Vertex v : frontier[other]) frontier[root].push_back(v);
    frontier[other].clear();
  };
  auto class_count = [&] {
    std::size_t c = 0;
    for (std::size_t i = 0; i < nb; ++i)
      if (find(i) == i) ++c;
    return c;
  };
  auto done = [&]() -> bool {
    std::size_t classes = class_count();
    if (promise.kind == EndPromise::Kind::OneEnd) return classes == 1;
    return classes <= 2;
  };
  auto report_classes = [&] {
    std::map<std::size_t, std::set<Vertex>> by_root;
    for (std::size_t i = 0; i < nb; ++i) by_root[find(i)].insert(bverts[i]);
    res.classes.clear();
    for (auto& [root, cls] : by_root) res.classes.push_back(std::move(cls));
  };

  // `owner` maps explored vertices to the boundary task that reached them
  // first; collisions certify paths between boundary vertices.
  std::map<Vertex, std::size_t> owner;
  for (std::size_t i = 0; i < nb; ++i) {
    owner.emplace(bverts[i], i);
    frontier[i].push_back(bverts[i]);
  }
  std::size_t explored = nb;
  while (true) {
    if (done()) {
      res.kind = ConnectivityResult::Kind::NoFiniteComponent;
      report_classes();
      return res;
    }
    // Round-robin: each root class advances one BFS layer.
    for (std::size_t i = 0; i < nb; ++i) {
      if (find(i) != i || frontier[i].empty()) continue;
      std::deque<Vertex> layer = std::move(frontier[i]);
      frontier[i].clear();
      std::deque<Vertex> next;
      for (Vertex v : layer) {
        for (Vertex w : g.neighbors(v)) {
          if (removed.count(w)) continue;
          auto [it, inserted] = owner.emplace(w, i);
          if (inserted) {
            next.push_back(w);
            if (++explored > budget) {
              res.kind = ConnectivityResult::Kind::Unknown;
              res.detail = "exploration budget exhausted";
              return res;
            }
          } else {
            unite(i, it->second);
          }
        }
      }
      std::size_t root = find(i);
      for (Vertex v : next) frontier[root].push_back(v);
      if (frontier[root].empty()) {
        // The class's component is exhausted: it is finite.
        res.kind = ConnectivityResult::Kind::HasFiniteComponent;
        for (const auto& [v, o] : owner)
          if (find(o) == root) res.witness.insert(v);
        return res;
      }
    }
  }
}

int end_count_estimate(const Graph& g, Vertex center, int r, int R, std::size_t cap) {
  if (R <= r) throw Error("end estimate requires R > r");
  FiniteGraph ball = ball_subgraph(g, center, R, cap);
  std::map<Vertex, int> dist{{center, 0}};
  std::deque<Vertex> queue{center};
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : ball.neighbors(v))
      if (dist.emplace(w, dist[v] + 1).second) queue.push_back(w);
  }
  // Keep distances in [r, R]: the removed set is the open ball.
  std::set<Vertex> annulus;
  for (const auto& [v, d] : dist)
    if (d >= r) annulus.insert(v);
  // Components of the induced annulus that touch the radius-R sphere.
  std::set<Vertex> seen;
  int count = 0;
  for (Vertex v : annulus) {
    if (seen.count(v)) continue;
    std::deque<Vertex> q{v};
    seen.insert(v);
    bool touches = false;
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      if (dist[x] == R) touches = true;
      for (Vertex w : ball.neighbors(x))
        if (annulus.count(w) && seen.insert(w).second) q.push_back(w);
    }
    if (touches) ++count;
  }
  return count;
}

std::optional<int> bounded_distance(const Graph& g, Vertex u, Vertex v, int cap) {
  if (u == v) return 0;
  std::map<Vertex, int> dist{{u, 0}};
  std::deque<Vertex> queue{u};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] == cap) continue;
    for (Vertex w : g.neighbors(x)) {
      if (dist.emplace(w, dist[x] + 1).second) {
        if (w == v) return dist[w];
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

std::vector<Vertex> closed_ball_vertices(const Graph& g, Vertex v, int k) {
  std::map<Vertex, int> dist{{v, 0}};
  std::deque<Vertex> queue{v};
  while (!queue.empty()) {
    Vertex x = queue.front();
    queue.pop_front();
    if (dist[x] == k) continue;
    for (Vertex w : g.neighbors(x))
      if (dist.emplace(w, dist[x] + 1).second) queue.push_back(w);
  }
  std::vector<Vertex> out;
  for (const auto& [w, d] : dist) out.push_back(w);
  return out;
}

}  // namespace subshift
