#ifndef SUBSHIFT_GRAPH_HPP
#define SUBSHIFT_GRAPH_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "subshift/group.hpp"

namespace subshift {

using Vertex = std::int64_t;

/// A highly computable graph: vertex ids carry a numbering, adjacency is
/// decidable, and the degree function is total, so neighborhoods are
/// computable.
class Graph {
 public:
  virtual ~Graph() = default;
  virtual bool has_vertex(Vertex v) const = 0;
  /// Exactly degree-many incident vertices (loops listed twice), in a
  /// deterministic order.
  virtual std::vector<Vertex> neighbors(Vertex v) const = 0;
  virtual int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  virtual bool adjacent(Vertex u, Vertex v) const;
  /// Total vertex count when finite.
  virtual std::optional<std::int64_t> vertex_count() const { return std::nullopt; }
};

/// An explicit finite graph; edges form a multiset and loops are allowed
/// (counted twice in the degree).
class FiniteGraph : public Graph {
 public:
  FiniteGraph() = default;
  FiniteGraph(std::vector<Vertex> vertices, std::vector<std::pair<Vertex, Vertex>> edges);

  bool has_vertex(Vertex v) const override;
  std::vector<Vertex> neighbors(Vertex v) const override;
  std::optional<std::int64_t> vertex_count() const override {
    return static_cast<std::int64_t>(vertices_.size());
  }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }

  bool connected() const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::map<Vertex, std::vector<Vertex>> adj_;
};

/// The Cayley graph of a group with its standard symmetric generating
/// set; vertices are numbering indices, g ~ h iff g^-1 h is a generator.
class CayleyGraph : public Graph {
 public:
  explicit CayleyGraph(GroupSpec spec)
      : spec_(std::move(spec)), numbering_(std::make_shared<Numbering>(spec_)) {}

  const GroupSpec& spec() const { return spec_; }
  const Numbering& numbering() const { return *numbering_; }

  bool has_vertex(Vertex v) const override;
  std::vector<Vertex> neighbors(Vertex v) const override;
  std::optional<std::int64_t> vertex_count() const override;

  GroupElement element(Vertex v) const { return numbering_->element_at(v); }
  Vertex vertex(const GroupElement& g) const { return numbering_->index_of(g); }

 private:
  GroupSpec spec_;
  std::shared_ptr<Numbering> numbering_;
};

/// A graph with a finite set of vertices masked out; shares the base
/// graph's ids.
class MaskedGraph : public Graph {
 public:
  MaskedGraph(const Graph& base, std::set<Vertex> removed)
      : base_(base), removed_(std::move(removed)) {}

  const std::set<Vertex>& removed() const { return removed_; }

  bool has_vertex(Vertex v) const override {
    return !removed_.count(v) && base_.has_vertex(v);
  }
  std::vector<Vertex> neighbors(Vertex v) const override;
  std::optional<std::int64_t> vertex_count() const override;

 private:
  const Graph& base_;
  std::set<Vertex> removed_;
};

/// Induced subgraph on the vertices at distance <= r from `center`.
FiniteGraph ball_subgraph(const Graph& g, Vertex center, int r,
                          std::size_t cap = 100000);

/// BFS exploration of g - removed from `seed`; Finite(component) iff the
/// exploration closes within `budget` vertices.
struct ComponentResult {
  bool finite = false;
  std::set<Vertex> component;  // meaningful when finite
};
ComponentResult finite_component(const Graph& g, Vertex seed, const std::set<Vertex>& removed,
                                 std::size_t budget);

/// Promise about the number of ends of a graph. Decidability of the
/// no-finite-component question is conditional on the promise; the
/// two-ended case additionally carries the seed whose removal splits the
/// graph into two infinite components.
struct EndPromise {
  enum class Kind { OneEnd, TwoEnds };
  Kind kind = Kind::OneEnd;
  std::vector<Vertex> split_witness;  // TwoEnds: removal leaves two infinite parts

  static EndPromise one_end() { return {Kind::OneEnd, {}}; }
  static EndPromise two_ends(std::vector<Vertex> witness) {
    return {Kind::TwoEnds, std::move(witness)};
  }
};

struct ConnectivityResult {
  enum class Kind { NoFiniteComponent, HasFiniteComponent, Unknown };
  Kind kind = Kind::Unknown;
  std::set<Vertex> witness;            // a finite component, when found
  std::vector<std::set<Vertex>> classes;  // boundary classes, when certified
  std::string detail;
};

/// Dovetailed decision of "g - removed has no finite component" under an
/// end promise. Per boundary vertex it interleaves finite-component
/// detection with pairwise path search; it stops under OneEnd when all
/// boundary vertices interconnect, under TwoEnds when they partition
/// into at most two mutually connected classes. Untruthful promises
/// degrade to Unknown, never to a wrong verdict.
ConnectivityResult connectivity_after_removal(const Graph& g, const std::set<Vertex>& removed,
                                              const EndPromise& promise,
                                              std::size_t budget = 100000);

/// Number of components of ball(R) - ball(r) that touch the radius-R
/// sphere: a finite-scale lower-bound proxy for the end count.
int end_count_estimate(const Graph& g, Vertex center, int r, int R, std::size_t cap = 100000);

/// Graph distance from u to v, capped: returns nullopt when d(u,v) > cap.
std::optional<int> bounded_distance(const Graph& g, Vertex u, Vertex v, int cap);

/// Vertices within distance <= k of v (including v), sorted by id.
std::vector<Vertex> closed_ball_vertices(const Graph& g, Vertex v, int k);

}  // namespace subshift

#endif
