#ifndef SUBSHIFT_THREEPATH_HPP
#define SUBSHIFT_THREEPATH_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "subshift/graph.hpp"

namespace subshift {

/// An injective vertex sequence indexed by an integer interval, with
/// consecutive vertices at graph distance at most 3 (a path in the cube
/// of the graph).
struct ThreePath {
  std::int64_t lo = 0;
  std::vector<Vertex> verts;

  std::int64_t hi() const { return lo + static_cast<std::int64_t>(verts.size()) - 1; }
  std::size_t size() const { return verts.size(); }
  Vertex initial() const { return verts.front(); }
  Vertex final() const { return verts.back(); }
  Vertex at(std::int64_t index) const {
    return verts[static_cast<std::size_t>(index - lo)];
  }
  bool contains_index(std::int64_t index) const { return index >= lo && index <= hi(); }
  std::optional<std::int64_t> index_of(Vertex v) const;
  bool visits(Vertex v) const { return index_of(v).has_value(); }
  std::set<Vertex> vertex_set() const { return {verts.begin(), verts.end()}; }

  /// True iff `other` restricted to this domain equals this path.
  bool extends(const ThreePath& prefix) const;
};

/// The five-clause validation report for finite Hamiltonian 3-paths.
struct PathReport {
  bool injective = false;
  bool hamiltonian = false;      // covers the whole (finite) graph
  bool jumps_at_most_3 = false;
  bool end_jumps_at_most_2 = false;
  bool no_consecutive_3_jumps = false;
  bool ok() const {
    return injective && hamiltonian && jumps_at_most_3 && end_jumps_at_most_2 &&
           no_consecutive_3_jumps;
  }
};

/// Validates a path against a finite graph (distances measured there).
PathReport validate_hamiltonian_three_path(const FiniteGraph& g, const ThreePath& f);

/// Basic 3-path validation on any graph: injectivity and jumps <= 3.
bool is_three_path(const Graph& g, const ThreePath& f);

/// A Hamiltonian 3-path of a connected finite graph from u to v whose
/// first and last jumps have length at most 2 and which never makes two
/// consecutive jumps of length 3.
ThreePath finite_hamiltonian(const FiniteGraph& g, Vertex u, Vertex v);

struct SearchBudget {
  std::size_t max_explored = 100000;   // master cap per search
  std::size_t absorb_cap = 3000;       // component absorption: larger means infinite
};

/// A right-extensible 3-path starting at u and visiting `visit`:
/// a Hamiltonian 3-path of the union of a u-`visit` path with the finite
/// components of its complement, ending next to the outside.
ThreePath right_extensible_from(const Graph& g, Vertex u, Vertex visit,
                                const SearchBudget& budget = {});

/// A bi-extensible 3-path visiting u.
ThreePath bi_extensible_visiting(const Graph& g, Vertex u, const SearchBudget& budget = {});

/// Extends a bi-extensible 3-path on both sides so that it stays
/// bi-extensible and visits w. When w is already visited, performs one
/// minimal two-sided bi-extensible extension.
ThreePath extend(const Graph& g, const ThreePath& f, Vertex w, const EndPromise& promise,
                 const SearchBudget& budget = {});

struct BiExtensibleVerdict {
  enum class Kind { Yes, No, Unknown };
  Kind kind = Kind::Unknown;
  std::string reason;
};

/// Checks the bi-extensibility conditions: fresh extension vertices
/// within distance 3 of both endpoints, and no finite component left by
/// the removal (decided via connectivity_after_removal under the
/// promise).
BiExtensibleVerdict is_bi_extensible(const Graph& g, const ThreePath& f,
                                     const EndPromise& promise,
                                     const SearchBudget& budget = {});

/// Iterates `extend` over the vertex numbering: after processing target
/// v_n the path visits {v_0, ..., v_n}. Emits growing finite windows of
/// a bi-infinite Hamiltonian 3-path.
class PathGenerator {
 public:
  PathGenerator(const Graph& g, ThreePath seed, EndPromise promise, SearchBudget budget = {});

  const ThreePath& current() const { return path_; }
  std::int64_t targets_processed() const { return next_target_; }

  /// Processes one more target; returns the updated path.
  const ThreePath& step();
  /// Processes targets until `n` of them are done.
  const ThreePath& run_until_targets(std::int64_t n);
  /// Extends until the given numbering index is visited.
  Vertex require_visited(Vertex v);
  /// Extends until the given path index lies in the domain.
  void require_index(std::int64_t index);

 private:
  const Graph& g_;
  ThreePath path_;
  EndPromise promise_;
  SearchBudget budget_;
  std::int64_t next_target_ = 0;
};

ThreePath hamiltonian_stream(const Graph& g, const ThreePath& seed, const EndPromise& promise,
                             std::int64_t steps, const SearchBudget& budget = {});

/// Pairwise disjoint bi-infinite 3-path fragments covering the ball of
/// radius r, each leaving no finite component in its own component;
/// the tree-like iteration of the removable-path construction.
std::vector<ThreePath> orbit_partition(const Graph& g, const CayleyGraph& cayley, int r,
                                       const SearchBudget& budget = {});

/// A translation-like action of Z evaluated through a path generator
/// (transitive case): v * n = f(f^-1(v) + n).
class TranslationAction {
 public:
  TranslationAction(const Graph& g, ThreePath seed, EndPromise promise,
                    SearchBudget budget = {})
      : gen_(g, std::move(seed), std::move(promise), budget) {}

  Vertex apply(Vertex v, std::int64_t n);
  PathGenerator& generator() { return gen_; }

 private:
  PathGenerator gen_;
};

}  // namespace subshift

#endif
