#ifndef SUBSHIFT_SFT_HPP
#define SUBSHIFT_SFT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "subshift/pattern.hpp"

namespace subshift {

/// An SFT presentation (A, F): a finite alphabet together with a finite
/// list of forbidden pattern codings. Inconsistent codings are allowed;
/// they constrain nothing.
struct SftPresentation {
  GroupSpec group;
  Alphabet alphabet;
  std::vector<PatternCoding> forbidden;

  void check() const;  // every forbidden value lies in the alphabet
};

/// A sofic presentation (A, F, mu, B): an SFT presentation plus a local
/// map from A-patterns on a word support W to symbols of B.
struct SoficPresentation {
  SftPresentation base;
  std::vector<std::string> local_support;
  /// Entries (values over local_support, output symbol); must be total
  /// on A^W.
  std::vector<std::pair<std::vector<int>, int>> local_map;
  Alphabet target;

  int apply_local(const std::vector<int>& values) const;
  void check() const;
};

/// The set of locally admissible patterns on a common ball support.
struct LocalLanguage {
  int radius = 0;
  std::vector<Pattern> patterns;  // deterministic (value-lexicographic) order
};

/// Outcome of an emptiness search.
struct Certificate {
  enum class Verdict { Empty, Nonempty, Unknown };
  Verdict verdict = Verdict::Unknown;
  /// For Empty: the radius at which the locally admissible set vanished,
  /// or -1 when certified by the complete Z decision procedure alone.
  int radius = -1;
  std::optional<int> witness_symbol;       // fixed-point witness
  std::optional<Pattern> witness_pattern;  // non-constant witness
  std::string detail;
};

struct EmptinessBudget {
  int max_radius = 6;
  int max_lookahead = 2;
  std::int64_t max_patterns = 1000000;
};

/// Cantor pairing on symbol values, the fixed alphabet pairing for
/// products.
int pair_symbols(int a, int b);
std::pair<int, int> unpair_symbol(int c);

/// Presentation conjugate to the direct product X x Y. Group mismatch
/// throws GroupMismatchError.
SftPresentation product(const SftPresentation& X, const SftPresentation& Y);

/// Presentation conjugate to the disjoint union: A's symbols re-indexed
/// as 2a, B's as 2b+1, plus two-cell codings forbidding mixed tags
/// across every generator.
SftPresentation disjoint_union(const SftPresentation& X, const SftPresentation& Y);

/// The pullback of X to the free group on X's generator pairs. The
/// relator constraints form an infinite family, enumerated lazily up to
/// a word-length budget.
struct PullbackFamily {
  SftPresentation base;  // over the free group, relator codings excluded
  GroupSpec source;
  /// Two-cell codings x(u) != x(u w) for identity words w of the source
  /// group with |w| <= length_budget (freely trivial words are skipped).
  std::vector<PatternCoding> relator_codings(int length_budget) const;
  /// base with relator codings up to the budget appended.
  SftPresentation presentation(int length_budget) const;
};
PullbackFamily pullback_to_free(const SftPresentation& X);

/// The free extension of an H-SFT to G. H's generators must be a
/// declared subset of G's generators (matched by name).
SftPresentation free_extension(const SftPresentation& X, const GroupSpec& G);

/// Decidable fixed-point check: true iff some symbol a has no forbidden
/// coding of constant value a (empty-support codings count as constant
/// for every a).
bool has_fixed_point(const SftPresentation& X);
/// The set of symbols a whose constant configuration lies in the SFT.
std::vector<int> fixed_point_symbols(const SftPresentation& X);

/// Patterns on `inner` that extend to a pattern on `outer` containing no
/// translate of a forbidden pattern (translates g with g*supp(f) inside
/// outer). `inner` must be a prefix-closed subset of `outer` in the
/// sense that inner cells are listed first. Deterministic output order.
std::vector<Pattern> admissible_patterns(const SftPresentation& X,
                                         const std::vector<GroupElement>& inner,
                                         const std::vector<GroupElement>& outer,
                                         std::int64_t max_patterns = 1000000);

/// Locally admissible patterns on the ball B_n with lookahead m.
LocalLanguage locally_admissible(const SftPresentation& X, int n, int m,
                                 std::int64_t max_patterns = 1000000);

/// Semi-decision of emptiness packaged as a certificate. Sound EmptyAt;
/// complete over Z via the edge-shift decision procedure.
Certificate check_empty(const SftPresentation& X, const EmptinessBudget& budget = {});

/// Complete decision data for a Z-SFT: recode to a nearest-neighbor edge
/// shift on length-k windows, prune to the bi-infinite core, read off
/// exact languages and entropy.
class ZDecision {
 public:
  bool empty() const { return vertices_.empty(); }
  /// Natural log of the spectral radius of the pruned adjacency matrix;
  /// -infinity for the empty subshift.
  double entropy() const { return entropy_; }
  int window() const { return window_; }

  /// Exact L_n: value rows over the window [-n, n], sorted.
  std::vector<std::vector<int>> language(int n) const;
  /// Exact language over an arbitrary-length window.
  std::vector<std::vector<int>> words_of_length(int len) const;

  const std::vector<std::vector<int>>& vertex_words() const { return vertices_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  /// A pattern witnessing nonemptiness (cells on a ball), if nonempty.
  std::optional<Pattern> witness(const GroupSpec& spec) const;

 private:
  friend ZDecision z_decide(const SftPresentation&, int);
  int window_ = 1;
  double entropy_ = 0.0;
  std::vector<std::vector<int>> vertices_;  // window words, sorted
  std::vector<std::pair<int, int>> edges_;  // indices into vertices_
};

/// Decision procedure for SFTs over Z. `min_window` forces a window at
/// least that long (used to compare two presentations on a common
/// recoding).
ZDecision z_decide(const SftPresentation& X, int min_window = 1);

/// log |admissible patterns on the box [0,n)^d with lookahead box
/// [-m, n+m)^d| / n^d; an upper bound for the entropy of a Z^d-SFT.
double entropy_upper_bound(const SftPresentation& X, int n, int m,
                           std::int64_t max_patterns = 1000000);

/// The metric D on S(Z) computed through z_decide languages up to a
/// radius cap. Reports 0 when the pruned edge shifts coincide after
/// recoding to a common window (exact equality); reports 2 when even
/// L_0 differs (the paper's inf over the empty set, clamped).
struct DistanceResult {
  double value = 2.0;
  bool exact_zero = false;
  int agree_radius = -1;  // largest verified n with L_n equal
};
DistanceResult subshift_distance(const SftPresentation& X, const SftPresentation& Y,
                                 int radius_cap = 8);

/// Berger-style reduction: disjoint_union(X_plus, product(input, X_minus)).
SftPresentation rice_reduction(const SftPresentation& X_plus, const SftPresentation& X_minus,
                               const SftPresentation& input);

/// Sofic Rice reduction: base = product(Y_plus.base, input), local map
/// mu'(p) = mu(pi_1 . p).
SoficPresentation sofic_reduction(const SoficPresentation& Y_plus, const SftPresentation& input);

/// Exact image language of a sofic presentation over Z at radius n
/// (value rows over [-n, n]).
std::vector<std::vector<int>> sofic_image_language_z(const SoficPresentation& Y, int n);

/// Greedy computable configuration on a nearest-neighbor free-group SFT:
/// the arc-consistency fixpoint A' followed by the minimal-symbol
/// recursion over the tree. Returns the configuration restricted to B_n,
/// or nullopt when A' is empty.
std::optional<Pattern> greedy_free_configuration(const SftPresentation& X, int n);

}  // namespace subshift

#endif
