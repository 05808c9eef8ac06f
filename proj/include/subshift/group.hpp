#ifndef SUBSHIFT_GROUP_HPP
#define SUBSHIFT_GROUP_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "subshift/errors.hpp"

namespace subshift {

/// An element of a finitely generated group, held in canonical form.
///
/// The canonical form depends on the group kind: an integer vector for
/// Z^d, a freely reduced word for F_k (letters +i / -i for the i-th free
/// generator, 1-based), an element index for a finite group, and a pair
/// of canonical forms for a direct product. Equality of elements is
/// structural equality of canonical forms.
class GroupElement {
 public:
  using Lattice = std::vector<std::int64_t>;
  using FreeWord = std::vector<std::int32_t>;
  struct Pair {
    std::shared_ptr<const GroupElement> left;
    std::shared_ptr<const GroupElement> right;
    bool operator==(const Pair& o) const {
      return *left == *o.left && *right == *o.right;
    }
  };
  using Value = std::variant<Lattice, FreeWord, std::int64_t, Pair>;

  GroupElement() : value_(std::int64_t{0}) {}
  explicit GroupElement(Value v) : value_(std::move(v)) {}

  static GroupElement lattice(Lattice v) { return GroupElement(Value(std::move(v))); }
  static GroupElement free_word(FreeWord w) { return GroupElement(Value(std::move(w))); }
  static GroupElement finite(std::int64_t i) { return GroupElement(Value(i)); }
  static GroupElement pair(GroupElement l, GroupElement r);

  const Value& value() const { return value_; }
  const Lattice& as_lattice() const { return std::get<Lattice>(value_); }
  const FreeWord& as_free_word() const { return std::get<FreeWord>(value_); }
  std::int64_t as_finite() const { return std::get<std::int64_t>(value_); }
  const Pair& as_pair() const { return std::get<Pair>(value_); }

  bool operator==(const GroupElement& o) const { return value_ == o.value_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }

  std::size_t hash() const;

 private:
  Value value_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

/// A named generator together with the name of its inverse.
struct Generator {
  std::string name;
  std::string inverse_name;
  GroupElement element;
};

struct Ball;

/// A finitely generated group with decidable word problem.
///
/// Supported kinds: Z^d, free groups, finite groups given by a
/// multiplication table, and direct products of the above. The
/// generating set is always the standard symmetric one for the kind;
/// generator names follow the file conventions ("x1"/"x1-" for lattice
/// axes, "a"/"a-" for free generators, "g1".. for non-identity finite
/// elements, "l."/"r." prefixes for product factors).
class GroupSpec {
 public:
  enum class Kind { Lattice, Free, Finite, Product };

  GroupSpec() { *this = lattice(1); }

  static GroupSpec lattice(int dim);
  static GroupSpec free_group(int rank);
  /// Table entries are 0-based element indices; the table must describe
  /// a group (checked at construction).
  static GroupSpec finite(std::vector<std::vector<int>> table);
  static GroupSpec product(GroupSpec left, GroupSpec right);

  Kind kind() const { return kind_; }
  int lattice_dim() const { return param_; }
  int free_rank() const { return param_; }
  std::int64_t finite_order() const { return static_cast<std::int64_t>(table_.size()); }
  const GroupSpec& left() const { return *left_; }
  const GroupSpec& right() const { return *right_; }

  const std::vector<Generator>& generators() const { return generators_; }
  /// Index into generators() for a name; throws UnknownGeneratorError.
  int generator_index(const std::string& name) const;

  GroupElement identity() const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;

  /// Word length |g|_S for the standard generating set.
  std::int64_t word_length(const GroupElement& g) const;

  /// The numbering order: first by word length, then layer-lexicographic
  /// (inverses precede positives). Returns <0, 0, >0.
  int compare(const GroupElement& a, const GroupElement& b) const;
  bool less(const GroupElement& a, const GroupElement& b) const {
    return compare(a, b) < 0;
  }

  /// Evaluates a space-separated word over the generator names.
  /// The empty word denotes the identity.
  GroupElement evaluate(const std::string& word) const;
  GroupElement evaluate_tokens(const std::vector<std::string>& tokens) const;
  bool word_problem(const std::string& word) const;

  /// A canonical geodesic word for an element, as a space-separated
  /// string over the generator names ("" for the identity).
  std::string word_for(const GroupElement& g) const;

  /// Word-metric ball of radius n. Throws ResourceLimitError when the
  /// ball exceeds `cap` elements.
  Ball ball(int n, std::size_t cap = 1000000) const;

  bool is_finite_group() const;

  bool operator==(const GroupSpec& o) const;
  bool operator!=(const GroupSpec& o) const { return !(*this == o); }

 private:
  struct Raw {};
  explicit GroupSpec(Raw) {}
  void build_generators();

  Kind kind_ = Kind::Lattice;
  int param_ = 0;                            // dim or rank
  std::vector<std::vector<int>> table_;      // finite kind
  std::vector<int> finite_inverse_;
  int finite_identity_ = 0;
  std::shared_ptr<const GroupSpec> left_, right_;
  std::vector<Generator> generators_;
};

/// The word-metric ball B_n, elements listed in numbering order.
struct Ball {
  int radius = 0;
  std::vector<GroupElement> elements;
};

/// The computable numbering nu: N -> G. Enumerates B_0, then B_1 \ B_0,
/// and so on, each layer sorted layer-lexicographically with inverses
/// preceding positives.
class Numbering {
 public:
  explicit Numbering(GroupSpec spec, std::size_t cap = 100000000)
      : spec_(std::move(spec)), cap_(cap) {}

  const GroupSpec& spec() const { return spec_; }

  GroupElement element_at(std::int64_t index) const;
  std::int64_t index_of(const GroupElement& g) const;

  /// Number of elements with word length <= n (grows the cache).
  std::int64_t ball_size(int n) const;

 private:
  void grow_to_radius(int n) const;
  void grow_to_size(std::int64_t size) const;

  GroupSpec spec_;
  std::size_t cap_;
  mutable std::vector<GroupElement> elements_;   // concatenated layers
  mutable std::vector<std::int64_t> layer_end_;  // prefix sizes, layer_end_[n] = |B_n|
};

}  // namespace subshift

#endif
