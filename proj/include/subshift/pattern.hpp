#ifndef SUBSHIFT_PATTERN_HPP
#define SUBSHIFT_PATTERN_HPP

#include <optional>
#include <string>
#include <vector>

#include "subshift/group.hpp"

namespace subshift {

/// A finite ordered alphabet of natural-number symbols.
struct Alphabet {
  std::vector<int> symbols;

  Alphabet() = default;
  explicit Alphabet(std::vector<int> syms);

  bool contains(int s) const;
  std::size_t size() const { return symbols.size(); }
  bool operator==(const Alphabet& o) const { return symbols == o.symbols; }
};

/// A finite partial coloring indexed by words over the generators.
/// Support words are pairwise distinct as words; distinct words may
/// still name the same group element, which is what consistency checks.
struct PatternCoding {
  std::vector<std::string> support;
  std::vector<int> values;

  PatternCoding() = default;
  PatternCoding(std::vector<std::string> sup, std::vector<int> vals);

  std::size_t size() const { return support.size(); }
  bool operator==(const PatternCoding& o) const {
    return support == o.support && values == o.values;
  }
};

/// A finite coloring of group elements, cells sorted by the group
/// numbering order so that pattern equality is syntactic.
class Pattern {
 public:
  using Cell = std::pair<GroupElement, int>;

  Pattern() = default;
  Pattern(const GroupSpec& spec, std::vector<Cell> cells);

  const std::vector<Cell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  bool empty() const { return cells_.empty(); }

  std::optional<int> value_at(const GroupElement& g) const;

  bool operator==(const Pattern& o) const { return cells_ == o.cells_; }
  bool operator!=(const Pattern& o) const { return !(*this == o); }
  /// Deterministic order on patterns over a common support list.
  bool operator<(const Pattern& o) const;

 private:
  std::vector<Cell> cells_;
};

/// False iff two support words evaluate to the same element but carry
/// different symbols.
bool is_consistent(const PatternCoding& c, const GroupSpec& spec);

/// Realizes a coding as a pattern on the evaluated support, collapsing
/// words that evaluate equal. Throws InconsistentCodingError.
Pattern realize(const PatternCoding& c, const GroupSpec& spec);

/// The shift action on patterns: support mapped h -> g*h, values carried.
Pattern translate(const Pattern& p, const GroupElement& g, const GroupSpec& spec);

/// True iff some translate of p lies inside q with agreeing values.
/// The empty pattern fits inside everything.
bool fits_inside(const Pattern& p, const Pattern& q, const GroupSpec& spec);

/// The coding of a pattern via canonical geodesic words.
PatternCoding coding_of_pattern(const Pattern& p, const GroupSpec& spec);

}  // namespace subshift

#endif
