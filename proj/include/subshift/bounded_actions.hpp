#ifndef SUBSHIFT_BOUNDED_ACTIONS_HPP
#define SUBSHIFT_BOUNDED_ACTIONS_HPP

#include <string>
#include <vector>

#include "subshift/sft.hpp"

namespace subshift {

/// A finite presentation of the acting group H: a symmetric generator
/// list (name, inverse name) and relator words.
struct HPresentation {
  std::vector<std::pair<std::string, std::string>> generators;
  std::vector<std::string> relators;

  int generator_index(const std::string& name) const;
};

/// The arrow alphabet B = F^{S_H}: every map from H's generators to the
/// finite displacement set F. Symbols are mixed-radix indices.
class ArrowAlphabet {
 public:
  ArrowAlphabet(HPresentation h, std::vector<GroupElement> displacements);

  const HPresentation& h() const { return h_; }
  const std::vector<GroupElement>& displacements() const { return displacements_; }
  std::size_t size() const;
  Alphabet alphabet() const;

  /// The displacement assigned to H-generator `gen` by symbol `b`.
  const GroupElement& arrow(int symbol, int gen_index) const;
  int encode(const std::vector<int>& displacement_indices) const;
  std::vector<int> decode(int symbol) const;

 private:
  HPresentation h_;
  std::vector<GroupElement> displacements_;
};

/// Walk evaluation Phi(g, y, w): follow the arrows named by w from g.
/// `window` supplies the arrow symbol at each visited position; leaving
/// it throws WindowEscapeError.
GroupElement evaluate_phi(const GroupSpec& g_spec, const ArrowAlphabet& arrows,
                          const GroupElement& g, const Pattern& window, const std::string& w);

/// The subshift of bounded actions T for parameters (H, F): forbidden
/// codings make every enforced word's arrow walk return to its start.
/// Enforced words are the relators plus the cancellation pairs s s^-1.
SftPresentation build_T(const GroupSpec& g_spec, const ArrowAlphabet& arrows);

/// The overlay T[X]: product alphabet A x B; adds, for each forbidden
/// H-coding of X, the codings that fire when the symbols read along the
/// arrow walks realize it. X's forbidden supports must have word length
/// at most `radius_cap`.
SftPresentation build_TX(const SftPresentation& T_pres, const GroupSpec& g_spec,
                         const ArrowAlphabet& arrows, const SftPresentation& X, int radius_cap);

/// True iff no realized forbidden pattern translate fits inside the
/// window.
bool validate_window(const SftPresentation& pres, const Pattern& window);

}  // namespace subshift

#endif
