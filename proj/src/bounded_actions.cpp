#include "subshift/bounded_actions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

namespace subshift {

namespace {

std::vector<std::string> split_word(const std::string& word) {
  std::vector<std::string> tokens;
  std::istringstream in(word);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

int HPresentation::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].first == name) return static_cast<int>(i);
  throw UnknownGeneratorError(name);
}

ArrowAlphabet::ArrowAlphabet(HPresentation h, std::vector<GroupElement> displacements)
    : h_(std::move(h)), displacements_(std::move(displacements)) {
  if (h_.generators.empty()) throw Error("H must have at least one generator");
  if (displacements_.empty()) throw Error("displacement set F must be nonempty");
}

std::size_t ArrowAlphabet::size() const {
  std::size_t n = 1;
  for (std::size_t i = 0; i < h_.generators.size(); ++i) n *= displacements_.size();
  return n;
}

Alphabet ArrowAlphabet::alphabet() const {
  std::vector<int> syms(size());
  for (std::size_t i = 0; i < syms.size(); ++i) syms[i] = static_cast<int>(i);
  return Alphabet(std::move(syms));
}

const GroupElement& ArrowAlphabet::arrow(int symbol, int gen_index) const {
  std::size_t base = displacements_.size();
  std::size_t s = static_cast<std::size_t>(symbol);
  for (int i = 0; i < gen_index; ++i) s /= base;
  return displacements_[s % base];
}

int ArrowAlphabet::encode(const std::vector<int>& displacement_indices) const {
  std::size_t base = displacements_.size();
  std::size_t s = 0;
  for (std::size_t i = displacement_indices.size(); i-- > 0;)
    s = s * base + static_cast<std::size_t>(displacement_indices[i]);
  return static_cast<int>(s);
}

std::vector<int> ArrowAlphabet::decode(int symbol) const {
  std::size_t base = displacements_.size();
  std::size_t s = static_cast<std::size_t>(symbol);
  std::vector<int> out(h_.generators.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<int>(s % base);
    s /= base;
  }
  return out;
}

GroupElement evaluate_phi(const GroupSpec& g_spec, const ArrowAlphabet& arrows,
                          const GroupElement& g, const Pattern& window, const std::string& w) {
  GroupElement cur = g;
  for (const auto& tok : split_word(w)) {
    int gi = arrows.h().generator_index(tok);
    auto sym = window.value_at(cur);
    if (!sym) throw WindowEscapeError("walk left the supplied window");
    cur = g_spec.multiply(cur, arrows.arrow(*sym, gi));
  }
  return cur;
}

namespace {

// Enumerates arrow assignments along the walk of `word` from the
// identity; calls `emit(positions, symbols, endpoint)` for every
// consistent complete assignment. Positions visited more than once keep
// their first symbol.
void walk_assignments(const GroupSpec& g_spec, const ArrowAlphabet& arrows,
                      const std::vector<int>& word,
                      const std::function<void(const std::vector<GroupElement>&,
                                               const std::vector<int>&, const GroupElement&)>& emit) {
  std::vector<GroupElement> positions;   // distinct visited positions
  std::vector<int> symbols;              // assigned arrow symbols
  std::size_t nsym = arrows.size();

  std::function<void(const GroupElement&, std::size_t)> rec = [&](const GroupElement& cur,
                                                                  std::size_t step) {
    if (step == word.size()) {
      emit(positions, symbols, cur);
      return;
    }
    int existing = -1;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if (positions[i] == cur) {
        existing = static_cast<int>(i);
        break;
      }
    }
    if (existing >= 0) {
      const GroupElement& d =
          arrows.arrow(symbols[static_cast<std::size_t>(existing)], word[step]);
      rec(g_spec.multiply(cur, d), step + 1);
      return;
    }
    positions.push_back(cur);
    for (std::size_t s = 0; s < nsym; ++s) {
      symbols.push_back(static_cast<int>(s));
      const GroupElement& d = arrows.arrow(static_cast<int>(s), word[step]);
      rec(g_spec.multiply(cur, d), step + 1);
      symbols.pop_back();
    }
    positions.pop_back();
  };
  rec(g_spec.identity(), 0);
}

std::vector<std::vector<int>> enforced_words(const ArrowAlphabet& arrows) {
  std::vector<std::vector<int>> words;
  const auto& h = arrows.h();
  for (const auto& r : h.relators) {
    std::vector<int> word;
    std::istringstream in(r);
    std::string tok;
    while (in >> tok) word.push_back(h.generator_index(tok));
    if (!word.empty()) words.push_back(std::move(word));
  }
  for (std::size_t i = 0; i < h.generators.size(); ++i) {
    int inv = h.generator_index(h.generators[i].second);
    words.push_back({static_cast<int>(i), inv});
  }
  return words;
}

}  // namespace

SftPresentation build_T(const GroupSpec& g_spec, const ArrowAlphabet& arrows) {
  SftPresentation T;
  T.group = g_spec;
  T.alphabet = arrows.alphabet();
  for (const auto& word : enforced_words(arrows)) {
    walk_assignments(g_spec, arrows, word,
                     [&](const std::vector<GroupElement>& positions, const std::vector<int>& symbols,
                         const GroupElement& endpoint) {
                       if (endpoint == g_spec.identity()) return;  // walk closes: allowed
                       std::vector<std::string> support;
                       support.reserve(positions.size());
                       for (const auto& p : positions) support.push_back(g_spec.word_for(p));
                       T.forbidden.push_back(PatternCoding(std::move(support), symbols));
                     });
  }
  return T;
}

SftPresentation build_TX(const SftPresentation& T_pres, const GroupSpec& g_spec,
                         const ArrowAlphabet& arrows, const SftPresentation& X, int radius_cap) {
  SftPresentation TX;
  TX.group = g_spec;
  std::vector<int> syms;
  for (int a : X.alphabet.symbols)
    for (int b : T_pres.alphabet.symbols) syms.push_back(pair_symbols(a, b));
  TX.alphabet = Alphabet(std::move(syms));

  // Lift T's forbidden codings over the symbol layer.
  for (const auto& c : T_pres.forbidden) {
    std::size_t k = c.support.size();
    std::vector<std::size_t> idx(k, 0);
    while (true) {
      std::vector<int> values(k);
      for (std::size_t i = 0; i < k; ++i)
        values[i] = pair_symbols(X.alphabet.symbols[idx[i]], c.values[i]);
      TX.forbidden.push_back(PatternCoding(c.support, std::move(values)));
      std::size_t j = 0;
      while (j < k && ++idx[j] == X.alphabet.symbols.size()) idx[j++] = 0;
      if (j == k) break;
    }
  }

  // Overlay constraints: for each forbidden H-coding p of X and each
  // arrow assignment along the walks of its support words, forbid the
  // G-coding that reads p's symbols at the walk endpoints.
  const auto& h = arrows.h();
  for (const auto& p : X.forbidden) {
    if (!is_consistent(p, X.group)) continue;
    // Translate the support words into H-generator index sequences,
    // matched positionally against X's generator list.
    std::vector<std::vector<int>> walk_words;
    for (const auto& sup : p.support) {
      std::vector<int> word;
      for (const auto& tok : split_word(sup)) {
        int xi = X.group.generator_index(tok);
        if (xi >= static_cast<int>(h.generators.size()))
          throw Error("X's generator has no positional H counterpart");
        word.push_back(xi);
      }
      if (static_cast<int>(word.size()) > radius_cap)
        throw SupportTooLargeError("forbidden coding support exceeds the radius cap");
      walk_words.push_back(std::move(word));
    }
    // One combined walk: concatenate u_i walks, each restarted from the
    // identity. We enumerate assignments over the union of positions.
    struct State {
      std::vector<GroupElement> positions;
      std::vector<int> symbols;  // arrow symbol per position
      std::vector<GroupElement> endpoints;
    };
    std::function<void(State&, std::size_t, GroupElement, std::size_t)> rec =
        [&](State& st, std::size_t word_idx, GroupElement cur, std::size_t step) {
          if (word_idx == walk_words.size()) {
            // Build the forbidden coding: walked cells carry their arrow
            // symbol (symbol layer free), endpoint cells carry p's value
            // (arrow layer free unless walked).
            std::unordered_map<GroupElement, int, GroupElementHash> arrow_at;
            for (std::size_t i = 0; i < st.positions.size(); ++i)
              arrow_at.emplace(st.positions[i], st.symbols[i]);
            std::unordered_map<GroupElement, int, GroupElementHash> value_at;
            bool contradictory = false;
            for (std::size_t i = 0; i < st.endpoints.size(); ++i) {
              auto [it, inserted] = value_at.emplace(st.endpoints[i], p.values[i]);
              if (!inserted && it->second != p.values[i]) {
                contradictory = true;  // two required symbols collide: never fires
                break;
              }
            }
            if (contradictory) return;
            std::vector<GroupElement> cells;
            for (const auto& g : st.positions) cells.push_back(g);
            for (const auto& g : st.endpoints)
              if (!arrow_at.count(g) &&
                  std::find(cells.begin(), cells.end(), g) == cells.end())
                cells.push_back(g);
            // Free components range over the full factor alphabet.
            std::vector<std::vector<int>> choices;
            for (const auto& g : cells) {
              std::vector<int> opts;
              auto ait = arrow_at.find(g);
              auto vit = value_at.find(g);
              if (ait != arrow_at.end() && vit != value_at.end()) {
                opts.push_back(pair_symbols(vit->second, ait->second));
              } else if (ait != arrow_at.end()) {
                for (int a : X.alphabet.symbols) opts.push_back(pair_symbols(a, ait->second));
              } else {
                for (int b : T_pres.alphabet.symbols) opts.push_back(pair_symbols(vit->second, b));
              }
              choices.push_back(std::move(opts));
            }
            std::vector<std::size_t> idx(cells.size(), 0);
            while (true) {
              std::vector<std::string> support;
              std::vector<int> values;
              for (std::size_t i = 0; i < cells.size(); ++i) {
                support.push_back(g_spec.word_for(cells[i]));
                values.push_back(choices[i][idx[i]]);
              }
              TX.forbidden.push_back(PatternCoding(std::move(support), std::move(values)));
              std::size_t j = 0;
              while (j < cells.size() && ++idx[j] == choices[j].size()) idx[j++] = 0;
              if (j == cells.size()) break;
              if (cells.empty()) break;
            }
            return;
          }
          const std::vector<int>& word = walk_words[word_idx];
          if (step == word.size()) {
            st.endpoints.push_back(cur);
            rec(st, word_idx + 1, g_spec.identity(), 0);
            st.endpoints.pop_back();
            return;
          }
          int existing = -1;
          for (std::size_t i = 0; i < st.positions.size(); ++i) {
            if (st.positions[i] == cur) {
              existing = static_cast<int>(i);
              break;
            }
          }
          if (existing >= 0) {
            const GroupElement& d =
                arrows.arrow(st.symbols[static_cast<std::size_t>(existing)], word[step]);
            rec(st, word_idx, g_spec.multiply(cur, d), step + 1);
            return;
          }
          st.positions.push_back(cur);
          for (std::size_t s = 0; s < arrows.size(); ++s) {
            st.symbols.push_back(static_cast<int>(s));
            const GroupElement& d = arrows.arrow(static_cast<int>(s), word[step]);
            rec(st, word_idx, g_spec.multiply(cur, d), step + 1);
            st.symbols.pop_back();
          }
          st.positions.pop_back();
        };
    State st;
    rec(st, 0, g_spec.identity(), 0);
  }
  return TX;
}

bool validate_window(const SftPresentation& pres, const Pattern& window) {
  for (const auto& c : pres.forbidden) {
    if (!is_consistent(c, pres.group)) continue;
    Pattern p = realize(c, pres.group);
    if (fits_inside(p, window, pres.group)) return false;
  }
  return true;
}

}  // namespace subshift
