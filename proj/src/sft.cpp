#include "subshift/sft.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace subshift {

namespace {

std::vector<std::string> split_tokens(const std::string& word) {
  std::vector<std::string> tokens;
  std::string tok;
  for (char c : word) {
    if (c == ' ') {
      if (!tok.empty()) tokens.push_back(tok), tok.clear();
    } else {
      tok += c;
    }
  }
  if (!tok.empty()) tokens.push_back(tok);
  return tokens;
}

}  // namespace

void SftPresentation::check() const {
  for (const auto& c : forbidden)
    for (int v : c.values)
      if (!alphabet.contains(v))
        throw Error("forbidden coding value outside the alphabet");
}

int SoficPresentation::apply_local(const std::vector<int>& values) const {
  for (const auto& [key, out] : local_map)
    if (key == values) return out;
  throw Error("local map is not total on A^W");
}

void SoficPresentation::check() const {
  base.check();
  for (const auto& [key, out] : local_map) {
    if (key.size() != local_support.size())
      throw Error("local map key length must match the local support");
    for (int v : key)
      if (!base.alphabet.contains(v)) throw Error("local map key symbol outside base alphabet");
    if (!target.contains(out)) throw Error("local map output outside target alphabet");
  }
  std::size_t expected = 1;
  for (std::size_t i = 0; i < local_support.size(); ++i) expected *= base.alphabet.size();
  if (local_map.size() != expected)
    throw Error("local map must be total on A^W");
}

int pair_symbols(int a, int b) {
  int s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<int, int> unpair_symbol(int c) {
  int s = 0;
  while ((s + 1) * (s + 2) / 2 <= c) ++s;
  int b = c - s * (s + 1) / 2;
  return {s - b, b};
}

namespace {

// All lifts of a coding through one projection of a paired alphabet:
// the lifted component is pinned to the coding's values, the other
// ranges over the full factor alphabet.
void append_product_lifts(std::vector<PatternCoding>& out, const PatternCoding& c,
                          const Alphabet& other, bool first_component) {
  std::size_t k = c.support.size();
  if (k == 0) {
    out.push_back(c);  // empty support forbids everything either way
    return;
  }
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<int> values(k);
    for (std::size_t i = 0; i < k; ++i) {
      int o = other.symbols[idx[i]];
      values[i] = first_component ? pair_symbols(c.values[i], o) : pair_symbols(o, c.values[i]);
    }
    out.push_back(PatternCoding(c.support, std::move(values)));
    std::size_t j = 0;
    while (j < k && ++idx[j] == other.symbols.size()) idx[j++] = 0;
    if (j == k) break;
  }
}

}  // namespace

SftPresentation product(const SftPresentation& X, const SftPresentation& Y) {
  if (X.group != Y.group) throw GroupMismatchError("product requires a common group");
  SftPresentation Z;
  Z.group = X.group;
  std::vector<int> syms;
  for (int a : X.alphabet.symbols)
    for (int b : Y.alphabet.symbols) syms.push_back(pair_symbols(a, b));
  Z.alphabet = Alphabet(std::move(syms));
  for (const auto& c : X.forbidden) append_product_lifts(Z.forbidden, c, Y.alphabet, true);
  for (const auto& c : Y.forbidden) append_product_lifts(Z.forbidden, c, X.alphabet, false);
  return Z;
}

SftPresentation disjoint_union(const SftPresentation& X, const SftPresentation& Y) {
  if (X.group != Y.group) throw GroupMismatchError("disjoint union requires a common group");
  SftPresentation Z;
  Z.group = X.group;
  std::vector<int> syms;
  for (int a : X.alphabet.symbols) syms.push_back(2 * a);
  for (int b : Y.alphabet.symbols) syms.push_back(2 * b + 1);
  Z.alphabet = Alphabet(std::move(syms));
  auto retag = [&Z](const PatternCoding& c, bool left) {
    std::vector<int> values;
    values.reserve(c.values.size());
    for (int v : c.values) values.push_back(left ? 2 * v : 2 * v + 1);
    Z.forbidden.push_back(PatternCoding(c.support, std::move(values)));
  };
  for (const auto& c : X.forbidden) retag(c, true);
  for (const auto& c : Y.forbidden) retag(c, false);
  // Mixing constraints: no A-symbol next to a B-symbol in any direction.
  for (const auto& gen : Z.group.generators()) {
    for (int a : X.alphabet.symbols) {
      for (int b : Y.alphabet.symbols) {
        Z.forbidden.push_back(PatternCoding({"", gen.name}, {2 * a, 2 * b + 1}));
        Z.forbidden.push_back(PatternCoding({"", gen.name}, {2 * b + 1, 2 * a}));
      }
    }
  }
  return Z;
}

namespace {

// Generator pairs of a spec: one entry per {g, g^-1}, involutions
// counted once. Maps generator names to signed free letters.
struct FreeLetterMap {
  std::unordered_map<std::string, std::int32_t> letter;
  int rank = 0;
};

FreeLetterMap free_letters_for(const GroupSpec& spec) {
  FreeLetterMap m;
  for (const auto& g : spec.generators()) {
    if (m.letter.count(g.name)) continue;
    ++m.rank;
    m.letter[g.name] = m.rank;
    if (g.inverse_name != g.name) m.letter[g.inverse_name] = -m.rank;
  }
  return m;
}

std::string free_token(std::int32_t letter) {
  std::string base(1, static_cast<char>('a' + std::abs(letter) - 1));
  return letter > 0 ? base : base + "-";
}

std::string translate_word_to_free(const std::string& word, const FreeLetterMap& m) {
  std::string out;
  for (const auto& tok : split_tokens(word)) {
    auto it = m.letter.find(tok);
    if (it == m.letter.end()) throw UnknownGeneratorError(tok);
    if (!out.empty()) out += ' ';
    out += free_token(it->second);
  }
  return out;
}

}  // namespace

PullbackFamily pullback_to_free(const SftPresentation& X) {
  PullbackFamily fam;
  fam.source = X.group;
  FreeLetterMap m = free_letters_for(X.group);
  fam.base.group = GroupSpec::free_group(m.rank);
  fam.base.alphabet = X.alphabet;
  for (const auto& c : X.forbidden) {
    std::vector<std::string> support;
    support.reserve(c.support.size());
    for (const auto& w : c.support) support.push_back(translate_word_to_free(w, m));
    fam.base.forbidden.push_back(PatternCoding(std::move(support), c.values));
  }
  return fam;
}

std::vector<PatternCoding> PullbackFamily::relator_codings(int length_budget) const {
  std::vector<PatternCoding> out;
  FreeLetterMap m = free_letters_for(source);
  const auto& gens = source.generators();
  const GroupSpec& free = base.group;
  std::unordered_set<GroupElement, GroupElementHash> seen_reductions;
  // Enumerate words over the source generators by length, then by
  // generator index, keeping those that are trivial in the source group
  // but freely nontrivial.
  std::vector<std::size_t> word;
  for (int len = 1; len <= length_budget; ++len) {
    word.assign(static_cast<std::size_t>(len), 0);
    while (true) {
      GroupElement g = source.identity();
      std::string free_word;
      for (std::size_t i = 0; i < word.size(); ++i) {
        g = source.multiply(g, gens[word[i]].element);
        if (!free_word.empty()) free_word += ' ';
        free_word += free_token(m.letter.at(gens[word[i]].name));
      }
      if (g == source.identity()) {
        GroupElement reduced = free.evaluate(free_word);
        if (!(reduced == free.identity()) && seen_reductions.insert(reduced).second) {
          std::string reduced_word = free.word_for(reduced);
          for (int a : base.alphabet.symbols)
            for (int b : base.alphabet.symbols)
              if (a != b)
                out.push_back(PatternCoding({"", reduced_word}, {a, b}));
        }
      }
      std::size_t j = 0;
      while (j < word.size() && ++word[j] == gens.size()) word[j++] = 0;
      if (j == word.size()) break;
    }
  }
  return out;
}

SftPresentation PullbackFamily::presentation(int length_budget) const {
  SftPresentation out = base;
  for (auto& c : relator_codings(length_budget)) out.forbidden.push_back(std::move(c));
  return out;
}

SftPresentation free_extension(const SftPresentation& X, const GroupSpec& G) {
  for (const auto& g : X.group.generators()) {
    bool found = false;
    for (const auto& h : G.generators()) {
      if (h.name == g.name) {
        if (h.inverse_name != g.inverse_name)
          throw NotASubgroupEmbeddingError("generator '" + g.name +
                                           "' pairs differently in the target group");
        found = true;
        break;
      }
    }
    if (!found)
      throw NotASubgroupEmbeddingError("generator '" + g.name +
                                       "' is not declared in the target group");
  }
  SftPresentation out;
  out.group = G;
  out.alphabet = X.alphabet;
  out.forbidden = X.forbidden;  // the same codings, read over G
  return out;
}

std::vector<int> fixed_point_symbols(const SftPresentation& X) {
  std::vector<int> out;
  for (int a : X.alphabet.symbols) {
    bool blocked = false;
    for (const auto& c : X.forbidden) {
      bool constant_a = true;  // vacuously true for empty support
      for (int v : c.values)
        if (v != a) {
          constant_a = false;
          break;
        }
      if (constant_a) {
        blocked = true;
        break;
      }
    }
    if (!blocked) out.push_back(a);
  }
  return out;
}

bool has_fixed_point(const SftPresentation& X) { return !fixed_point_symbols(X).empty(); }

namespace {

// A forbidden-pattern translate instantiated on region cell indices.
struct Instance {
  std::vector<std::pair<int, int>> cell_value;  // (cell index, required symbol)
  int last_cell = 0;
};

struct RegionProblem {
  std::vector<std::vector<int>> domains;             // per cell, allowed symbols
  std::vector<std::vector<Instance>> by_last_cell;   // instances keyed by last cell
  bool infeasible = false;                           // someone forbids everything
};

RegionProblem build_region_problem(const SftPresentation& X,
                                   const std::vector<GroupElement>& outer) {
  RegionProblem prob;
  const GroupSpec& spec = X.group;
  std::unordered_map<GroupElement, int, GroupElementHash> index;
  for (std::size_t i = 0; i < outer.size(); ++i) index.emplace(outer[i], static_cast<int>(i));
  prob.domains.assign(outer.size(), X.alphabet.symbols);
  prob.by_last_cell.assign(outer.size(), {});

  std::vector<Pattern> realized;
  for (const auto& c : X.forbidden) {
    if (!is_consistent(c, spec)) continue;  // inconsistent codings constrain nothing
    Pattern p = realize(c, spec);
    if (p.empty()) {
      prob.infeasible = true;  // empty support forbids every configuration
      return prob;
    }
    realized.push_back(std::move(p));
  }

  std::unordered_set<GroupElement, GroupElementHash> tried;
  for (const auto& p : realized) {
    tried.clear();
    const GroupElement& t0 = p.cells().front().first;
    GroupElement t0inv = spec.inverse(t0);
    for (const auto& cell : outer) {
      GroupElement g = spec.multiply(cell, t0inv);
      if (!tried.insert(g).second) continue;
      Instance inst;
      bool inside = true;
      for (const auto& [h, v] : p.cells()) {
        auto it = index.find(spec.multiply(g, h));
        if (it == index.end()) {
          inside = false;
          break;
        }
        inst.cell_value.emplace_back(it->second, v);
      }
      if (!inside) continue;
      inst.last_cell = 0;
      for (const auto& [ci, v] : inst.cell_value) inst.last_cell = std::max(inst.last_cell, ci);
      if (inst.cell_value.size() == 1) {
        // Single-cell constraint: prune the domain directly.
        auto& dom = prob.domains[static_cast<std::size_t>(inst.cell_value[0].first)];
        dom.erase(std::remove(dom.begin(), dom.end(), inst.cell_value[0].second), dom.end());
      } else {
        prob.by_last_cell[static_cast<std::size_t>(inst.last_cell)].push_back(std::move(inst));
      }
    }
  }
  return prob;
}

class RegionSearch {
 public:
  RegionSearch(const RegionProblem& prob, std::size_t inner_count, std::int64_t max_patterns)
      : prob_(prob),
        inner_count_(inner_count),
        max_patterns_(max_patterns),
        assignment_(prob.domains.size(), -1) {}

  // Collects every inner assignment that extends to a full valid outer
  // assignment, in lexicographic (cell order, domain order) order.
  std::vector<std::vector<int>> run() {
    results_.clear();
    if (prob_.infeasible) return results_;
    for (const auto& dom : prob_.domains)
      if (dom.empty()) return results_;
    if (inner_count_ == 0) {
      if (prob_.domains.empty() || extend(0)) results_.push_back({});
      return results_;
    }
    descend_inner(0);
    return results_;
  }

 private:
  bool violates(int cell) const {
    for (const auto& inst : prob_.by_last_cell[static_cast<std::size_t>(cell)]) {
      bool fires = true;
      for (const auto& [ci, v] : inst.cell_value) {
        if (assignment_[static_cast<std::size_t>(ci)] != v) {
          fires = false;
          break;
        }
      }
      if (fires) return true;
    }
    return false;
  }

  void descend_inner(int cell) {
    for (int s : prob_.domains[static_cast<std::size_t>(cell)]) {
      assignment_[static_cast<std::size_t>(cell)] = s;
      if (!violates(cell)) {
        if (cell + 1 < static_cast<int>(inner_count_)) {
          descend_inner(cell + 1);
        } else if (inner_count_ == prob_.domains.size() || extend(static_cast<int>(inner_count_))) {
          results_.emplace_back(assignment_.begin(),
                                assignment_.begin() + static_cast<long>(inner_count_));
          if (static_cast<std::int64_t>(results_.size()) > max_patterns_)
            throw ResourceLimitError("locally admissible pattern count exceeds cap");
        }
      }
    }
    assignment_[static_cast<std::size_t>(cell)] = -1;
  }

  // True iff cells [cell, end) admit some valid completion.
  bool extend(int cell) {
    for (int s : prob_.domains[static_cast<std::size_t>(cell)]) {
      assignment_[static_cast<std::size_t>(cell)] = s;
      if (!violates(cell)) {
        if (cell + 1 == static_cast<int>(prob_.domains.size()) || extend(cell + 1)) {
          assignment_[static_cast<std::size_t>(cell)] = -1;
          return true;
        }
      }
    }
    assignment_[static_cast<std::size_t>(cell)] = -1;
    return false;
  }

  const RegionProblem& prob_;
  std::size_t inner_count_;
  std::int64_t max_patterns_;
  std::vector<int> assignment_;
  std::vector<std::vector<int>> results_;
};

}  // namespace

std::vector<Pattern> admissible_patterns(const SftPresentation& X,
                                         const std::vector<GroupElement>& inner,
                                         const std::vector<GroupElement>& outer,
                                         std::int64_t max_patterns) {
  X.check();
  RegionProblem prob = build_region_problem(X, outer);
  RegionSearch search(prob, inner.size(), max_patterns);
  std::vector<Pattern> out;
  for (auto& row : search.run()) {
    std::vector<Pattern::Cell> cells;
    cells.reserve(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) cells.emplace_back(inner[i], row[i]);
    out.push_back(Pattern(X.group, std::move(cells)));
  }
  return out;
}

LocalLanguage locally_admissible(const SftPresentation& X, int n, int m,
                                 std::int64_t max_patterns) {
  Ball inner = X.group.ball(n);
  Ball outer = X.group.ball(n + m);
  LocalLanguage lang;
  lang.radius = n;
  lang.patterns = admissible_patterns(X, inner.elements, outer.elements, max_patterns);
  return lang;
}

Certificate check_empty(const SftPresentation& X, const EmptinessBudget& budget) {
  Certificate cert;
  auto fixed = fixed_point_symbols(X);
  if (!fixed.empty()) {
    cert.verdict = Certificate::Verdict::Nonempty;
    cert.witness_symbol = fixed.front();
    cert.detail = "constant configuration";
    return cert;
  }
  bool is_z = X.group.kind() == GroupSpec::Kind::Lattice && X.group.lattice_dim() == 1;
  if (is_z) {
    ZDecision zd = z_decide(X);
    if (zd.empty()) {
      cert.verdict = Certificate::Verdict::Empty;
      cert.detail = "pruned edge shift is empty";
      for (int n = 0; n <= budget.max_radius; ++n) {
        if (locally_admissible(X, n, 0, budget.max_patterns).patterns.empty()) {
          cert.radius = n;
          break;
        }
      }
      return cert;
    }
    cert.verdict = Certificate::Verdict::Nonempty;
    cert.witness_pattern = zd.witness(X.group);
    cert.detail = "periodic point of the pruned edge shift";
    return cert;
  }
  for (int n = 0; n <= budget.max_radius; ++n) {
    for (int m = 0; m <= budget.max_lookahead; ++m) {
      try {
        if (locally_admissible(X, n, m, budget.max_patterns).patterns.empty()) {
          cert.verdict = Certificate::Verdict::Empty;
          cert.radius = n;
          return cert;
        }
      } catch (const ResourceLimitError&) {
        cert.verdict = Certificate::Verdict::Unknown;
        cert.detail = "pattern budget exhausted at radius " + std::to_string(n);
        return cert;
      }
    }
  }
  cert.verdict = Certificate::Verdict::Unknown;
  cert.detail = "no certificate within radius " + std::to_string(budget.max_radius) +
                ", lookahead " + std::to_string(budget.max_lookahead);
  return cert;
}

}  // namespace subshift
