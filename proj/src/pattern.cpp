#include "subshift/pattern.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace subshift {

Alphabet::Alphabet(std::vector<int> syms) : symbols(std::move(syms)) {
  if (symbols.empty()) throw Error("alphabet must be nonempty");
  std::unordered_set<int> seen;
  for (int s : symbols) {
    if (s < 0) throw Error("alphabet symbols must be natural numbers");
    if (!seen.insert(s).second) throw Error("alphabet symbols must be distinct");
  }
}

bool Alphabet::contains(int s) const {
  return std::find(symbols.begin(), symbols.end(), s) != symbols.end();
}

PatternCoding::PatternCoding(std::vector<std::string> sup, std::vector<int> vals)
    : support(std::move(sup)), values(std::move(vals)) {
  if (support.size() != values.size())
    throw Error("pattern coding support and values must have equal length");
  std::unordered_set<std::string> seen;
  for (const auto& w : support)
    if (!seen.insert(w).second)
      throw Error("pattern coding support words must be pairwise distinct");
}

Pattern::Pattern(const GroupSpec& spec, std::vector<Cell> cells) : cells_(std::move(cells)) {
  std::sort(cells_.begin(), cells_.end(),
            [&spec](const Cell& a, const Cell& b) { return spec.less(a.first, b.first); });
  for (std::size_t i = 1; i < cells_.size(); ++i)
    if (cells_[i].first == cells_[i - 1].first)
      throw Error("pattern support must be duplicate-free");
}

std::optional<int> Pattern::value_at(const GroupElement& g) const {
  for (const auto& [h, v] : cells_)
    if (h == g) return v;
  return std::nullopt;
}

bool Pattern::operator<(const Pattern& o) const {
  // Value-wise comparison for equal-size supports, used for deterministic
  // ordering of local languages; falls back to size.
  if (cells_.size() != o.cells_.size()) return cells_.size() < o.cells_.size();
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i].second != o.cells_[i].second)
      return cells_[i].second < o.cells_[i].second;
  }
  return false;
}

bool is_consistent(const PatternCoding& c, const GroupSpec& spec) {
  std::unordered_map<GroupElement, int, GroupElementHash> seen;
  for (std::size_t i = 0; i < c.support.size(); ++i) {
    GroupElement g = spec.evaluate(c.support[i]);
    auto [it, inserted] = seen.emplace(std::move(g), c.values[i]);
    if (!inserted && it->second != c.values[i]) return false;
  }
  return true;
}

Pattern realize(const PatternCoding& c, const GroupSpec& spec) {
  std::unordered_map<GroupElement, int, GroupElementHash> cells;
  for (std::size_t i = 0; i < c.support.size(); ++i) {
    GroupElement g = spec.evaluate(c.support[i]);
    auto [it, inserted] = cells.emplace(std::move(g), c.values[i]);
    if (!inserted && it->second != c.values[i])
      throw InconsistentCodingError("pattern coding is inconsistent over this group");
  }
  std::vector<Pattern::Cell> out(cells.begin(), cells.end());
  return Pattern(spec, std::move(out));
}

Pattern translate(const Pattern& p, const GroupElement& g, const GroupSpec& spec) {
  std::vector<Pattern::Cell> out;
  out.reserve(p.size());
  for (const auto& [h, v] : p.cells()) out.emplace_back(spec.multiply(g, h), v);
  return Pattern(spec, std::move(out));
}

bool fits_inside(const Pattern& p, const Pattern& q, const GroupSpec& spec) {
  if (p.empty()) return true;
  const GroupElement& t0 = p.cells().front().first;
  GroupElement t0inv = spec.inverse(t0);
  std::unordered_map<GroupElement, int, GroupElementHash> qmap;
  for (const auto& [h, v] : q.cells()) qmap.emplace(h, v);
  std::unordered_set<GroupElement, GroupElementHash> tried;
  for (const auto& [s, sv] : q.cells()) {
    // Candidate translations g = s * t0^-1 for every anchor cell s of q.
    GroupElement g = spec.multiply(s, t0inv);
    if (!tried.insert(g).second) continue;
    bool ok = true;
    for (const auto& [h, v] : p.cells()) {
      auto it = qmap.find(spec.multiply(g, h));
      if (it == qmap.end() || it->second != v) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

PatternCoding coding_of_pattern(const Pattern& p, const GroupSpec& spec) {
  std::vector<std::string> support;
  std::vector<int> values;
  support.reserve(p.size());
  values.reserve(p.size());
  for (const auto& [g, v] : p.cells()) {
    support.push_back(spec.word_for(g));
    values.push_back(v);
  }
  return PatternCoding(std::move(support), std::move(values));
}

}  // namespace subshift
