#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>
#include <unordered_set>

#include "subshift/sft.hpp"

namespace subshift {

namespace {

// A realized forbidden pattern over Z, shifted so offsets start at 0.
struct ZPattern {
  std::vector<std::pair<int, int>> cells;  // (offset, value), offsets in [0, diam]
  int diameter = 0;
  bool empty_support = false;
};

std::vector<ZPattern> realize_z_patterns(const SftPresentation& X) {
  std::vector<ZPattern> out;
  for (const auto& c : X.forbidden) {
    if (!is_consistent(c, X.group)) continue;
    Pattern p = realize(c, X.group);
    ZPattern zp;
    if (p.empty()) {
      zp.empty_support = true;
      out.push_back(zp);
      continue;
    }
    std::int64_t lo = std::numeric_limits<std::int64_t>::max();
    std::int64_t hi = std::numeric_limits<std::int64_t>::min();
    for (const auto& [g, v] : p.cells()) {
      std::int64_t o = g.as_lattice()[0];
      lo = std::min(lo, o);
      hi = std::max(hi, o);
    }
    for (const auto& [g, v] : p.cells())
      zp.cells.emplace_back(static_cast<int>(g.as_lattice()[0] - lo), v);
    std::sort(zp.cells.begin(), zp.cells.end());
    zp.diameter = static_cast<int>(hi - lo);
    out.push_back(std::move(zp));
  }
  return out;
}

bool word_hits_pattern(const std::vector<int>& word, const ZPattern& p) {
  if (p.empty_support) return true;
  int len = static_cast<int>(word.size());
  for (int pos = 0; pos + p.diameter < len; ++pos) {
    bool match = true;
    for (const auto& [off, v] : p.cells) {
      if (word[static_cast<std::size_t>(pos + off)] != v) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

// Tarjan strongly connected components on a small digraph.
struct Scc {
  std::vector<int> comp;  // vertex -> component id
  int count = 0;
};

Scc tarjan(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  Scc scc;
  scc.comp.assign(static_cast<std::size_t>(n), -1);
  std::vector<int> index(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
  std::vector<bool> on_stack(static_cast<std::size_t>(n), false);
  std::vector<int> stack;
  int next_index = 0;
  // Iterative Tarjan to avoid deep recursion.
  struct Frame {
    int v;
    std::size_t edge;
  };
  for (int root = 0; root < n; ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    std::vector<Frame> frames{{root, 0}};
    index[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = next_index++;
    stack.push_back(root);
    on_stack[static_cast<std::size_t>(root)] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adj[static_cast<std::size_t>(f.v)].size()) {
        int w = adj[static_cast<std::size_t>(f.v)][f.edge++];
        if (index[static_cast<std::size_t>(w)] == -1) {
          index[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = next_index++;
          stack.push_back(w);
          on_stack[static_cast<std::size_t>(w)] = true;
          frames.push_back({w, 0});
        } else if (on_stack[static_cast<std::size_t>(w)]) {
          low[static_cast<std::size_t>(f.v)] =
              std::min(low[static_cast<std::size_t>(f.v)], index[static_cast<std::size_t>(w)]);
        }
      } else {
        if (low[static_cast<std::size_t>(f.v)] == index[static_cast<std::size_t>(f.v)]) {
          while (true) {
            int w = stack.back();
            stack.pop_back();
            on_stack[static_cast<std::size_t>(w)] = false;
            scc.comp[static_cast<std::size_t>(w)] = scc.count;
            if (w == f.v) break;
          }
          ++scc.count;
        }
        int v = f.v;
        frames.pop_back();
        if (!frames.empty())
          low[static_cast<std::size_t>(frames.back().v)] =
              std::min(low[static_cast<std::size_t>(frames.back().v)],
                       low[static_cast<std::size_t>(v)]);
      }
    }
  }
  return scc;
}

// Spectral radius of a nonnegative 0/1 adjacency matrix via per-component
// power iteration on M + I (primitive on each nontrivial component).
double spectral_radius(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  if (n == 0) return 0.0;
  Scc scc = tarjan(adj);
  double best = 0.0;
  for (int comp = 0; comp < scc.count; ++comp) {
    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (scc.comp[static_cast<std::size_t>(v)] == comp) verts.push_back(v);
    // Restrict to the component.
    std::unordered_map<int, int> local;
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> ladj(verts.size());
    bool has_edge = false;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      for (int w : adj[static_cast<std::size_t>(verts[i])]) {
        auto it = local.find(w);
        if (it != local.end()) {
          ladj[i].push_back(it->second);
          has_edge = true;
        }
      }
    }
    if (!has_edge) continue;  // trivial component, radius 0
    std::size_t m = verts.size();
    std::vector<double> x(m, 1.0), y(m, 0.0);
    double lo = 0.0, hi = std::numeric_limits<double>::infinity();
    for (int iter = 0; iter < 1000000; ++iter) {
      for (std::size_t i = 0; i < m; ++i) {
        double s = x[i];  // the +I shift keeps the iteration aperiodic
        for (int w : ladj[i]) s += x[static_cast<std::size_t>(w)];
        y[i] = s;
      }
      lo = std::numeric_limits<double>::infinity();
      hi = 0.0;
      for (std::size_t i = 0; i < m; ++i) {
        double r = y[i] / x[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
      }
      double norm = 0.0;
      for (double v : y) norm = std::max(norm, v);
      for (std::size_t i = 0; i < m; ++i) x[i] = y[i] / norm;
      if (hi - lo <= 1e-13 * hi) break;
    }
    best = std::max(best, (lo + hi) / 2.0 - 1.0);
  }
  return best;
}

}  // namespace

ZDecision z_decide(const SftPresentation& X, int min_window) {
  X.check();
  if (X.group.kind() != GroupSpec::Kind::Lattice || X.group.lattice_dim() != 1)
    throw Error("z_decide requires a presentation over Z");
  std::vector<ZPattern> patterns = realize_z_patterns(X);

  ZDecision zd;
  int k = std::max(min_window, 1);
  bool everything_forbidden = false;
  for (const auto& p : patterns) {
    if (p.empty_support) everything_forbidden = true;
    k = std::max(k, p.diameter + 1);
  }
  zd.window_ = k;
  zd.entropy_ = -std::numeric_limits<double>::infinity();
  if (everything_forbidden) return zd;

  double size_estimate = std::pow(static_cast<double>(X.alphabet.size()), k);
  if (size_estimate > 2e7) throw ResourceLimitError("z_decide window alphabet too large");

  // Vertices: admissible length-k windows in lexicographic order.
  std::vector<std::vector<int>> vertices;
  std::vector<int> word(static_cast<std::size_t>(k), 0);
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  while (true) {
    for (int i = 0; i < k; ++i)
      word[static_cast<std::size_t>(i)] = X.alphabet.symbols[idx[static_cast<std::size_t>(i)]];
    bool bad = false;
    for (const auto& p : patterns) {
      if (word_hits_pattern(word, p)) {
        bad = true;
        break;
      }
    }
    if (!bad) vertices.push_back(word);
    int j = k - 1;
    while (j >= 0 && ++idx[static_cast<std::size_t>(j)] == X.alphabet.symbols.size()) {
      idx[static_cast<std::size_t>(j)] = 0;
      --j;
    }
    if (j < 0) break;
  }

  // Edges by overlap; any forbidden pattern spans at most k cells, so it
  // lies inside one of the two endpoint windows, which are admissible.
  std::map<std::vector<int>, int> vertex_index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    vertex_index.emplace(vertices[i], static_cast<int>(i));
  std::vector<std::vector<int>> adj(vertices.size());
  std::vector<std::vector<int>> radj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    std::vector<int> shifted(vertices[i].begin() + 1, vertices[i].end());
    shifted.push_back(0);
    for (int s : X.alphabet.symbols) {
      shifted.back() = s;
      auto it = vertex_index.find(shifted);
      if (it != vertex_index.end()) {
        adj[i].push_back(it->second);
        radj[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(i));
      }
    }
  }

  // Prune vertices not on bi-infinite paths: iterate removal of sources
  // and sinks to the fixpoint.
  std::vector<bool> alive(vertices.size(), true);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (!alive[i]) continue;
      bool has_out = false, has_in = false;
      for (int w : adj[i])
        if (alive[static_cast<std::size_t>(w)]) {
          has_out = true;
          break;
        }
      for (int w : radj[i])
        if (alive[static_cast<std::size_t>(w)]) {
          has_in = true;
          break;
        }
      if (!has_out || !has_in) {
        alive[i] = false;
        changed = true;
      }
    }
  }

  std::vector<int> remap(vertices.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (alive[i]) {
      remap[i] = static_cast<int>(zd.vertices_.size());
      zd.vertices_.push_back(vertices[i]);
    }
  }
  std::vector<std::vector<int>> pruned_adj(zd.vertices_.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!alive[i]) continue;
    for (int w : adj[i]) {
      if (alive[static_cast<std::size_t>(w)]) {
        zd.edges_.emplace_back(remap[i], remap[static_cast<std::size_t>(w)]);
        pruned_adj[static_cast<std::size_t>(remap[i])].push_back(remap[static_cast<std::size_t>(w)]);
      }
    }
  }
  if (!zd.vertices_.empty()) zd.entropy_ = std::log(spectral_radius(pruned_adj));
  return zd;
}

std::vector<std::vector<int>> ZDecision::words_of_length(int len) const {
  std::vector<std::vector<int>> out;
  if (vertices_.empty() || len < 0) return out;
  if (len == 0) {
    out.push_back({});
    return out;
  }
  int k = window_;
  if (len < k) {
    std::set<std::vector<int>> uniq;
    for (const auto& w : vertices_)
      for (int p = 0; p + len <= k; ++p)
        uniq.insert(std::vector<int>(w.begin() + p, w.begin() + p + len));
    out.assign(uniq.begin(), uniq.end());
    return out;
  }
  std::vector<std::vector<int>> adj(vertices_.size());
  for (const auto& [u, v] : edges_) adj[static_cast<std::size_t>(u)].push_back(v);
  // Depth-first extension of each start window by len - k letters.
  std::vector<int> word;
  std::vector<std::pair<int, std::size_t>> stack;  // (vertex, next edge)
  for (std::size_t start = 0; start < vertices_.size(); ++start) {
    word.assign(vertices_[start].begin(), vertices_[start].end());
    stack.assign(1, {static_cast<int>(start), 0});
    while (!stack.empty()) {
      if (static_cast<int>(word.size()) == len) {
        out.push_back(word);
        // Backtrack one step.
        stack.pop_back();
        if (!word.empty() && !stack.empty()) word.pop_back();
        continue;
      }
      auto& [v, e] = stack.back();
      if (e < adj[static_cast<std::size_t>(v)].size()) {
        int w = adj[static_cast<std::size_t>(v)][e++];
        word.push_back(vertices_[static_cast<std::size_t>(w)].back());
        stack.push_back({w, 0});
      } else {
        stack.pop_back();
        if (!stack.empty()) word.pop_back();
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<int>> ZDecision::language(int n) const {
  return words_of_length(2 * n + 1);
}

std::optional<Pattern> ZDecision::witness(const GroupSpec& spec) const {
  if (vertices_.empty()) return std::nullopt;
  std::vector<std::vector<int>> adj(vertices_.size()), radj(vertices_.size());
  for (const auto& [u, v] : edges_) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    radj[static_cast<std::size_t>(v)].push_back(u);
  }
  int k = window_;
  int target = 2 * k + 1;
  std::vector<int> word(vertices_[0].begin(), vertices_[0].end());
  int right = 0;  // current rightmost window
  int left = 0;   // current leftmost window
  while (static_cast<int>(word.size()) < target) {
    int next = adj[static_cast<std::size_t>(right)].front();
    word.push_back(vertices_[static_cast<std::size_t>(next)].back());
    right = next;
    if (static_cast<int>(word.size()) >= target) break;
    int prev = radj[static_cast<std::size_t>(left)].front();
    word.insert(word.begin(), vertices_[static_cast<std::size_t>(prev)].front());
    left = prev;
  }
  std::vector<Pattern::Cell> cells;
  int lo = -(static_cast<int>(word.size()) - 1) / 2;
  for (std::size_t i = 0; i < word.size(); ++i)
    cells.emplace_back(GroupElement::lattice({lo + static_cast<std::int64_t>(i)}), word[i]);
  return Pattern(spec, std::move(cells));
}

namespace {

std::vector<GroupElement> box_cells(int d, std::int64_t lo, std::int64_t hi) {
  // Row-major lexicographic enumeration of [lo, hi)^d.
  std::vector<GroupElement> out;
  std::vector<std::int64_t> v(static_cast<std::size_t>(d), lo);
  while (true) {
    out.push_back(GroupElement::lattice(v));
    int j = d - 1;
    while (j >= 0 && ++v[static_cast<std::size_t>(j)] == hi) {
      v[static_cast<std::size_t>(j)] = lo;
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

}  // namespace

double entropy_upper_bound(const SftPresentation& X, int n, int m, std::int64_t max_patterns) {
  if (X.group.kind() != GroupSpec::Kind::Lattice)
    throw Error("entropy_upper_bound requires a presentation over Z^d");
  if (n < 1) throw Error("entropy_upper_bound requires n >= 1");
  int d = X.group.lattice_dim();
  std::vector<GroupElement> inner = box_cells(d, 0, n);
  std::vector<GroupElement> cells = inner;
  if (m > 0) {
    std::unordered_set<GroupElement, GroupElementHash> seen(inner.begin(), inner.end());
    for (const auto& g : box_cells(d, -static_cast<std::int64_t>(m), n + m))
      if (!seen.count(g)) cells.push_back(g);
  }
  std::size_t count = admissible_patterns(X, inner, cells, max_patterns).size();
  double vol = std::pow(static_cast<double>(n), d);
  if (count == 0) return -std::numeric_limits<double>::infinity();
  return std::log(static_cast<double>(count)) / vol;
}

DistanceResult subshift_distance(const SftPresentation& X, const SftPresentation& Y,
                                 int radius_cap) {
  ZDecision zx = z_decide(X);
  ZDecision zy = z_decide(Y);
  DistanceResult res;
  if (zx.empty() && zy.empty()) {
    res.value = 0.0;
    res.exact_zero = true;
    res.agree_radius = radius_cap;
    return res;
  }
  int agree = -1;
  for (int n = 0; n <= radius_cap; ++n) {
    if (zx.language(n) != zy.language(n)) break;
    agree = n;
  }
  res.agree_radius = agree;
  if (agree < 0) {
    res.value = 2.0;  // even L_0 differs; the inf runs over an empty set
    return res;
  }
  // Exact equality: the pruned edge shifts on a common window coincide.
  int k = std::max(zx.window(), zy.window());
  ZDecision cx = z_decide(X, k);
  ZDecision cy = z_decide(Y, k);
  auto ex = cx.edges();
  auto ey = cy.edges();
  std::sort(ex.begin(), ex.end());
  std::sort(ey.begin(), ey.end());
  if (cx.vertex_words() == cy.vertex_words() && ex == ey) {
    res.value = 0.0;
    res.exact_zero = true;
    return res;
  }
  res.value = std::pow(2.0, -agree);
  return res;
}

SftPresentation rice_reduction(const SftPresentation& X_plus, const SftPresentation& X_minus,
                               const SftPresentation& input) {
  return disjoint_union(X_plus, product(input, X_minus));
}

SoficPresentation sofic_reduction(const SoficPresentation& Y_plus, const SftPresentation& input) {
  if (Y_plus.base.group != input.group)
    throw GroupMismatchError("sofic reduction requires a common group");
  SoficPresentation out;
  out.base = product(Y_plus.base, input);
  out.local_support = Y_plus.local_support;
  out.target = Y_plus.target;
  // mu'(p) = mu(pi_1 . p), entries enumerated over the product alphabet.
  std::size_t k = out.local_support.size();
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<int> key(k), first(k);
    for (std::size_t i = 0; i < k; ++i) {
      key[i] = out.base.alphabet.symbols[idx[i]];
      first[i] = unpair_symbol(key[i]).first;
    }
    out.local_map.emplace_back(std::move(key), Y_plus.apply_local(first));
    std::size_t j = 0;
    while (j < k && ++idx[j] == out.base.alphabet.symbols.size()) idx[j++] = 0;
    if (j == k) break;
  }
  return out;
}

std::vector<std::vector<int>> sofic_image_language_z(const SoficPresentation& Y, int n) {
  const GroupSpec& spec = Y.base.group;
  if (spec.kind() != GroupSpec::Kind::Lattice || spec.lattice_dim() != 1)
    throw Error("sofic image language requires a presentation over Z");
  std::vector<std::int64_t> offsets;
  std::int64_t reach = 0;
  for (const auto& w : Y.local_support) {
    std::int64_t o = spec.evaluate(w).as_lattice()[0];
    offsets.push_back(o);
    reach = std::max(reach, std::abs(o));
  }
  ZDecision zd = z_decide(Y.base);
  int half = n + static_cast<int>(reach);
  std::set<std::vector<int>> images;
  for (const auto& word : zd.language(half)) {
    std::vector<int> img;
    img.reserve(static_cast<std::size_t>(2 * n + 1));
    for (int g = -n; g <= n; ++g) {
      std::vector<int> key;
      key.reserve(offsets.size());
      for (std::int64_t o : offsets)
        key.push_back(word[static_cast<std::size_t>(g + o + half)]);
      img.push_back(Y.apply_local(key));
    }
    images.insert(std::move(img));
  }
  return {images.begin(), images.end()};
}

namespace {

struct NearestNeighborRules {
  std::vector<int> unary_forbidden;  // symbols forbidden outright
  // pair_forbidden[gen][a][b]: coding {eps -> a, gen -> b} present.
  std::vector<std::set<std::pair<int, int>>> pair_forbidden;
  bool everything_forbidden = false;
};

NearestNeighborRules nn_rules(const SftPresentation& X) {
  NearestNeighborRules rules;
  rules.pair_forbidden.assign(X.group.generators().size(), {});
  for (const auto& c : X.forbidden) {
    std::vector<std::pair<int, int>> cells;  // (generator index or -1 for eps, value)
    for (std::size_t i = 0; i < c.support.size(); ++i) {
      std::string w = c.support[i];
      std::vector<std::string> toks;
      std::string tok;
      for (char ch : w) {
        if (ch == ' ') {
          if (!tok.empty()) toks.push_back(tok), tok.clear();
        } else
          tok += ch;
      }
      if (!tok.empty()) toks.push_back(tok);
      if (toks.empty()) {
        cells.emplace_back(-1, c.values[i]);
      } else if (toks.size() == 1) {
        cells.emplace_back(X.group.generator_index(toks[0]), c.values[i]);
      } else {
        throw NotNearestNeighborError("forbidden coding support word longer than one generator");
      }
    }
    if (cells.empty()) {
      rules.everything_forbidden = true;
    } else if (cells.size() == 1) {
      rules.unary_forbidden.push_back(cells[0].second);
    } else if (cells.size() == 2) {
      int eps_at = cells[0].first == -1 ? 0 : (cells[1].first == -1 ? 1 : -1);
      if (eps_at == -1)
        throw NotNearestNeighborError("two-cell forbidden coding must have support {eps, s}");
      int sidx = cells[1 - eps_at].first;
      rules.pair_forbidden[static_cast<std::size_t>(sidx)].insert(
          {cells[static_cast<std::size_t>(eps_at)].second,
           cells[static_cast<std::size_t>(1 - eps_at)].second});
    } else {
      throw NotNearestNeighborError("forbidden coding support has more than two cells");
    }
  }
  return rules;
}

}  // namespace

std::optional<Pattern> greedy_free_configuration(const SftPresentation& X, int n) {
  X.check();
  if (X.group.kind() != GroupSpec::Kind::Free)
    throw Error("greedy configuration requires a free-group presentation");
  NearestNeighborRules rules = nn_rules(X);
  if (rules.everything_forbidden) return std::nullopt;

  const auto& gens = X.group.generators();
  std::vector<int> inverse_gen(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    inverse_gen[i] = X.group.generator_index(gens[i].inverse_name);

  // A pattern {1 -> a, s -> b} is forbidden when either orientation is
  // listed: {eps -> a, s -> b} or {eps -> b, s^-1 -> a}.
  auto allowed = [&](std::size_t sidx, int a, int b) {
    if (rules.pair_forbidden[sidx].count({a, b})) return false;
    if (rules.pair_forbidden[static_cast<std::size_t>(inverse_gen[sidx])].count({b, a}))
      return false;
    return true;
  };

  // Arc-consistency fixpoint.
  std::vector<int> domain;
  for (int a : X.alphabet.symbols) {
    bool bad = false;
    for (int u : rules.unary_forbidden)
      if (u == a) bad = true;
    if (!bad) domain.push_back(a);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> keep;
    for (int a : domain) {
      bool ok = true;
      for (std::size_t s = 0; s < gens.size() && ok; ++s) {
        bool has_successor = false;
        for (int b : domain) {
          if (allowed(s, a, b)) {
            has_successor = true;
            break;
          }
        }
        ok = has_successor;
      }
      if (ok)
        keep.push_back(a);
      else
        changed = true;
    }
    domain = std::move(keep);
  }
  if (domain.empty()) return std::nullopt;

  // The greedy recursion outward over the tree: x(1) = min A', then for
  // g = h s on each sphere, x(g) = min b with {1 -> x(h), s -> b} not
  // forbidden.
  Ball ball = X.group.ball(n);
  std::unordered_map<GroupElement, int, GroupElementHash> values;
  values.emplace(X.group.identity(), domain.front());
  std::vector<Pattern::Cell> cells;
  for (const auto& g : ball.elements) {
    const auto& w = g.as_free_word();
    if (w.empty()) {
      cells.emplace_back(g, domain.front());
      continue;
    }
    GroupElement::FreeWord parent_word(w.begin(), w.end() - 1);
    GroupElement parent = GroupElement::free_word(std::move(parent_word));
    std::int32_t letter = w.back();
    std::size_t sidx =
        static_cast<std::size_t>(2 * (std::abs(letter) - 1) + (letter > 0 ? 0 : 1));
    int pv = values.at(parent);
    int chosen = -1;
    for (int b : domain) {
      if (allowed(sidx, pv, b)) {
        chosen = b;
        break;
      }
    }
    values.emplace(g, chosen);
    cells.emplace_back(g, chosen);
  }
  return Pattern(X.group, std::move(cells));
}

}  // namespace subshift
