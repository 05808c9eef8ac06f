#include "subshift/group.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace subshift {

namespace {

std::size_t hash_combine(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::vector<std::string> split_word(const std::string& word) {
  std::vector<std::string> tokens;
  std::istringstream in(word);
  std::string tok;
  while (in >> tok) tokens.push_back(tok);
  return tokens;
}

int letter_rank(std::int32_t letter) {
  // a- < a < b- < b < ...
  int idx = std::abs(letter) - 1;
  return 2 * idx + (letter > 0 ? 1 : 0);
}

}  // namespace

GroupElement GroupElement::pair(GroupElement l, GroupElement r) {
  Pair p{std::make_shared<const GroupElement>(std::move(l)),
         std::make_shared<const GroupElement>(std::move(r))};
  return GroupElement(Value(std::move(p)));
}

std::size_t GroupElement::hash() const {
  std::size_t h = value_.index();
  switch (value_.index()) {
    case 0: {
      for (auto x : std::get<Lattice>(value_))
        h = hash_combine(h, std::hash<std::int64_t>{}(x));
      break;
    }
    case 1: {
      for (auto x : std::get<FreeWord>(value_))
        h = hash_combine(h, std::hash<std::int32_t>{}(x));
      break;
    }
    case 2:
      h = hash_combine(h, std::hash<std::int64_t>{}(std::get<std::int64_t>(value_)));
      break;
    case 3: {
      const auto& p = std::get<Pair>(value_);
      h = hash_combine(h, p.left->hash());
      h = hash_combine(h, p.right->hash());
      break;
    }
  }
  return h;
}

GroupSpec GroupSpec::lattice(int dim) {
  if (dim < 1) throw Error("lattice dimension must be positive");
  GroupSpec s{Raw{}};
  s.kind_ = Kind::Lattice;
  s.param_ = dim;
  s.build_generators();
  return s;
}

GroupSpec GroupSpec::free_group(int rank) {
  if (rank < 1) throw Error("free rank must be positive");
  GroupSpec s{Raw{}};
  s.kind_ = Kind::Free;
  s.param_ = rank;
  s.build_generators();
  return s;
}

GroupSpec GroupSpec::finite(std::vector<std::vector<int>> table) {
  const int n = static_cast<int>(table.size());
  if (n < 1) throw Error("finite group table must be nonempty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error("finite group table must be square");
    for (int v : row)
      if (v < 0 || v >= n) throw Error("finite group table entry out of range");
  }
  // Identity: the unique e with e*x = x*e = x for all x.
  int id = -1;
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = table[e][x] == x && table[x][e] == x;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw Error("finite group table has no identity");
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (table[x][y] == id && table[y][x] == id) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] < 0) throw Error("finite group table has a non-invertible element");
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (table[table[x][y]][z] != table[x][table[y][z]])
          throw Error("finite group table is not associative");
  GroupSpec s{Raw{}};
  s.kind_ = Kind::Finite;
  s.table_ = std::move(table);
  s.finite_identity_ = id;
  s.finite_inverse_ = std::move(inv);
  s.build_generators();
  return s;
}

GroupSpec GroupSpec::product(GroupSpec left, GroupSpec right) {
  GroupSpec s{Raw{}};
  s.kind_ = Kind::Product;
  s.left_ = std::make_shared<const GroupSpec>(std::move(left));
  s.right_ = std::make_shared<const GroupSpec>(std::move(right));
  s.build_generators();
  return s;
}

void GroupSpec::build_generators() {
  generators_.clear();
  switch (kind_) {
    case Kind::Lattice: {
      for (int i = 0; i < param_; ++i) {
        std::string base = "x" + std::to_string(i + 1);
        GroupElement::Lattice plus(param_, 0), minus(param_, 0);
        plus[i] = 1;
        minus[i] = -1;
        generators_.push_back({base, base + "-", GroupElement::lattice(plus)});
        generators_.push_back({base + "-", base, GroupElement::lattice(minus)});
      }
      break;
    }
    case Kind::Free: {
      for (int i = 0; i < param_; ++i) {
        std::string base(1, static_cast<char>('a' + i));
        generators_.push_back(
            {base, base + "-", GroupElement::free_word({static_cast<std::int32_t>(i + 1)})});
        generators_.push_back(
            {base + "-", base, GroupElement::free_word({static_cast<std::int32_t>(-(i + 1))})});
      }
      break;
    }
    case Kind::Finite: {
      const int n = static_cast<int>(table_.size());
      for (int x = 0; x < n; ++x) {
        if (x == finite_identity_) continue;
        std::string name = "g" + std::to_string(x < finite_identity_ ? x + 1 : x);
        int ix = finite_inverse_[x];
        std::string iname = "g" + std::to_string(ix < finite_identity_ ? ix + 1 : ix);
        generators_.push_back({name, iname, GroupElement::finite(x)});
      }
      break;
    }
    case Kind::Product: {
      for (const auto& g : left_->generators())
        generators_.push_back({"l." + g.name, "l." + g.inverse_name,
                               GroupElement::pair(g.element, right_->identity())});
      for (const auto& g : right_->generators())
        generators_.push_back({"r." + g.name, "r." + g.inverse_name,
                               GroupElement::pair(left_->identity(), g.element)});
      break;
    }
  }
}

int GroupSpec::generator_index(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return static_cast<int>(i);
  throw UnknownGeneratorError(name);
}

GroupElement GroupSpec::identity() const {
  switch (kind_) {
    case Kind::Lattice:
      return GroupElement::lattice(GroupElement::Lattice(param_, 0));
    case Kind::Free:
      return GroupElement::free_word({});
    case Kind::Finite:
      return GroupElement::finite(finite_identity_);
    case Kind::Product:
      return GroupElement::pair(left_->identity(), right_->identity());
  }
  throw Error("bad kind");
}

GroupElement GroupSpec::multiply(const GroupElement& a, const GroupElement& b) const {
  switch (kind_) {
    case Kind::Lattice: {
      GroupElement::Lattice out = a.as_lattice();
      const auto& bv = b.as_lattice();
      for (int i = 0; i < param_; ++i) out[i] += bv[i];
      return GroupElement::lattice(std::move(out));
    }
    case Kind::Free: {
      GroupElement::FreeWord out = a.as_free_word();
      for (auto letter : b.as_free_word()) {
        if (!out.empty() && out.back() == -letter)
          out.pop_back();
        else
          out.push_back(letter);
      }
      return GroupElement::free_word(std::move(out));
    }
    case Kind::Finite:
      return GroupElement::finite(
          table_[static_cast<std::size_t>(a.as_finite())][static_cast<std::size_t>(b.as_finite())]);
    case Kind::Product: {
      const auto& ap = a.as_pair();
      const auto& bp = b.as_pair();
      return GroupElement::pair(left_->multiply(*ap.left, *bp.left),
                                right_->multiply(*ap.right, *bp.right));
    }
  }
  throw Error("bad kind");
}

GroupElement GroupSpec::inverse(const GroupElement& a) const {
  switch (kind_) {
    case Kind::Lattice: {
      GroupElement::Lattice out = a.as_lattice();
      for (auto& x : out) x = -x;
      return GroupElement::lattice(std::move(out));
    }
    case Kind::Free: {
      const auto& w = a.as_free_word();
      GroupElement::FreeWord out(w.rbegin(), w.rend());
      for (auto& letter : out) letter = -letter;
      return GroupElement::free_word(std::move(out));
    }
    case Kind::Finite:
      return GroupElement::finite(finite_inverse_[static_cast<std::size_t>(a.as_finite())]);
    case Kind::Product: {
      const auto& p = a.as_pair();
      return GroupElement::pair(left_->inverse(*p.left), right_->inverse(*p.right));
    }
  }
  throw Error("bad kind");
}

std::int64_t GroupSpec::word_length(const GroupElement& g) const {
  switch (kind_) {
    case Kind::Lattice: {
      std::int64_t n = 0;
      for (auto x : g.as_lattice()) n += std::abs(x);
      return n;
    }
    case Kind::Free:
      return static_cast<std::int64_t>(g.as_free_word().size());
    case Kind::Finite:
      return g.as_finite() == finite_identity_ ? 0 : 1;
    case Kind::Product: {
      const auto& p = g.as_pair();
      return left_->word_length(*p.left) + right_->word_length(*p.right);
    }
  }
  throw Error("bad kind");
}

int GroupSpec::compare(const GroupElement& a, const GroupElement& b) const {
  std::int64_t la = word_length(a), lb = word_length(b);
  if (la != lb) return la < lb ? -1 : 1;
  switch (kind_) {
    case Kind::Lattice: {
      const auto& av = a.as_lattice();
      const auto& bv = b.as_lattice();
      for (int i = 0; i < param_; ++i) {
        if (av[i] != bv[i]) return av[i] < bv[i] ? -1 : 1;
      }
      return 0;
    }
    case Kind::Free: {
      const auto& aw = a.as_free_word();
      const auto& bw = b.as_free_word();
      for (std::size_t i = 0; i < aw.size(); ++i) {
        int ra = letter_rank(aw[i]), rb = letter_rank(bw[i]);
        if (ra != rb) return ra < rb ? -1 : 1;
      }
      return 0;
    }
    case Kind::Finite: {
      auto ai = a.as_finite(), bi = b.as_finite();
      return ai == bi ? 0 : (ai < bi ? -1 : 1);
    }
    case Kind::Product: {
      const auto& ap = a.as_pair();
      const auto& bp = b.as_pair();
      int c = left_->compare(*ap.left, *bp.left);
      if (c != 0) return c;
      return right_->compare(*ap.right, *bp.right);
    }
  }
  throw Error("bad kind");
}

GroupElement GroupSpec::evaluate_tokens(const std::vector<std::string>& tokens) const {
  GroupElement acc = identity();
  for (const auto& tok : tokens) {
    int idx = generator_index(tok);
    acc = multiply(acc, generators_[static_cast<std::size_t>(idx)].element);
  }
  return acc;
}

GroupElement GroupSpec::evaluate(const std::string& word) const {
  return evaluate_tokens(split_word(word));
}

bool GroupSpec::word_problem(const std::string& word) const {
  return evaluate(word) == identity();
}

std::string GroupSpec::word_for(const GroupElement& g) const {
  std::string out;
  auto append = [&out](const std::string& tok) {
    if (!out.empty()) out += ' ';
    out += tok;
  };
  switch (kind_) {
    case Kind::Lattice: {
      const auto& v = g.as_lattice();
      for (int i = 0; i < param_; ++i) {
        std::string base = "x" + std::to_string(i + 1);
        for (std::int64_t k = 0; k < v[i]; ++k) append(base);
        for (std::int64_t k = 0; k < -v[i]; ++k) append(base + "-");
      }
      return out;
    }
    case Kind::Free: {
      for (auto letter : g.as_free_word()) {
        std::string base(1, static_cast<char>('a' + std::abs(letter) - 1));
        append(letter > 0 ? base : base + "-");
      }
      return out;
    }
    case Kind::Finite: {
      if (g.as_finite() == finite_identity_) return out;
      for (const auto& gen : generators_)
        if (gen.element == g) return gen.name;
      throw Error("finite element out of range");
    }
    case Kind::Product: {
      const auto& p = g.as_pair();
      std::string lw = left_->word_for(*p.left);
      std::string rw = right_->word_for(*p.right);
      std::istringstream lin(lw), rin(rw);
      std::string tok;
      while (lin >> tok) append("l." + tok);
      while (rin >> tok) append("r." + tok);
      return out;
    }
  }
  throw Error("bad kind");
}

Ball GroupSpec::ball(int n, std::size_t cap) const {
  if (n < 0) throw Error("ball radius must be nonnegative");
  Ball b;
  b.radius = n;
  std::unordered_set<GroupElement, GroupElementHash> seen;
  std::vector<GroupElement> layer{identity()};
  seen.insert(identity());
  b.elements.push_back(identity());
  for (int k = 1; k <= n; ++k) {
    std::vector<GroupElement> next;
    for (const auto& g : layer) {
      for (const auto& gen : generators_) {
        GroupElement h = multiply(g, gen.element);
        if (seen.insert(h).second) {
          next.push_back(std::move(h));
          if (seen.size() > cap)
            throw ResourceLimitError("ball exceeds element cap");
        }
      }
    }
    std::sort(next.begin(), next.end(),
              [this](const GroupElement& a, const GroupElement& b2) { return less(a, b2); });
    for (const auto& g : next) b.elements.push_back(g);
    if (next.empty()) break;  // finite group exhausted
    layer = std::move(next);
  }
  return b;
}

bool GroupSpec::is_finite_group() const {
  switch (kind_) {
    case Kind::Lattice:
    case Kind::Free:
      return false;
    case Kind::Finite:
      return true;
    case Kind::Product:
      return left_->is_finite_group() && right_->is_finite_group();
  }
  return false;
}

bool GroupSpec::operator==(const GroupSpec& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Lattice:
    case Kind::Free:
      return param_ == o.param_;
    case Kind::Finite:
      return table_ == o.table_;
    case Kind::Product:
      return *left_ == *o.left_ && *right_ == *o.right_;
  }
  return false;
}

void Numbering::grow_to_radius(int n) const {
  if (layer_end_.empty()) {
    elements_.push_back(spec_.identity());
    layer_end_.push_back(1);
  }
  while (static_cast<int>(layer_end_.size()) - 1 < n) {
    int radius = static_cast<int>(layer_end_.size());
    Ball b = spec_.ball(radius, cap_);
    if (static_cast<std::int64_t>(b.elements.size()) == layer_end_.back()) {
      // Finite group exhausted; repeat the boundary.
      layer_end_.push_back(layer_end_.back());
      continue;
    }
    for (std::size_t i = static_cast<std::size_t>(layer_end_.back()); i < b.elements.size(); ++i)
      elements_.push_back(b.elements[i]);
    layer_end_.push_back(static_cast<std::int64_t>(b.elements.size()));
  }
}

void Numbering::grow_to_size(std::int64_t size) const {
  grow_to_radius(0);
  while (static_cast<std::int64_t>(elements_.size()) < size) {
    std::int64_t before = static_cast<std::int64_t>(elements_.size());
    grow_to_radius(static_cast<int>(layer_end_.size()));
    if (static_cast<std::int64_t>(elements_.size()) == before)
      throw ResourceLimitError("numbering index beyond a finite group's order");
  }
}

GroupElement Numbering::element_at(std::int64_t index) const {
  if (index < 0) throw Error("numbering index must be nonnegative");
  grow_to_size(index + 1);
  return elements_[static_cast<std::size_t>(index)];
}

std::int64_t Numbering::index_of(const GroupElement& g) const {
  int n = static_cast<int>(spec_.word_length(g));
  grow_to_radius(n);
  std::int64_t lo = n == 0 ? 0 : layer_end_[static_cast<std::size_t>(n - 1)];
  std::int64_t hi = layer_end_[static_cast<std::size_t>(n)];
  auto begin = elements_.begin() + lo;
  auto end = elements_.begin() + hi;
  auto it = std::lower_bound(begin, end, g,
                             [this](const GroupElement& a, const GroupElement& b) {
                               return spec_.less(a, b);
                             });
  if (it == end || !(*it == g)) throw Error("element not found in numbering layer");
  return lo + (it - begin);
}

std::int64_t Numbering::ball_size(int n) const {
  grow_to_radius(n);
  return layer_end_[static_cast<std::size_t>(n)];
}

}  // namespace subshift
