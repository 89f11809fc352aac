#include "combalg/species.hpp"

#include <algorithm>
#include <stdexcept>

#include "combalg/combinatorics.hpp"

namespace combalg {

CommSpecies::CommSpecies(int dim, CountFn counts)
    : dim_(dim),
      counts_(std::move(counts)),
      cache_(std::make_shared<std::map<MultiIndex, Integer>>()) {
  if (dim < 1) throw std::invalid_argument("species: dimension must be >= 1");
}

CommSpecies CommSpecies::from_table(int dim, const std::map<MultiIndex, Integer>& table) {
  return CommSpecies(dim, [table](const MultiIndex& a) -> Integer {
    auto it = table.find(a);
    return it == table.end() ? Integer(0) : it->second;
  });
}

Integer CommSpecies::count(const MultiIndex& a) const {
  if (static_cast<int>(a.size()) != dim_)
    throw std::invalid_argument("species: content dimension mismatch");
  for (int e : a)
    if (e < 0) throw std::invalid_argument("species: negative content");
  auto it = cache_->find(a);
  if (it != cache_->end()) return it->second;
  Integer v = counts_(a);
  (*cache_)[a] = v;
  return v;
}

CommSpecies CommSpecies::with_structure_gen(StructureGen g) const {
  CommSpecies r = *this;
  r.structure_gen_ = std::move(g);
  return r;
}

CommSpecies CommSpecies::operator+(const CommSpecies& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("species: dimension mismatch");
  CommSpecies f = *this, g = o;
  return CommSpecies(dim_, [f, g](const MultiIndex& a) { return f.count(a) + g.count(a); });
}

CommSpecies CommSpecies::operator*(const CommSpecies& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("species: dimension mismatch");
  CommSpecies f = *this, g = o;
  int d = dim_;
  // Structures split the colored set into an ordered pair of complementary
  // subsets; at the count level this is the binomial convolution.
  return CommSpecies(d, [f, g, d](const MultiIndex& a) {
    Integer total = 0;
    MultiIndex b(d, 0);
    auto rec = [&](auto&& self, int pos) -> void {
      if (pos == d) {
        Integer ways = 1;
        for (int i = 0; i < d; ++i) ways *= binomial(a[i], b[i]);
        total += ways * f.count(b) * g.count(sub(a, b));
        return;
      }
      for (int v = 0; v <= a[pos]; ++v) {
        b[pos] = v;
        self(self, pos + 1);
      }
    };
    rec(rec, 0);
    return total;
  });
}

CommSpecies CommSpecies::compose(const std::vector<CommSpecies>& args) const {
  if (static_cast<int>(args.size()) != dim_)
    throw std::invalid_argument("species: compose needs one inner species per color");
  int adim = args[0].dim();
  for (const auto& g : args) {
    if (g.dim() != adim) throw std::invalid_argument("species: compose dimension mismatch");
    if (g.count(zero_index(adim)) != 0)
      throw std::invalid_argument("species: inner species must vanish on the empty set");
  }
  CommSpecies f = *this;
  std::vector<CommSpecies> gs = args;
  int fdim = dim_;
  // Partitional composition on a concrete colored set: choose a partition,
  // color each block, put an outer structure on the colored block set and an
  // inner structure on every block.
  return CommSpecies(adim, [f, gs, fdim, adim](const MultiIndex& a) -> Integer {
    std::vector<int> colors;
    for (int i = 0; i < adim; ++i)
      for (int k = 0; k < a[i]; ++k) colors.push_back(i);
    int m = static_cast<int>(colors.size());
    Integer total = 0;
    for (const SetPartition& p : set_partitions(m)) {
      int r = static_cast<int>(p.size());
      std::vector<MultiIndex> block_content(r, MultiIndex(adim, 0));
      for (int b = 0; b < r; ++b)
        for (int e : p[b]) block_content[b][colors[e - 1]] += 1;
      std::vector<int> g(r, 0);
      auto rec = [&](auto&& self, int pos, Integer acc) -> void {
        if (acc == 0) return;
        if (pos == r) {
          MultiIndex outer(fdim, 0);
          for (int b = 0; b < r; ++b) outer[g[b]] += 1;
          total += acc * f.count(outer);
          return;
        }
        for (int c = 0; c < fdim; ++c) {
          g[pos] = c;
          self(self, pos + 1, acc * gs[c].count(block_content[pos]));
        }
      };
      rec(rec, 0, 1);
    }
    return total;
  });
}

CommSpecies CommSpecies::derivative(int i) const {
  if (i < 1 || i > dim_) throw std::invalid_argument("species: derivative color out of range");
  CommSpecies f = *this;
  return CommSpecies(dim_, [f, i](const MultiIndex& a) {
    MultiIndex b = a;
    b[i - 1] += 1;
    return f.count(b);
  });
}

CommSpecies CommSpecies::positive_part() const {
  CommSpecies f = *this;
  return CommSpecies(dim_, [f](const MultiIndex& a) {
    return total_degree(a) == 0 ? Integer(0) : f.count(a);
  });
}

CommSeries CommSpecies::valuation(int trunc) const {
  CommSeries r(dim_, trunc);
  for (const MultiIndex& a : multi_indices_up_to(dim_, trunc)) {
    Integer c = count(a);
    if (c != 0) r.set_coeff(a, Rational(c, multi_factorial(a)));
  }
  return r;
}

CommSpecies CommSpecies::one(int dim) {
  return CommSpecies(dim, [](const MultiIndex& a) {
    return total_degree(a) == 0 ? Integer(1) : Integer(0);
  });
}

CommSpecies CommSpecies::singleton(int dim, int i) {
  if (i < 1 || i > dim) throw std::invalid_argument("species: singleton color out of range");
  return CommSpecies(dim, [dim, i](const MultiIndex& a) {
    return a == unit_index(dim, i) ? Integer(1) : Integer(0);
  });
}

CommSpecies CommSpecies::exponential(int dim) {
  return CommSpecies(dim, [](const MultiIndex&) { return Integer(1); });
}

CommSpecies CommSpecies::matchings() {
  CommSpecies m(1, [](const MultiIndex& a) -> Integer {
    int n = a[0];
    if (n % 2 != 0) return 0;
    return double_factorial(n - 1);
  });
  return m.with_structure_gen([](const MultiIndex& a) {
    std::vector<std::string> out;
    for (const Matching& mt : perfect_matchings(a[0])) {
      std::string s = "{";
      for (size_t i = 0; i < mt.size(); ++i) {
        if (i) s += ",";
        s += "(" + std::to_string(mt[i].first) + "," + std::to_string(mt[i].second) + ")";
      }
      out.push_back(s + "}");
    }
    return out;
  });
}

CommSpecies CommSpecies::partitions() {
  CommSpecies p(1, [](const MultiIndex& a) -> Integer {
    int n = a[0];
    // Bell numbers by the binomial recurrence.
    std::vector<Integer> bell(n + 1, 0);
    bell[0] = 1;
    for (int k = 1; k <= n; ++k)
      for (int j = 0; j < k; ++j) bell[k] += binomial(k - 1, j) * bell[j];
    return bell[n];
  });
  return p.with_structure_gen([](const MultiIndex& a) {
    std::vector<std::string> out;
    for (const SetPartition& sp : set_partitions(a[0])) {
      std::string s = "{";
      for (size_t b = 0; b < sp.size(); ++b) {
        if (b) s += ",";
        s += "{";
        for (size_t i = 0; i < sp[b].size(); ++i) {
          if (i) s += ",";
          s += std::to_string(sp[b][i]);
        }
        s += "}";
      }
      out.push_back(s + "}");
    }
    return out;
  });
}

CommSpecies CommSpecies::adn() {
  // Colors 1,2,3,4 = a,t,c,g.  A structure is a linearly ordered set of
  // oriented base pairs, each pair colored {a,t} or {c,g}.
  return CommSpecies(4, [](const MultiIndex& a) -> Integer {
    std::vector<int> colors;
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < a[i]; ++k) colors.push_back(i + 1);
    int m = static_cast<int>(colors.size());
    if (m % 2 != 0) return 0;
    int r = m / 2;
    Integer valid = 0;
    for (const Matching& mt : perfect_matchings(m)) {
      bool ok = true;
      for (auto [i, j] : mt) {
        int ci = colors[i - 1], cj = colors[j - 1];
        if (ci > cj) std::swap(ci, cj);
        if (!((ci == 1 && cj == 2) || (ci == 3 && cj == 4))) {
          ok = false;
          break;
        }
      }
      if (ok) valid += 1;
    }
    Integer orient = 1;
    for (int k = 0; k < r; ++k) orient *= 2;
    return valid * orient * factorial(r);
  });
}

CommSpecies CommSpecies::builtin(const std::string& name, int dim) {
  if (name == "One") return one(dim);
  if (name == "E") return exponential(dim);
  if (name == "M") {
    if (dim != 1) throw std::invalid_argument("species: M is defined for dimension 1");
    return matchings();
  }
  if (name == "par") {
    if (dim != 1) throw std::invalid_argument("species: par is defined for dimension 1");
    return partitions();
  }
  if (name == "ADN") {
    if (dim != 4) throw std::invalid_argument("species: ADN is defined for dimension 4");
    return adn();
  }
  if (name.size() >= 2 && name[0] == 'X') {
    int i = std::stoi(name.substr(1));
    return singleton(dim, i);
  }
  if (name == "X") return singleton(dim, 1);
  throw std::invalid_argument("species: unknown builtin '" + name + "'");
}

// ---------------------------------------------------------------------------

NCSpecies::NCSpecies(int dim, CountFn counts)
    : dim_(dim),
      counts_(std::move(counts)),
      cache_(std::make_shared<std::map<Word, Integer, WordOrder>>()) {
  if (dim < 1) throw std::invalid_argument("species: dimension must be >= 1");
}

NCSpecies NCSpecies::from_table(int dim, const std::map<Word, Integer, WordOrder>& table) {
  return NCSpecies(dim, [table](const Word& w) -> Integer {
    auto it = table.find(w);
    return it == table.end() ? Integer(0) : it->second;
  });
}

Integer NCSpecies::count(const Word& w) const {
  for (int l : w)
    if (l < 1 || l > dim_) throw std::invalid_argument("species: word letter out of range");
  auto it = cache_->find(w);
  if (it != cache_->end()) return it->second;
  Integer v = counts_(w);
  (*cache_)[w] = v;
  return v;
}

NCSpecies NCSpecies::operator+(const NCSpecies& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("species: dimension mismatch");
  NCSpecies f = *this, g = o;
  return NCSpecies(dim_, [f, g](const Word& w) { return f.count(w) + g.count(w); });
}

NCSpecies NCSpecies::operator*(const NCSpecies& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("species: dimension mismatch");
  NCSpecies f = *this, g = o;
  // Ordered structures split a linear order at one of the |w|+1 cut points.
  return NCSpecies(dim_, [f, g](const Word& w) {
    Integer total = 0;
    for (size_t cut = 0; cut <= w.size(); ++cut) {
      Word u(w.begin(), w.begin() + cut), v(w.begin() + cut, w.end());
      total += f.count(u) * g.count(v);
    }
    return total;
  });
}

NCSpecies NCSpecies::compose(const std::vector<NCSpecies>& args) const {
  if (static_cast<int>(args.size()) != dim_)
    throw std::invalid_argument("species: compose needs one inner species per color");
  int adim = args[0].dim();
  for (const auto& g : args) {
    if (g.dim() != adim) throw std::invalid_argument("species: compose dimension mismatch");
    if (g.count({}) != 0)
      throw std::invalid_argument("species: inner species must vanish on the empty set");
  }
  NCSpecies f = *this;
  std::vector<NCSpecies> gs = args;
  int fdim = dim_;
  // Ordered partitions into contiguous intervals; the outer structure lives
  // on the colored sequence of blocks.
  return NCSpecies(adim, [f, gs, fdim](const Word& w) -> Integer {
    int m = static_cast<int>(w.size());
    if (m == 0) return f.count({});
    Integer total = 0;
    for (int k = 1; k <= m; ++k)
      for (const std::vector<int>& comp : compositions(m, k)) {
        std::vector<Word> blocks;
        int pos = 0;
        for (int len : comp) {
          blocks.emplace_back(w.begin() + pos, w.begin() + pos + len);
          pos += len;
        }
        Word g(k, 0);
        auto rec = [&](auto&& self, int b, Integer acc) -> void {
          if (acc == 0) return;
          if (b == k) {
            total += acc * f.count(g);
            return;
          }
          for (int c = 1; c <= fdim; ++c) {
            g[b] = c;
            self(self, b + 1, acc * gs[c - 1].count(blocks[b]));
          }
        };
        rec(rec, 0, 1);
      }
    return total;
  });
}

NCSpecies NCSpecies::derivative(int i) const {
  if (i < 1 || i > dim_) throw std::invalid_argument("species: derivative color out of range");
  NCSpecies f = *this;
  return NCSpecies(dim_, [f, i](const Word& w) {
    Integer total = 0;
    for (size_t p = 0; p <= w.size(); ++p) {
      Word u;
      u.reserve(w.size() + 1);
      u.insert(u.end(), w.begin(), w.begin() + p);
      u.push_back(i);
      u.insert(u.end(), w.begin() + p, w.end());
      total += f.count(u);
    }
    return total;
  });
}

NCSpecies NCSpecies::positive_part() const {
  NCSpecies f = *this;
  return NCSpecies(dim_, [f](const Word& w) { return w.empty() ? Integer(0) : f.count(w); });
}

NCSeries NCSpecies::valuation(int trunc) const {
  NCSeries r(dim_, trunc);
  for (const Word& w : words_up_to(dim_, trunc)) {
    Integer c = count(w);
    if (c != 0) r.set_coeff(w, Rational(c));
  }
  return r;
}

NCSpecies NCSpecies::one(int dim) {
  return NCSpecies(dim, [](const Word& w) { return w.empty() ? Integer(1) : Integer(0); });
}

NCSpecies NCSpecies::singleton(int dim, int i) {
  if (i < 1 || i > dim) throw std::invalid_argument("species: singleton color out of range");
  return NCSpecies(dim, [i](const Word& w) {
    return (w.size() == 1 && w[0] == i) ? Integer(1) : Integer(0);
  });
}

NCSpecies NCSpecies::exponential(int dim) {
  return NCSpecies(dim, [](const Word&) { return Integer(1); });
}

NCSpecies NCSpecies::builtin(const std::string& name, int dim) {
  if (name == "One") return one(dim);
  if (name == "NE") return exponential(dim);
  if (name.size() >= 2 && name[0] == 'X') return singleton(dim, std::stoi(name.substr(1)));
  if (name == "X") return singleton(dim, 1);
  throw std::invalid_argument("species: unknown builtin '" + name + "'");
}

NCSpecies order_forget(const CommSpecies& f) {
  int d = f.dim();
  CommSpecies g = f;
  return NCSpecies(d, [g, d](const Word& w) { return g.count(content(w, d)); });
}

CommSpecies order_sum(const NCSpecies& f) {
  int d = f.dim();
  NCSpecies g = f;
  // Summing a species over all linear orders of a colored set: each word of
  // the right content is hit by a! orders.
  return CommSpecies(d, [g, d](const MultiIndex& a) {
    Integer total = 0;
    std::vector<int> letters;
    for (int i = 0; i < d; ++i)
      for (int k = 0; k < a[i]; ++k) letters.push_back(i + 1);
    std::sort(letters.begin(), letters.end());
    do {
      total += g.count(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return total * multi_factorial(a);
  });
}

VirtualSpecies VirtualSpecies::operator+(const VirtualSpecies& o) const {
  return {pos + o.pos, neg + o.neg};
}

VirtualSpecies VirtualSpecies::operator*(const VirtualSpecies& o) const {
  return {pos * o.pos + neg * o.neg, pos * o.neg + neg * o.pos};
}

CommSeries VirtualSpecies::valuation(int trunc) const {
  return pos.valuation(trunc) - neg.valuation(trunc);
}

// --- tree-sum evaluations of compositional inverses ------------------------

Rational nc_tree_inverse_coeff(const std::vector<NCSpecies>& f, int root_color, const Word& w) {
  int d = static_cast<int>(f.size());
  if (root_color < 1 || root_color > d)
    throw std::invalid_argument("tree inverse: root color out of range");
  for (const auto& sp : f)
    if (sp.dim() != d) throw std::invalid_argument("tree inverse: dimension mismatch");
  // W_i(w) counts planar trees: either a single i-colored leaf, or an
  // F_i-structure on k >= 2 colored contiguous blocks carried by subtrees.
  std::map<std::pair<int, Word>, Integer> memo;
  auto rec = [&](auto&& self, int i, const Word& u) -> Integer {
    auto key = std::make_pair(i, u);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer total = (u.size() == 1 && u[0] == i) ? 1 : 0;
    int m = static_cast<int>(u.size());
    for (int k = 2; k <= m; ++k)
      for (const std::vector<int>& comp : compositions(m, k)) {
        std::vector<Word> blocks;
        int pos = 0;
        for (int len : comp) {
          blocks.emplace_back(u.begin() + pos, u.begin() + pos + len);
          pos += len;
        }
        Word g(k, 0);
        auto color_rec = [&](auto&& cself, int b, Integer acc) -> void {
          if (acc == 0) return;
          if (b == k) {
            total += acc * f[i - 1].count(g);
            return;
          }
          for (int c = 1; c <= d; ++c) {
            g[b] = c;
            cself(cself, b + 1, acc * self(self, c, blocks[b]));
          }
        };
        color_rec(color_rec, 0, 1);
      }
    memo[key] = total;
    return total;
  };
  return Rational(rec(rec, root_color, w));
}

Integer comm_tree_inverse_count(const std::vector<CommSpecies>& f, int root_color,
                                const MultiIndex& a) {
  int d = static_cast<int>(f.size());
  if (root_color < 1 || root_color > d)
    throw std::invalid_argument("tree inverse: root color out of range");
  for (const auto& sp : f)
    if (sp.dim() != d) throw std::invalid_argument("tree inverse: dimension mismatch");
  // By relabeling invariance the count depends only on the content.
  std::map<std::pair<int, MultiIndex>, Integer> memo;
  auto rec = [&](auto&& self, int i, const MultiIndex& c) -> Integer {
    auto key = std::make_pair(i, c);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Integer total = (c == unit_index(d, i)) ? 1 : 0;
    std::vector<int> colors;
    for (int t = 0; t < d; ++t)
      for (int k = 0; k < c[t]; ++k) colors.push_back(t);
    int m = static_cast<int>(colors.size());
    for (const SetPartition& p : set_partitions(m)) {
      int r = static_cast<int>(p.size());
      if (r < 2) continue;
      std::vector<MultiIndex> block_content(r, MultiIndex(d, 0));
      for (int b = 0; b < r; ++b)
        for (int e : p[b]) block_content[b][colors[e - 1]] += 1;
      std::vector<int> g(r, 0);
      auto color_rec = [&](auto&& cself, int b, Integer acc) -> void {
        if (acc == 0) return;
        if (b == r) {
          MultiIndex outer(d, 0);
          for (int t = 0; t < r; ++t) outer[g[t]] += 1;
          total += acc * f[i - 1].count(outer);
          return;
        }
        for (int cc = 1; cc <= d; ++cc) {
          g[b] = cc;
          cself(cself, b + 1, acc * self(self, cc, block_content[b]));
        }
      };
      color_rec(color_rec, 0, 1);
    }
    memo[key] = total;
    return total;
  };
  return rec(rec, root_color, a);
}

namespace {

// Rooted colored trees with unlabeled colored leaves; children are kept
// sorted by their canonical encoding.
struct RTree {
  int color = 0;
  bool leaf = false;
  std::vector<RTree> children;
  std::string enc;
  MultiIndex leaf_content;
};

std::string encode(const RTree& t) {
  std::string s = (t.leaf ? "L" : "N") + std::to_string(t.color);
  if (!t.leaf) {
    s += "(";
    for (const RTree& c : t.children) s += c.enc + ";";
    s += ")";
  }
  return s;
}

// Automorphism count by backtracking: match children to iso-equal children.
Integer tree_aut(const RTree& t) {
  if (t.leaf) return 1;
  int n = static_cast<int>(t.children.size());
  std::vector<bool> used(n, false);
  Integer perms = 0;
  auto match = [&](auto&& self, int pos) -> void {
    if (pos == n) {
      perms += 1;
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (used[j] || t.children[pos].enc != t.children[j].enc) continue;
      used[j] = true;
      self(self, pos + 1);
      used[j] = false;
    }
  };
  match(match, 0);
  for (const RTree& c : t.children) perms *= tree_aut(c);
  return perms;
}

struct TreePool {
  int d;
  std::map<std::pair<int, MultiIndex>, std::vector<RTree>> memo;

  // All iso classes of trees with root color i and leaf content a.
  const std::vector<RTree>& trees(int i, const MultiIndex& a) {
    auto key = std::make_pair(i, a);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    std::vector<RTree> out;
    if (a == unit_index(d, i)) {
      RTree leaf;
      leaf.color = i;
      leaf.leaf = true;
      leaf.leaf_content = a;
      leaf.enc = encode(leaf);
      out.push_back(leaf);
    }
    // Split the content into k >= 2 unordered nonzero parts, assign each
    // part a root color and a subtree; avoid duplicates by requiring the
    // chosen child encodings to be non-decreasing.
    std::vector<RTree> chosen;
    auto build = [&](auto&& self, MultiIndex rest, const std::string& min_enc) -> void {
      if (total_degree(rest) == 0) {
        if (chosen.size() < 2) return;
        RTree node;
        node.color = i;
        node.children = chosen;
        std::sort(node.children.begin(), node.children.end(),
                  [](const RTree& x, const RTree& y) { return x.enc < y.enc; });
        node.leaf_content = a;
        node.enc = encode(node);
        out.push_back(node);
        return;
      }
      for (const MultiIndex& part : multi_indices_up_to(d, total_degree(rest))) {
        if (total_degree(part) == 0 || !leq(part, rest)) continue;
        // A first child swallowing all leaves would leave fewer than two
        // children and would recurse on the same key.
        if (chosen.empty() && part == rest) continue;
        for (int c = 1; c <= d; ++c)
          for (const RTree& sub : trees(c, part)) {
            if (sub.enc < min_enc) continue;
            chosen.push_back(sub);
            self(self, combalg::sub(rest, part), sub.enc);
            chosen.pop_back();
          }
      }
    };
    build(build, a, "");
    // Distinct multisets can still repeat through different orderings of
    // equal encodings only once because of the non-decreasing constraint.
    memo[key] = out;
    return memo[key];
  }
};

Rational tree_weight(const RTree& t, const std::vector<CommSpecies>& f) {
  if (t.leaf) return Rational(1);
  int d = static_cast<int>(f.size());
  MultiIndex outer(d, 0);
  for (const RTree& c : t.children) outer[c.color - 1] += 1;
  Rational w(f[t.color - 1].count(outer));
  for (const RTree& c : t.children) w *= tree_weight(c, f);
  return w;
}

}  // namespace

Rational comm_tree_inverse_groupoid_sum(const std::vector<CommSpecies>& f, int root_color,
                                        const MultiIndex& a) {
  int d = static_cast<int>(f.size());
  if (root_color < 1 || root_color > d)
    throw std::invalid_argument("tree inverse: root color out of range");
  TreePool pool;
  pool.d = d;
  Rational total = 0;
  for (const RTree& t : pool.trees(root_color, a))
    total += tree_weight(t, f) / Rational(tree_aut(t));
  return total;
}

}  // namespace combalg
