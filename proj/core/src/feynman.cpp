#include "combalg/feynman.hpp"

#include <algorithm>
#include <stdexcept>

#include "combalg/combinatorics.hpp"

namespace combalg {

CovarianceModel::CovarianceModel(int dim_, std::vector<std::vector<Rational>> a_)
    : dim(dim_), a(std::move(a_)) {
  if (dim < 1) throw std::invalid_argument("covariance: dimension must be >= 1");
  if (static_cast<int>(a.size()) != dim)
    throw std::invalid_argument("covariance: matrix size mismatch");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("covariance: matrix size mismatch");
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (a[i][j] != a[j][i]) throw std::invalid_argument("covariance: matrix not symmetric");
}

CovarianceModel CovarianceModel::identity(int dim) {
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim, Rational(0)));
  for (int i = 0; i < dim; ++i) a[i][i] = 1;
  return CovarianceModel(dim, std::move(a));
}

Rational gaussian_moment(const Word& w, const CovarianceModel& cov) {
  for (int c : w)
    if (c < 1 || c > cov.dim) throw std::invalid_argument("moment: letter out of range");
  int n = static_cast<int>(w.size());
  if (n % 2 != 0) return 0;
  Rational total = 0;
  for (const Matching& m : perfect_matchings(n)) {
    Rational prod = 1;
    for (auto [i, j] : m) prod *= cov.a[w[i - 1] - 1][w[j - 1] - 1];
    total += prod;
  }
  return total;
}

// --- flag graphs -----------------------------------------------------------

namespace {

std::vector<int> vertex_of_flags(const FlagGraph& g) {
  std::vector<int> v(g.flags, -1);
  for (size_t i = 0; i < g.vertices.size(); ++i)
    for (int f : g.vertices[i]) v[f] = static_cast<int>(i);
  return v;
}

std::vector<int> partner_of_flags(const FlagGraph& g) {
  std::vector<int> p(g.flags, -1);
  for (auto [i, j] : g.edges) {
    p[i] = j;
    p[j] = i;
  }
  return p;
}

}  // namespace

Integer flag_graph_aut(const FlagGraph& g) {
  int nf = g.flags;
  int nv = static_cast<int>(g.vertices.size());
  std::vector<int> vertex_of = vertex_of_flags(g);
  std::vector<int> partner = partner_of_flags(g);
  for (int f = 0; f < nf; ++f)
    if (vertex_of[f] < 0 || partner[f] < 0)
      throw std::invalid_argument("flag graph: flags must be covered by vertices and edges");

  std::vector<int> phi(nf, -1);
  std::vector<bool> used(nf, false);
  std::vector<int> vmap(nv, -1);
  std::vector<bool> vused(nv, false);
  for (int l = 0; l < g.legs; ++l) {
    phi[l] = l;
    used[l] = true;
    vmap[vertex_of[l]] = vertex_of[l];
    vused[vertex_of[l]] = true;
  }

  Integer count = 0;
  auto consistent = [&](int f) {
    int p = partner[f];
    if (phi[p] < 0) return true;
    return partner[phi[f]] == phi[p];
  };
  auto rec = [&](auto&& self, int f) -> void {
    while (f < nf && phi[f] >= 0) {
      if (!consistent(f)) return;
      ++f;
    }
    if (f == nf) {
      count += 1;
      return;
    }
    int v = vertex_of[f];
    for (int u = 0; u < nf; ++u) {
      if (used[u]) continue;
      int w = vertex_of[u];
      if (vmap[v] >= 0) {
        if (w != vmap[v]) continue;
      } else {
        if (w < static_cast<int>(g.legs) || vused[w]) continue;
        if (g.vertices[w].size() != g.vertices[v].size()) continue;
      }
      bool fresh = vmap[v] < 0;
      phi[f] = u;
      used[u] = true;
      if (fresh) {
        vmap[v] = w;
        vused[w] = true;
      }
      if (consistent(f)) self(self, f + 1);
      phi[f] = -1;
      used[u] = false;
      if (fresh) {
        vused[w] = false;
        vmap[v] = -1;
      }
    }
  };
  rec(rec, 0);
  return count;
}

namespace {

// Multigraph code of a matching after an internal vertex relabeling.
std::string edge_code(const std::vector<std::pair<int, int>>& vedges) {
  std::string s;
  for (auto [a, b] : vedges) s += std::to_string(a) + "-" + std::to_string(b) + ";";
  return s;
}

}  // namespace

std::vector<GraphClass> enumerate_graph_classes(int legs, const std::vector<int>& degrees) {
  if (legs < 0) throw std::invalid_argument("graphs: negative leg count");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("graphs: vertex degrees must be >= 1");
  std::vector<int> deg = degrees;
  std::sort(deg.begin(), deg.end());
  int nv_int = static_cast<int>(deg.size());
  int flags = legs;
  std::vector<std::vector<int>> vertices;
  for (int l = 0; l < legs; ++l) vertices.push_back({l});
  for (int j = 0; j < nv_int; ++j) {
    std::vector<int> vs;
    for (int t = 0; t < deg[j]; ++t) vs.push_back(flags + t);
    flags += deg[j];
    vertices.push_back(vs);
  }
  std::vector<GraphClass> out;
  if (flags % 2 != 0) return out;

  std::vector<int> vertex_of(flags);
  for (size_t i = 0; i < vertices.size(); ++i)
    for (int f : vertices[i]) vertex_of[f] = static_cast<int>(i);

  // All degree-preserving relabelings of the internal vertices.
  std::vector<std::vector<int>> relabelings;
  {
    std::vector<int> perm(nv_int);
    for (int i = 0; i < nv_int; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
      bool ok = true;
      for (int i = 0; i < nv_int; ++i)
        if (deg[perm[i]] != deg[i]) {
          ok = false;
          break;
        }
      if (ok) relabelings.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::map<std::string, GraphClass> classes;
  for (const Matching& m : perfect_matchings(flags)) {
    std::string best;
    for (const std::vector<int>& perm : relabelings) {
      std::vector<std::pair<int, int>> vedges;
      for (auto [i, j] : m) {
        int a = vertex_of[i - 1], b = vertex_of[j - 1];
        if (a >= legs) a = legs + perm[a - legs];
        if (b >= legs) b = legs + perm[b - legs];
        if (a > b) std::swap(a, b);
        vedges.emplace_back(a, b);
      }
      std::sort(vedges.begin(), vedges.end());
      std::string code = edge_code(vedges);
      if (best.empty() || code < best) best = code;
    }
    auto it = classes.find(best);
    if (it == classes.end()) {
      FlagGraph g;
      g.flags = flags;
      g.legs = legs;
      g.vertices = vertices;
      for (auto [i, j] : m) g.edges.emplace_back(i - 1, j - 1);
      std::sort(g.edges.begin(), g.edges.end());
      GraphClass cls;
      cls.rep = g;
      cls.orbit = 1;
      classes.emplace(best, cls);
    } else {
      it->second.orbit += 1;
    }
  }

  Integer group_order = 1;
  {
    std::map<int, int> mult;
    for (int d : deg) mult[d] += 1;
    for (auto [d, n] : mult) {
      (void)d;
      group_order *= factorial(n);
    }
    for (int d : deg) group_order *= factorial(d);
  }
  for (auto& [code, cls] : classes) {
    (void)code;
    cls.aut = flag_graph_aut(cls.rep);
    if (cls.aut * cls.orbit != group_order)
      throw std::logic_error("graphs: orbit-stabilizer check failed");
    out.push_back(cls);
  }
  return out;
}

// --- coupling series -------------------------------------------------------

CouplingSeries::CouplingSeries(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("coupling series: dimension must be >= 1");
}

Rational CouplingSeries::coeff(const Key& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CouplingSeries::add_term(const Key& k, const Rational& c) {
  if (static_cast<int>(k.x.size()) != dim_)
    throw std::invalid_argument("coupling series: dimension mismatch");
  for (auto [sub, pow] : k.g) {
    if (sub < 0 || pow <= 0) throw std::invalid_argument("coupling series: bad g factor");
  }
  for (size_t i = 1; i < k.g.size(); ++i)
    if (k.g[i].first <= k.g[i - 1].first)
      throw std::invalid_argument("coupling series: g factors must be sorted");
  Rational v = coeff(k) + c;
  if (v == 0)
    terms_.erase(k);
  else
    terms_[k] = v;
}

CouplingSeries CouplingSeries::operator+(const CouplingSeries& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("coupling series: dimension mismatch");
  CouplingSeries r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

CouplingSeries CouplingSeries::scaled(const Rational& c) const {
  CouplingSeries r(dim_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

CouplingSeries CouplingSeries::component(int n) const {
  CouplingSeries r(dim_);
  for (const auto& [k, c] : terms_) {
    int gdeg = 0;
    for (auto [sub, pow] : k.g) {
      (void)sub;
      gdeg += pow;
    }
    if (gdeg == n) r.terms_[k] = c;
  }
  return r;
}

int CouplingSeries::max_g_degree() const {
  int best = 0;
  for (const auto& [k, c] : terms_) {
    (void)c;
    int gdeg = 0;
    for (auto [sub, pow] : k.g) {
      (void)sub;
      gdeg += pow;
    }
    best = std::max(best, gdeg);
  }
  return best;
}

bool CouplingSeries::operator==(const CouplingSeries& o) const {
  return dim_ == o.dim_ && terms_ == o.terms_;
}

std::string CouplingSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<Key, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    auto gdeg = [](const Key& k) {
      int n = 0;
      for (auto [s, p] : k.g) {
        (void)s;
        n += p;
      }
      return n;
    };
    int dl = gdeg(l.first), dr = gdeg(r.first);
    if (dl != dr) return dl < dr;
    return l.first < r.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : items) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first)
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    std::string mono;
    for (auto [sub, pow] : k.g) {
      if (!mono.empty()) mono += " ";
      mono += "g" + std::to_string(sub);
      if (pow > 1) mono += "^" + std::to_string(pow);
    }
    for (size_t i = 0; i < k.x.size(); ++i) {
      if (k.x[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += (k.x.size() == 1 ? "x" : "x" + std::to_string(i + 1));
      if (k.x[i] > 1) mono += "^" + std::to_string(k.x[i]);
    }
    if (mono.empty())
      out += rational_to_string(abs);
    else if (abs == 1)
      out += mono;
    else
      out += rational_to_string(abs) + " " + mono;
    first = false;
  }
  return out;
}

CouplingSeries pert_map(const CommSeries& f) {
  CouplingSeries r(f.dim());
  for (const auto& [a, c] : f.terms()) {
    int n = total_degree(a);
    CouplingSeries::Key key;
    key.g = {{n, 1}};
    key.x = a;
    r.add_term(key, c / Rational(factorial(n)));
  }
  return r;
}

// --- expansions ------------------------------------------------------------

namespace {

void check_interaction(const CommSeries& s) {
  for (const auto& [a, c] : s.terms()) {
    (void)c;
    if (total_degree(a) <= 2)
      throw std::invalid_argument("feynman: interaction must vanish on degrees <= 2");
  }
}

// Vertex factor for a flag coloring of content t: t! [x^t]S / |t|!.
Rational vertex_factor(const CommSeries& s, const MultiIndex& t) {
  Rational c = s.coeff(t);
  if (c == 0) return 0;
  return c * Rational(multi_factorial(t), factorial(total_degree(t)));
}

CouplingSeries::Key g_key_from_degrees(const std::vector<int>& degs, int dim) {
  std::map<int, int> mult;
  for (int d : degs) mult[d] += 1;
  CouplingSeries::Key key;
  for (auto [d, n] : mult) key.g.emplace_back(d, n);
  key.x = zero_index(dim);
  return key;
}

}  // namespace

CouplingSeries feynman_expand(const CommSeries& s, const CovarianceModel& cov, const Word& legs,
                              int order) {
  check_interaction(s);
  if (s.dim() != cov.dim) throw std::invalid_argument("feynman: dimension mismatch");
  for (int c : legs)
    if (c < 1 || c > cov.dim) throw std::invalid_argument("feynman: leg color out of range");
  if (order < 0) throw std::invalid_argument("feynman: negative order");
  int d = cov.dim;
  std::vector<int> avail;
  for (const auto& [a, c] : s.terms()) {
    (void)c;
    int n = total_degree(a);
    if (std::find(avail.begin(), avail.end(), n) == avail.end()) avail.push_back(n);
  }
  std::sort(avail.begin(), avail.end());

  CouplingSeries out(d);
  int nl = static_cast<int>(legs.size());
  std::vector<int> degs;
  auto handle_multiset = [&]() {
    auto classes = enumerate_graph_classes(nl, degs);
    if (classes.empty()) return;
    Rational total_for_key = 0;
    CouplingSeries::Key key = g_key_from_degrees(degs, d);
    for (const GraphClass& cls : classes) {
      const FlagGraph& g = cls.rep;
      // Color every internal flag; legs carry the fixed external colors.
      std::vector<int> color(g.flags, 0);
      for (int l = 0; l < nl; ++l) color[l] = legs[l];
      Rational value = 0;
      auto rec = [&](auto&& self, int f) -> void {
        if (f == g.flags) {
          Rational prod = 1;
          for (size_t v = nl; v < g.vertices.size(); ++v) {
            MultiIndex t(d, 0);
            for (int fl : g.vertices[v]) t[color[fl] - 1] += 1;
            prod *= vertex_factor(s, t);
            if (prod == 0) return;
          }
          for (auto [i, j] : g.edges) prod *= cov.a[color[i] - 1][color[j] - 1];
          value += prod;
          return;
        }
        for (int c = 1; c <= d; ++c) {
          color[f] = c;
          self(self, f + 1);
        }
      };
      rec(rec, nl);
      total_for_key += value / Rational(cls.aut);
    }
    if (total_for_key != 0) out.add_term(key, total_for_key);
  };
  auto multisets = [&](auto&& self, int min_idx, int remaining) -> void {
    handle_multiset();
    if (remaining == 0) return;
    for (size_t i = min_idx; i < avail.size(); ++i) {
      degs.push_back(avail[i]);
      self(self, static_cast<int>(i), remaining - 1);
      degs.pop_back();
    }
  };
  multisets(multisets, 0, order);
  return out;
}

CouplingSeries wick_oracle(const CommSeries& s, const CovarianceModel& cov, const Word& legs,
                           int order) {
  check_interaction(s);
  if (s.dim() != cov.dim) throw std::invalid_argument("feynman: dimension mismatch");
  for (int c : legs)
    if (c < 1 || c > cov.dim) throw std::invalid_argument("feynman: leg color out of range");
  if (order < 0) throw std::invalid_argument("feynman: negative order");
  int d = cov.dim;
  std::vector<std::pair<MultiIndex, Rational>> terms(s.terms().begin(), s.terms().end());
  CouplingSeries out(d);
  // Multiplicities of each interaction term in the expansion of the
  // exponential.
  std::vector<int> mult(terms.size(), 0);
  auto emit = [&]() {
    Rational coeff = 1;
    Word w = legs;
    std::vector<int> degs;
    for (size_t t = 0; t < terms.size(); ++t) {
      const auto& [a, c] = terms[t];
      int n = total_degree(a);
      for (int rep = 0; rep < mult[t]; ++rep) {
        coeff *= c / Rational(factorial(n));
        degs.push_back(n);
        for (int i = 0; i < d; ++i)
          for (int e = 0; e < a[i]; ++e) w.push_back(i + 1);
      }
      coeff /= Rational(factorial(mult[t]));
    }
    Rational m = gaussian_moment(w, cov);
    if (m == 0 || coeff == 0) return;
    out.add_term(g_key_from_degrees(degs, d), coeff * m);
  };
  auto rec = [&](auto&& self, size_t t, int remaining) -> void {
    if (t == terms.size()) {
      emit();
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      mult[t] = k;
      self(self, t + 1, remaining - k);
    }
    mult[t] = 0;
  };
  rec(rec, 0, order);
  return out;
}

}  // namespace combalg
