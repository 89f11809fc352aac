#include "combalg/kontsevich.hpp"

#include <algorithm>
#include <stdexcept>

#include "combalg/combinatorics.hpp"

namespace combalg {

namespace {

std::string target_label(const AdmissibleGraph& g, int t) {
  if (t < g.aerial) return "a" + std::to_string(t + 1);
  return std::to_string(t - g.aerial + 1);
}

}  // namespace

std::string AdmissibleGraph::key() const {
  std::string s = std::to_string(aerial) + "," + std::to_string(ground) + ":[";
  bool first = true;
  for (const auto& pair : targets)
    for (int t : pair) {
      if (!first) s += ",";
      s += target_label(*this, t);
      first = false;
    }
  return s + "]";
}

std::vector<AdmissibleGraph> enumerate_admissible(int k, int n) {
  if (k < 0) throw std::invalid_argument("kontsevich: negative aerial count");
  if (n < 2) throw std::invalid_argument("kontsevich: ground count must be >= 2");
  std::vector<AdmissibleGraph> out;
  AdmissibleGraph g;
  g.aerial = k;
  g.ground = n;
  g.targets.assign(k, {0, 0});
  auto rec = [&](auto&& self, int v, int e) -> void {
    if (v == k) {
      out.push_back(g);
      return;
    }
    for (int t = 0; t < k + n; ++t) {
      if (t == v) continue;  // no loops
      g.targets[v][e] = t;
      if (e == 0)
        self(self, v, 1);
      else
        self(self, v + 1, 0);
    }
  };
  rec(rec, 0, 0);
  return out;
}

QuotientGraph quotient(const AdmissibleGraph& g, const SubgraphSelection& sel) {
  int k = g.aerial, n = g.ground;
  std::vector<bool> in_aerial(k, false), in_ground(n, false);
  for (int v : sel.aerial) {
    if (v < 0 || v >= k) throw std::invalid_argument("kontsevich: aerial selection out of range");
    in_aerial[v] = true;
  }
  for (int j : sel.ground) {
    if (j < 0 || j >= n) throw std::invalid_argument("kontsevich: ground selection out of range");
    in_ground[j] = true;
  }
  auto selected = [&](int t) { return t < k ? in_aerial[t] : in_ground[t - k]; };
  for (int v = 0; v < k; ++v)
    if (in_aerial[v])
      for (int t : g.targets[v])
        if (!selected(t))
          throw std::invalid_argument("kontsevich: selection is not a closed subgraph");

  QuotientGraph q;
  for (int v = 0; v < k; ++v)
    if (!in_aerial[v]) q.aerial.push_back("a" + std::to_string(v + 1));
  // The star replaces the collapsed block at the slot of its least removed
  // ground vertex, or in front when no ground vertex is removed.
  bool star_placed = false;
  for (int j = 0; j < n; ++j) {
    if (in_ground[j]) {
      if (!star_placed) {
        q.ground.push_back("*");
        star_placed = true;
      }
    } else {
      q.ground.push_back(std::to_string(j + 1));
    }
  }
  if (!star_placed) q.ground.insert(q.ground.begin(), "*");
  for (int v = 0; v < k; ++v) {
    if (in_aerial[v]) continue;
    for (int t : g.targets[v]) {
      std::string dst = selected(t) ? "*" : target_label(g, t);
      q.edges.emplace_back("a" + std::to_string(v + 1), dst);
    }
  }
  return q;
}

bool quotient_is_admissible(const QuotientGraph& q) {
  if (q.ground.size() < 2) return false;
  std::map<std::string, int> out_degree;
  for (const std::string& v : q.aerial) out_degree[v] = 0;
  for (const auto& [src, dst] : q.edges) {
    if (src == dst) return false;
    auto it = out_degree.find(src);
    if (it == out_degree.end()) return false;  // ground vertices emit nothing
    it->second += 1;
    bool known = std::find(q.aerial.begin(), q.aerial.end(), dst) != q.aerial.end() ||
                 std::find(q.ground.begin(), q.ground.end(), dst) != q.ground.end();
    if (!known) return false;
  }
  for (const auto& [v, deg] : out_degree) {
    (void)v;
    if (deg != 2) return false;
  }
  return true;
}

namespace {

bool closed_subgraph(const AdmissibleGraph& g, const SubgraphSelection& sel) {
  std::vector<bool> in_aerial(g.aerial, false), in_ground(g.ground, false);
  for (int v : sel.aerial) {
    if (v < 0 || v >= g.aerial) return false;
    in_aerial[v] = true;
  }
  for (int j : sel.ground) {
    if (j < 0 || j >= g.ground) return false;
    in_ground[j] = true;
  }
  for (int v = 0; v < g.aerial; ++v)
    if (in_aerial[v])
      for (int t : g.targets[v]) {
        bool inside = t < g.aerial ? in_aerial[t] : in_ground[t - g.aerial];
        if (!inside) return false;
      }
  return true;
}

bool is_contiguous_from(const std::vector<int>& sorted, int start) {
  for (size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != start + static_cast<int>(i)) return false;
  return true;
}

}  // namespace

bool is_le_L(const AdmissibleGraph& g, const SubgraphSelection& sel) {
  if (!closed_subgraph(g, sel)) return false;
  std::vector<int> gr = sel.ground;
  std::sort(gr.begin(), gr.end());
  if (!is_contiguous_from(gr, 0)) return false;  // prefix of the ground row
  SubgraphSelection s = sel;
  s.ground = gr;
  return quotient_is_admissible(quotient(g, s));
}

bool is_le_R(const AdmissibleGraph& g, const SubgraphSelection& sel) {
  if (!closed_subgraph(g, sel)) return false;
  std::vector<int> gr = sel.ground;
  std::sort(gr.begin(), gr.end());
  int s0 = g.ground - static_cast<int>(gr.size());
  if (!is_contiguous_from(gr, s0)) return false;  // suffix of the ground row
  SubgraphSelection s = sel;
  s.ground = gr;
  return quotient_is_admissible(quotient(g, s));
}

PoissonStructure::PoissonStructure(int dim_, std::vector<std::vector<CommSeries>> alpha_)
    : dim(dim_), alpha(std::move(alpha_)) {
  if (dim < 1) throw std::invalid_argument("kontsevich: dimension must be >= 1");
  if (static_cast<int>(alpha.size()) != dim)
    throw std::invalid_argument("kontsevich: alpha size mismatch");
  for (const auto& row : alpha) {
    if (static_cast<int>(row.size()) != dim)
      throw std::invalid_argument("kontsevich: alpha size mismatch");
    for (const auto& e : row)
      if (e.dim() != dim) throw std::invalid_argument("kontsevich: alpha entry dimension mismatch");
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      if (!(alpha[i][j] + alpha[j][i]).is_zero())
        throw std::invalid_argument("kontsevich: alpha must be antisymmetric");
}

PoissonStructure PoissonStructure::constant(int dim, int trunc,
                                            const std::vector<std::vector<Rational>>& c) {
  std::vector<std::vector<CommSeries>> alpha;
  for (int i = 0; i < dim; ++i) {
    std::vector<CommSeries> row;
    for (int j = 0; j < dim; ++j) row.push_back(CommSeries::constant(dim, trunc, c[i][j]));
    alpha.push_back(row);
  }
  return PoissonStructure(dim, std::move(alpha));
}

CommSeries b_gamma(const AdmissibleGraph& g, const PoissonStructure& alpha,
                   const std::vector<CommSeries>& args) {
  if (static_cast<int>(args.size()) != g.ground)
    throw std::invalid_argument("kontsevich: one argument per ground vertex");
  int d = alpha.dim;
  int trunc = args.empty() ? 0 : args[0].trunc();
  for (const auto& f : args) {
    if (f.dim() != d) throw std::invalid_argument("kontsevich: argument dimension mismatch");
    trunc = std::min(trunc, f.trunc());
  }
  int ne = 2 * g.aerial;
  std::vector<int> color(ne, 1);
  CommSeries total(d, trunc);
  auto rec = [&](auto&& self, int e) -> void {
    if (e == ne) {
      // Incoming colors per vertex.
      std::vector<std::vector<int>> incoming(g.aerial + g.ground);
      for (int v = 0; v < g.aerial; ++v)
        for (int t = 0; t < 2; ++t) incoming[g.targets[v][t]].push_back(color[2 * v + t]);
      CommSeries prod = CommSeries::constant(d, trunc, 1);
      for (int v = 0; v < g.aerial && !prod.is_zero(); ++v) {
        CommSeries factor = alpha.alpha[color[2 * v] - 1][color[2 * v + 1] - 1];
        for (int i : incoming[v]) factor = factor.derivative(i);
        prod = prod * factor;
      }
      for (int j = 0; j < g.ground && !prod.is_zero(); ++j) {
        CommSeries factor = args[j];
        for (int i : incoming[g.aerial + j]) factor = factor.derivative(i);
        prod = prod * factor;
      }
      total = total + prod;
      return;
    }
    for (int c = 1; c <= d; ++c) {
      color[e] = c;
      self(self, e + 1);
    }
  };
  rec(rec, 0);
  return total;
}

Rational WeightAssignment::at(const AdmissibleGraph& g) const {
  auto it = w_.find(g.key());
  if (it == w_.end())
    throw std::invalid_argument("kontsevich: no weight assigned for graph " + g.key());
  return it->second;
}

std::vector<CommSeries> star_product(const CommSeries& f, const CommSeries& g,
                                     const PoissonStructure& alpha, const WeightAssignment& w,
                                     int order) {
  if (order < 0) throw std::invalid_argument("kontsevich: negative order");
  if (f.dim() != alpha.dim || g.dim() != alpha.dim)
    throw std::invalid_argument("kontsevich: dimension mismatch");
  std::vector<CommSeries> comps;
  for (int n = 0; n <= order; ++n) {
    CommSeries comp(f.dim(), std::min(f.trunc(), g.trunc()));
    for (const AdmissibleGraph& gamma : enumerate_admissible(n, 2)) {
      Rational wg = w.at(gamma);
      if (wg == 0) continue;
      comp = comp + b_gamma(gamma, alpha, {f, g}).scaled(wg);
    }
    comps.push_back(comp.scaled(Rational(Integer(1), factorial(n))));
  }
  return comps;
}

std::vector<CommSeries> moyal_star(const CommSeries& f, const CommSeries& g,
                                   const std::vector<std::vector<Rational>>& alpha, int order) {
  int d = f.dim();
  if (g.dim() != d) throw std::invalid_argument("kontsevich: dimension mismatch");
  int trunc = std::min(f.trunc(), g.trunc());
  std::vector<CommSeries> comps;
  for (int n = 0; n <= order; ++n) {
    CommSeries comp(d, trunc);
    // Sum over sequences (i_1,j_1)..(i_n,j_n) of prod alpha^{i_t j_t}
    // d_{i_1..i_n} f * d_{j_1..j_n} g.
    std::vector<std::pair<int, int>> seq(n);
    auto rec = [&](auto&& self, int t) -> void {
      if (t == n) {
        Rational c = 1;
        CommSeries df = f, dg = g;
        for (auto [i, j] : seq) {
          c *= alpha[i - 1][j - 1];
          if (c == 0) return;
          df = df.derivative(i);
          dg = dg.derivative(j);
        }
        comp = comp + (df * dg).scaled(c);
        return;
      }
      for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
          seq[t] = {i, j};
          self(self, t + 1);
        }
    };
    rec(rec, 0);
    Integer twon = 1;
    for (int t = 0; t < n; ++t) twon *= 2;
    comps.push_back(comp.scaled(Rational(Integer(1), twon * factorial(n))));
  }
  return comps;
}

WeightAssignment moyal_weights(int max_order) {
  WeightAssignment w;
  for (int n = 0; n <= max_order; ++n) {
    Integer twon = 1;
    for (int t = 0; t < n; ++t) twon *= 2;
    for (const AdmissibleGraph& g : enumerate_admissible(n, 2)) {
      bool standard = true;
      for (const auto& pair : g.targets)
        if (pair[0] != n || pair[1] != n + 1) {
          standard = false;
          break;
        }
      w.set(g.key(), standard ? Rational(Integer(1), twon) : Rational(0));
    }
  }
  return w;
}

}  // namespace combalg
