#pragma once

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

#include "combalg/comm_series.hpp"
#include "combalg/rational.hpp"

namespace combalg {

// Admissible graph with k aerial and n ground vertices.  Every aerial vertex
// emits an ordered pair of edges whose targets are any vertices other than
// the source itself; parallel edges are allowed.  Targets are encoded as
// 0..k-1 for aerial and k..k+n-1 for ground vertices.
struct AdmissibleGraph {
  int aerial = 0;
  int ground = 0;
  std::vector<std::array<int, 2>> targets;

  auto operator<=>(const AdmissibleGraph&) const = default;

  // Canonical text key "k,n:[t,t,...]" with ground targets printed 1-based
  // and aerial targets printed as a1..ak.
  std::string key() const;
};

// All admissible graphs for fixed (k, n), n >= 2, ordered lexicographically
// by their target tables.
std::vector<AdmissibleGraph> enumerate_admissible(int k, int n);

// Subgraph of an admissible graph: subsets of the aerial and ground
// vertices, both sorted, 0-based.  The induced edges are the edges emitted
// by the chosen aerial vertices; closure requires their targets to stay
// inside the selection.
struct SubgraphSelection {
  std::vector<int> aerial;
  std::vector<int> ground;
};

// Directed graph produced by collapsing a subgraph to a single ground vertex
// "*".  Vertices keep readable labels: a1..ak for aerial, 1..n for ground.
struct QuotientGraph {
  std::vector<std::string> aerial;
  std::vector<std::string> ground;  // ordered, contains "*"
  std::vector<std::pair<std::string, std::string>> edges;
};

// Collapse gamma_1 inside gamma: the selected vertices disappear, edges into
// the selection are redirected to "*", edges inside the selection are
// dropped.  Throws if the selection is not a closed subgraph.
QuotientGraph quotient(const AdmissibleGraph& g, const SubgraphSelection& sel);

// Structural admissibility of a quotient: two ordered edges per aerial
// vertex, no loops, at least two ground vertices.
bool quotient_is_admissible(const QuotientGraph& q);

// gamma_1 <=_L gamma: closed subgraph whose ground vertices form a prefix of
// the ground row, with admissible quotient ("*" first).
bool is_le_L(const AdmissibleGraph& g, const SubgraphSelection& sel);

// Mirror predicate with a suffix of ground vertices and "*" last.
bool is_le_R(const AdmissibleGraph& g, const SubgraphSelection& sel);

// Antisymmetric matrix of series coefficients alpha^{ij}.
struct PoissonStructure {
  int dim;
  std::vector<std::vector<CommSeries>> alpha;

  PoissonStructure(int dim, std::vector<std::vector<CommSeries>> alpha);
  static PoissonStructure constant(int dim, int trunc,
                                   const std::vector<std::vector<Rational>>& c);
};

// Bidifferential evaluation B_gamma(args): sum over all edge colorings, each
// aerial vertex contributing alpha^{colors of its pair} and every vertex
// differentiated by its incoming edge colors.
CommSeries b_gamma(const AdmissibleGraph& g, const PoissonStructure& alpha,
                   const std::vector<CommSeries>& args);

// Weights for the star product, keyed by AdmissibleGraph::key().
class WeightAssignment {
 public:
  WeightAssignment() = default;
  explicit WeightAssignment(std::map<std::string, Rational> w) : w_(std::move(w)) {}

  void set(const std::string& key, const Rational& v) { w_[key] = v; }
  const std::map<std::string, Rational>& raw() const { return w_; }

  // Throws naming the graph when no weight is assigned.
  Rational at(const AdmissibleGraph& g) const;

 private:
  std::map<std::string, Rational> w_;
};

// Star product through hbar order `order`: component N is
// (1/N!) sum over G_{N,2} of w(gamma) B_gamma(f, g).
std::vector<CommSeries> star_product(const CommSeries& f, const CommSeries& g,
                                     const PoissonStructure& alpha, const WeightAssignment& w,
                                     int order);

// Independent Moyal evaluation for a constant Poisson structure, same
// grading: component N is (1/(2^N N!)) sum over index sequences of
// derivatives of f and g contracted with alpha.
std::vector<CommSeries> moyal_star(const CommSeries& f, const CommSeries& g,
                                   const std::vector<std::vector<Rational>>& alpha, int order);

// The weight assignment that reproduces moyal_star: 2^{-k} on graphs whose
// every aerial vertex targets exactly (ground 1, ground 2), zero elsewhere.
WeightAssignment moyal_weights(int max_order);

}  // namespace combalg
