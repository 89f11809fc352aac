#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "combalg/comm_series.hpp"
#include "combalg/indices.hpp"
#include "combalg/rational.hpp"

namespace combalg {

// Symmetric covariance matrix a_{ij} for the d-variable Gaussian pairing.
struct CovarianceModel {
  int dim;
  std::vector<std::vector<Rational>> a;

  CovarianceModel(int dim, std::vector<std::vector<Rational>> a);
  static CovarianceModel identity(int dim);
};

// Moment of a product of variables indexed by the word w: sum over perfect
// matchings of the positions, each pair contributing a_{w_i w_j}.
Rational gaussian_moment(const Word& w, const CovarianceModel& cov);

// Graph on a set of flags: vertices partition the flags (external legs come
// first as singletons), edges form a perfect matching of the flags.
struct FlagGraph {
  int flags = 0;
  int legs = 0;
  std::vector<std::vector<int>> vertices;  // flags 0-based; legs first
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

// Automorphisms fix the legs pointwise and may permute internal vertices and
// flags within vertices; counted by backtracking over flag bijections.
Integer flag_graph_aut(const FlagGraph& g);

// Isomorphism class of flag graphs with fixed legs and internal degree
// multiset.
struct GraphClass {
  FlagGraph rep;
  Integer aut;
  Integer orbit;  // matchings in the class; aut * orbit = group order
};

// All classes with the given number of legs and internal vertex degrees, in
// a deterministic canonical order.
std::vector<GraphClass> enumerate_graph_classes(int legs, const std::vector<int>& degrees);

// Exact series in coupling variables g_k and position variables x_i.
class CouplingSeries {
 public:
  struct Key {
    std::vector<std::pair<int, int>> g;  // (subscript, power), sorted, power > 0
    MultiIndex x;

    auto operator<=>(const Key&) const = default;
  };

  explicit CouplingSeries(int dim);

  int dim() const { return dim_; }
  const std::map<Key, Rational>& terms() const { return terms_; }

  Rational coeff(const Key& k) const;
  void add_term(const Key& k, const Rational& c);

  CouplingSeries operator+(const CouplingSeries& o) const;
  CouplingSeries scaled(const Rational& c) const;

  // Terms of total g-degree exactly n.
  CouplingSeries component(int n) const;
  int max_g_degree() const;

  bool operator==(const CouplingSeries& o) const;
  std::string to_string() const;

 private:
  int dim_;
  std::map<Key, Rational> terms_;
};

// Perturbation map: the term f_a x^a goes to f_a g_{|a|} x^a / |a|!.
CouplingSeries pert_map(const CommSeries& f);

// Graph expansion of the Gaussian expectation of x_legs exp(Pert S): the sum
// over graph classes of vertex factors, edge covariances and 1/|Aut|.  S
// must vanish on degrees <= 2.
CouplingSeries feynman_expand(const CommSeries& s, const CovarianceModel& cov, const Word& legs,
                              int order);

// Independent route: term-by-term Wick expansion of exp(Pert S) against the
// Gaussian moments.
CouplingSeries wick_oracle(const CommSeries& s, const CovarianceModel& cov, const Word& legs,
                           int order);

}  // namespace combalg
