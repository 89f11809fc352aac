#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "combalg/comm_series.hpp"
#include "combalg/indices.hpp"
#include "combalg/nc_series.hpp"
#include "combalg/rational.hpp"

namespace combalg {

// Set-valued species on colored finite sets, represented by its counting
// function content -> number of structures.  Counting functions are memoized;
// species values are immutable.
class CommSpecies {
 public:
  using CountFn = std::function<Integer(const MultiIndex&)>;
  using StructureGen = std::function<std::vector<std::string>(const MultiIndex&)>;

  CommSpecies(int dim, CountFn counts);

  static CommSpecies from_table(int dim, const std::map<MultiIndex, Integer>& table);

  int dim() const { return dim_; }
  Integer count(const MultiIndex& a) const;

  // Optional explicit structure listing; when present its length equals the
  // count.
  const std::optional<StructureGen>& structure_gen() const { return structure_gen_; }
  CommSpecies with_structure_gen(StructureGen g) const;

  CommSpecies operator+(const CommSpecies& o) const;
  CommSpecies operator*(const CommSpecies& o) const;

  // Partitional composition F(G...); requires every G_i to vanish on the
  // empty set.
  CommSpecies compose(const std::vector<CommSpecies>& args) const;

  CommSpecies derivative(int i) const;

  // Restriction to nonempty sets.
  CommSpecies positive_part() const;

  // Divided-power valuation sum count(a) x^a / a!.
  CommSeries valuation(int trunc) const;

  // Builtins --------------------------------------------------------------
  static CommSpecies one(int dim);           // empty-set indicator
  static CommSpecies singleton(int dim, int i);  // X_i
  static CommSpecies exponential(int dim);   // E, one structure on every set
  static CommSpecies matchings();            // M, d = 1
  static CommSpecies partitions();           // par, d = 1
  static CommSpecies adn();                  // d = 4, colors (a, t, c, g)

  static CommSpecies builtin(const std::string& name, int dim);

 private:
  int dim_;
  CountFn counts_;
  std::optional<StructureGen> structure_gen_;
  std::shared_ptr<std::map<MultiIndex, Integer>> cache_;
};

// Species on linearly ordered colored sets, counting function word -> count.
class NCSpecies {
 public:
  using CountFn = std::function<Integer(const Word&)>;

  NCSpecies(int dim, CountFn counts);

  static NCSpecies from_table(int dim, const std::map<Word, Integer, WordOrder>& table);

  int dim() const { return dim_; }
  Integer count(const Word& w) const;

  NCSpecies operator+(const NCSpecies& o) const;
  NCSpecies operator*(const NCSpecies& o) const;

  // Composition along ordered partitions into contiguous intervals.
  NCSpecies compose(const std::vector<NCSpecies>& args) const;

  NCSpecies derivative(int i) const;
  NCSpecies positive_part() const;

  NCSeries valuation(int trunc) const;

  static NCSpecies one(int dim);
  static NCSpecies singleton(int dim, int i);
  static NCSpecies exponential(int dim);  // NE_d, one structure per word

  static NCSpecies builtin(const std::string& name, int dim);

 private:
  int dim_;
  CountFn counts_;
  std::shared_ptr<std::map<Word, Integer, WordOrder>> cache_;
};

// Forgetting the order: S F (w) = F(content(w)).
NCSpecies order_forget(const CommSpecies& f);

// Left adjoint on counts: Pi F (a) = a! * sum of F over words of content a.
CommSpecies order_sum(const NCSpecies& f);

// Formal difference of species.
struct VirtualSpecies {
  CommSpecies pos;
  CommSpecies neg;

  VirtualSpecies operator+(const VirtualSpecies& o) const;
  VirtualSpecies operator*(const VirtualSpecies& o) const;
  CommSeries valuation(int trunc) const;
};

// Tree-sum evaluations of the compositional inverse, used as independent
// cross-checks against the series fixpoint.

// Planar rooted trees: coefficient of the word w in the inverse component
// T_i of S = X - F (F vanishing on lengths <= 1).
Rational nc_tree_inverse_coeff(const std::vector<NCSpecies>& f, int root_color, const Word& w);

// Labeled colored rooted trees: the number of trees on the standard colored
// set of content a, each internal vertex carrying an F-structure on its set
// of children.  Equals a! times the inverse series coefficient.
Integer comm_tree_inverse_count(const std::vector<CommSpecies>& f, int root_color,
                                const MultiIndex& a);

// Isomorphism-class sum with automorphism weights 1/|Aut|, same total.
Rational comm_tree_inverse_groupoid_sum(const std::vector<CommSpecies>& f, int root_color,
                                        const MultiIndex& a);

}  // namespace combalg
