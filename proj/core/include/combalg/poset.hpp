#pragma once

#include <vector>

#include "combalg/rational.hpp"

namespace combalg {

// Finite poset on elements 0..n-1 given by its full order relation.  The
// constructor checks reflexivity, antisymmetry and transitivity.
class FinitePoset {
 public:
  explicit FinitePoset(std::vector<std::vector<bool>> leq);

  // Builds the reflexive-transitive closure of the given pairs (i <= j),
  // then validates; a cycle among distinct elements is rejected.
  static FinitePoset from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return static_cast<int>(leq_.size()); }
  bool leq(int i, int j) const { return leq_[i][j]; }

 private:
  std::vector<std::vector<bool>> leq_;
};

// Mobius table mu(i,j) for i <= j (0 elsewhere), computed by the defining
// recursion and re-verified against the delta identity before returning.
std::vector<std::vector<Integer>> mobius_table(const FinitePoset& p);

}  // namespace combalg
