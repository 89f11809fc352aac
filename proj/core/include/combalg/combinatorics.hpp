#pragma once

#include <utility>
#include <vector>

#include "combalg/indices.hpp"
#include "combalg/rational.hpp"

namespace combalg {

Integer factorial(int n);

// Double factorial with the empty-product conventions (-1)!! = 0!! = 1.
Integer double_factorial(int n);

// Binomial coefficient; 0 outside the triangle.
Integer binomial(int n, int k);

// Multinomial n! / (k_1! ... k_r!); requires sum k_i == n, all k_i >= 0.
Integer multinomial(int n, const std::vector<int>& parts);

inline Integer multi_factorial(const MultiIndex& a) {
  Integer r = 1;
  for (int e : a) r *= factorial(e);
  return r;
}

// A perfect matching on {1..n}: disjoint pairs (i,j) with i < j covering the
// set.  Pairs are listed with increasing first elements.
using Matching = std::vector<std::pair<int, int>>;

// All perfect matchings on {1..n}; empty list for odd n, the single empty
// matching for n == 0.  Deterministic order: the least uncovered element is
// paired with each larger partner in increasing order.
std::vector<Matching> perfect_matchings(int n);

// A set partition of {1..n}: blocks ordered by least element, elements
// increasing within each block.
using SetPartition = std::vector<std::vector<int>>;

// All set partitions of {1..n}, in restricted-growth-string order.
std::vector<SetPartition> set_partitions(int n);

// Ordered partitions of the interval {1..n} into k nonempty contiguous
// blocks, reported as block lengths (compositions of n into k parts).
std::vector<std::vector<int>> compositions(int n, int k);

// All compositions of n into any number >= 1 of nonempty parts.
std::vector<std::vector<int>> all_compositions(int n);

// Koszul sign (-1)^{#{(i,j) in I x J : j < i}} for disjoint sorted subsets.
// Throws if the subsets intersect.
int koszul_sign(const ColorSubset& I, const ColorSubset& J);

// Sign of the multi-block concatenation sgn(I_1,...,I_r), the product of the
// pairwise signs.
int koszul_sign_multi(const std::vector<ColorSubset>& blocks);

ColorSubset subset_union(const ColorSubset& I, const ColorSubset& J);

// A finite groupoid presented by one object per isomorphism class together
// with the order of its automorphism group.
struct FiniteGroupoid {
  std::vector<Integer> automorphism_counts;
};

// Groupoid cardinality: sum of 1/|Aut| over the classes.
Rational groupoid_cardinality(const FiniteGroupoid& g);

}  // namespace combalg
