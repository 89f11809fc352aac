#include "combalg/poset.hpp"

#include <stdexcept>
#include <utility>

namespace combalg {

FinitePoset::FinitePoset(std::vector<std::vector<bool>> leq) : leq_(std::move(leq)) {
  size_t n = leq_.size();
  for (const auto& row : leq_)
    if (row.size() != n) throw std::invalid_argument("poset: relation matrix not square");
  for (size_t i = 0; i < n; ++i)
    if (!leq_[i][i]) throw std::invalid_argument("poset: relation not reflexive");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (i != j && leq_[i][j] && leq_[j][i])
        throw std::invalid_argument("poset: relation not antisymmetric");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (leq_[i][j])
        for (size_t k = 0; k < n; ++k)
          if (leq_[j][k] && !leq_[i][k])
            throw std::invalid_argument("poset: relation not transitive");
}

FinitePoset FinitePoset::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw std::invalid_argument("poset: negative size");
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) m[i][i] = true;
  for (auto [i, j] : pairs) {
    if (i < 0 || i >= n || j < 0 || j >= n)
      throw std::invalid_argument("poset: relation element out of range");
    m[i][j] = true;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (m[i][k])
        for (int j = 0; j < n; ++j)
          if (m[k][j]) m[i][j] = true;
  return FinitePoset(std::move(m));
}

std::vector<std::vector<Integer>> mobius_table(const FinitePoset& p) {
  int n = p.size();
  std::vector<std::vector<Integer>> mu(n, std::vector<Integer>(n, 0));
  // Interval recursion: mu(i,i) = 1 and sum over i <= j <= k of mu(i,j) is 0
  // for i < k.  Intervals are processed by increasing size, counting the
  // elements strictly between i and k.
  std::vector<std::vector<int>> between(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (p.leq(i, k)) {
        int c = 0;
        for (int j = 0; j < n; ++j)
          if (p.leq(i, j) && p.leq(j, k)) ++c;
        between[i][k] = c;
      }
  for (int size = 1; size <= n; ++size)
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        if (!p.leq(i, k) || between[i][k] != size) continue;
        if (i == k) {
          mu[i][k] = 1;
          continue;
        }
        Integer s = 0;
        for (int j = 0; j < n; ++j)
          if (p.leq(i, j) && p.leq(j, k) && j != k) s += mu[i][j];
        mu[i][k] = -s;
      }
  // Post check: convolution against the zeta function gives the identity.
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      Integer s = 0;
      for (int j = 0; j < n; ++j)
        if (p.leq(i, j) && p.leq(j, k)) s += mu[i][j];
      Integer want = (i == k) ? 1 : 0;
      if (p.leq(i, k) ? s != want : s != 0)
        throw std::logic_error("mobius: delta identity failed");
    }
  return mu;
}

}  // namespace combalg
