#include "combalg/combinatorics.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace combalg {

Integer factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial: negative argument");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer double_factorial(int n) {
  if (n < -1) throw std::invalid_argument("double factorial: argument below -1");
  Integer r = 1;
  for (int i = n; i >= 2; i -= 2) r *= i;
  return r;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Integer multinomial(int n, const std::vector<int>& parts) {
  int sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != n) throw std::invalid_argument("multinomial: parts do not sum to n");
  Integer r = factorial(n);
  for (int p : parts) r /= factorial(p);
  return r;
}

namespace {

void matchings_rec(std::vector<int>& free_elems, Matching& acc, std::vector<Matching>& out) {
  if (free_elems.empty()) {
    out.push_back(acc);
    return;
  }
  int first = free_elems.front();
  for (size_t j = 1; j < free_elems.size(); ++j) {
    int partner = free_elems[j];
    std::vector<int> rest;
    rest.reserve(free_elems.size() - 2);
    for (size_t t = 1; t < free_elems.size(); ++t)
      if (t != j) rest.push_back(free_elems[t]);
    acc.emplace_back(first, partner);
    matchings_rec(rest, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Matching> perfect_matchings(int n) {
  if (n < 0) throw std::invalid_argument("matchings: negative ground set");
  if (n % 2 != 0) return {};
  std::vector<int> elems(n);
  for (int i = 0; i < n; ++i) elems[i] = i + 1;
  std::vector<Matching> out;
  Matching acc;
  matchings_rec(elems, acc, out);
  return out;
}

std::vector<SetPartition> set_partitions(int n) {
  if (n < 0) throw std::invalid_argument("set partitions: negative ground set");
  std::vector<SetPartition> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<int> rgs(n, 0);
  while (true) {
    int blocks = 0;
    for (int v : rgs) blocks = std::max(blocks, v + 1);
    SetPartition p(blocks);
    for (int i = 0; i < n; ++i) p[rgs[i]].push_back(i + 1);
    out.push_back(p);
    int i = n - 1;
    for (; i > 0; --i) {
      int maxprefix = 0;
      for (int t = 0; t < i; ++t) maxprefix = std::max(maxprefix, rgs[t]);
      if (rgs[i] <= maxprefix) break;
    }
    if (i == 0) break;
    rgs[i] += 1;
    for (int t = i + 1; t < n; ++t) rgs[t] = 0;
  }
  return out;
}

std::vector<std::vector<int>> compositions(int n, int k) {
  std::vector<std::vector<int>> out;
  if (n < 0 || k < 0) throw std::invalid_argument("compositions: negative argument");
  if (k == 0) {
    if (n == 0) out.push_back({});
    return out;
  }
  std::vector<int> acc(k, 0);
  // Lexicographic enumeration by choosing each part in increasing order.
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == k - 1) {
      if (rem >= 1) {
        acc[pos] = rem;
        out.push_back(acc);
      }
      return;
    }
    for (int v = 1; v <= rem - (k - pos - 1); ++v) {
      acc[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

std::vector<std::vector<int>> all_compositions(int n) {
  std::vector<std::vector<int>> out;
  for (int k = 1; k <= n; ++k) {
    auto part = compositions(n, k);
    out.insert(out.end(), part.begin(), part.end());
  }
  if (n == 0) out.push_back({});
  return out;
}

int koszul_sign(const ColorSubset& I, const ColorSubset& J) {
  size_t pi = 0;
  for (int i : I)
    for (int j : J)
      if (i == j) throw std::invalid_argument("koszul sign: subsets intersect");
      else if (j < i) ++pi;
  return pi % 2 == 0 ? 1 : -1;
}

int koszul_sign_multi(const std::vector<ColorSubset>& blocks) {
  int s = 1;
  for (size_t a = 0; a < blocks.size(); ++a)
    for (size_t b = a + 1; b < blocks.size(); ++b) s *= koszul_sign(blocks[a], blocks[b]);
  return s;
}

ColorSubset subset_union(const ColorSubset& I, const ColorSubset& J) {
  ColorSubset u;
  u.reserve(I.size() + J.size());
  std::merge(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(u));
  for (size_t i = 1; i < u.size(); ++i)
    if (u[i] == u[i - 1]) throw std::invalid_argument("odd-index union: subsets intersect");
  return u;
}

Rational groupoid_cardinality(const FiniteGroupoid& g) {
  Rational total = 0;
  for (const Integer& a : g.automorphism_counts) {
    if (a < 1) throw std::invalid_argument("groupoid: automorphism count must be >= 1");
    total += Rational(Integer(1), a);
  }
  return total;
}

std::vector<MultiIndex> multi_indices_up_to(int dim, int bound) {
  std::vector<MultiIndex> out;
  MultiIndex a(dim, 0);
  auto rec = [&](auto&& self, int pos, int rem) -> void {
    if (pos == dim) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      a[pos] = v;
      self(self, pos + 1, rem - v);
    }
  };
  rec(rec, 0, bound);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> words_up_to(int dim, int bound) {
  std::vector<Word> out;
  out.push_back({});
  size_t first_prev = 0;
  for (int len = 1; len <= bound; ++len) {
    size_t end = out.size();
    for (size_t i = first_prev; i < end; ++i)
      for (int c = 1; c <= dim; ++c) {
        Word w = out[i];
        w.push_back(c);
        out.push_back(w);
      }
    first_prev = end;
  }
  std::sort(out.begin(), out.end(), WordOrder{});
  return out;
}

}  // namespace combalg
