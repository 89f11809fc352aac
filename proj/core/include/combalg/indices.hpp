#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace combalg {

// Exponent vector of a commutative monomial x^a; length is the ambient
// dimension d and entries are >= 0.
using MultiIndex = std::vector<int>;

// Letter sequence of a noncommutative monomial x_{w_1}...x_{w_m}; letters are
// 1-based colors in [d].
using Word = std::vector<int>;

inline int total_degree(const MultiIndex& a) {
  return std::accumulate(a.begin(), a.end(), 0);
}

inline MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index: dimension mismatch");
  MultiIndex c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

// Componentwise difference; requires b <= a componentwise.
inline MultiIndex sub(const MultiIndex& a, const MultiIndex& b) {
  if (a.size() != b.size()) throw std::invalid_argument("multi-index: dimension mismatch");
  MultiIndex c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    c[i] = a[i] - b[i];
    if (c[i] < 0) throw std::invalid_argument("multi-index: negative entry in difference");
  }
  return c;
}

inline bool leq(const MultiIndex& b, const MultiIndex& a) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (b[i] > a[i]) return false;
  return true;
}

inline MultiIndex unit_index(int dim, int i) {
  if (i < 1 || i > dim) throw std::invalid_argument("multi-index: coordinate out of range");
  MultiIndex a(dim, 0);
  a[i - 1] = 1;
  return a;
}

inline MultiIndex zero_index(int dim) { return MultiIndex(dim, 0); }

// Content of a word: how many times each color occurs.
inline MultiIndex content(const Word& w, int dim) {
  MultiIndex a(dim, 0);
  for (int c : w) {
    if (c < 1 || c > dim) throw std::invalid_argument("word: letter out of range");
    a[c - 1] += 1;
  }
  return a;
}

// Order on words by length first, then lexicographically; this is the
// canonical term order for noncommutative series.
struct WordOrder {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Strictly increasing subset of odd coordinates [m], kept sorted.
using ColorSubset = std::vector<int>;

inline void check_subset(const ColorSubset& s, int m) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 1 || s[i] > m) throw std::invalid_argument("odd-index set: entry out of range");
    if (i > 0 && s[i] <= s[i - 1]) throw std::invalid_argument("odd-index set: not strictly increasing");
  }
}

inline std::string index_to_string(const MultiIndex& a) {
  std::string s = "(";
  for (size_t i = 0; i < a.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(a[i]);
  }
  return s + ")";
}

// All multi-indices of the given dimension with total degree <= bound, in
// lexicographic order.
std::vector<MultiIndex> multi_indices_up_to(int dim, int bound);

// All words over [dim] of length <= bound, in (length, lex) order.
std::vector<Word> words_up_to(int dim, int bound);

}  // namespace combalg
