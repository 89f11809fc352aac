#pragma once

#include <map>
#include <string>
#include <vector>

#include "combalg/comm_series.hpp"
#include "combalg/indices.hpp"
#include "combalg/rational.hpp"

namespace combalg {

// Truncated noncommutative power series over the rationals, R<<x_1..x_d>>
// mod words longer than trunc.  Terms are ordered by word length then lex.
class NCSeries {
 public:
  NCSeries(int dim, int trunc);

  static NCSeries constant(int dim, int trunc, const Rational& c);
  static NCSeries variable(int dim, int trunc, int i);  // x_i, 1-based
  static NCSeries monomial(int dim, int trunc, const Word& w, const Rational& c);

  int dim() const { return dim_; }
  int trunc() const { return trunc_; }
  const std::map<Word, Rational, WordOrder>& terms() const { return terms_; }

  Rational coeff(const Word& w) const;
  void set_coeff(const Word& w, const Rational& c);

  NCSeries operator+(const NCSeries& o) const;
  NCSeries operator-(const NCSeries& o) const;
  NCSeries operator-() const;
  NCSeries operator*(const NCSeries& o) const;  // concatenation product
  NCSeries scaled(const Rational& c) const;
  NCSeries pow(int n) const;

  // Deletion derivative: coefficient of w in D_i F sums the coefficients of
  // all single insertions of the letter i into w.
  NCSeries derivative(int i) const;

  // Substitution F(args_1,...,args_d) with constant-free arguments; letters
  // expand in word order.
  NCSeries compose(const std::vector<NCSeries>& args) const;

  // Two-sided inverse of F with constant term 1, via the geometric series.
  NCSeries mul_inverse() const;

  // Compositional inverse of a d-tuple with zero constant term and identity
  // linear part.
  static std::vector<NCSeries> comp_inverse(const std::vector<NCSeries>& s);

  // Shuffle product.
  NCSeries shuffle(const NCSeries& o) const;

  // Projection pi onto commuting variables: words collapse onto their
  // content.
  CommSeries abelianize() const;

  // Section s of pi: x^a/a! maps to the sum of all words of content a.
  static NCSeries symmetrize(const CommSeries& f);

  NCSeries truncated(int new_trunc) const;

  std::map<Word, Rational, WordOrder> egf_counts() const;  // counts(w) = coeff(w)

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const NCSeries& o) const;
  bool equal_up_to(const NCSeries& o, int length) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  int dim_;
  int trunc_;
  std::map<Word, Rational, WordOrder> terms_;
  void check_same(const NCSeries& o) const;
};

}  // namespace combalg
