#pragma once

#include <map>
#include <string>
#include <vector>

#include "combalg/indices.hpp"
#include "combalg/rational.hpp"

namespace combalg {

// Truncated multivariate power series over the rationals, R[[x_1..x_d]] mod
// total degree > trunc.  Zero coefficients are never stored.
class CommSeries {
 public:
  CommSeries(int dim, int trunc);

  static CommSeries constant(int dim, int trunc, const Rational& c);
  static CommSeries variable(int dim, int trunc, int i);  // x_i, 1-based
  static CommSeries monomial(int dim, int trunc, const MultiIndex& a, const Rational& c);

  int dim() const { return dim_; }
  int trunc() const { return trunc_; }
  const std::map<MultiIndex, Rational>& terms() const { return terms_; }

  Rational coeff(const MultiIndex& a) const;
  void set_coeff(const MultiIndex& a, const Rational& c);

  CommSeries operator+(const CommSeries& o) const;
  CommSeries operator-(const CommSeries& o) const;
  CommSeries operator-() const;
  CommSeries operator*(const CommSeries& o) const;
  CommSeries scaled(const Rational& c) const;
  CommSeries pow(int n) const;

  CommSeries derivative(int i) const;  // d/dx_i, 1-based

  // Substitution F(args_1,...,args_d); every argument must have zero constant
  // term and matching ambient dimension.
  CommSeries compose(const std::vector<CommSeries>& args) const;

  // 1/F for F with constant term exactly 1, via the geometric series.
  CommSeries mul_inverse() const;

  // Compositional inverse of a d-tuple S with S(0) = 0 and identity linear
  // part; returns the unique T with S(T) = T(S) = id.
  static std::vector<CommSeries> comp_inverse(const std::vector<CommSeries>& s);

  CommSeries truncated(int new_trunc) const;

  // Divided-power readback: counts(a) = a! * coeff(a).
  std::map<MultiIndex, Rational> egf_counts() const;
  static CommSeries from_egf_counts(int dim, int trunc,
                                    const std::map<MultiIndex, Rational>& counts);

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const CommSeries& o) const;
  bool equal_up_to(const CommSeries& o, int degree) const;

  // Human-readable polynomial, terms sorted by (total degree, lex).
  std::string to_string(const std::string& var = "x") const;

 private:
  int dim_;
  int trunc_;
  std::map<MultiIndex, Rational> terms_;
  void check_same(const CommSeries& o) const;
};

// Coefficients of powers: s_n(a) = n! * [x^n] f^a in one variable, divided
// power normalization.  Requires dim 1.
std::vector<Rational> power_sequence(const CommSeries& f, int a);

}  // namespace combalg
