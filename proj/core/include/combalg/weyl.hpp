#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "combalg/comm_series.hpp"
#include "combalg/indices.hpp"
#include "combalg/rational.hpp"

namespace combalg {

// Normal-form monomial x^a y^b h^c of the Weyl algebra, x factors written to
// the left of y factors.
struct WeylKey {
  MultiIndex x;
  MultiIndex y;
  int h = 0;

  auto operator<=>(const WeylKey&) const = default;
};

inline int graded_degree(const WeylKey& k) {
  return total_degree(k.x) + total_degree(k.y) + 2 * k.h;
}

// Element of the d-th Weyl algebra with a central formal parameter h,
// truncated at graded degree |a|+|b|+2c > trunc.
class WeylElement {
 public:
  WeylElement(int dim, int trunc);

  static WeylElement constant(int dim, int trunc, const Rational& c);
  static WeylElement x_var(int dim, int trunc, int i);
  static WeylElement y_var(int dim, int trunc, int i);
  static WeylElement hbar(int dim, int trunc);
  static WeylElement monomial(int dim, int trunc, const WeylKey& k, const Rational& c);

  int dim() const { return dim_; }
  int trunc() const { return trunc_; }
  const std::map<WeylKey, Rational>& terms() const { return terms_; }

  Rational coeff(const WeylKey& k) const;
  void set_coeff(const WeylKey& k, const Rational& c);

  WeylElement operator+(const WeylElement& o) const;
  WeylElement operator-(const WeylElement& o) const;
  WeylElement operator-() const;
  WeylElement scaled(const Rational& c) const;

  // Normal-ordered star product; all y-x crossings contract into powers of
  // h coordinatewise.
  WeylElement star(const WeylElement& o) const;
  WeylElement star_pow(int n) const;

  WeylElement commutator(const WeylElement& o) const;  // a*b - b*a

  // h = 0 slice as a series in the 2d commuting variables x_1..x_d,y_1..y_d.
  CommSeries classical_part() const;

  // Divided-power readback: counts(a,b,c) = a! b! c! * coeff.
  std::map<WeylKey, Rational> egf_counts() const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const WeylElement& o) const;

  // Human-readable normal form, e.g. "x^3 y^4 + 12 x^2 y^3 h".  Terms are
  // ordered by graded degree, then by exponents.
  std::string to_string() const;

 private:
  int dim_;
  int trunc_;
  std::map<WeylKey, Rational> terms_;
  void check_same(const WeylElement& o) const;
};

// Star exponential sum_n F^n / n! for F with zero constant term whose
// support is pure x, pure y, or pure h (a commuting family).
WeylElement exp_element(const WeylElement& f);

// Quantum binomial [n; a, b] = n! (n-a-b-1)!! / (a! b! (n-a-b)!), nonzero
// only when n - a - b is even and >= 0.
Rational quantum_binomial(int n, int a, int b);

}  // namespace combalg
