#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "combalg/indices.hpp"
#include "combalg/rational.hpp"

namespace combalg {

// Monomial x^a theta_I with I a strictly increasing subset of the odd
// coordinates.
struct SuperKey {
  MultiIndex x;
  ColorSubset theta;

  auto operator<=>(const SuperKey&) const = default;
};

// Truncated series in d even variables tensor a Grassmann algebra on m odd
// generators.  Truncation bounds the even total degree; the odd part is
// finite by nilpotence.
class SuperSeries {
 public:
  SuperSeries(int dim, int odd_dim, int trunc);

  static SuperSeries constant(int dim, int odd_dim, int trunc, const Rational& c);
  static SuperSeries variable(int dim, int odd_dim, int trunc, int i);   // x_i
  static SuperSeries theta(int dim, int odd_dim, int trunc, int j);     // theta_j
  static SuperSeries monomial(int dim, int odd_dim, int trunc, const SuperKey& k,
                              const Rational& c);

  int dim() const { return dim_; }
  int odd_dim() const { return odd_dim_; }
  int trunc() const { return trunc_; }
  const std::map<SuperKey, Rational>& terms() const { return terms_; }

  Rational coeff(const SuperKey& k) const;
  void set_coeff(const SuperKey& k, const Rational& c);

  SuperSeries operator+(const SuperSeries& o) const;
  SuperSeries operator-(const SuperSeries& o) const;
  SuperSeries operator-() const;
  SuperSeries operator*(const SuperSeries& o) const;  // Koszul signs
  SuperSeries scaled(const Rational& c) const;
  SuperSeries pow(int n) const;

  // Inverse of a series with scalar term exactly 1.
  SuperSeries mul_inverse() const;

  // Restriction to the even subalgebra (theta = empty).
  SuperSeries even_part() const;

  bool is_zero() const { return terms_.empty(); }
  bool operator==(const SuperSeries& o) const;

  std::string to_string() const;

 private:
  int dim_;
  int odd_dim_;
  int trunc_;
  std::map<SuperKey, Rational> terms_;
  void check_same(const SuperSeries& o) const;
};

// Divided-power coefficients of powers: s_{n,I}(r) = n! * [x^n theta_I] f^r
// for one even variable.
std::map<SuperKey, Rational> super_power_sequence(const SuperSeries& f, int r);

}  // namespace combalg
