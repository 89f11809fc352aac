#include "combalg/super_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "combalg/combinatorics.hpp"

namespace combalg {

SuperSeries::SuperSeries(int dim, int odd_dim, int trunc)
    : dim_(dim), odd_dim_(odd_dim), trunc_(trunc) {
  if (dim < 1) throw std::invalid_argument("series: dimension must be >= 1");
  if (odd_dim < 0) throw std::invalid_argument("series: odd dimension must be >= 0");
  if (trunc < 0) throw std::invalid_argument("series: truncation must be >= 0");
}

SuperSeries SuperSeries::constant(int dim, int odd_dim, int trunc, const Rational& c) {
  SuperSeries r(dim, odd_dim, trunc);
  r.set_coeff({zero_index(dim), {}}, c);
  return r;
}

SuperSeries SuperSeries::variable(int dim, int odd_dim, int trunc, int i) {
  SuperSeries r(dim, odd_dim, trunc);
  r.set_coeff({unit_index(dim, i), {}}, 1);
  return r;
}

SuperSeries SuperSeries::theta(int dim, int odd_dim, int trunc, int j) {
  if (j < 1 || j > odd_dim) throw std::invalid_argument("series: odd generator out of range");
  SuperSeries r(dim, odd_dim, trunc);
  r.set_coeff({zero_index(dim), {j}}, 1);
  return r;
}

SuperSeries SuperSeries::monomial(int dim, int odd_dim, int trunc, const SuperKey& k,
                                  const Rational& c) {
  SuperSeries r(dim, odd_dim, trunc);
  r.set_coeff(k, c);
  return r;
}

Rational SuperSeries::coeff(const SuperKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SuperSeries::set_coeff(const SuperKey& k, const Rational& c) {
  if (static_cast<int>(k.x.size()) != dim_)
    throw std::invalid_argument("series: multi-index dimension mismatch");
  for (int e : k.x)
    if (e < 0) throw std::invalid_argument("series: negative exponent");
  check_subset(k.theta, odd_dim_);
  if (total_degree(k.x) > trunc_) return;
  if (c == 0)
    terms_.erase(k);
  else
    terms_[k] = c;
}

void SuperSeries::check_same(const SuperSeries& o) const {
  if (dim_ != o.dim_ || odd_dim_ != o.odd_dim_)
    throw std::invalid_argument("series: dimension mismatch");
}

SuperSeries SuperSeries::operator+(const SuperSeries& o) const {
  check_same(o);
  SuperSeries r(dim_, odd_dim_, std::min(trunc_, o.trunc_));
  for (const auto& [k, c] : terms_) r.set_coeff(k, c);
  for (const auto& [k, c] : o.terms_) r.set_coeff(k, r.coeff(k) + c);
  return r;
}

SuperSeries SuperSeries::operator-(const SuperSeries& o) const { return *this + (-o); }

SuperSeries SuperSeries::operator-() const {
  SuperSeries r(dim_, odd_dim_, trunc_);
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

SuperSeries SuperSeries::operator*(const SuperSeries& o) const {
  check_same(o);
  SuperSeries r(dim_, odd_dim_, std::min(trunc_, o.trunc_));
  for (const auto& [ka, ca] : terms_) {
    if (total_degree(ka.x) > r.trunc_) continue;
    for (const auto& [kb, cb] : o.terms_) {
      if (total_degree(ka.x) + total_degree(kb.x) > r.trunc_) continue;
      // Overlapping odd monomials square to zero.
      bool disjoint = true;
      for (int j : ka.theta)
        if (std::binary_search(kb.theta.begin(), kb.theta.end(), j)) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      int sign = koszul_sign(ka.theta, kb.theta);
      SuperKey key{add(ka.x, kb.x), subset_union(ka.theta, kb.theta)};
      r.set_coeff(key, r.coeff(key) + ca * cb * sign);
    }
  }
  return r;
}

SuperSeries SuperSeries::scaled(const Rational& c) const {
  SuperSeries r(dim_, odd_dim_, trunc_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

SuperSeries SuperSeries::pow(int n) const {
  if (n < 0) throw std::invalid_argument("series: negative power");
  SuperSeries r = constant(dim_, odd_dim_, trunc_, 1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

SuperSeries SuperSeries::mul_inverse() const {
  if (coeff({zero_index(dim_), {}}) != 1)
    throw std::invalid_argument("series: mul_inverse needs scalar term 1");
  SuperSeries one = constant(dim_, odd_dim_, trunc_, 1);
  SuperSeries f = one - *this;
  // f has no scalar term; each factor carries even degree >= 1 or at least
  // one odd generator, so the geometric series stops after trunc + odd_dim
  // rounds.
  SuperSeries acc = one;
  for (int i = 0; i < trunc_ + odd_dim_; ++i) acc = one + f * acc;
  return acc;
}

SuperSeries SuperSeries::even_part() const {
  SuperSeries r(dim_, odd_dim_, trunc_);
  for (const auto& [k, c] : terms_)
    if (k.theta.empty()) r.terms_[k] = c;
  return r;
}

bool SuperSeries::operator==(const SuperSeries& o) const {
  return dim_ == o.dim_ && odd_dim_ == o.odd_dim_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

std::string SuperSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<SuperKey, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    int dl = total_degree(l.first.x) + static_cast<int>(l.first.theta.size());
    int dr = total_degree(r.first.x) + static_cast<int>(r.first.theta.size());
    if (dl != dr) return dl < dr;
    return l.first > r.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : items) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first)
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < dim_; ++i) {
      if (k.x[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += (dim_ == 1 ? "x" : "x" + std::to_string(i + 1));
      if (k.x[i] > 1) mono += "^" + std::to_string(k.x[i]);
    }
    for (int j : k.theta) {
      if (!mono.empty()) mono += " ";
      mono += "t" + std::to_string(j);
    }
    if (mono.empty())
      out += rational_to_string(abs);
    else if (abs == 1)
      out += mono;
    else
      out += rational_to_string(abs) + " " + mono;
    first = false;
  }
  return out;
}

std::map<SuperKey, Rational> super_power_sequence(const SuperSeries& f, int r) {
  if (f.dim() != 1) throw std::invalid_argument("power sequence: needs one even variable");
  SuperSeries p = f.pow(r);
  std::map<SuperKey, Rational> out;
  for (const auto& [k, c] : p.terms()) out[k] = c * Rational(factorial(k.x[0]));
  return out;
}

}  // namespace combalg
