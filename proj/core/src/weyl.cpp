#include "combalg/weyl.hpp"

#include <algorithm>
#include <stdexcept>

#include "combalg/combinatorics.hpp"

namespace combalg {

WeylElement::WeylElement(int dim, int trunc) : dim_(dim), trunc_(trunc) {
  if (dim < 1) throw std::invalid_argument("weyl: dimension must be >= 1");
  if (trunc < 0) throw std::invalid_argument("weyl: truncation must be >= 0");
}

WeylElement WeylElement::constant(int dim, int trunc, const Rational& c) {
  WeylElement r(dim, trunc);
  r.set_coeff({zero_index(dim), zero_index(dim), 0}, c);
  return r;
}

WeylElement WeylElement::x_var(int dim, int trunc, int i) {
  WeylElement r(dim, trunc);
  r.set_coeff({unit_index(dim, i), zero_index(dim), 0}, 1);
  return r;
}

WeylElement WeylElement::y_var(int dim, int trunc, int i) {
  WeylElement r(dim, trunc);
  r.set_coeff({zero_index(dim), unit_index(dim, i), 0}, 1);
  return r;
}

WeylElement WeylElement::hbar(int dim, int trunc) {
  WeylElement r(dim, trunc);
  r.set_coeff({zero_index(dim), zero_index(dim), 1}, 1);
  return r;
}

WeylElement WeylElement::monomial(int dim, int trunc, const WeylKey& k, const Rational& c) {
  WeylElement r(dim, trunc);
  r.set_coeff(k, c);
  return r;
}

Rational WeylElement::coeff(const WeylKey& k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

void WeylElement::set_coeff(const WeylKey& k, const Rational& c) {
  if (static_cast<int>(k.x.size()) != dim_ || static_cast<int>(k.y.size()) != dim_)
    throw std::invalid_argument("weyl: key dimension mismatch");
  if (k.h < 0) throw std::invalid_argument("weyl: negative h exponent");
  for (int e : k.x)
    if (e < 0) throw std::invalid_argument("weyl: negative exponent");
  for (int e : k.y)
    if (e < 0) throw std::invalid_argument("weyl: negative exponent");
  if (graded_degree(k) > trunc_) return;
  if (c == 0)
    terms_.erase(k);
  else
    terms_[k] = c;
}

void WeylElement::check_same(const WeylElement& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("weyl: dimension mismatch");
}

WeylElement WeylElement::operator+(const WeylElement& o) const {
  check_same(o);
  WeylElement r(dim_, std::min(trunc_, o.trunc_));
  for (const auto& [k, c] : terms_) r.set_coeff(k, c);
  for (const auto& [k, c] : o.terms_) r.set_coeff(k, r.coeff(k) + c);
  return r;
}

WeylElement WeylElement::operator-(const WeylElement& o) const { return *this + (-o); }

WeylElement WeylElement::operator-() const {
  WeylElement r(dim_, trunc_);
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

WeylElement WeylElement::scaled(const Rational& c) const {
  WeylElement r(dim_, trunc_);
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

WeylElement WeylElement::star(const WeylElement& o) const {
  check_same(o);
  WeylElement r(dim_, std::min(trunc_, o.trunc_));
  for (const auto& [ka, ca] : terms_) {
    for (const auto& [kb, cb] : o.terms_) {
      // Contractions trade a y and an x for an h, so the graded degree of
      // every resulting key equals the sum of the input grades.
      if (graded_degree(ka) + graded_degree(kb) > r.trunc_) continue;
      // Coordinatewise contraction of the middle block y^{b} x^{a'}.
      MultiIndex kmax(dim_, 0);
      for (int i = 0; i < dim_; ++i) kmax[i] = std::min(ka.y[i], kb.x[i]);
      std::vector<int> kvec(dim_, 0);
      auto rec = [&](auto&& self, int pos, Rational factor) -> void {
        if (pos == dim_) {
          WeylKey key;
          key.x = add(ka.x, kb.x);
          key.y = add(ka.y, kb.y);
          key.h = ka.h + kb.h;
          for (int i = 0; i < dim_; ++i) {
            key.x[i] -= kvec[i];
            key.y[i] -= kvec[i];
            key.h += kvec[i];
          }
          r.set_coeff(key, r.coeff(key) + ca * cb * factor);
          return;
        }
        for (int k = 0; k <= kmax[pos]; ++k) {
          kvec[pos] = k;
          Rational f = Rational(factorial(k)) * Rational(binomial(ka.y[pos], k)) *
                       Rational(binomial(kb.x[pos], k));
          self(self, pos + 1, factor * f);
        }
      };
      rec(rec, 0, 1);
    }
  }
  return r;
}

WeylElement WeylElement::star_pow(int n) const {
  if (n < 0) throw std::invalid_argument("weyl: negative power");
  WeylElement r = constant(dim_, trunc_, 1);
  for (int i = 0; i < n; ++i) r = r.star(*this);
  return r;
}

WeylElement WeylElement::commutator(const WeylElement& o) const {
  return star(o) - o.star(*this);
}

CommSeries WeylElement::classical_part() const {
  CommSeries r(2 * dim_, trunc_);
  for (const auto& [k, c] : terms_) {
    if (k.h != 0) continue;
    MultiIndex a(2 * dim_, 0);
    for (int i = 0; i < dim_; ++i) {
      a[i] = k.x[i];
      a[dim_ + i] = k.y[i];
    }
    r.set_coeff(a, c);
  }
  return r;
}

std::map<WeylKey, Rational> WeylElement::egf_counts() const {
  std::map<WeylKey, Rational> out;
  for (const auto& [k, c] : terms_)
    out[k] = c * Rational(multi_factorial(k.x) * multi_factorial(k.y) * factorial(k.h));
  return out;
}

bool WeylElement::operator==(const WeylElement& o) const {
  return dim_ == o.dim_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

std::string WeylElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<WeylKey, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    int dl = graded_degree(l.first), dr = graded_degree(r.first);
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
    auto emit = [&](const std::string& base, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += " ";
      mono += base;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    for (int i = 0; i < dim_; ++i) emit(dim_ == 1 ? "x" : "x" + std::to_string(i + 1), k.x[i]);
    for (int i = 0; i < dim_; ++i) emit(dim_ == 1 ? "y" : "y" + std::to_string(i + 1), k.y[i]);
    emit("h", k.h);
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

WeylElement exp_element(const WeylElement& f) {
  WeylKey zero_key{zero_index(f.dim()), zero_index(f.dim()), 0};
  if (f.coeff(zero_key) != 0)
    throw std::invalid_argument("weyl: exp needs zero constant term");
  bool has_x = false, has_y = false, has_h = false;
  for (const auto& [k, c] : f.terms()) {
    (void)c;
    if (total_degree(k.x) > 0) has_x = true;
    if (total_degree(k.y) > 0) has_y = true;
    if (k.h > 0) has_h = true;
  }
  if (has_x + has_y + has_h > 1)
    throw std::invalid_argument("weyl: exp needs a pure x, pure y, or pure h argument");
  WeylElement acc = WeylElement::constant(f.dim(), f.trunc(), 1);
  WeylElement power = acc;
  Rational inv_fact = 1;
  for (int n = 1; n <= f.trunc(); ++n) {
    power = power.star(f);
    inv_fact /= n;
    acc = acc + power.scaled(inv_fact);
  }
  return acc;
}

Rational quantum_binomial(int n, int a, int b) {
  if (n < 0 || a < 0 || b < 0) return 0;
  int rest = n - a - b;
  if (rest < 0 || rest % 2 != 0) return 0;
  Integer num = factorial(n) * double_factorial(n - a - b - 1);
  Integer den = factorial(a) * factorial(b) * factorial(rest);
  return Rational(num, den);
}

}  // namespace combalg
