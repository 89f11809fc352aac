#include "combalg/comm_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "combalg/combinatorics.hpp"

namespace combalg {

CommSeries::CommSeries(int dim, int trunc) : dim_(dim), trunc_(trunc) {
  if (dim < 1) throw std::invalid_argument("series: dimension must be >= 1");
  if (trunc < 0) throw std::invalid_argument("series: truncation must be >= 0");
}

CommSeries CommSeries::constant(int dim, int trunc, const Rational& c) {
  CommSeries s(dim, trunc);
  s.set_coeff(zero_index(dim), c);
  return s;
}

CommSeries CommSeries::variable(int dim, int trunc, int i) {
  CommSeries s(dim, trunc);
  s.set_coeff(unit_index(dim, i), 1);
  return s;
}

CommSeries CommSeries::monomial(int dim, int trunc, const MultiIndex& a, const Rational& c) {
  CommSeries s(dim, trunc);
  s.set_coeff(a, c);
  return s;
}

Rational CommSeries::coeff(const MultiIndex& a) const {
  auto it = terms_.find(a);
  return it == terms_.end() ? Rational(0) : it->second;
}

void CommSeries::set_coeff(const MultiIndex& a, const Rational& c) {
  if (static_cast<int>(a.size()) != dim_)
    throw std::invalid_argument("series: multi-index dimension mismatch");
  for (int e : a)
    if (e < 0) throw std::invalid_argument("series: negative exponent");
  if (total_degree(a) > trunc_) return;
  if (c == 0)
    terms_.erase(a);
  else
    terms_[a] = c;
}

void CommSeries::check_same(const CommSeries& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("series: dimension mismatch");
}

CommSeries CommSeries::operator+(const CommSeries& o) const {
  check_same(o);
  CommSeries r(dim_, std::min(trunc_, o.trunc_));
  for (const auto& [a, c] : terms_) r.set_coeff(a, c);
  for (const auto& [a, c] : o.terms_) r.set_coeff(a, r.coeff(a) + c);
  return r;
}

CommSeries CommSeries::operator-(const CommSeries& o) const { return *this + (-o); }

CommSeries CommSeries::operator-() const {
  CommSeries r(dim_, trunc_);
  for (const auto& [a, c] : terms_) r.terms_[a] = -c;
  return r;
}

CommSeries CommSeries::operator*(const CommSeries& o) const {
  check_same(o);
  CommSeries r(dim_, std::min(trunc_, o.trunc_));
  for (const auto& [a, ca] : terms_) {
    int da = total_degree(a);
    if (da > r.trunc_) continue;
    for (const auto& [b, cb] : o.terms_) {
      if (da + total_degree(b) > r.trunc_) continue;
      MultiIndex ab = add(a, b);
      r.set_coeff(ab, r.coeff(ab) + ca * cb);
    }
  }
  return r;
}

CommSeries CommSeries::scaled(const Rational& c) const {
  CommSeries r(dim_, trunc_);
  if (c == 0) return r;
  for (const auto& [a, v] : terms_) r.terms_[a] = v * c;
  return r;
}

CommSeries CommSeries::pow(int n) const {
  if (n < 0) throw std::invalid_argument("series: negative power");
  CommSeries r = constant(dim_, trunc_, 1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

CommSeries CommSeries::derivative(int i) const {
  if (i < 1 || i > dim_) throw std::invalid_argument("series: derivative coordinate out of range");
  CommSeries r(dim_, trunc_);
  for (const auto& [a, c] : terms_) {
    if (a[i - 1] == 0) continue;
    MultiIndex b = a;
    b[i - 1] -= 1;
    r.set_coeff(b, c * a[i - 1]);
  }
  return r;
}

CommSeries CommSeries::compose(const std::vector<CommSeries>& args) const {
  if (static_cast<int>(args.size()) != dim_)
    throw std::invalid_argument("series: compose needs one argument per variable");
  int adim = args[0].dim();
  int atrunc = trunc_;
  for (const auto& g : args) {
    if (g.dim() != adim) throw std::invalid_argument("series: compose argument dimension mismatch");
    if (g.coeff(zero_index(adim)) != 0)
      throw std::invalid_argument("series: compose argument has nonzero constant term");
    atrunc = std::min(atrunc, g.trunc());
  }
  CommSeries r(adim, atrunc);
  // Cache powers of each argument up to the largest exponent used.
  std::vector<std::vector<CommSeries>> powers(dim_);
  for (int i = 0; i < dim_; ++i) powers[i].push_back(constant(adim, atrunc, 1));
  for (const auto& [a, c] : terms_) {
    if (total_degree(a) > atrunc) continue;
    CommSeries term = constant(adim, atrunc, c);
    for (int i = 0; i < dim_; ++i) {
      while (static_cast<int>(powers[i].size()) <= a[i])
        powers[i].push_back(powers[i].back() * args[i]);
      term = term * powers[i][a[i]];
    }
    r = r + term;
  }
  return r;
}

CommSeries CommSeries::mul_inverse() const {
  if (coeff(zero_index(dim_)) != 1)
    throw std::invalid_argument("series: mul_inverse needs constant term 1");
  CommSeries one = constant(dim_, trunc_, 1);
  CommSeries f = one - *this;  // valuation >= 1
  CommSeries acc = one;
  for (int i = 0; i < trunc_; ++i) acc = one + f * acc;
  return acc;
}

std::vector<CommSeries> CommSeries::comp_inverse(const std::vector<CommSeries>& s) {
  if (s.empty()) throw std::invalid_argument("series: empty tuple");
  int d = static_cast<int>(s.size());
  int dim = s[0].dim();
  int trunc = s[0].trunc();
  if (dim != d) throw std::invalid_argument("series: comp_inverse needs a square tuple");
  std::vector<CommSeries> p;  // higher-order part, S = X + P
  for (int i = 0; i < d; ++i) {
    if (s[i].dim() != dim || s[i].trunc() != trunc)
      throw std::invalid_argument("series: comp_inverse tuple shape mismatch");
    if (s[i].coeff(zero_index(dim)) != 0)
      throw std::invalid_argument("series: comp_inverse needs zero constant terms");
    for (int j = 1; j <= d; ++j) {
      Rational lin = s[i].coeff(unit_index(dim, j));
      if (lin != ((i + 1 == j) ? Rational(1) : Rational(0)))
        throw std::invalid_argument("series: comp_inverse needs identity linear part");
    }
    p.push_back(s[i] - variable(dim, trunc, i + 1));
  }
  std::vector<CommSeries> t;
  for (int i = 0; i < d; ++i) t.push_back(variable(dim, trunc, i + 1));
  // Each pass fixes one more degree; P has valuation >= 2.
  for (int pass = 0; pass < trunc; ++pass) {
    std::vector<CommSeries> next;
    for (int i = 0; i < d; ++i) next.push_back(variable(dim, trunc, i + 1) - p[i].compose(t));
    t = next;
  }
  return t;
}

CommSeries CommSeries::truncated(int new_trunc) const {
  CommSeries r(dim_, std::min(new_trunc, trunc_));
  for (const auto& [a, c] : terms_) r.set_coeff(a, c);
  return r;
}

std::map<MultiIndex, Rational> CommSeries::egf_counts() const {
  std::map<MultiIndex, Rational> out;
  for (const auto& [a, c] : terms_) out[a] = c * Rational(multi_factorial(a));
  return out;
}

CommSeries CommSeries::from_egf_counts(int dim, int trunc,
                                       const std::map<MultiIndex, Rational>& counts) {
  CommSeries r(dim, trunc);
  for (const auto& [a, c] : counts) r.set_coeff(a, c / Rational(multi_factorial(a)));
  return r;
}

bool CommSeries::operator==(const CommSeries& o) const {
  return dim_ == o.dim_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

bool CommSeries::equal_up_to(const CommSeries& o, int degree) const {
  if (dim_ != o.dim_) return false;
  for (const auto& [a, c] : terms_)
    if (total_degree(a) <= degree && o.coeff(a) != c) return false;
  for (const auto& [a, c] : o.terms_)
    if (total_degree(a) <= degree && coeff(a) != c) return false;
  return true;
}

std::string CommSeries::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  // Sort by total degree; within a degree the leading variables come first
  // (graded lex reading order).
  std::vector<std::pair<MultiIndex, Rational>> items(terms_.begin(), terms_.end());
  std::sort(items.begin(), items.end(), [](const auto& l, const auto& r) {
    int dl = total_degree(l.first), dr = total_degree(r.first);
    if (dl != dr) return dl < dr;
    return l.first > r.first;
  });
  std::string out;
  bool first = true;
  for (const auto& [a, c] : items) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first)
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    std::string mono;
    for (int i = 0; i < dim_; ++i) {
      if (a[i] == 0) continue;
      if (!mono.empty()) mono += " ";
      mono += (dim_ == 1 ? var : var + std::to_string(i + 1));
      if (a[i] > 1) mono += "^" + std::to_string(a[i]);
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

std::vector<Rational> power_sequence(const CommSeries& f, int a) {
  if (f.dim() != 1) throw std::invalid_argument("power_sequence: needs dimension 1");
  CommSeries p = f.pow(a);
  std::vector<Rational> out(f.trunc() + 1, Rational(0));
  for (int n = 0; n <= f.trunc(); ++n) out[n] = p.coeff({n}) * Rational(factorial(n));
  return out;
}

}  // namespace combalg
