#include "combalg/nc_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "combalg/combinatorics.hpp"

namespace combalg {

NCSeries::NCSeries(int dim, int trunc) : dim_(dim), trunc_(trunc) {
  if (dim < 1) throw std::invalid_argument("series: dimension must be >= 1");
  if (trunc < 0) throw std::invalid_argument("series: truncation must be >= 0");
}

NCSeries NCSeries::constant(int dim, int trunc, const Rational& c) {
  NCSeries s(dim, trunc);
  s.set_coeff({}, c);
  return s;
}

NCSeries NCSeries::variable(int dim, int trunc, int i) {
  if (i < 1 || i > dim) throw std::invalid_argument("series: variable out of range");
  NCSeries s(dim, trunc);
  s.set_coeff({i}, 1);
  return s;
}

NCSeries NCSeries::monomial(int dim, int trunc, const Word& w, const Rational& c) {
  NCSeries s(dim, trunc);
  s.set_coeff(w, c);
  return s;
}

Rational NCSeries::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void NCSeries::set_coeff(const Word& w, const Rational& c) {
  for (int l : w)
    if (l < 1 || l > dim_) throw std::invalid_argument("series: word letter out of range");
  if (static_cast<int>(w.size()) > trunc_) return;
  if (c == 0)
    terms_.erase(w);
  else
    terms_[w] = c;
}

void NCSeries::check_same(const NCSeries& o) const {
  if (dim_ != o.dim_) throw std::invalid_argument("series: dimension mismatch");
}

NCSeries NCSeries::operator+(const NCSeries& o) const {
  check_same(o);
  NCSeries r(dim_, std::min(trunc_, o.trunc_));
  for (const auto& [w, c] : terms_) r.set_coeff(w, c);
  for (const auto& [w, c] : o.terms_) r.set_coeff(w, r.coeff(w) + c);
  return r;
}

NCSeries NCSeries::operator-(const NCSeries& o) const { return *this + (-o); }

NCSeries NCSeries::operator-() const {
  NCSeries r(dim_, trunc_);
  for (const auto& [w, c] : terms_) r.terms_[w] = -c;
  return r;
}

NCSeries NCSeries::operator*(const NCSeries& o) const {
  check_same(o);
  NCSeries r(dim_, std::min(trunc_, o.trunc_));
  for (const auto& [u, cu] : terms_) {
    if (static_cast<int>(u.size()) > r.trunc_) continue;
    for (const auto& [v, cv] : o.terms_) {
      if (static_cast<int>(u.size() + v.size()) > r.trunc_) continue;
      Word w = u;
      w.insert(w.end(), v.begin(), v.end());
      r.set_coeff(w, r.coeff(w) + cu * cv);
    }
  }
  return r;
}

NCSeries NCSeries::scaled(const Rational& c) const {
  NCSeries r(dim_, trunc_);
  if (c == 0) return r;
  for (const auto& [w, v] : terms_) r.terms_[w] = v * c;
  return r;
}

NCSeries NCSeries::pow(int n) const {
  if (n < 0) throw std::invalid_argument("series: negative power");
  NCSeries r = constant(dim_, trunc_, 1);
  for (int i = 0; i < n; ++i) r = r * *this;
  return r;
}

NCSeries NCSeries::derivative(int i) const {
  if (i < 1 || i > dim_) throw std::invalid_argument("series: derivative letter out of range");
  NCSeries r(dim_, trunc_);
  // Dual form of the insertion rule: every occurrence of the letter i in a
  // stored word contributes its deletion.
  for (const auto& [u, c] : terms_)
    for (size_t q = 0; q < u.size(); ++q) {
      if (u[q] != i) continue;
      Word w;
      w.reserve(u.size() - 1);
      for (size_t t = 0; t < u.size(); ++t)
        if (t != q) w.push_back(u[t]);
      r.set_coeff(w, r.coeff(w) + c);
    }
  return r;
}

NCSeries NCSeries::compose(const std::vector<NCSeries>& args) const {
  if (static_cast<int>(args.size()) != dim_)
    throw std::invalid_argument("series: compose needs one argument per variable");
  int adim = args[0].dim();
  int atrunc = trunc_;
  for (const auto& g : args) {
    if (g.dim() != adim) throw std::invalid_argument("series: compose argument dimension mismatch");
    if (g.coeff({}) != 0)
      throw std::invalid_argument("series: compose argument has nonzero constant term");
    atrunc = std::min(atrunc, g.trunc());
  }
  NCSeries r(adim, atrunc);
  for (const auto& [w, c] : terms_) {
    if (static_cast<int>(w.size()) > atrunc) continue;
    NCSeries term = constant(adim, atrunc, c);
    for (int letter : w) term = term * args[letter - 1];
    r = r + term;
  }
  return r;
}

NCSeries NCSeries::mul_inverse() const {
  if (coeff({}) != 1) throw std::invalid_argument("series: mul_inverse needs constant term 1");
  NCSeries one = constant(dim_, trunc_, 1);
  NCSeries f = one - *this;
  NCSeries acc = one;
  for (int i = 0; i < trunc_; ++i) acc = one + f * acc;
  return acc;
}

std::vector<NCSeries> NCSeries::comp_inverse(const std::vector<NCSeries>& s) {
  if (s.empty()) throw std::invalid_argument("series: empty tuple");
  int d = static_cast<int>(s.size());
  int dim = s[0].dim();
  int trunc = s[0].trunc();
  if (dim != d) throw std::invalid_argument("series: comp_inverse needs a square tuple");
  std::vector<NCSeries> p;
  for (int i = 0; i < d; ++i) {
    if (s[i].dim() != dim || s[i].trunc() != trunc)
      throw std::invalid_argument("series: comp_inverse tuple shape mismatch");
    if (s[i].coeff({}) != 0)
      throw std::invalid_argument("series: comp_inverse needs zero constant terms");
    for (int j = 1; j <= d; ++j) {
      Rational lin = s[i].coeff({j});
      if (lin != ((i + 1 == j) ? Rational(1) : Rational(0)))
        throw std::invalid_argument("series: comp_inverse needs identity linear part");
    }
    p.push_back(s[i] - variable(dim, trunc, i + 1));
  }
  std::vector<NCSeries> t;
  for (int i = 0; i < d; ++i) t.push_back(variable(dim, trunc, i + 1));
  for (int pass = 0; pass < trunc; ++pass) {
    std::vector<NCSeries> next;
    for (int i = 0; i < d; ++i) next.push_back(variable(dim, trunc, i + 1) - p[i].compose(t));
    t = next;
  }
  return t;
}

NCSeries NCSeries::shuffle(const NCSeries& o) const {
  check_same(o);
  NCSeries r(dim_, std::min(trunc_, o.trunc_));
  for (const auto& [u, cu] : terms_) {
    for (const auto& [v, cv] : o.terms_) {
      int m = static_cast<int>(u.size()), n = static_cast<int>(v.size());
      if (m + n > r.trunc_) continue;
      // Choose the slots occupied by u among the m+n positions.
      std::vector<bool> pick(m + n, false);
      std::fill(pick.begin(), pick.begin() + m, true);
      do {
        Word w(m + n);
        int iu = 0, iv = 0;
        for (int t = 0; t < m + n; ++t) w[t] = pick[t] ? u[iu++] : v[iv++];
        r.set_coeff(w, r.coeff(w) + cu * cv);
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  return r;
}

CommSeries NCSeries::abelianize() const {
  CommSeries r(dim_, trunc_);
  for (const auto& [w, c] : terms_) {
    MultiIndex a = content(w, dim_);
    r.set_coeff(a, r.coeff(a) + c);
  }
  return r;
}

NCSeries NCSeries::symmetrize(const CommSeries& f) {
  NCSeries r(f.dim(), f.trunc());
  // s(x^a / a!) is the sum of the words of content a, so the coefficient of
  // each word w is a! * coeff(content(w)).
  for (const Word& w : words_up_to(f.dim(), f.trunc())) {
    MultiIndex a = content(w, f.dim());
    Rational c = f.coeff(a);
    if (c == 0) continue;
    r.set_coeff(w, c * Rational(multi_factorial(a)));
  }
  return r;
}

NCSeries NCSeries::truncated(int new_trunc) const {
  NCSeries r(dim_, std::min(new_trunc, trunc_));
  for (const auto& [w, c] : terms_) r.set_coeff(w, c);
  return r;
}

std::map<Word, Rational, WordOrder> NCSeries::egf_counts() const {
  return terms_;
}

bool NCSeries::operator==(const NCSeries& o) const {
  return dim_ == o.dim_ && trunc_ == o.trunc_ && terms_ == o.terms_;
}

bool NCSeries::equal_up_to(const NCSeries& o, int length) const {
  if (dim_ != o.dim_) return false;
  for (const auto& [w, c] : terms_)
    if (static_cast<int>(w.size()) <= length && o.coeff(w) != c) return false;
  for (const auto& [w, c] : o.terms_)
    if (static_cast<int>(w.size()) <= length && coeff(w) != c) return false;
  return true;
}

std::string NCSeries::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    Rational abs = c < 0 ? Rational(-c) : c;
    if (first)
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    // Run-length encode consecutive equal letters.
    std::string mono;
    size_t q = 0;
    while (q < w.size()) {
      size_t r2 = q;
      while (r2 < w.size() && w[r2] == w[q]) ++r2;
      if (!mono.empty()) mono += " ";
      mono += (dim_ == 1 ? var : var + std::to_string(w[q]));
      if (r2 - q > 1) mono += "^" + std::to_string(r2 - q);
      q = r2;
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

}  // namespace combalg
