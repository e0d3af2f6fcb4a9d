#include "uniton/polynomial.hpp"

#include <algorithm>

#include "uniton/errors.hpp"
#include "modgcd.hpp"

namespace uniton {

Polynomial::Polynomial(GR c) {
  if (!c.is_zero()) c_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<GR> coeffs) : c_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(GR c, int k) {
  if (c.is_zero()) return {};
  std::vector<GR> v(static_cast<std::size_t>(k) + 1);
  v.back() = std::move(c);
  Polynomial p;
  p.c_ = std::move(v);
  return p;
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

GR Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return GR(0);
  return c_[k];
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto &c : p.c_) c = -c;
  return p;
}

Polynomial &Polynomial::operator+=(const Polynomial &o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

Polynomial &Polynomial::operator-=(const Polynomial &o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero()) return {};
  mpz_class da, db;
  ZPoly za = to_integral(a, &da), zb = to_integral(b, &db);
  std::size_t len = a.c_.size() + b.c_.size() - 1;
  std::vector<mpz_class> re(len), im(len);
  for (std::size_t i = 0; i < za.re.size(); ++i) {
    bool ri = sgn(za.re[i]) != 0, ii = sgn(za.im[i]) != 0;
    if (!ri && !ii) continue;
    for (std::size_t j = 0; j < zb.re.size(); ++j) {
      bool rj = sgn(zb.re[j]) != 0, ij = sgn(zb.im[j]) != 0;
      if (ri && rj) mpz_addmul(re[i + j].get_mpz_t(), za.re[i].get_mpz_t(), zb.re[j].get_mpz_t());
      if (ii && ij) mpz_submul(re[i + j].get_mpz_t(), za.im[i].get_mpz_t(), zb.im[j].get_mpz_t());
      if (ri && ij) mpz_addmul(im[i + j].get_mpz_t(), za.re[i].get_mpz_t(), zb.im[j].get_mpz_t());
      if (ii && rj) mpz_addmul(im[i + j].get_mpz_t(), za.im[i].get_mpz_t(), zb.re[j].get_mpz_t());
    }
  }
  mpz_class d = da * db;
  std::vector<GR> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    Rational x(re[k], d), y(im[k], d);
    x.canonicalize();
    y.canonicalize();
    out[k] = GR(std::move(x), std::move(y));
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const GR &s) const {
  if (s.is_zero()) return {};
  Polynomial p = *this;
  for (auto &c : p.c_) c *= s;
  return p;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(
    const Polynomial &d) const {
  if (d.is_zero()) throw DivisionByZero("polynomial division by zero");
  if (degree() < d.degree()) return {Polynomial(), *this};
  std::vector<GR> rem = c_;
  std::vector<GR> q(c_.size() - d.c_.size() + 1);
  GR inv = d.lead().inverse();
  bool monic = d.lead().is_one();
  int dd = d.degree();
  for (int k = degree(); k >= dd; --k) {
    if (rem[k].is_zero()) continue;
    GR f = monic ? rem[k] : rem[k] * inv;
    for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= f * d.c_[j];
    q[k - dd] = std::move(f);
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {Polynomial(std::move(q)), Polynomial(std::move(rem))};
}

Polynomial Polynomial::exact_div(const Polynomial &d) const {
  return divmod(d).first;
}

Polynomial Polynomial::monic() const {
  if (is_zero() || lead().is_one()) return *this;
  return scaled(lead().inverse());
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<GR> out(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    out[k - 1] = c_[k] * GR(static_cast<long>(k));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::conj_coeffs() const {
  Polynomial p = *this;
  for (auto &c : p.c_) c = c.conj();
  return p;
}

GR Polynomial::eval(const GR &x) const {
  GR acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

GcdCofactors gcd_cofactors(const Polynomial &a, const Polynomial &b) {
  if (a.is_zero() || b.is_zero()) throw DivisionByZero("gcd cofactors of zero");
  if (a.degree() == 0 || b.degree() == 0) return {Polynomial(GR(1)), a, b};
  if (a.degree() + b.degree() > 3) return modular_gcd(a, b);
  Polynomial g = gcd(a, b);
  if (g.is_one()) return {g, a, b};
  return {g, a.exact_div(g), b.exact_div(g)};
}

Polynomial gcd(const Polynomial &a, const Polynomial &b) {
  if (a.degree() >= 1 && b.degree() >= 1 && a.degree() + b.degree() > 3)
    return modular_gcd(a, b).g;
  Polynomial x = a.monic(), y = b.monic();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    if (y.degree() == 0) return Polynomial(GR(1));
    Polynomial r = x.divmod(y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  return x;
}

}  // namespace uniton
