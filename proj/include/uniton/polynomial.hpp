#pragma once

#include <utility>
#include <vector>

#include "uniton/gaussian.hpp"

namespace uniton {

// Univariate polynomial in z over Q(i), coefficients lowest degree first.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(GR c);
  explicit Polynomial(std::vector<GR> coeffs);

  static Polynomial z() { return Polynomial(std::vector<GR>{GR(0), GR(1)}); }
  static Polynomial monomial(GR c, int k);

  const std::vector<GR> &coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const GR &lead() const { return c_.back(); }
  GR coeff(int k) const;

  Polynomial operator-() const;
  Polynomial &operator+=(const Polynomial &o);
  Polynomial &operator-=(const Polynomial &o);
  friend Polynomial operator+(Polynomial a, const Polynomial &b) {
    return a += b;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial &b) {
    return a -= b;
  }
  friend Polynomial operator*(const Polynomial &a, const Polynomial &b);
  Polynomial scaled(const GR &s) const;
  friend bool operator==(const Polynomial &, const Polynomial &) = default;

  // Euclidean division; throws DivisionByZero for a zero divisor.
  std::pair<Polynomial, Polynomial> divmod(const Polynomial &d) const;
  Polynomial exact_div(const Polynomial &d) const;
  Polynomial monic() const;
  Polynomial derivative() const;
  Polynomial conj_coeffs() const;
  GR eval(const GR &x) const;

  // Monic gcd; gcd(0, 0) = 0.
  friend Polynomial gcd(const Polynomial &a, const Polynomial &b);

 private:
  void trim();
  std::vector<GR> c_;
};

// a = g * ca and b = g * cb with g the monic gcd of nonzero a, b.
struct GcdCofactors {
  Polynomial g, ca, cb;
};
GcdCofactors gcd_cofactors(const Polynomial &a, const Polynomial &b);

}  // namespace uniton
