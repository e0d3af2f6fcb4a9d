#pragma once

#include <string>
#include <string_view>

#include "uniton/polynomial.hpp"

namespace uniton {

// num/den with den monic and gcd(num, den) = 1, so == is equality of
// functions. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(GR(1)) {}
  RationalFunction(long v) : RationalFunction(Polynomial(GR(v))) {}
  RationalFunction(GR c) : RationalFunction(Polynomial(std::move(c))) {}
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(GR(1)) {}
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction z() { return Polynomial::z(); }

  const Polynomial &num() const { return num_; }
  const Polynomial &den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction &operator+=(const RationalFunction &o);
  RationalFunction &operator-=(const RationalFunction &o);
  RationalFunction &operator*=(const RationalFunction &o);
  RationalFunction &operator/=(const RationalFunction &o);
  friend RationalFunction operator+(RationalFunction a,
                                    const RationalFunction &b) {
    return a += b;
  }
  friend RationalFunction operator-(RationalFunction a,
                                    const RationalFunction &b) {
    return a -= b;
  }
  friend RationalFunction operator*(RationalFunction a,
                                    const RationalFunction &b) {
    return a *= b;
  }
  friend RationalFunction operator/(RationalFunction a,
                                    const RationalFunction &b) {
    return a /= b;
  }
  friend bool operator==(const RationalFunction &,
                         const RationalFunction &) = default;

  RationalFunction scaled(const GR &s) const;
  RationalFunction pow(unsigned k) const;
  RationalFunction derivative() const;
  // Throws PoleAtPoint when den(z0) = 0.
  GR eval(const GR &z0) const;
  bool has_pole_at(const GR &z0) const { return den_.eval(z0).is_zero(); }

 private:
  Polynomial num_, den_;
};

using RF = RationalFunction;

// Text grammar: z, i, integer literals, + - * / ^ (nonnegative integer
// exponent), parentheses. Throws SyntaxError or DivisionByZero.
RationalFunction parse_rf(std::string_view text);
std::string format_rf(const RationalFunction &f);
std::string format_poly(const Polynomial &p);

}  // namespace uniton
