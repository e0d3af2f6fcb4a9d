#pragma once

#include "uniton/polynomial.hpp"

namespace uniton {

// Gaussian-integer polynomial: real and imaginary parts.
struct ZPoly {
  std::vector<mpz_class> re, im;
};

// a = z / den with den the least common denominator.
ZPoly to_integral(const Polynomial &a, mpz_class *den = nullptr);

GcdCofactors modular_gcd(const Polynomial &a, const Polynomial &b);

}  // namespace uniton
