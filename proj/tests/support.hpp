#pragma once

#include <random>
#include <string>

#include "uniton/errors.hpp"
#include "uniton/factorize.hpp"
#include "uniton/nullcurve.hpp"

namespace uniton::testing {

inline RF P(const std::string &text) { return parse_rf(text); }

inline LambdaPoly L(const std::string &text) { return LambdaPoly(parse_rf(text)); }

inline LambdaPoly L(const RF &c, int k = 0) { return LambdaPoly::monomial(c, k); }

inline GR Q(long num, long den = 1) { return GR(Rational(num, den)); }

inline GR C(long re, long im) { return GR(Rational(re), Rational(im)); }

// Random small Gaussian integer, optionally real.
inline GR random_gr(std::mt19937 &rng, int bound = 3, bool gaussian = true) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return gaussian ? GR(Rational(d(rng)), Rational(d(rng))) : GR(d(rng));
}

inline Polynomial random_poly(std::mt19937 &rng, int max_deg, bool gaussian = true) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  int d = deg(rng);
  std::vector<GR> c;
  for (int k = 0; k <= d; ++k) c.push_back(random_gr(rng, 3, gaussian));
  return Polynomial(c);
}

// Random rational function with numerator degree ≤ num_deg and a monic
// denominator of degree ≤ den_deg.
inline RF random_rf(std::mt19937 &rng, int num_deg, int den_deg = 0, bool gaussian = true) {
  Polynomial num = random_poly(rng, num_deg, gaussian);
  std::uniform_int_distribution<int> deg(0, den_deg);
  int d = deg(rng);
  std::vector<GR> c;
  for (int k = 0; k < d; ++k) c.push_back(random_gr(rng, 3, gaussian));
  c.push_back(GR(1));
  return RF(num, Polynomial(c));
}

inline RF random_nonconstant(std::mt19937 &rng, int num_deg, int den_deg = 0) {
  for (;;) {
    RF f = random_rf(rng, num_deg, den_deg);
    if (!f.derivative().is_zero()) return f;
  }
}

inline FreeData data(std::initializer_list<std::pair<const char *, const char *>> kv) {
  FreeData d;
  for (const auto &[k, v] : kv) d.params[k] = parse_rf(v);
  return d;
}

inline bool verifies(const SolutionCandidate &c) {
  return check_shape(c.A, c.xi).pass && check_complex_orthogonal(c.A).pass &&
         check_extended_solution(c).pass;
}

}  // namespace uniton::testing
