#include "uniton/ratfunc.hpp"

#include "uniton/errors.hpp"

namespace uniton {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(GR(1));
    return;
  }
  GcdCofactors gc = gcd_cofactors(num, den);
  if (!gc.g.is_one()) {
    num = std::move(gc.ca);
    den = std::move(gc.cb);
  }
  if (!den.lead().is_one()) {
    GR inv = den.lead().inverse();
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction &RationalFunction::operator+=(const RationalFunction &o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = RationalFunction(num_ + o.num_, den_);
  GcdCofactors gc = gcd_cofactors(den_, o.den_);
  if (gc.g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    if (num_.is_zero()) {
      den_ = Polynomial(GR(1));
    } else {
      den_ = den_ * o.den_;
    }
    return *this;
  }
  const Polynomial &b1 = gc.ca, &d1 = gc.cb;
  Polynomial num = num_ * d1 + o.num_ * b1;
  if (num.is_zero()) return *this = RationalFunction();
  GcdCofactors g2 = gcd_cofactors(num, gc.g);
  num_ = std::move(g2.ca);
  den_ = b1 * g2.cb * d1;
  return *this;
}

RationalFunction &RationalFunction::operator-=(const RationalFunction &o) {
  return *this += -o;
}

RationalFunction &RationalFunction::operator*=(const RationalFunction &o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  Polynomial a = num_, b = den_, c = o.num_, d = o.den_;
  GcdCofactors g1 = gcd_cofactors(a, d), g2 = gcd_cofactors(c, b);
  if (!g1.g.is_one()) {
    a = std::move(g1.ca);
    d = std::move(g1.cb);
  }
  if (!g2.g.is_one()) {
    c = std::move(g2.ca);
    b = std::move(g2.cb);
  }
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RationalFunction &RationalFunction::operator/=(const RationalFunction &o) {
  if (o.is_zero()) throw DivisionByZero("rational function division by zero");
  return *this *= RationalFunction(o.den_, o.num_);
}

RationalFunction RationalFunction::scaled(const GR &s) const {
  if (s.is_zero()) return {};
  RationalFunction r = *this;
  r.num_ = r.num_.scaled(s);
  return r;
}

RationalFunction RationalFunction::pow(unsigned k) const {
  RationalFunction result(1), base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

RationalFunction RationalFunction::derivative() const {
  if (den_.is_one()) return RationalFunction(num_.derivative());
  // (n/d)' = (n'd - nd')/d^2; with d = g*h, g = gcd(d, d'), the square
  // collapses to d*h after cancelling g.
  Polynomial dd = den_.derivative();
  GcdCofactors gc = gcd_cofactors(den_, dd);
  const Polynomial &h = gc.ca;
  Polynomial num = num_.derivative() * h - num_ * gc.cb;
  return RationalFunction(std::move(num), den_ * h);
}

GR RationalFunction::eval(const GR &z0) const {
  GR d = den_.eval(z0);
  if (d.is_zero()) throw PoleAtPoint("pole at z = " + z0.str());
  return num_.eval(z0) / d;
}

}  // namespace uniton
