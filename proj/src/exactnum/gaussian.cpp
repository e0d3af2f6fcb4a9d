#include "uniton/gaussian.hpp"

#include "uniton/errors.hpp"

namespace uniton {

GaussianRational &GaussianRational::operator+=(const GaussianRational &o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator-=(const GaussianRational &o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational &GaussianRational::operator*=(const GaussianRational &o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  im_ = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  return *this;
}

GaussianRational &GaussianRational::sub_product(const GaussianRational &a,
                                                const GaussianRational &b) {
  thread_local mpq_class t;
  mpq_ptr tp = t.get_mpq_t();
  auto sub = [&](Rational &acc, const Rational &x, const Rational &y, bool add) {
    if (sgn(x) == 0 || sgn(y) == 0) return;
    mpq_mul(tp, x.get_mpq_t(), y.get_mpq_t());
    if (add) mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tp);
    else mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tp);
  };
  sub(re_, a.re_, b.re_, false);
  sub(re_, a.im_, b.im_, true);
  sub(im_, a.re_, b.im_, false);
  sub(im_, a.im_, b.re_, false);
  return *this;
}

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw DivisionByZero("division by zero in Q(i)");
  Rational n = norm2();
  return {Canonical{}, re_ / n, -im_ / n};
}

GaussianRational &GaussianRational::operator/=(const GaussianRational &o) {
  if (sgn(o.im_) == 0) {
    if (sgn(o.re_) == 0) throw DivisionByZero("division by zero in Q(i)");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(unsigned k) const {
  GaussianRational result(1), base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

std::string GaussianRational::str() const {
  if (sgn(im_) == 0) return re_.get_str();
  std::string imag;
  Rational a = abs(im_);
  imag = a == 1 ? "i" : a.get_str() + "*i";
  if (sgn(re_) == 0) return (sgn(im_) < 0 ? "-" : "") + imag;
  return re_.get_str() + (sgn(im_) < 0 ? "-" : "+") + imag;
}

}  // namespace uniton
