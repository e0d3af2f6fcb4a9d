#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>

namespace uniton {

using Rational = mpq_class;

// Exact element re + im*i of Q(i).
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long v) : re_(v), im_(0) {}
  GaussianRational(Rational re) : re_(std::move(re)), im_(0) { re_.canonicalize(); }
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static GaussianRational i() { return {Canonical{}, Rational(0), Rational(1)}; }

  const Rational &re() const { return re_; }
  const Rational &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  GaussianRational conj() const { return {Canonical{}, re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  GaussianRational inverse() const;

  GaussianRational operator-() const { return {Canonical{}, -re_, -im_}; }
  GaussianRational &operator+=(const GaussianRational &o);
  GaussianRational &operator-=(const GaussianRational &o);
  GaussianRational &operator*=(const GaussianRational &o);
  GaussianRational &operator/=(const GaussianRational &o);
  // this -= a·b without temporaries.
  GaussianRational &sub_product(const GaussianRational &a, const GaussianRational &b);

  friend GaussianRational operator+(GaussianRational a,
                                    const GaussianRational &b) {
    return a += b;
  }
  friend GaussianRational operator-(GaussianRational a,
                                    const GaussianRational &b) {
    return a -= b;
  }
  friend GaussianRational operator*(GaussianRational a,
                                    const GaussianRational &b) {
    return a *= b;
  }
  friend GaussianRational operator/(GaussianRational a,
                                    const GaussianRational &b) {
    return a /= b;
  }
  friend bool operator==(const GaussianRational &a, const GaussianRational &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  GaussianRational pow(unsigned k) const;
  std::complex<double> to_complex() const {
    return {re_.get_d(), im_.get_d()};
  }
  std::string str() const;

 private:
  struct Canonical {};
  GaussianRational(Canonical, Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  Rational re_, im_;
};

using GR = GaussianRational;

}  // namespace uniton
