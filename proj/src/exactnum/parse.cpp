#include <cctype>

#include "uniton/errors.hpp"
#include "uniton/ratfunc.hpp"

namespace uniton {
namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  RationalFunction run() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("empty expression", pos_);
    RationalFunction v = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError("unexpected character", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RationalFunction expr() {
    RationalFunction v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  RationalFunction term() {
    RationalFunction v = unary();
    for (;;) {
      if (eat('*')) {
        v *= unary();
      } else {
        skip();
        std::size_t at = pos_;
        if (!eat('/')) return v;
        RationalFunction d = unary();
        if (d.is_zero()) throw DivisionByZero("division by zero at position " + std::to_string(at));
        v /= d;
      }
    }
  }

  RationalFunction unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  RationalFunction power() {
    RationalFunction base = atom();
    if (!eat('^')) return base;
    skip();
    std::size_t start = pos_;
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw SyntaxError("expected nonnegative integer exponent", pos_);
    unsigned long e = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
      if (e > 10000) throw SyntaxError("exponent too large", start);
      ++pos_;
    }
    return base.pow(static_cast<unsigned>(e));
  }

  RationalFunction atom() {
    skip();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == 'z') {
      ++pos_;
      return RationalFunction::z();
    }
    if (c == 'i') {
      ++pos_;
      return RationalFunction(GR::i());
    }
    if (c == '(') {
      ++pos_;
      RationalFunction v = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", pos_);
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      mpz_class v(std::string(s_.substr(start, pos_ - start)));
      return RationalFunction(GR(Rational(v)));
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string power_of_z(int k) {
  if (k == 0) return "";
  if (k == 1) return "z";
  return "z^" + std::to_string(k);
}

}  // namespace

RationalFunction parse_rf(std::string_view text) { return Parser(text).run(); }

std::string format_poly(const Polynomial &p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const GR &c = p.coeffs()[k];
    if (c.is_zero()) continue;
    bool negative;
    std::string mag;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      Rational a = abs(c.re());
      mag = (a == 1 && k > 0) ? "" : a.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      Rational a = abs(c.im());
      mag = a == 1 ? "i" : a.get_str() + "*i";
    } else {
      negative = false;
      mag = "(" + c.str() + ")";
    }
    std::string zk = power_of_z(k);
    std::string t = mag.empty() ? zk : (zk.empty() ? mag : mag + "*" + zk);
    if (out.empty()) out = negative ? "-" + t : t;
    else out += (negative ? " - " : " + ") + t;
  }
  return out;
}

std::string format_rf(const RationalFunction &f) {
  if (f.den().is_one()) return format_poly(f.num());
  return "(" + format_poly(f.num()) + ")/(" + format_poly(f.den()) + ")";
}

}  // namespace uniton
