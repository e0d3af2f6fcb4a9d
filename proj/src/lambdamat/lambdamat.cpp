#include "uniton/lambdamat.hpp"

#include "uniton/errors.hpp"

namespace uniton {

// ---------------------------------------------------------------- scalar

ScalarMatrix ScalarMatrix::identity(int n) {
  ScalarMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = GR(1);
  return m;
}

namespace {

// Gaussian-integer matrix; products run on it with a single division at the
// end instead of a canonicalization per multiply-add.
struct IntMat {
  int n = 0;
  std::vector<mpz_class> re, im;
  explicit IntMat(int n_) : n(n_), re(static_cast<std::size_t>(n_) * n_), im(re.size()) {}
};

void lcm_den(const ScalarMatrix &m, mpz_class &l) {
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      const GR &x = m(i, j);
      if (x.is_zero()) continue;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
    }
}

IntMat to_int(const ScalarMatrix &m, const mpz_class &l) {
  IntMat z(m.n());
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      const GR &x = m(i, j);
      std::size_t k = static_cast<std::size_t>(i) * m.n() + j;
      if (sgn(x.re()) != 0) z.re[k] = x.re().get_num() * (l / x.re().get_den());
      if (sgn(x.im()) != 0) z.im[k] = x.im().get_num() * (l / x.im().get_den());
    }
  return z;
}

void mul_acc(IntMat &out, const IntMat &a, const IntMat &b) {
  int n = a.n;
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      std::size_t ik = static_cast<std::size_t>(i) * n + k;
      bool ar = sgn(a.re[ik]) != 0, ai = sgn(a.im[ik]) != 0;
      if (!ar && !ai) continue;
      for (int j = 0; j < n; ++j) {
        std::size_t kj = static_cast<std::size_t>(k) * n + j, ij = static_cast<std::size_t>(i) * n + j;
        bool br = sgn(b.re[kj]) != 0, bi = sgn(b.im[kj]) != 0;
        if (ar && br) mpz_addmul(out.re[ij].get_mpz_t(), a.re[ik].get_mpz_t(), b.re[kj].get_mpz_t());
        if (ai && bi) mpz_submul(out.re[ij].get_mpz_t(), a.im[ik].get_mpz_t(), b.im[kj].get_mpz_t());
        if (ar && bi) mpz_addmul(out.im[ij].get_mpz_t(), a.re[ik].get_mpz_t(), b.im[kj].get_mpz_t());
        if (ai && br) mpz_addmul(out.im[ij].get_mpz_t(), a.im[ik].get_mpz_t(), b.re[kj].get_mpz_t());
      }
    }
}

ScalarMatrix from_int(const IntMat &z, const mpz_class &d) {
  ScalarMatrix m(z.n);
  for (int i = 0; i < z.n; ++i)
    for (int j = 0; j < z.n; ++j) {
      std::size_t k = static_cast<std::size_t>(i) * z.n + j;
      Rational x(z.re[k], d), y(z.im[k], d);
      x.canonicalize();
      y.canonicalize();
      m(i, j) = GR(std::move(x), std::move(y));
    }
  return m;
}

}  // namespace

std::vector<GR> dense_mul_sum(const std::vector<DenseTerm> &terms, int ar, int ac, int bc) {
  mpz_class la = 1, lb = 1;
  auto lcm_of = [](const std::vector<GR> &v, mpz_class &l) {
    for (const GR &x : v) {
      if (x.is_zero()) continue;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.re().get_den_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.im().get_den_mpz_t());
    }
  };
  for (const auto &t : terms) {
    lcm_of(*t.a, la);
    lcm_of(*t.b, lb);
  }
  auto to_z = [](const std::vector<GR> &v, const mpz_class &l, std::vector<mpz_class> &re,
                 std::vector<mpz_class> &im) {
    re.assign(v.size(), mpz_class(0));
    im.assign(v.size(), mpz_class(0));
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (sgn(v[k].re()) != 0) re[k] = v[k].re().get_num() * (l / v[k].re().get_den());
      if (sgn(v[k].im()) != 0) im[k] = v[k].im().get_num() * (l / v[k].im().get_den());
    }
  };
  std::size_t len = static_cast<std::size_t>(ar) * bc;
  std::vector<mpz_class> ore(len), oim(len), are, aim, bre, bim;
  for (const auto &t : terms) {
    to_z(*t.a, la, are, aim);
    to_z(*t.b, lb, bre, bim);
    for (int i = 0; i < ar; ++i)
      for (int k = 0; k < ac; ++k) {
        std::size_t ik = static_cast<std::size_t>(i) * ac + k;
        bool xr = sgn(are[ik]) != 0, xi = sgn(aim[ik]) != 0;
        if (!xr && !xi) continue;
        for (int j = 0; j < bc; ++j) {
          std::size_t kj = static_cast<std::size_t>(k) * bc + j, ij = static_cast<std::size_t>(i) * bc + j;
          bool yr = sgn(bre[kj]) != 0, yi = sgn(bim[kj]) != 0;
          if (xr && yr) mpz_addmul(ore[ij].get_mpz_t(), are[ik].get_mpz_t(), bre[kj].get_mpz_t());
          if (xi && yi) mpz_submul(ore[ij].get_mpz_t(), aim[ik].get_mpz_t(), bim[kj].get_mpz_t());
          if (xr && yi) mpz_addmul(oim[ij].get_mpz_t(), are[ik].get_mpz_t(), bim[kj].get_mpz_t());
          if (xi && yr) mpz_addmul(oim[ij].get_mpz_t(), aim[ik].get_mpz_t(), bre[kj].get_mpz_t());
        }
      }
  }
  mpz_class d = la * lb;
  std::vector<GR> out(len);
  for (std::size_t k = 0; k < len; ++k) {
    Rational x(ore[k], d), y(oim[k], d);
    x.canonicalize();
    y.canonicalize();
    out[k] = GR(std::move(x), std::move(y));
  }
  return out;
}

ScalarMatrix operator*(const ScalarMatrix &x, const ScalarMatrix &y) {
  if (x.n_ != y.n_) throw SizeMismatch("matrix sizes differ");
  mpz_class lx = 1, ly = 1;
  lcm_den(x, lx);
  lcm_den(y, ly);
  IntMat out(x.n_);
  mul_acc(out, to_int(x, lx), to_int(y, ly));
  return from_int(out, lx * ly);
}

ScalarMatrix operator+(const ScalarMatrix &x, const ScalarMatrix &y) {
  if (x.n_ != y.n_) throw SizeMismatch("matrix sizes differ");
  ScalarMatrix out = x;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] += y.a_[k];
  return out;
}

ScalarMatrix operator-(const ScalarMatrix &x, const ScalarMatrix &y) {
  if (x.n_ != y.n_) throw SizeMismatch("matrix sizes differ");
  ScalarMatrix out = x;
  for (std::size_t k = 0; k < out.a_.size(); ++k) out.a_[k] -= y.a_[k];
  return out;
}

ScalarMatrix ScalarMatrix::scaled(const GR &s) const {
  ScalarMatrix out = *this;
  for (auto &v : out.a_) v *= s;
  return out;
}

ScalarMatrix ScalarMatrix::adjoint() const {
  ScalarMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = (*this)(j, i).conj();
  return out;
}

ScalarMatrix ScalarMatrix::second_transpose() const {
  ScalarMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = (*this)(n_ - 1 - j, n_ - 1 - i);
  return out;
}

ScalarMatrix ScalarMatrix::real_conj() const {
  ScalarMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = (*this)(n_ - 1 - i, n_ - 1 - j).conj();
  return out;
}

ScalarMatrix ScalarMatrix::inverse() const {
  int n = n_;
  ScalarMatrix a = *this, inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw DivisionByZero("singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    GR p = a(col, col).inverse();
    for (int j = 0; j < n; ++j) {
      a(col, j) *= p;
      inv(col, j) *= p;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      GR f = a(r, col);
      for (int j = 0; j < n; ++j) {
        if (!a(col, j).is_zero()) a(r, j) -= f * a(col, j);
        if (!inv(col, j).is_zero()) inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

bool ScalarMatrix::is_identity() const { return *this == identity(n_); }

// ---------------------------------------------------------------- λ-poly

LambdaPoly LambdaPoly::monomial(RF c, int k) {
  LambdaPoly p;
  p.set(k, std::move(c));
  return p;
}

RF LambdaPoly::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? RF() : it->second;
}

void LambdaPoly::set(int k, RF c) {
  if (c.is_zero()) t_.erase(k);
  else t_[k] = std::move(c);
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly p = *this;
  for (auto &[k, c] : p.t_) c = -c;
  return p;
}

LambdaPoly &LambdaPoly::operator+=(const LambdaPoly &o) {
  for (const auto &[k, c] : o.t_) {
    auto it = t_.find(k);
    if (it == t_.end()) {
      t_.emplace(k, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

LambdaPoly &LambdaPoly::operator-=(const LambdaPoly &o) { return *this += -o; }

LambdaPoly operator*(const LambdaPoly &a, const LambdaPoly &b) {
  LambdaPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto &[i, x] : a.t_)
    for (const auto &[j, y] : b.t_) out += LambdaPoly::monomial(x * y, i + j);
  return out;
}

LambdaPoly LambdaPoly::scaled(const RF &s) const {
  LambdaPoly out;
  if (s.is_zero()) return out;
  for (const auto &[k, c] : t_) out.t_.emplace(k, c * s);
  return out;
}

LambdaPoly LambdaPoly::shifted(int k) const {
  LambdaPoly out;
  for (const auto &[d, c] : t_) out.t_.emplace(d + k, c);
  return out;
}

LambdaPoly LambdaPoly::below(int k) const {
  LambdaPoly out;
  for (const auto &[d, c] : t_)
    if (d < k) out.t_.emplace(d, c);
  return out;
}

LambdaPoly LambdaPoly::derivative() const {
  LambdaPoly out;
  for (const auto &[k, c] : t_) out.set(k, c.derivative());
  return out;
}

static GR gr_pow(const GR &x, int k) {
  if (k >= 0) return x.pow(static_cast<unsigned>(k));
  return x.inverse().pow(static_cast<unsigned>(-k));
}

LambdaPoly LambdaPoly::substitute(const GR &mu) const {
  LambdaPoly out;
  for (const auto &[k, c] : t_) {
    if (mu.is_zero() && k != 0) {
      if (k < 0) throw DivisionByZero("substituting 0 into a Laurent term");
      continue;
    }
    out.set(k, c.scaled(gr_pow(mu, k)));
  }
  return out;
}

GR LambdaPoly::eval(const GR &z0, const GR &lambda0) const {
  GR acc(0);
  for (const auto &[k, c] : t_) acc += c.eval(z0) * gr_pow(lambda0, k);
  return acc;
}

std::map<int, GR> LambdaPoly::eval_z(const GR &z0) const {
  std::map<int, GR> out;
  for (const auto &[k, c] : t_) {
    GR v = c.eval(z0);
    if (!v.is_zero()) out.emplace(k, std::move(v));
  }
  return out;
}

std::string LambdaPoly::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto &[k, c] : t_) {
    if (!out.empty()) out += " + ";
    std::string cs = "(" + format_rf(c) + ")";
    if (k == 0) out += cs;
    else if (k == 1) out += cs + "*L";
    else out += cs + "*L^" + std::to_string(k);
  }
  return out;
}

// ---------------------------------------------------------------- λ-matrix

LambdaMatrix LambdaMatrix::identity(int n) {
  LambdaMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = LambdaPoly(1);
  return m;
}

LambdaVector LambdaMatrix::column(int j) const {
  LambdaVector v(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) v[i] = (*this)(i, j);
  return v;
}

void LambdaMatrix::set_column(int j, const LambdaVector &v) {
  if (static_cast<int>(v.size()) != n_) throw SizeMismatch("column length");
  for (int i = 0; i < n_; ++i) (*this)(i, j) = v[i];
}

LambdaMatrix operator*(const LambdaMatrix &x, const LambdaMatrix &y) {
  if (x.n_ != y.n_) throw SizeMismatch("matrix sizes differ");
  int n = x.n_;
  LambdaMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const LambdaPoly &xik = x(i, k);
      if (xik.is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!y(k, j).is_zero()) out(i, j) += xik * y(k, j);
    }
  return out;
}

LambdaMatrix lmat_mul(const LambdaMatrix &x, const LambdaMatrix &y) { return x * y; }

LambdaMatrix LambdaMatrix::second_transpose() const {
  LambdaMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = (*this)(n_ - 1 - j, n_ - 1 - i);
  return out;
}

LambdaMatrix LambdaMatrix::derivative() const {
  LambdaMatrix out(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k].derivative();
  return out;
}

LambdaMatrix LambdaMatrix::substitute(const GR &mu) const {
  LambdaMatrix out(n_);
  for (std::size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k].substitute(mu);
  return out;
}

LambdaMatrix lambda_substitute(const LambdaMatrix &x, const GR &mu) {
  return x.substitute(mu);
}

bool LambdaMatrix::is_lambda_free() const {
  for (const auto &e : a_)
    if (!e.is_lambda_free()) return false;
  return true;
}

bool LambdaMatrix::only_even_degrees() const {
  for (const auto &e : a_)
    for (const auto &[k, c] : e.terms())
      if (k % 2 != 0) return false;
  return true;
}

ScalarMatrix LambdaMatrix::eval(const GR &z0, const GR &lambda0) const {
  ScalarMatrix out(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) out(i, j) = (*this)(i, j).eval(z0, lambda0);
  return out;
}

ScalarMatrix lmat_eval(const LambdaMatrix &x, const GR &z0, const GR &lambda0) {
  return x.eval(z0, lambda0);
}

ScalarLambdaMatrix LambdaMatrix::eval_z(const GR &z0) const {
  ScalarLambdaMatrix out(n_);
  std::map<int, ScalarMatrix> acc;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (auto &[k, v] : (*this)(i, j).eval_z(z0)) {
        auto it = acc.try_emplace(k, n_).first;
        it->second(i, j) = v;
      }
  for (auto &[k, m] : acc) out.add(k, m);
  return out;
}

// ---------------------------------------------------------------- scalar λ-matrix

ScalarLambdaMatrix ScalarLambdaMatrix::constant(const ScalarMatrix &m) {
  ScalarLambdaMatrix out(m.n());
  out.add(0, m);
  return out;
}

ScalarMatrix ScalarLambdaMatrix::coeff(int k) const {
  auto it = t_.find(k);
  return it == t_.end() ? ScalarMatrix(n_) : it->second;
}

void ScalarLambdaMatrix::add(int k, const ScalarMatrix &m) {
  auto it = t_.find(k);
  if (it == t_.end()) it = t_.emplace(k, m).first;
  else it->second = it->second + m;
  if (it->second == ScalarMatrix(n_)) t_.erase(it);
}

ScalarLambdaMatrix operator*(const ScalarLambdaMatrix &x, const ScalarLambdaMatrix &y) {
  if (x.n_ != y.n_) throw SizeMismatch("matrix sizes differ");
  mpz_class lx = 1, ly = 1;
  for (const auto &[i, a] : x.t_) lcm_den(a, lx);
  for (const auto &[j, b] : y.t_) lcm_den(b, ly);
  std::map<int, IntMat> zy;
  for (const auto &[j, b] : y.t_) zy.emplace(j, to_int(b, ly));
  std::map<int, IntMat> acc;
  for (const auto &[i, a] : x.t_) {
    IntMat za = to_int(a, lx);
    for (const auto &[j, zb] : zy) mul_acc(acc.try_emplace(i + j, x.n_).first->second, za, zb);
  }
  ScalarLambdaMatrix out(x.n_);
  mpz_class d = lx * ly;
  for (const auto &[k, z] : acc) out.add(k, from_int(z, d));
  return out;
}

ScalarMatrix ScalarLambdaMatrix::eval(const GR &lambda0) const {
  ScalarMatrix out(n_);
  for (const auto &[k, m] : t_) out = out + m.scaled(gr_pow(lambda0, k));
  return out;
}

std::map<int, std::vector<GR>> ScalarLambdaMatrix::apply(
    const std::map<int, std::vector<GR>> &v) const {
  std::map<int, std::vector<GR>> out;
  for (const auto &[i, m] : t_)
    for (const auto &[j, x] : v) {
      auto &dst = out[i + j];
      if (dst.empty()) dst.assign(static_cast<std::size_t>(n_), GR(0));
      for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c)
          if (!m(r, c).is_zero() && !x[c].is_zero()) dst[r] += m(r, c) * x[c];
    }
  return out;
}

// ---------------------------------------------------------------- forms

LambdaPoly bilinear(const LambdaVector &v, const LambdaVector &w) {
  if (v.size() != w.size()) throw SizeMismatch("vector lengths differ");
  std::size_t n = v.size();
  LambdaPoly acc;
  for (std::size_t j = 0; j < n; ++j)
    if (!v[j].is_zero() && !w[n - 1 - j].is_zero()) acc += v[j] * w[n - 1 - j];
  return acc;
}

OrthoReport check_complex_orthogonal(const LambdaMatrix &a) {
  int n = a.n();
  OrthoReport rep;
  std::vector<LambdaVector> cols;
  for (int j = 0; j < n; ++j) cols.push_back(a.column(j));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      LambdaPoly res = bilinear(cols[i], cols[j]);
      if (i == n - 1 - j) res -= LambdaPoly(1);
      if (!res.is_zero()) {
        rep.pass = false;
        rep.failures.push_back({i + 1, j + 1, res});
      }
    }
  LambdaMatrix prod = a.second_transpose() * a;
  bool matrix_route = prod == LambdaMatrix::identity(n);
  if (matrix_route != rep.pass)
    throw InternalAssertion("orthogonality routes disagree");
  return rep;
}

}  // namespace uniton
