#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "uniton/ratfunc.hpp"

namespace uniton {

// Dense n×n matrix over Q(i), row-major.
class ScalarMatrix {
 public:
  ScalarMatrix() = default;
  explicit ScalarMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static ScalarMatrix identity(int n);

  int n() const { return n_; }
  const std::vector<GR> &data() const { return a_; }  // row-major
  GR &operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const GR &operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }

  friend ScalarMatrix operator*(const ScalarMatrix &x, const ScalarMatrix &y);
  friend ScalarMatrix operator+(const ScalarMatrix &x, const ScalarMatrix &y);
  friend ScalarMatrix operator-(const ScalarMatrix &x, const ScalarMatrix &y);
  friend bool operator==(const ScalarMatrix &, const ScalarMatrix &) = default;
  ScalarMatrix scaled(const GR &s) const;

  ScalarMatrix adjoint() const;
  ScalarMatrix second_transpose() const;
  // Complex conjugation of the linear map. In null coordinates this is
  // J·conj(X)·J with J the antidiagonal permutation.
  ScalarMatrix real_conj() const;
  // Throws DivisionByZero when singular.
  ScalarMatrix inverse() const;
  bool is_identity() const;

 private:
  int n_ = 0;
  std::vector<GR> a_;
};

// Polynomial (or bounded Laurent polynomial) in λ over RationalFunction.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  LambdaPoly(RF c) { set(0, std::move(c)); }
  LambdaPoly(long c) : LambdaPoly(RF(c)) {}
  static LambdaPoly monomial(RF c, int k);

  const std::map<int, RF> &terms() const { return t_; }
  RF coeff(int k) const;
  void set(int k, RF c);
  bool is_zero() const { return t_.empty(); }
  bool is_one() const { return t_.size() == 1 && t_.begin()->first == 0 && t_.begin()->second.is_one(); }
  bool is_lambda_free() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == 0); }
  // Degree bookkeeping; both are meaningless for the zero polynomial.
  int min_deg() const { return t_.begin()->first; }
  int max_deg() const { return t_.rbegin()->first; }

  LambdaPoly operator-() const;
  LambdaPoly &operator+=(const LambdaPoly &o);
  LambdaPoly &operator-=(const LambdaPoly &o);
  friend LambdaPoly operator+(LambdaPoly a, const LambdaPoly &b) { return a += b; }
  friend LambdaPoly operator-(LambdaPoly a, const LambdaPoly &b) { return a -= b; }
  friend LambdaPoly operator*(const LambdaPoly &a, const LambdaPoly &b);
  friend bool operator==(const LambdaPoly &, const LambdaPoly &) = default;
  LambdaPoly scaled(const RF &s) const;
  LambdaPoly shifted(int k) const;
  // Terms of λ-degree < k.
  LambdaPoly below(int k) const;

  LambdaPoly derivative() const;
  LambdaPoly substitute(const GR &mu) const;
  GR eval(const GR &z0, const GR &lambda0) const;
  std::map<int, GR> eval_z(const GR &z0) const;
  std::string str() const;

 private:
  std::map<int, RF> t_;
};

using LambdaVector = std::vector<LambdaPoly>;

class ScalarLambdaMatrix;

class LambdaMatrix {
 public:
  LambdaMatrix() = default;
  explicit LambdaMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n) {}
  static LambdaMatrix identity(int n);

  int n() const { return n_; }
  // 0-based indices.
  LambdaPoly &operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const LambdaPoly &operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * n_ + j];
  }
  // 1-based accessor matching the usual a_ij notation.
  LambdaPoly &a(int i, int j) { return (*this)(i - 1, j - 1); }
  const LambdaPoly &a(int i, int j) const { return (*this)(i - 1, j - 1); }

  LambdaVector column(int j) const;
  void set_column(int j, const LambdaVector &v);

  friend LambdaMatrix operator*(const LambdaMatrix &x, const LambdaMatrix &y);
  friend bool operator==(const LambdaMatrix &, const LambdaMatrix &) = default;

  LambdaMatrix second_transpose() const;
  LambdaMatrix derivative() const;
  LambdaMatrix substitute(const GR &mu) const;
  bool is_lambda_free() const;
  bool only_even_degrees() const;
  ScalarMatrix eval(const GR &z0, const GR &lambda0) const;
  ScalarLambdaMatrix eval_z(const GR &z0) const;

 private:
  int n_ = 0;
  std::vector<LambdaPoly> a_;
};

// Σ A_k·B_k for row-major (ar×ac)·(ac×bc) blocks, with one canonicalization
// per output entry.
struct DenseTerm {
  const std::vector<GR> *a, *b;
};
std::vector<GR> dense_mul_sum(const std::vector<DenseTerm> &terms, int ar, int ac, int bc);

// Matrix-valued polynomial in λ over Q(i): coefficient matrices by degree.
class ScalarLambdaMatrix {
 public:
  ScalarLambdaMatrix() = default;
  explicit ScalarLambdaMatrix(int n) : n_(n) {}
  static ScalarLambdaMatrix constant(const ScalarMatrix &m);

  int n() const { return n_; }
  const std::map<int, ScalarMatrix> &terms() const { return t_; }
  ScalarMatrix coeff(int k) const;
  void add(int k, const ScalarMatrix &m);
  int max_deg() const { return t_.empty() ? 0 : t_.rbegin()->first; }
  friend ScalarLambdaMatrix operator*(const ScalarLambdaMatrix &x,
                                      const ScalarLambdaMatrix &y);
  ScalarMatrix eval(const GR &lambda0) const;
  // Coefficient vectors of X·v for a graded vector v (index = λ-degree).
  std::map<int, std::vector<GR>> apply(const std::map<int, std::vector<GR>> &v) const;

 private:
  int n_ = 0;
  std::map<int, ScalarMatrix> t_;
};

// (v, w) = Σ v_j w_{n+1-j}.
LambdaPoly bilinear(const LambdaVector &v, const LambdaVector &w);

LambdaMatrix lmat_mul(const LambdaMatrix &x, const LambdaMatrix &y);
ScalarMatrix lmat_eval(const LambdaMatrix &x, const GR &z0, const GR &lambda0);
LambdaMatrix lambda_substitute(const LambdaMatrix &x, const GR &mu);

struct OrthoFailure {
  int i, j;  // 1-based column indices
  LambdaPoly residual;
};

struct OrthoReport {
  bool pass = true;
  std::vector<OrthoFailure> failures;
};

// Checks (c_i, c_j) = δ_{i, n+1-j} column by column and A^TT A = I as a
// matrix identity, and throws InternalAssertion if the two disagree.
OrthoReport check_complex_orthogonal(const LambdaMatrix &a);

}  // namespace uniton
