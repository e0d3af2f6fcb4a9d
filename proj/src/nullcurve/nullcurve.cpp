#include "uniton/nullcurve.hpp"

#include "uniton/errors.hpp"

namespace uniton {

RF null_pair(const RFVector &u, const RFVector &v) {
  if (u.size() != v.size()) throw SizeMismatch("null pairing of vectors of different size");
  std::size_t n = u.size();
  RF s;
  for (std::size_t j = 0; j < n; ++j)
    if (!u[j].is_zero() && !v[n - 1 - j].is_zero()) s += u[j] * v[n - 1 - j];
  return s;
}

RFVector derivative(const RFVector &v) {
  RFVector d;
  d.reserve(v.size());
  for (const RF &x : v) d.push_back(x.derivative());
  return d;
}

bool is_null(const RFVector &chi) {
  RFVector d = derivative(chi);
  return null_pair(d, d).is_zero();
}

NullCurve make_null_curve(RFVector components) {
  int n = static_cast<int>(components.size());
  if (n != 3 && n != 4) throw SizeMismatch("null curves live in C³ or C⁴");
  RFVector d = derivative(components);
  bool all_zero = true;
  for (const RF &x : d) all_zero = all_zero && x.is_zero();
  if (all_zero) throw DegenerateCurve("χ′ vanishes identically");
  if (!null_pair(d, d).is_zero()) throw NotIsotropic("(χ′, χ′) is not identically zero");
  return {n, std::move(components)};
}

namespace {

void require_nonconstant(const RF &f, const std::string &name, int idx) {
  if (f.derivative().is_zero()) throw DegenerateData(name + " is constant", idx);
}

bool is_type(const SolutionCandidate &cand, const std::vector<int> &t) {
  return cand.xi.type() == t && cand.A.n() == cand.xi.n();
}

RF entry(const SolutionCandidate &cand, int i, int j) { return cand.A.a(i, j).coeff(0); }

LambdaPoly L(const RF &c) { return LambdaPoly(c); }

const std::vector<int> kType3{1, 1, 1, 1, 1};
const std::vector<int> kType4{1, 1, 2, 1, 1};

}  // namespace

NullCurve weierstrass_c3(const WeierstrassData3 &d) {
  require_nonconstant(d.g, "g", 1);
  RF nu1 = generalized_derivative_wrt(d.nu, d.g, 1);
  RF nu2 = generalized_derivative_wrt(nu1, d.g, 1);
  require_nonconstant(nu2, "nu^(2)", 2);
  RF half(GR(Rational(1, 2)));
  return {3, {nu2, -nu1 + d.g * nu2, -d.nu + d.g * nu1 - half * d.g * d.g * nu2}};
}

NullCurve weierstrass_c4(const WeierstrassData4 &d) {
  require_nonconstant(d.g1, "g1", 1);
  RF h1d = generalized_derivative_wrt(d.h1, d.g1, 1);
  RF h2d = generalized_derivative_wrt(d.h2, d.g1, 1);
  require_nonconstant(h1d, "h1^(1)", 2);
  return {4, {h1d, -d.h1 + d.g1 * h1d, h2d, d.h2 - d.g1 * h2d}};
}

SolutionCandidate curve_to_matrix(const NullCurve &curve) {
  const RFVector &chi = curve.components;
  if (static_cast<int>(chi.size()) != curve.n_ambient ||
      (curve.n_ambient != 3 && curve.n_ambient != 4))
    throw SizeMismatch("null curve dimension");
  if (!is_null(chi)) throw DegenerateCurve("curve is not null");
  RF d1 = chi[0].derivative();
  if (d1.is_zero()) throw DegenerateCurve("χ₁′ vanishes identically");
  RF g = chi[1].derivative() / d1;
  if (g.derivative().is_zero())
    throw DegenerateCurve(curve.n_ambient == 3 ? "[χ′] is constant" : "g₁ is constant");
  if (curve.n_ambient == 3) {
    LambdaMatrix A = LambdaMatrix::identity(5);
    A.a(2, 3) = L(-g);
    A.a(2, 4) = L(-(RF(GR(Rational(1, 2))) * g * g));
    A.a(3, 4) = L(g);
    A.a(2, 5) = L(chi[2]);
    A.a(3, 5) = L(chi[1]);
    A.a(4, 5) = L(chi[0]);
    return {complete_by_algebra(A, BorderSide::LastColumn), CanonicalElement::from_type(kType3)};
  }
  RF g2 = chi[2].derivative() / d1;
  LambdaMatrix A = LambdaMatrix::identity(6);
  A.a(2, 3) = L(-g);
  A.a(2, 4) = L(-g2);
  A.a(2, 5) = L(-(g * g2));
  A.a(3, 5) = L(g2);
  A.a(4, 5) = L(g);
  A.a(2, 6) = L(chi[3]);
  A.a(3, 6) = L(chi[2]);
  A.a(4, 6) = L(chi[1]);
  A.a(5, 6) = L(chi[0]);
  return {complete_by_algebra(A, BorderSide::LastColumn), CanonicalElement::from_type(kType4)};
}

NullCurve matrix_to_curve(const SolutionCandidate &cand) {
  if (is_type(cand, kType3))
    return {3, {entry(cand, 4, 5), entry(cand, 3, 5), entry(cand, 2, 5)}};
  if (is_type(cand, kType4))
    return {4, {entry(cand, 5, 6), entry(cand, 4, 6), entry(cand, 3, 6), entry(cand, 2, 6)}};
  throw TypeMismatch("expected type (1,1,1,1,1) or (1,1,2,1,1)");
}

WeierstrassData3 matrix_to_data3(const SolutionCandidate &cand) {
  if (!is_type(cand, kType3)) throw TypeMismatch("expected type (1,1,1,1,1)");
  return {entry(cand, 3, 4), entry(cand, 1, 4)};
}

WeierstrassData4 matrix_to_data4(const SolutionCandidate &cand) {
  if (!is_type(cand, kType4)) throw TypeMismatch("expected type (1,1,2,1,1)");
  RF a13 = entry(cand, 1, 3);
  return {entry(cand, 4, 5), a13, a13 * entry(cand, 3, 5) - entry(cand, 1, 5)};
}

bool isotropy_check(const RFVector &F, int t) {
  if (t < 0) return true;
  std::vector<RFVector> d{F};
  for (int k = 1; k <= t; ++k) d.push_back(derivative(d.back()));
  for (int i = 0; i <= t; ++i)
    for (int j = i; i + j <= t; ++j)
      if (!null_pair(d[i], d[j]).is_zero()) return false;
  return true;
}

namespace {

// Rank of a matrix of rational functions by exact elimination.
int rf_rank(std::vector<RFVector> rows) {
  int rank = 0;
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    RF inv = RF(1) / rows[rank][c];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c].is_zero()) continue;
      RF f = rows[r][c] * inv;
      for (std::size_t k = c; k < cols; ++k)
        if (!rows[rank][k].is_zero()) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

bool is_full(const RFVector &F) {
  int n = static_cast<int>(F.size());
  if (n == 0) return false;
  std::vector<RFVector> w{F};
  for (int k = 1; k < n; ++k) w.push_back(derivative(w.back()));
  // A nonzero value at any point proves the Wronskian is nonzero.
  const GR points[] = {GR(2), GR(-3), GR(Rational(1, 2)), GR(Rational(1), Rational(1)),
                       GR(5), GR(Rational(-2, 7)), GR(Rational(3), Rational(-2)), GR(11)};
  for (const GR &z0 : points) {
    ScalarMatrix m(n);
    try {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = w[i][j].eval(z0);
      m.inverse();
      return true;
    } catch (const PoleAtPoint &) {
    } catch (const DivisionByZero &) {
    }
  }
  return rf_rank(std::move(w)) == n;
}

RFVector last_column_map(const SolutionCandidate &cand) {
  int n = cand.A.n();
  RFVector F;
  for (int k = 0; k < n; ++k) F.push_back(entry(cand, n - k, n));
  return F;
}

SolutionCandidate calabi_reconstruct(const RFVector &F) {
  int n = static_cast<int>(F.size());
  if (n < 1) throw SizeMismatch("empty map");
  if (F[0].is_zero()) throw SchemaError("F_0 vanishes identically");
  RFVector G;
  for (const RF &x : F) G.push_back(x / F[0]);
  if (!is_full(G)) throw NotFull("Wronskian vanishes identically");
  if (!isotropy_check(G, n - 2)) throw NotIsotropic("map is not totally isotropic");
  // cols[j] is the 0-based column j; entry i is a_{i+1, j+1}.
  std::vector<RFVector> cols(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) cols[n - 1].push_back(G[n - 1 - i]);
  for (int j = n - 2; j >= 0; --j) {
    RF e = cols[j + 1][j].derivative();
    if (e.is_zero()) throw NotFull("reconstruction denominator vanishes");
    RFVector c = derivative(cols[j + 1]);
    for (RF &x : c) x /= e;
    cols[j] = std::move(c);
  }
  LambdaMatrix A(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) A(i, j) = LambdaPoly(cols[j][i]);
  return {std::move(A), CanonicalElement::from_type(std::vector<int>(n, 1))};
}

}  // namespace uniton
