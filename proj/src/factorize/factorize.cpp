#include "uniton/factorize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "uniton/errors.hpp"

namespace uniton {

namespace {

int lowest_nonzero(const std::vector<GR> &v) {
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!v[k].is_zero()) return static_cast<int>(k);
  return -1;
}

// Subtracts multiples of echelon rows; result has zeros at all pivots.
void reduce(std::vector<GR> &v, const std::vector<std::vector<GR>> &basis) {
  for (const auto &b : basis) {
    int p = lowest_nonzero(b);
    if (v[p].is_zero()) continue;
    GR f = v[p];
    for (std::size_t k = p; k < v.size(); ++k)
      if (!b[k].is_zero()) v[k].sub_product(f, b[k]);
  }
}

bool is_zero_vec(const std::vector<GR> &v) { return lowest_nonzero(v) < 0; }

// Whether λ^s·v (truncated) lies in the span of a reduced echelon basis:
// it must equal Σ_b x[p_b]·b.
bool in_span(const std::vector<GR> &v, int s, const std::vector<std::vector<GR>> &basis) {
  int size = static_cast<int>(v.size());
  auto at = [&](int k) -> const GR * {
    int j = k - s;
    return j >= 0 && !v[j].is_zero() ? &v[j] : nullptr;
  };
  std::vector<std::pair<const GR *, const std::vector<GR> *>> terms;
  for (const auto &b : basis)
    if (const GR *c = at(lowest_nonzero(b))) terms.push_back({c, &b});
  thread_local GR acc;
  for (int k = 0; k < size; ++k) {
    const GR *x = at(k);
    acc = x ? *x : GR(0);
    for (const auto &[c, b] : terms)
      if (!(*b)[k].is_zero()) acc.sub_product(*c, (*b)[k]);
    if (!acc.is_zero()) return false;
  }
  return true;
}

// Grades ≤ 0 of X·v for the given graded vectors, using grades < top of each;
// result k maps to an n×m row-major block whose column c belongs to vs[c].
std::map<int, std::vector<GR>> apply_nonpositive(const ScalarLambdaMatrix &x,
                                                 const std::vector<const GradedVector *> &vs,
                                                 int n, int top) {
  int m = static_cast<int>(vs.size());
  std::map<int, std::vector<GR>> blocks;
  for (int g = 0; g < top; ++g) {
    std::vector<GR> b(static_cast<std::size_t>(n) * m, GR(0));
    bool any = false;
    for (int c = 0; c < m; ++c)
      for (int row = 0; row < n; ++row) {
        const GR &e = (*vs[c])[static_cast<std::size_t>(g) * n + row];
        if (e.is_zero()) continue;
        b[static_cast<std::size_t>(row) * m + c] = e;
        any = true;
      }
    if (any) blocks.emplace(g, std::move(b));
  }
  std::map<int, std::vector<DenseTerm>> terms;
  for (const auto &[d, mat] : x.terms())
    for (const auto &[g, b] : blocks)
      if (d + g <= 0) terms[d + g].push_back({&mat.data(), &b});
  std::map<int, std::vector<GR>> out;
  for (const auto &[k, t] : terms) out.emplace(k, dense_mul_sum(t, n, n, m));
  return out;
}

std::vector<std::vector<GR>> block_columns(const std::vector<GR> &b, int n, int m) {
  std::vector<std::vector<GR>> cols(static_cast<std::size_t>(m), std::vector<GR>(n));
  for (int row = 0; row < n; ++row)
    for (int c = 0; c < m; ++c) cols[c][row] = b[static_cast<std::size_t>(row) * m + c];
  return cols;
}

std::vector<GR> scaled_vec(std::vector<GR> v, const GR &s) {
  for (auto &x : v)
    if (!x.is_zero()) x *= s;
  return v;
}

}  // namespace

std::vector<std::vector<GR>> echelon(std::vector<std::vector<GR>> vectors) {
  std::vector<std::vector<GR>> basis;
  for (auto &v : vectors) {
    reduce(v, basis);
    int p = lowest_nonzero(v);
    if (p < 0) continue;
    GR inv = v[p].inverse();
    v = scaled_vec(std::move(v), inv);
    // Clear the new pivot column from the existing rows.
    for (auto &b : basis) {
      if (b[p].is_zero()) continue;
      GR f = b[p];
      for (std::size_t k = p; k < b.size(); ++k)
        if (!v[k].is_zero()) b[k].sub_product(f, v[k]);
    }
    basis.push_back(std::move(v));
  }
  std::sort(basis.begin(), basis.end(), [](const auto &a, const auto &b) {
    return lowest_nonzero(a) < lowest_nonzero(b);
  });
  return basis;
}

GradedVector unit_vector(int r, int n, int grade, int row) {
  GradedVector v(static_cast<std::size_t>(n) * (r + 1), GR(0));
  v[static_cast<std::size_t>(grade) * n + row] = GR(1);
  return v;
}

TruncatedModel TruncatedModel::span(int r, int n, std::vector<GradedVector> gens) {
  TruncatedModel m;
  m.r = r;
  m.n = n;
  for (const auto &g : gens)
    if (static_cast<int>(g.size()) != n * (r + 1)) throw SizeMismatch("graded vector size");
  // Close under the shift: λ^k g for k = 0..r.
  std::vector<GradedVector> all;
  for (auto &g : gens) {
    GradedVector cur = std::move(g);
    while (!is_zero_vec(cur)) {
      all.push_back(cur);
      GradedVector next(cur.size(), GR(0));
      std::copy(cur.begin(), cur.end() - n, next.begin() + n);
      cur = std::move(next);
    }
  }
  // Sparse high-grade shifts first keeps intermediate entries small.
  std::stable_sort(all.begin(), all.end(), [](const GradedVector &a, const GradedVector &b) {
    return lowest_nonzero(a) > lowest_nonzero(b);
  });
  m.basis = echelon(std::move(all));
  return m;
}

TruncatedModel TruncatedModel::full(int r, int n) {
  std::vector<GradedVector> gens;
  for (int g = 0; g <= r; ++g)
    for (int j = 0; j < n; ++j) gens.push_back(unit_vector(r, n, g, j));
  return closed_span(r, n, std::move(gens));
}

TruncatedModel TruncatedModel::closed_span(int r, int n, std::vector<GradedVector> gens) {
  TruncatedModel m;
  m.r = r;
  m.n = n;
  m.basis = echelon(std::move(gens));
  return m;
}

bool TruncatedModel::contains(const GradedVector &v) const { return in_span(v, 0, basis); }

bool TruncatedModel::contains(const TruncatedModel &o) const {
  return std::all_of(o.basis.begin(), o.basis.end(),
                     [&](const GradedVector &v) { return contains(v); });
}

bool TruncatedModel::contains_shift_of(const TruncatedModel &o) const {
  return std::all_of(o.basis.begin(), o.basis.end(),
                     [&](const GradedVector &v) { return in_span(v, n, basis); });
}

TruncatedModel TruncatedModel::shifted() const {
  std::vector<GradedVector> gens;
  for (const auto &v : basis) {
    GradedVector s(v.size(), GR(0));
    std::copy(v.begin(), v.end() - n, s.begin() + n);
    gens.push_back(std::move(s));
  }
  return span(r, n, std::move(gens));
}

TruncatedModel grassmannian_model(const SolutionCandidate &cand, const GR &z0) {
  const CanonicalElement &xi = cand.xi;
  int n = xi.n(), r = xi.r();
  std::vector<GradedVector> gens;
  for (int j = 1; j <= n; ++j) {
    GradedVector v(static_cast<std::size_t>(n) * (r + 1), GR(0));
    for (int i = 1; i <= n; ++i)
      for (const auto &[k, c] : cand.A.a(i, j).eval_z(z0)) {
        int g = k + xi.xi(j);
        if (g <= r) v[static_cast<std::size_t>(g) * n + (i - 1)] = c;
      }
    gens.push_back(std::move(v));
  }
  for (int j = 0; j < n; ++j) gens.push_back(unit_vector(r, n, r, j));
  return TruncatedModel::span(r, n, std::move(gens));
}

TruncatedModel model_from_phi(const ScalarLambdaMatrix &phi, int r) {
  int n = phi.n();
  std::vector<GradedVector> gens;
  for (int j = 0; j < n; ++j) {
    GradedVector v(static_cast<std::size_t>(n) * (r + 1), GR(0));
    for (const auto &[k, m] : phi.terms()) {
      if (k < 0) throw InternalAssertion("loop has negative λ-powers");
      if (k > r) continue;
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(k) * n + i] = m(i, j);
    }
    gens.push_back(std::move(v));
  }
  return TruncatedModel::span(r, n, std::move(gens));
}

const char *filtration_name(FiltrationMode m) {
  switch (m) {
    case FiltrationMode::Segal: return "segal";
    case FiltrationMode::Uhlenbeck: return "uhlenbeck";
    case FiltrationMode::Alternating: return "alternating";
  }
  return "?";
}

FiltrationMode parse_filtration(const std::string &s) {
  if (s == "segal") return FiltrationMode::Segal;
  if (s == "uhlenbeck") return FiltrationMode::Uhlenbeck;
  if (s == "alternating") return FiltrationMode::Alternating;
  throw SchemaError("unknown filtration mode: " + s);
}

TruncatedModel segal_step(const TruncatedModel &w, int i) {
  // Rows of a reduced echelon basis stay reduced after truncation.
  int cut = (i - 1) * w.n;
  std::vector<GradedVector> gens;
  for (const auto &v : w.basis) {
    if (lowest_nonzero(v) >= cut) continue;
    GradedVector t = v;
    std::fill(t.begin() + cut, t.end(), GR(0));
    gens.push_back(std::move(t));
  }
  for (int g = i - 1; g <= w.r; ++g)
    for (int j = 0; j < w.n; ++j) gens.push_back(unit_vector(w.r, w.n, g, j));
  return TruncatedModel::closed_span(w.r, w.n, std::move(gens));
}

TruncatedModel uhlenbeck_step(const TruncatedModel &w) {
  // W ∩ λH₊ is spanned by the basis rows pivoting at grade ≥ 1; shift them
  // down and add the top grade, which λ sends to zero.
  int n = w.n;
  std::vector<GradedVector> gens;
  for (const auto &v : w.basis) {
    if (lowest_nonzero(v) < n) continue;
    GradedVector s(v.size(), GR(0));
    std::copy(v.begin() + n, v.end(), s.begin());
    gens.push_back(std::move(s));
  }
  for (int j = 0; j < n; ++j) gens.push_back(unit_vector(w.r, n, w.r, j));
  return TruncatedModel::closed_span(w.r, n, std::move(gens));
}

Filtration filtration(const TruncatedModel &model, FiltrationMode mode) {
  int r = model.r;
  Filtration f;
  f.mode = mode;
  f.steps.assign(static_cast<std::size_t>(r) + 1, TruncatedModel{});
  f.steps[r] = model;
  for (int i = r; i >= 1; --i) {
    bool uhl = mode == FiltrationMode::Uhlenbeck ||
               (mode == FiltrationMode::Alternating && (r - i) % 2 == 0);
    const TruncatedModel &wi = f.steps[i];
    TruncatedModel prev = uhl ? uhlenbeck_step(wi) : segal_step(wi, i);
    if (!prev.contains(wi) || !wi.contains_shift_of(prev))
      throw InternalAssertion("filtration step is not a λ-step");
    f.steps[i - 1] = std::move(prev);
  }
  if (f.steps[0] != TruncatedModel::full(r, model.n))
    throw InternalAssertion("filtration does not end at H₊");
  return f;
}

ScalarMatrix hermitian_projection(int n, const Subspace &alpha) {
  int d = static_cast<int>(alpha.size());
  if (d == 0) return ScalarMatrix(n);
  // π = B (B*B)^{-1} B*
  ScalarMatrix gram(d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      GR s(0);
      for (int k = 0; k < n; ++k) s += alpha[a][k].conj() * alpha[b][k];
      gram(a, b) = s;
    }
  ScalarMatrix ginv = gram.inverse();
  // c = (B*B)^{-1} B*, row a holds Σ_b ginv(a,b) conj(alpha[b]).
  std::vector<std::vector<GR>> c(static_cast<std::size_t>(d), std::vector<GR>(n));
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      if (ginv(a, b).is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!alpha[b][j].is_zero()) c[a][j].sub_product(-ginv(a, b), alpha[b][j].conj());
    }
  ScalarMatrix pi(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < d; ++a) {
      if (alpha[a][i].is_zero()) continue;
      for (int j = 0; j < n; ++j)
        if (!c[a][j].is_zero()) pi(i, j).sub_product(-alpha[a][i], c[a][j]);
    }
  return pi;
}

ScalarLambdaMatrix uniton_factor(int n, const Subspace &alpha) {
  ScalarMatrix pi = hermitian_projection(n, alpha);
  ScalarLambdaMatrix f(n);
  f.add(0, pi);
  f.add(1, ScalarMatrix::identity(n) - pi);
  return f;
}

UnitonSequence extract_unitons(const Filtration &filt) {
  const TruncatedModel &w = filt.steps.back();
  int r = w.r, n = w.n;
  UnitonSequence seq;
  seq.r = r;
  seq.n = n;
  ScalarLambdaMatrix phi = ScalarLambdaMatrix::constant(ScalarMatrix::identity(n));
  ScalarLambdaMatrix inv = phi;
  for (int i = 1; i <= r; ++i) {
    // Grades ≥ i of W_i only reach positive grades under Φ_{i-1}^{-1}.
    std::vector<const GradedVector *> low;
    for (const GradedVector &v : filt.steps[i].basis)
      if (lowest_nonzero(v) < i * n) low.push_back(&v);
    std::vector<std::vector<GR>> zero_parts;
    for (auto &[k, block] : apply_nonpositive(inv, low, n, i)) {
      if (k < 0 && !is_zero_vec(block)) throw NotInHPlus("Φ_{i-1}^{-1}W_i leaves H₊");
      if (k == 0) zero_parts = block_columns(block, n, static_cast<int>(low.size()));
    }
    Subspace alpha = echelon(std::move(zero_parts));
    ScalarMatrix pi = hermitian_projection(n, alpha);
    // Φ(π + λπ^⊥) = Φπ + λ(Φ − Φπ); Φ is unitary on |λ| = 1, so Φ^{-1} = Σ Φ_k* λ^{-k}.
    ScalarLambdaMatrix next(n);
    for (const auto &[k, m] : phi.terms()) {
      ScalarMatrix mp = m * pi;
      next.add(k + 1, m - mp);
      next.add(k, mp);
    }
    phi = std::move(next);
    inv = ScalarLambdaMatrix(n);
    for (const auto &[k, m] : phi.terms()) inv.add(-k, m.adjoint());
    seq.alphas.push_back(std::move(alpha));
    seq.projections.push_back(std::move(pi));
    seq.partials.push_back(phi);
  }
  seq.inverse = std::move(inv);
  return seq;
}

namespace {

ScalarMatrix projection_at(const UnitonSequence &seq, std::size_t k) {
  if (seq.projections.size() == seq.alphas.size()) return seq.projections[k];
  return hermitian_projection(seq.n, seq.alphas[k]);
}

bool cached(const UnitonSequence &seq) {
  return seq.partials.size() == seq.alphas.size() && seq.projections.size() == seq.alphas.size();
}

}  // namespace

ScalarMatrix assemble_phi(const UnitonSequence &seq, const GR &lambda0) {
  if (cached(seq)) {
    if (seq.alphas.empty()) return ScalarMatrix::identity(seq.n);
    return seq.partials.back().eval(lambda0);
  }
  ScalarMatrix out = ScalarMatrix::identity(seq.n);
  for (std::size_t k = 0; k < seq.alphas.size(); ++k) {
    ScalarMatrix pi = projection_at(seq, k);
    out = out * (pi + (ScalarMatrix::identity(seq.n) - pi).scaled(lambda0));
  }
  return out;
}

ScalarLambdaMatrix assemble_phi_poly(const UnitonSequence &seq) {
  if (cached(seq) && !seq.alphas.empty()) return seq.partials.back();
  ScalarLambdaMatrix out = ScalarLambdaMatrix::constant(ScalarMatrix::identity(seq.n));
  for (const Subspace &a : seq.alphas) out = out * uniton_factor(seq.n, a);
  return out;
}

ScalarLambdaMatrix assemble_phi_inverse_poly(const UnitonSequence &seq) {
  if (cached(seq) && seq.inverse.n() == seq.n) return seq.inverse;
  int n = seq.n;
  ScalarLambdaMatrix out = ScalarLambdaMatrix::constant(ScalarMatrix::identity(n));
  for (std::size_t k = 0; k < seq.alphas.size(); ++k) {
    ScalarMatrix pi = projection_at(seq, k);
    ScalarLambdaMatrix f(n);
    f.add(0, pi);
    f.add(-1, ScalarMatrix::identity(n) - pi);
    out = f * out;
  }
  return out;
}

bool phi_generates(const UnitonSequence &seq, const TruncatedModel &w) {
  int n = w.n, r = w.r;
  ScalarLambdaMatrix phi = assemble_phi_poly(seq);
  for (int j = 0; j < n; ++j) {
    GradedVector v(static_cast<std::size_t>(w.size()), GR(0));
    for (const auto &[k, m] : phi.terms()) {
      if (k < 0 || k > r) return false;
      for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(k) * n + i] = m(i, j);
    }
    if (!w.contains(v)) return false;
  }
  ScalarLambdaMatrix inv = assemble_phi_inverse_poly(seq);
  std::vector<const GradedVector *> vs;
  for (const GradedVector &v : w.basis) vs.push_back(&v);
  for (const auto &[k, block] : apply_nonpositive(inv, vs, n, r))
    if (k < 0 && !is_zero_vec(block)) return false;
  return true;
}

std::vector<Subspace> s1_alphas(const SolutionCandidate &cand, const GR &z0) {
  if (!is_s1_invariant(cand.A)) throw TypeMismatch("candidate depends on λ");
  const CanonicalElement &xi = cand.xi;
  int n = xi.n();
  ScalarMatrix a = cand.A.eval(z0, GR(1));
  std::vector<Subspace> out;
  for (int i = 1; i <= xi.r(); ++i) {
    std::vector<std::vector<GR>> cols;
    for (int j = 1; j <= n; ++j)
      if (xi.xi(j) < i) {
        std::vector<GR> c(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k) c[k] = a(k, j - 1);
        cols.push_back(std::move(c));
      }
    out.push_back(echelon(std::move(cols)));
  }
  return out;
}

RealityReport check_reality(const UnitonSequence &seq, const std::vector<GR> &lambdas) {
  RealityReport rep;
  int n = seq.n;
  for (const GR &l : lambdas) {
    ScalarMatrix phi = assemble_phi(seq, l);
    RealityVerdict v;
    v.lambda = l;
    GR lr = l.pow(static_cast<unsigned>(seq.r));
    v.second_transpose = phi.second_transpose() * phi == ScalarMatrix::identity(n).scaled(lr);
    v.conjugation = phi.real_conj() == phi.scaled(lr.inverse());
    v.unitary = (phi.adjoint() * phi).is_identity();
    if (!v.pass()) rep.pass = false;
    rep.verdicts.push_back(std::move(v));
  }
  return rep;
}

RealityReport check_reality(const SolutionCandidate &cand, const GR &z0,
                            const std::vector<GR> &lambdas) {
  return check_reality(factorize(cand, z0).seq, lambdas);
}

const char *target_name(TargetSpace t) {
  switch (t) {
    case TargetSpace::RealGrassmannian: return "real_grassmannian";
    case TargetSpace::OrthogonalGroup: return "O(n)";
    case TargetSpace::ComplexStructures: return "O(2m)/U(m)";
    case TargetSpace::OrthogonalGroupEven: return "O(2m)";
  }
  return "?";
}

HarmonicMapValue harmonic_map(const SolutionCandidate &cand, const GR &z0) {
  return harmonic_map(cand, factorize(cand, z0).seq);
}

HarmonicMapValue harmonic_map(const SolutionCandidate &cand, const UnitonSequence &seq) {
  int r = cand.xi.r();
  bool odd = r % 2 == 1;
  ScalarMatrix phi = assemble_phi(seq, GR(-1));
  if (odd) phi = phi.scaled(GR::i());
  bool sym = is_symmetric_type(cand.A);
  TargetSpace t = sym ? (odd ? TargetSpace::ComplexStructures : TargetSpace::RealGrassmannian)
                      : (odd ? TargetSpace::OrthogonalGroupEven : TargetSpace::OrthogonalGroup);
  return {std::move(phi), t, odd};
}

Factorization factorize(const SolutionCandidate &cand, const GR &z0, FiltrationMode mode) {
  Factorization f;
  f.model = grassmannian_model(cand, z0);
  f.filt = filtration(f.model, mode);
  f.seq = extract_unitons(f.filt);
  return f;
}

ComplexMatrix to_complex(const ScalarMatrix &m) {
  int n = m.n();
  ComplexMatrix out(static_cast<std::size_t>(n), std::vector<std::complex<double>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i][j] = m(i, j).to_complex();
  return out;
}

namespace {

// Shortest decimal that reads back as x, as an exact rational.
Rational decimal_rational(double x) {
  char buf[64];
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*e", prec - 1, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  std::string s(buf);
  auto e = s.find('e');
  std::string mant = s.substr(0, e);
  int exp10 = std::stoi(s.substr(e + 1));
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  auto dot = mant.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<int>(mant.size() - dot - 1);
    mant.erase(dot, 1);
  }
  mpz_class num(mant), ten = 10, scale;
  mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(std::abs(exp10)));
  Rational q = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return neg ? Rational(-q) : q;
}

using CM = ComplexMatrix;

CM cm_mul(const CM &a, const CM &b) {
  std::size_t n = a.size();
  CM c(n, std::vector<std::complex<double>>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

double cm_norm(const CM &a) {
  double m = 0;
  for (const auto &row : a)
    for (const auto &x : row) m = std::max(m, std::abs(x));
  return m;
}

}  // namespace

std::vector<double> fd_extended_solution_residuals(const SolutionCandidate &cand, const GR &z0, double h,
                                                  const std::vector<std::pair<GR, GR>> &pairs) {
  if (!(h > 0) || !std::isfinite(h)) throw NumericBreakdown("step must be positive");
  for (const auto &[l1, l2] : pairs)
    if (l1.is_one() || l2.is_one()) throw NumericBreakdown("λ = 1 has no normalization");
  GR hq(decimal_rational(h));
  const GR pts[4] = {z0 + hq, z0 - hq, z0 + hq * GR::i(), z0 - hq * GR::i()};
  std::vector<UnitonSequence> seqs;
  try {
    seqs.push_back(factorize(cand, z0).seq);
    for (const GR &p : pts) seqs.push_back(factorize(cand, p).seq);
  } catch (const PoleAtPoint &e) {
    throw NumericBreakdown(std::string("stencil meets a pole: ") + e.what());
  } catch (const DivisionByZero &e) {
    throw NumericBreakdown(std::string("degenerate factorization on the stencil: ") + e.what());
  }
  // D(λ)/(1 − λ^{-1}) with D = Φ^{-1}∂_zΦ.
  auto normalized = [&](const GR &lambda) {
    CM phi[5];
    for (int k = 0; k < 5; ++k) phi[k] = to_complex(assemble_phi(seqs[k], lambda));
    CM inv = to_complex(assemble_phi(seqs[0], lambda).adjoint());
    std::size_t n = phi[0].size();
    CM dz(n, std::vector<std::complex<double>>(n));
    const std::complex<double> I(0, 1);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::complex<double> dx = (phi[1][i][j] - phi[2][i][j]) / (2 * h);
        std::complex<double> dy = (phi[3][i][j] - phi[4][i][j]) / (2 * h);
        dz[i][j] = 0.5 * (dx - I * dy);
      }
    CM d = cm_mul(inv, dz);
    std::complex<double> norm = 1.0 - 1.0 / lambda.to_complex();
    for (auto &row : d)
      for (auto &v : row) v /= norm;
    return d;
  };
  std::vector<std::pair<GR, CM>> cache;
  cache.reserve(2 * pairs.size());  // references into the cache stay valid
  auto at = [&](const GR &lambda) -> const CM & {
    for (const auto &[l, d] : cache)
      if (l == lambda) return d;
    cache.emplace_back(lambda, normalized(lambda));
    return cache.back().second;
  };
  std::vector<double> out;
  for (const auto &[l1, l2] : pairs) {
    const CM &a = at(l1), &b = at(l2);
    CM diff = a;
    for (std::size_t i = 0; i < diff.size(); ++i)
      for (std::size_t j = 0; j < diff.size(); ++j) diff[i][j] -= b[i][j];
    double scale = std::max(cm_norm(a), cm_norm(b));
    double num = cm_norm(diff);
    if (!std::isfinite(num) || !std::isfinite(scale)) throw NumericBreakdown("non-finite residual");
    out.push_back(num == 0 ? 0 : num / scale);
  }
  return out;
}

double fd_extended_solution_check(const SolutionCandidate &cand, const GR &z0, double h,
                                  const GR &lambda1, const GR &lambda2) {
  return fd_extended_solution_residuals(cand, z0, h, {{lambda1, lambda2}})[0];
}

}  // namespace uniton
