#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "uniton/solver.hpp"

namespace uniton {

// Element of H₊/λ^{r+1}H₊ = (Q(i)ⁿ)^{r+1}; index = grade·n + row.
using GradedVector = std::vector<GR>;
// Subspace of Q(i)ⁿ given by a reduced echelon basis.
using Subspace = std::vector<std::vector<GR>>;

// Reduced echelon basis of the span; pivots on the lowest index first.
std::vector<std::vector<GR>> echelon(std::vector<std::vector<GR>> vectors);

struct TruncatedModel {
  int r = 0, n = 0;
  std::vector<GradedVector> basis;  // reduced echelon

  int dim() const { return static_cast<int>(basis.size()); }
  int size() const { return n * (r + 1); }
  static TruncatedModel span(int r, int n, std::vector<GradedVector> gens);
  static TruncatedModel full(int r, int n);
  // Generators already closed under λ.
  static TruncatedModel closed_span(int r, int n, std::vector<GradedVector> gens);
  bool contains(const GradedVector &v) const;
  bool contains(const TruncatedModel &o) const;
  TruncatedModel shifted() const;  // λ·W
  bool contains_shift_of(const TruncatedModel &o) const;  // λ·o ⊆ this
  friend bool operator==(const TruncatedModel &, const TruncatedModel &) = default;
};

GradedVector unit_vector(int r, int n, int grade, int row);

// W = A(z0)γ_ξ H₊ + λ^r H₊. Throws PoleAtPoint.
TruncatedModel grassmannian_model(const SolutionCandidate &cand, const GR &z0);
// W = Φ H₊ for a polynomial loop Φ of degree ≤ r.
TruncatedModel model_from_phi(const ScalarLambdaMatrix &phi, int r);

enum class FiltrationMode { Segal, Uhlenbeck, Alternating };
const char *filtration_name(FiltrationMode m);
FiltrationMode parse_filtration(const std::string &s);

struct Filtration {
  FiltrationMode mode = FiltrationMode::Alternating;
  std::vector<TruncatedModel> steps;  // steps[i] = W_i; steps[r] = W, steps[0] = H₊
};

TruncatedModel segal_step(const TruncatedModel &w, int i);  // W_i + λ^{i-1}H₊
TruncatedModel uhlenbeck_step(const TruncatedModel &w);     // λ^{-1}W_i ∩ H₊
Filtration filtration(const TruncatedModel &model, FiltrationMode mode);

struct UnitonSequence {
  int r = 0, n = 0;
  std::vector<Subspace> alphas;               // α_1, …, α_r
  std::vector<ScalarLambdaMatrix> partials;   // Φ_1, …, Φ_r
  std::vector<ScalarMatrix> projections;      // π_{α_i}
  ScalarLambdaMatrix inverse;                 // Φ_r^{-1}, a polynomial in λ^{-1}
};

// Hermitian projection onto span(basis) and the factor π_α + λπ_α^⊥.
ScalarMatrix hermitian_projection(int n, const Subspace &alpha);
ScalarLambdaMatrix uniton_factor(int n, const Subspace &alpha);

// α_i = P₀Φ_{i-1}^{-1}W_i; throws NotInHPlus when a negative grade survives.
UnitonSequence extract_unitons(const Filtration &filt);
ScalarMatrix assemble_phi(const UnitonSequence &seq, const GR &lambda0);
ScalarLambdaMatrix assemble_phi_poly(const UnitonSequence &seq);
ScalarLambdaMatrix assemble_phi_inverse_poly(const UnitonSequence &seq);
// ΦH₊ = W: the columns of Φ lie in W and Φ^{-1}W ⊆ H₊.
bool phi_generates(const UnitonSequence &seq, const TruncatedModel &w);

// α_i = span{c_j : ξ_j < i} for λ-free A.
std::vector<Subspace> s1_alphas(const SolutionCandidate &cand, const GR &z0);

struct RealityVerdict {
  GR lambda;
  bool second_transpose = true;  // Φ^TT Φ = λ^r I
  bool conjugation = true;       // Φ̄ = λ^{-r} Φ
  bool unitary = true;           // Φ*Φ = I
  bool pass() const { return second_transpose && conjugation && unitary; }
};
struct RealityReport {
  bool pass = true;
  std::vector<RealityVerdict> verdicts;
};
RealityReport check_reality(const UnitonSequence &seq, const std::vector<GR> &lambdas);
RealityReport check_reality(const SolutionCandidate &cand, const GR &z0,
                            const std::vector<GR> &lambdas);

enum class TargetSpace { RealGrassmannian, OrthogonalGroup, ComplexStructures, OrthogonalGroupEven };
const char *target_name(TargetSpace t);

struct HarmonicMapValue {
  ScalarMatrix phi;
  TargetSpace target;
  bool odd_prefactor;  // φ = iΦ_{-1}
};
HarmonicMapValue harmonic_map(const SolutionCandidate &cand, const GR &z0);
HarmonicMapValue harmonic_map(const SolutionCandidate &cand, const UnitonSequence &seq);

// Full pipeline at z0: model, filtration, unitons.
struct Factorization {
  TruncatedModel model;
  Filtration filt;
  UnitonSequence seq;
};
Factorization factorize(const SolutionCandidate &cand, const GR &z0,
                        FiltrationMode mode = FiltrationMode::Alternating);

using ComplexMatrix = std::vector<std::vector<std::complex<double>>>;
ComplexMatrix to_complex(const ScalarMatrix &m);

// ‖D(λ₁)/(1−λ₁^{-1}) − D(λ₂)/(1−λ₂^{-1})‖_∞ / scale with D = Φ^{-1}∂_zΦ from
// central differences in x and y. Throws NumericBreakdown near poles.
double fd_extended_solution_check(const SolutionCandidate &cand, const GR &z0, double h,
                                  const GR &lambda1, const GR &lambda2);
// The same residual for several λ-pairs from one set of stencil factorizations.
std::vector<double> fd_extended_solution_residuals(const SolutionCandidate &cand, const GR &z0, double h,
                                                  const std::vector<std::pair<GR, GR>> &pairs);

}  // namespace uniton
