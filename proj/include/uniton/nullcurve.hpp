#pragma once

#include <vector>

#include "uniton/solver.hpp"

namespace uniton {

using RFVector = std::vector<RF>;

// (u, v) = Σ u_j v_{n+1-j} over rational functions.
RF null_pair(const RFVector &u, const RFVector &v);
RFVector derivative(const RFVector &v);

// Null-basis coordinates of a curve in C³ or C⁴ with (χ′, χ′) ≡ 0.
struct NullCurve {
  int n_ambient = 3;
  RFVector components;
};

// Throws SizeMismatch, DegenerateCurve (χ′ ≡ 0) or NotIsotropic (not null).
NullCurve make_null_curve(RFVector components);
bool is_null(const RFVector &chi);

struct WeierstrassData3 {
  RF g, nu;
  friend bool operator==(const WeierstrassData3 &, const WeierstrassData3 &) = default;
};
struct WeierstrassData4 {
  RF g1, h1, h2;
  friend bool operator==(const WeierstrassData4 &, const WeierstrassData4 &) = default;
};

// χ = (ν^(2), −ν^(1) + gν^(2), −ν + gν^(1) − ½g²ν^(2)), derivatives with
// respect to g. Throws DegenerateData when g or ν^(2) is constant.
NullCurve weierstrass_c3(const WeierstrassData3 &d);
// χ = (h₁^(1), −h₁ + g₁h₁^(1), h₂^(1), h₂ − g₁h₂^(1)). Throws DegenerateData
// when g₁ or h₁^(1) is constant.
NullCurve weierstrass_c4(const WeierstrassData4 &d);

// Type (1,1,1,1,1) with (a45, a35, a25) = χ, or type (1,1,2,1,1) with
// (a56, a46, a36, a26) = χ. Throws DegenerateCurve.
SolutionCandidate curve_to_matrix(const NullCurve &chi);
// Inverse of curve_to_matrix, from λ⁰ coefficients. Throws TypeMismatch.
NullCurve matrix_to_curve(const SolutionCandidate &cand);

// (g, ν) = (a34, a14) and (g₁, h₁, h₂) = (a45, a13, a13·a35 − a15), read
// from λ⁰ coefficients. Throw TypeMismatch.
WeierstrassData3 matrix_to_data3(const SolutionCandidate &cand);
WeierstrassData4 matrix_to_data4(const SolutionCandidate &cand);

// (F^(i), F^(j)) = 0 for all i, j ≥ 0 with i + j ≤ t.
bool isotropy_check(const RFVector &F, int t);
// Wronskian of F, F′, …, F^(n-1) is not identically zero.
bool is_full(const RFVector &F);

// F = (1, F_1, …, F_{n-1}) read off the last column: F_k = a_{n-k, n}.
RFVector last_column_map(const SolutionCandidate &cand);
// a_{in} = F_{n-i} and c_j = c_{j+1}′ / a_{j,j+1}′. F is normalized by F_0.
// Throws NotFull, NotIsotropic or SchemaError (F_0 ≡ 0).
SolutionCandidate calabi_reconstruct(const RFVector &F);

}  // namespace uniton
