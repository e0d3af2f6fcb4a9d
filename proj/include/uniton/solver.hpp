#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "uniton/canonical.hpp"

namespace uniton {

struct SolutionCandidate {
  LambdaMatrix A;
  CanonicalElement xi;
};

struct FreeData {
  std::map<std::string, RF> params;
  std::map<std::string, bool> nondegenerate_flags;

  const RF &at(const std::string &name) const;
  RF get(const std::string &name) const;  // absent optional parameter = 0
};

// ρ_jk for ξ_j > ξ_k, keyed by 1-based (j, k).
using RhoTable = std::map<std::pair<int, int>, RF>;
RhoTable rho_table(const LambdaMatrix &a, const CanonicalElement &xi);

enum class SolverMode { Column, Row, Mod };
const char *mode_name(SolverMode m);

struct EquationFailure {
  SolverMode mode;
  int i, k;  // 1-based row and column
  LambdaPoly residual;
};

struct ExtSolReport {
  bool pass = true;
  bool column_pass = true, row_pass = true, mod_pass = true;
  std::vector<EquationFailure> failures;
};

// Runs the column, row and truncated forms of the extended-solution
// equation and throws InternalAssertion if their verdicts differ.
ExtSolReport check_extended_solution(const SolutionCandidate &cand);
bool equation_holds(const SolutionCandidate &cand, SolverMode mode,
                    std::vector<EquationFailure> *failures = nullptr);

// ν′/e; throws DegenerateDenominator when e ≡ 0.
RF generalized_derivative(const RF &nu, const RF &e);
// ν^(d) with respect to g: ν^(k) = (ν^(k-1))′/g′.
RF generalized_derivative_wrt(const RF &nu, const RF &g, int d);

enum class BorderSide { TopRow, LastColumn };
// Fills the other half of the border from (c_i, c_n) = 0, i = 2..n-1, and
// a_1n from (c_n, c_n) = 0.
LambdaMatrix complete_by_algebra(const LambdaMatrix &partial, BorderSide known);

SolutionCandidate build_type_ones(const std::vector<RF> &mu);
// μ_i = a_{m-i+1, m+i} (λ⁰ coefficients) for type (1,...,1) with n = 2m+1.
std::vector<RF> read_mu(const SolutionCandidate &cand);
SolutionCandidate build_low_dim(const std::vector<int> &type, const FreeData &data);
SolutionCandidate build_r1(const LambdaMatrix &B);
SolutionCandidate build_1t1(int n, const std::vector<RF> &nu);
// Dispatches on type: low-dimensional schemas, or μ-parameters for (1,...,1).
SolutionCandidate build(const std::vector<int> &type, const FreeData &data);

struct ParamSchema {
  std::vector<std::string> required;
  std::vector<std::string> optional;
};
// Throws UnknownType.
ParamSchema param_schema(const std::vector<int> &type);

bool is_s1_invariant(const LambdaMatrix &a);
bool is_symmetric_type(const LambdaMatrix &a);

struct BorderReport {
  bool interior = true;  // the equation for the matrix without its border
  bool full = true, row = true, column = true;
  bool pass() const { return full && row && column; }
};
// Evaluates the full equation, the top-row condition and the last-column
// condition separately; throws InternalAssertion if they disagree while the
// interior satisfies the equation.
BorderReport check_border_equivalence(const SolutionCandidate &cand);

// Literal 7×7 matrices for degenerate μ-data of type (1,...,1): μ_1 = μ_2 = 0,
// and μ_1 = 0 with μ_2 non-constant (μ_3^(1) = μ_3′/μ_2′).
SolutionCandidate degenerate_fixture_left(const RF &mu3);
SolutionCandidate degenerate_fixture_right(const RF &mu2, const RF &mu3);

}  // namespace uniton
