#pragma once

#include <string>
#include <vector>

#include "uniton/lambdamat.hpp"

namespace uniton {

// Integer diagonal ξ = diag(ξ_1, ..., ξ_n) together with its type and the
// partial sums T_k = Σ_{j≥k} t_j. Indices in the accessors are 1-based.
class CanonicalElement {
 public:
  // Throws InvalidType.
  static CanonicalElement from_type(const std::vector<int> &t);
  static CanonicalElement from_xi(const std::vector<int> &xi);

  int n() const { return static_cast<int>(xi_.size()); }
  int r() const { return r_; }
  const std::vector<int> &xi() const { return xi_; }
  const std::vector<int> &type() const { return t_; }
  int xi(int i) const { return xi_[i - 1]; }
  int bar(int i) const { return n() + 1 - i; }
  // T_k for 0 ≤ k ≤ r+1.
  int T(int k) const { return T_[k]; }
  std::string type_str() const;

  friend bool operator==(const CanonicalElement &, const CanonicalElement &) = default;

 private:
  std::vector<int> xi_, t_, T_;
  int r_ = 0;
};

CanonicalElement canonical_from_type(const std::vector<int> &t);
LambdaMatrix gamma_xi(const CanonicalElement &xi);

struct ShapeIssue {
  int i, j;  // 1-based
  std::string what;
};

struct ShapeReport {
  bool pass = true;
  std::vector<ShapeIssue> violations;
  // Second-diagonal degree bound, reported here when complex_only is set.
  std::vector<ShapeIssue> warnings;
};

// Block-unitriangular shape with deg a_ij ≤ ξ_i − ξ_j − 1 and, on the second
// diagonal, deg a_{i,n+1-i} ≤ ξ_i − ξ_{n+1-i} − 2. complex_only demotes the
// second-diagonal bound to a warning.
ShapeReport check_shape(const LambdaMatrix &a, const CanonicalElement &xi,
                        bool complex_only = false);

std::vector<int> parse_type_list(const std::string &text);

}  // namespace uniton
