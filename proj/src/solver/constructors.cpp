#include <algorithm>
#include <set>

#include "uniton/errors.hpp"
#include "uniton/solver.hpp"

namespace uniton {

const RF &FreeData::at(const std::string &name) const {
  auto it = params.find(name);
  if (it == params.end()) throw SchemaError("missing parameter '" + name + "'");
  return it->second;
}

RF FreeData::get(const std::string &name) const {
  auto it = params.find(name);
  return it == params.end() ? RF() : it->second;
}

namespace {

LambdaPoly L(const RF &c, int k = 0) { return LambdaPoly::monomial(c, k); }

// Completes the border of the principal block with 1-based rows and
// columns lo..hi, whose interior lo+1..hi-1 is already in place.
void complete_border(LambdaMatrix &A, int lo, int hi, BorderSide known) {
  auto bar = [&](int l) { return lo + hi - l; };
  for (int i = lo + 1; i <= hi - 1; ++i)
    if (!A.a(i, i).is_one()) throw InconsistentBorder("interior is not unitriangular");
  if (known == BorderSide::TopRow) {
    // Σ_{l=lo+1}^{i} a_li x_{bar l} = -a_{lo,i} solved for x_{bar i}.
    for (int i = lo + 1; i <= hi - 1; ++i) {
      LambdaPoly acc = -A.a(lo, i);
      for (int l = lo + 1; l < i; ++l)
        if (!A.a(l, i).is_zero()) acc -= A.a(l, i) * A.a(bar(l), hi);
      A.a(bar(i), hi) = acc;
    }
  } else {
    for (int i = lo + 1; i <= hi - 1; ++i) {
      LambdaPoly acc;
      for (int l = lo + 1; l <= hi - 1; ++l)
        if (!A.a(l, i).is_zero()) acc += A.a(l, i) * A.a(bar(l), hi);
      A.a(lo, i) = -acc;
    }
  }
  LambdaPoly cc;
  for (int l = lo + 1; l <= hi - 1; ++l) cc += A.a(l, hi) * A.a(bar(l), hi);
  A.a(lo, hi) = cc.scaled(RF(GR(Rational(-1, 2))));
  A.a(lo, lo) = LambdaPoly(1);
  A.a(hi, hi) = LambdaPoly(1);
  for (int l = lo + 1; l <= hi; ++l) A.a(l, lo) = LambdaPoly();
  for (int l = lo; l < hi; ++l) A.a(hi, l) = LambdaPoly();
}

bool all_ones(const std::vector<int> &t) {
  return std::all_of(t.begin(), t.end(), [](int x) { return x == 1; });
}

RF gd(const RF &nu, const RF &g, int d = 1) { return generalized_derivative_wrt(nu, g, d); }

void require_nonconstant(const RF &f, const std::string &name) {
  if (f.derivative().is_zero()) throw DegenerateData(name + " must be non-constant");
}

SolutionCandidate finish(LambdaMatrix A, const std::vector<int> &type) {
  return {std::move(A), CanonicalElement::from_type(type)};
}

}  // namespace

LambdaMatrix complete_by_algebra(const LambdaMatrix &partial, BorderSide known) {
  LambdaMatrix A = partial;
  int n = A.n();
  if (n < 2) return A;
  complete_border(A, 1, n, known);
  if (!check_complex_orthogonal(A).pass)
    throw InconsistentBorder("completed matrix is not complex orthogonal");
  return A;
}

SolutionCandidate build_type_ones(const std::vector<RF> &mu) {
  int m = static_cast<int>(mu.size());
  int n = 2 * m + 1;
  // rho[k] = a_{k,k+1}; derivs[i][j] = μ_i^(j).
  std::vector<RF> rho(static_cast<std::size_t>(n) + 1);
  std::vector<std::vector<RF>> derivs(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m; ++i) {
    auto &d = derivs[i];
    d.push_back(mu[i - 1]);
    for (int j = 1; j <= 2 * i - 2; ++j) {
      RF e = rho[m + i - j].derivative();
      if (e.is_zero()) throw DegenerateData("generalized derivative by a constant", i);
      d.push_back(d.back().derivative() / e);
    }
    const RF &top = d.back();
    if (i <= m - 1 && top.derivative().is_zero())
      throw DegenerateData("mu" + std::to_string(i) + "^(" + std::to_string(2 * i - 2) +
                               ") is constant",
                           i);
    rho[m - i + 1] = top;
    rho[m + i] = -top;
  }
  LambdaMatrix A = LambdaMatrix::identity(n);
  for (int p = 1; p <= m; ++p) {
    int q = m + 1 - p;
    for (int j = p + 1; j <= n - p; ++j) A.a(p, j) = L(derivs[q][n - p - j]);
  }
  for (int s = 1; s <= m; ++s) complete_border(A, m + 1 - s, m + 1 + s, BorderSide::TopRow);
  return finish(std::move(A), std::vector<int>(static_cast<std::size_t>(n), 1));
}

std::vector<RF> read_mu(const SolutionCandidate &cand) {
  const auto &t = cand.xi.type();
  int n = cand.xi.n();
  if (!all_ones(t) || n % 2 == 0) throw TypeMismatch("expected type (1,...,1) with n odd");
  int m = (n - 1) / 2;
  std::vector<RF> mu;
  for (int i = 1; i <= m; ++i) mu.push_back(cand.A.a(m - i + 1, m + i).coeff(0));
  return mu;
}

SolutionCandidate build_1t1(int n, const std::vector<RF> &nu) {
  if (n < 3) throw InvalidType("type (1,t,1) needs n >= 3");
  if (static_cast<int>(nu.size()) != n - 2) throw SchemaError("expected n-2 parameters");
  LambdaMatrix A = LambdaMatrix::identity(n);
  for (int j = 2; j <= n - 1; ++j) A.a(1, j) = L(nu[j - 2]);
  complete_border(A, 1, n, BorderSide::TopRow);
  return finish(std::move(A), {1, n - 2, 1});
}

SolutionCandidate build_r1(const LambdaMatrix &B) {
  int m = B.n();
  LambdaMatrix neg(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) neg(i, j) = -B(i, j);
  if (!(B.second_transpose() == neg)) throw NotSkew("B^TT must equal -B");
  LambdaMatrix A = LambdaMatrix::identity(2 * m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) A(i, m + j) = B(i, j);
  return finish(std::move(A), {m, m});
}

ParamSchema param_schema(const std::vector<int> &t) {
  int n = 0;
  for (int x : t) n += x;
  CanonicalElement::from_type(t);
  using V = std::vector<int>;
  if (t.size() == 1) return {};
  if (t == V{1, 1, 1} || t == V{2, 2}) return {{"g"}, {}};
  if (t == V{1, 2, 1}) return {{"g1", "g2"}, {}};
  if (t == V{2, 1, 2}) return {{"g", "nu"}, {"sigma"}};
  if (t == V{1, 3, 1}) return {{"nu1", "nu2", "nu3"}, {}};
  if (t == V{1, 1, 1, 1, 1}) return {{"g", "nu1"}, {"nu2", "nu3"}};
  if (t == V{1, 4, 1}) return {{"nu1", "nu2", "nu3", "nu4"}, {}};
  if (t == V{3, 3}) return {{"g", "h", "k"}, {}};
  if (t == V{2, 2, 2}) return {{"g1", "g2", "nu1", "nu2"}, {"nu3"}};
  if (t == V{1, 2, 2, 1}) return {{"g", "nu1", "nu2"}, {"nu3", "nu4"}};
  if (t == V{1, 1, 2, 1, 1}) return {{"g1", "h1", "h2"}, {}};
  if (all_ones(t)) {
    ParamSchema s;
    for (int i = 1; i <= (n - 1) / 2; ++i) s.required.push_back("mu" + std::to_string(i));
    return s;
  }
  throw UnknownType("no constructor for type " + CanonicalElement::from_type(t).type_str());
}

static void validate_names(const ParamSchema &s, const FreeData &data) {
  std::set<std::string> allowed(s.required.begin(), s.required.end());
  allowed.insert(s.optional.begin(), s.optional.end());
  for (const auto &[name, v] : data.params)
    if (!allowed.count(name)) throw SchemaError("unexpected parameter '" + name + "'");
  for (const auto &name : s.required)
    if (!data.params.count(name)) throw SchemaError("missing parameter '" + name + "'");
}

SolutionCandidate build_low_dim(const std::vector<int> &t, const FreeData &data) {
  CanonicalElement xi = CanonicalElement::from_type(t);
  int n = xi.n();
  if (n > 6) throw UnknownType("low-dimensional constructors cover n <= 6");
  ParamSchema schema = param_schema(t);
  if (all_ones(t) && n > 5) throw UnknownType("type (1,...,1) needs odd n");
  validate_names(schema, data);
  using V = std::vector<int>;
  const RF half(GR(Rational(1, 2)));

  if (t.size() == 1) return {LambdaMatrix::identity(n), xi};
  if (t == V{1, 1, 1}) return build_1t1(3, {-data.at("g")});
  if (t == V{1, 2, 1}) return build_1t1(4, {-data.at("g1"), -data.at("g2")});
  if (t == V{1, 3, 1}) return build_1t1(5, {data.at("nu1"), data.at("nu2"), data.at("nu3")});
  if (t == V{1, 4, 1})
    return build_1t1(6, {data.at("nu1"), data.at("nu2"), data.at("nu3"), data.at("nu4")});
  if (t == V{2, 2}) {
    const RF &g = data.at("g");
    LambdaMatrix B(2);
    B.a(1, 1) = L(-g);
    B.a(2, 2) = L(g);
    return build_r1(B);
  }
  if (t == V{3, 3}) {
    const RF &g = data.at("g"), &h = data.at("h"), &k = data.at("k");
    LambdaMatrix B(3);
    B.a(1, 1) = L(-h);
    B.a(1, 2) = L(-k);
    B.a(2, 1) = L(-g);
    B.a(2, 3) = L(k);
    B.a(3, 2) = L(g);
    B.a(3, 3) = L(h);
    return build_r1(B);
  }
  if (t == V{2, 1, 2}) {
    const RF &g = data.at("g"), &nu = data.at("nu");
    require_nonconstant(g, "g");
    LambdaMatrix A = LambdaMatrix::identity(5);
    A.a(2, 3) = L(g);
    A.a(2, 4) = L(-half * g * g);
    A.a(3, 4) = L(-g);
    A.a(1, 3) = L(-gd(nu, g));
    A.a(1, 4) = L(nu) + L(data.get("sigma"), 1);
    complete_border(A, 1, 5, BorderSide::TopRow);
    return finish(std::move(A), t);
  }
  if (t == V{1, 1, 1, 1, 1}) {
    const RF &g = data.at("g"), &nu1 = data.at("nu1");
    RF nu2 = data.get("nu2"), nu3 = data.get("nu3");
    require_nonconstant(g, "g");
    LambdaMatrix A = LambdaMatrix::identity(5);
    A.a(2, 3) = L(-g);
    A.a(2, 4) = L(-half * g * g);
    A.a(3, 4) = L(g);
    A.a(1, 2) = L(-gd(nu1, g, 2));
    A.a(1, 3) = L(gd(nu1, g)) + L(gd(nu2, g), 1);
    A.a(1, 4) = L(nu1) + L(nu2, 1) + L(nu3, 2);
    complete_border(A, 1, 5, BorderSide::TopRow);
    return finish(std::move(A), t);
  }
  if (t == V{2, 2, 2}) {
    const RF &g1 = data.at("g1"), &g2 = data.at("g2");
    const RF &nu1 = data.at("nu1"), &nu2 = data.at("nu2");
    require_nonconstant(g1, "g1");
    LambdaMatrix A = LambdaMatrix::identity(6);
    A.a(2, 3) = L(-g1);
    A.a(2, 4) = L(-g2);
    A.a(2, 5) = L(-g1 * g2);
    A.a(3, 5) = L(g2);
    A.a(4, 5) = L(g1);
    A.a(1, 3) = L(nu1);
    A.a(1, 4) = L((nu2.derivative() - g2.derivative() * nu1) / g1.derivative());
    A.a(1, 5) = L(nu2) + L(data.get("nu3"), 1);
    complete_border(A, 1, 6, BorderSide::TopRow);
    return finish(std::move(A), t);
  }
  if (t == V{1, 2, 2, 1}) {
    const RF &g = data.at("g"), &nu1 = data.at("nu1"), &nu2 = data.at("nu2");
    require_nonconstant(g, "g");
    LambdaMatrix A = LambdaMatrix::identity(6);
    A.a(2, 4) = L(g);
    A.a(3, 5) = L(-g);
    A.a(1, 2) = L(gd(nu1, g));
    A.a(1, 3) = L(gd(nu2, g));
    A.a(1, 4) = L(nu1) + L(data.get("nu3"), 1);
    A.a(1, 5) = L(-nu2) + L(data.get("nu4"), 1);
    complete_border(A, 1, 6, BorderSide::TopRow);
    return finish(std::move(A), t);
  }
  if (t == V{1, 1, 2, 1, 1}) {
    const RF &g1 = data.at("g1"), &h1 = data.at("h1"), &h2 = data.at("h2");
    require_nonconstant(g1, "g1");
    RF h1d = gd(h1, g1), h2d = gd(h2, g1);
    require_nonconstant(h1d, "h1^(1)");
    RF g2 = gd(h2d, g1) / gd(h1d, g1);
    LambdaMatrix A = LambdaMatrix::identity(6);
    A.a(2, 3) = L(-g1);
    A.a(2, 4) = L(-g2);
    A.a(2, 5) = L(-g1 * g2);
    A.a(3, 5) = L(g2);
    A.a(4, 5) = L(g1);
    A.a(2, 6) = L(h2 - g1 * h2d);
    A.a(3, 6) = L(h2d);
    A.a(4, 6) = L(-h1 + g1 * h1d);
    A.a(5, 6) = L(h1d);
    complete_border(A, 1, 6, BorderSide::LastColumn);
    return finish(std::move(A), t);
  }
  throw UnknownType("no constructor for type " + xi.type_str());
}

SolutionCandidate build(const std::vector<int> &t, const FreeData &data) {
  CanonicalElement xi = CanonicalElement::from_type(t);
  if (all_ones(t) && (xi.n() > 6 || data.params.count("mu1"))) {
    ParamSchema s = param_schema(t);
    validate_names(s, data);
    std::vector<RF> mu;
    for (const auto &name : s.required) mu.push_back(data.at(name));
    return build_type_ones(mu);
  }
  return build_low_dim(t, data);
}

SolutionCandidate degenerate_fixture_left(const RF &mu3) {
  LambdaMatrix A = LambdaMatrix::identity(7);
  A.a(1, 2) = L(mu3);
  A.a(6, 7) = L(-mu3);
  return finish(std::move(A), std::vector<int>(7, 1));
}

SolutionCandidate degenerate_fixture_right(const RF &mu2, const RF &mu3) {
  RF mu3d = generalized_derivative(mu3, mu2.derivative());
  LambdaMatrix A = LambdaMatrix::identity(7);
  A.a(1, 2) = L(mu3d);
  A.a(1, 3) = L(mu3);
  A.a(2, 3) = L(mu2);
  A.a(5, 6) = L(-mu2);
  A.a(5, 7) = L(mu2 * mu3d - mu3);
  A.a(6, 7) = L(-mu3d);
  return finish(std::move(A), std::vector<int>(7, 1));
}

}  // namespace uniton
