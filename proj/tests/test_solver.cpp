#include <doctest.h>

#include "fixtures.hpp"

using namespace uniton;
using namespace uniton::testing;

TEST_CASE("displayed matrices are reproduced and verified") {
  for (const Fixture &f : displayed_fixtures()) {
    CAPTURE(f.name);
    for (const std::string &bad : fixture_mismatches(f)) FAIL_CHECK(bad);
    CHECK(verifies(f.cand));
    CHECK(check_border_equivalence(f.cand).pass());
  }
}

TEST_CASE("rho table") {
  SolutionCandidate c = build({1, 1, 1}, data({{"g", "z^3"}}));
  RhoTable rho = rho_table(c.A, c.xi);
  CHECK(rho.at({2, 3}) == P("z^3"));
  CHECK(rho.at({1, 2}) == P("-z^3"));
  CHECK(rho.at({1, 3}).is_zero());
  CHECK(rho.count({3, 1}) == 0);
  LambdaMatrix A = c.A;
  A.a(1, 3) += L(P("z"), 0);
  CHECK(rho_table(A, c.xi).at({2, 3}) == P("z^3"));
  SolutionCandidate s = build({3, 3}, data({{"g", "z"}, {"h", "z^2"}, {"k", "z^3"}}));
  RhoTable rs = rho_table(s.A, s.xi);
  CHECK(rs.at({1, 4}) == P("-z^2"));
  CHECK(rs.at({3, 6}) == P("z^2"));
}

TEST_CASE("generalized derivatives") {
  CHECK(generalized_derivative(P("z^3"), P("z").derivative()) == P("3*z^2"));
  CHECK(generalized_derivative(P("z^3"), P("z^2").derivative()) == P("3/2*z"));
  CHECK_THROWS_AS(generalized_derivative(P("z^3"), RF()), DegenerateDenominator);
  CHECK(generalized_derivative_wrt(P("z^4"), P("z^2"), 2) == P("2"));
}

TEST_CASE("completion by algebra") {
  LambdaMatrix A = LambdaMatrix::identity(3);
  A.a(1, 2) = L("-z");
  LambdaMatrix B = complete_by_algebra(A, BorderSide::TopRow);
  CHECK(B.a(1, 3) == L("-1/2*z^2"));
  CHECK(B.a(2, 3) == L("z"));
  LambdaMatrix C = LambdaMatrix::identity(4);
  C.a(1, 2) = L("-z");
  C.a(1, 3) = L("-z^2");
  LambdaMatrix D = complete_by_algebra(C, BorderSide::TopRow);
  CHECK(D.a(1, 4) == L("-z^3"));
  CHECK(D.a(2, 4) == L("z^2"));
  CHECK(D.a(3, 4) == L("z"));
  LambdaMatrix E = LambdaMatrix::identity(3);
  E.a(2, 3) = L("z+1");
  LambdaMatrix F = complete_by_algebra(E, BorderSide::LastColumn);
  CHECK(F.a(1, 2) == L("-z-1"));
  CHECK(F.a(1, 3) == L("-1/2*(z+1)^2"));
}

TEST_CASE("constructor errors") {
  CHECK_THROWS_AS(build({1, 1, 1}, FreeData{}), SchemaError);
  CHECK_THROWS_AS(build({1, 1, 1}, data({{"g", "z"}, {"h", "z"}})), SchemaError);
  CHECK_THROWS_AS(build({2, 3, 2}, data({{"g", "z"}})), UnknownType);
  CHECK_THROWS_AS(build({1, 1}, data({{"g", "z"}})), InvalidType);
  CHECK_THROWS_AS(build({2, 1, 2}, data({{"g", "1"}, {"nu", "z"}})), DegenerateData);
  CHECK_THROWS_AS(build({1, 1, 2, 1, 1}, data({{"g1", "z"}, {"h1", "z"}, {"h2", "z^2"}})), DegenerateData);
  try {
    build_type_ones({P("3"), P("z")});
    FAIL("expected DegenerateData");
  } catch (const DegenerateData &e) {
    CHECK(e.index == 1);
  }
  LambdaMatrix B(2);
  B.a(1, 1) = L("z");
  B.a(2, 2) = L("z");
  CHECK_THROWS_AS(build_r1(B), NotSkew);
  CHECK(build_r1(LambdaMatrix(2)).A == LambdaMatrix::identity(4));
}

TEST_CASE("uniton number one and two constructors") {
  SolutionCandidate a = build_1t1(3, {P("-z")});
  CHECK(a.A == build({1, 1, 1}, data({{"g", "z"}})).A);
  SolutionCandidate b = build_1t1(6, {P("z"), P("z^2"), P("1/z"), P("i")});
  CHECK(b.xi.type() == std::vector<int>{1, 4, 1});
  CHECK(verifies(b));
  CHECK(b.A.is_lambda_free());
  CHECK(b.A.a(1, 6) == L("-(1+i)*z"));
}

TEST_CASE("extended-solution verifier negatives") {
  SolutionCandidate c = build({1, 1, 1}, data({{"g", "z"}}));
  c.A.a(1, 2) = L("-z^2");
  c = {complete_by_algebra(c.A, BorderSide::TopRow), c.xi};
  c.A.a(2, 3) = L("z");
  bool col = equation_holds(c, SolverMode::Column), row = equation_holds(c, SolverMode::Row),
       mod = equation_holds(c, SolverMode::Mod);
  CHECK_FALSE(col);
  CHECK(col == row);
  CHECK(row == mod);
  std::vector<EquationFailure> fails;
  equation_holds(c, SolverMode::Column, &fails);
  REQUIRE_FALSE(fails.empty());
  CHECK(fails[0].k == 3);
}

TEST_CASE("verifier modes agree on random perturbations") {
  std::mt19937 rng(21);
  const std::vector<std::vector<int>> types{{2, 1, 2}, {1, 1, 1, 1, 1}, {1, 2, 2, 1}};
  int negatives = 0;
  for (int trial = 0; trial < 30; ++trial) {
    const auto &t = types[trial % types.size()];
    FreeData d;
    ParamSchema s = param_schema(t);
    for (const auto &name : s.required) d.params[name] = random_nonconstant(rng, 2);
    for (const auto &name : s.optional) d.params[name] = random_rf(rng, 2);
    SolutionCandidate c;
    try {
      c = build(t, d);
    } catch (const DegenerateData &) {
      continue;
    }
    std::uniform_int_distribution<int> pick(1, c.xi.n());
    int i = pick(rng), j = pick(rng);
    if (c.xi.xi(i) <= c.xi.xi(j)) continue;
    c.A.a(i, j) += L(P("z"), 0);
    bool col = equation_holds(c, SolverMode::Column);
    CHECK(col == equation_holds(c, SolverMode::Row));
    CHECK(col == equation_holds(c, SolverMode::Mod));
    negatives += !col;
  }
  CHECK(negatives > 0);
}

TEST_CASE("border equivalence on perturbed borders") {
  SolutionCandidate c = build({2, 1, 2}, data({{"g", "z"}, {"nu", "z^4"}}));
  c.A.a(1, 3) += L(P("z"), 0);
  c = {complete_by_algebra(c.A, BorderSide::TopRow), c.xi};
  BorderReport rep = check_border_equivalence(c);
  CHECK(rep.interior);
  CHECK_FALSE(rep.full);
  CHECK_FALSE(rep.row);
  CHECK_FALSE(rep.column);
  LambdaMatrix padded = LambdaMatrix::identity(5);
  SolutionCandidate inner = build({1, 1, 1}, data({{"g", "z^2"}}));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) padded.a(i + 1, j + 1) = inner.A.a(i, j);
  CHECK(check_border_equivalence({padded, CanonicalElement::from_type({1, 1, 1, 1, 1})}).pass());
}

TEST_CASE("symmetry predicates") {
  SolutionCandidate a = build({1, 1, 1, 1, 1}, data({{"g", "z"}, {"nu1", "z^3"}}));
  CHECK(is_s1_invariant(a.A));
  CHECK(is_symmetric_type(a.A));
  SolutionCandidate b = build({1, 1, 1, 1, 1}, data({{"g", "z"}, {"nu1", "z^3"}, {"nu2", "z"}}));
  CHECK_FALSE(is_s1_invariant(b.A));
  CHECK_FALSE(is_symmetric_type(b.A));
  SolutionCandidate c = build({1, 1, 1, 1, 1}, data({{"g", "z"}, {"nu1", "z^3"}, {"nu3", "z"}}));
  CHECK_FALSE(is_s1_invariant(c.A));
  CHECK(is_symmetric_type(c.A));
  SolutionCandidate d = build({2, 1, 2}, data({{"g", "z"}, {"nu", "z^3"}}));
  CHECK(is_s1_invariant(d.A));
}

TEST_CASE("type (1,...,1) parameter readout") {
  std::mt19937 rng(8);
  for (int m = 1; m <= 3; ++m)
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<RF> mu;
      for (int i = 0; i < m; ++i) mu.push_back(random_nonconstant(rng, 2 + i));
      SolutionCandidate c;
      try {
        c = build_type_ones(mu);
      } catch (const DegenerateData &) {
        continue;
      }
      CHECK(read_mu(c) == mu);
      CHECK(c.A.is_lambda_free());
      CHECK(verifies(c));
    }
  CHECK_THROWS_AS(read_mu(build({2, 2}, data({{"g", "z"}}))), TypeMismatch);
}

TEST_CASE("lambda substitution keeps solutions") {
  SolutionCandidate c = build({1, 2, 2, 1}, data({{"g", "z^2"}, {"nu1", "z"}, {"nu2", "z^3"}, {"nu3", "z"}, {"nu4", "1"}}));
  for (const GR &mu : {GR(0), GR(1), GR::i(), C(1, 1)}) {
    SolutionCandidate s{lambda_substitute(c.A, mu), c.xi};
    CHECK(verifies(s));
  }
  SolutionCandidate z{lambda_substitute(c.A, GR(0)), c.xi};
  CHECK(z.A.is_lambda_free());
  CHECK(z.A == build({1, 2, 2, 1}, data({{"g", "z^2"}, {"nu1", "z"}, {"nu2", "z^3"}})).A);
}
