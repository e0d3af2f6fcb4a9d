#include <doctest.h>

#include <json.hpp>

#include "support.hpp"
#include "uniton/json_io.hpp"

using namespace uniton;
using namespace uniton::testing;

namespace {

LambdaMatrix eq51(const RF &g) {
  LambdaMatrix A = LambdaMatrix::identity(3);
  A.a(1, 2) = LambdaPoly(-g);
  A.a(1, 3) = LambdaPoly(RF(Q(-1, 2)) * g * g);
  A.a(2, 3) = LambdaPoly(g);
  return A;
}

LambdaMatrix random_lmat(std::mt19937 &rng, int n) {
  LambdaMatrix X(n);
  std::uniform_int_distribution<int> deg(0, 2), coin(0, 2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (coin(rng)) X(i, j) = L(random_rf(rng, 2, 1), deg(rng));
  return X;
}

}  // namespace

TEST_CASE("lambda matrix products") {
  LambdaMatrix D(2);
  D(0, 0) = L(RF(1), 1);
  D(1, 1) = LambdaPoly(1);
  LambdaMatrix D2 = lmat_mul(D, D);
  CHECK(D2(0, 0) == L(RF(1), 2));
  CHECK(D2(1, 1) == LambdaPoly(1));
  LambdaMatrix A = eq51(P("z"));
  CHECK(lmat_mul(LambdaMatrix::identity(3), A) == A);
  LambdaMatrix psi = lmat_mul(A, gamma_xi(CanonicalElement::from_type({1, 1, 1})));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(psi(i, j) == A(i, j).shifted(2 - j));
  CHECK_THROWS_AS(lmat_mul(A, LambdaMatrix::identity(2)), SizeMismatch);
}

TEST_CASE("second transpose") {
  CHECK(LambdaMatrix::identity(4).second_transpose() == LambdaMatrix::identity(4));
  LambdaMatrix A = eq51(P("z"));
  CHECK(A.second_transpose()(0, 2) == L("-1/2*z^2"));
  CHECK(A.second_transpose()(0, 1) == A(1, 2));
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 4;
    LambdaMatrix X = random_lmat(rng, n), Y = random_lmat(rng, n);
    CHECK(X.second_transpose().second_transpose() == X);
    CHECK(lmat_mul(X, Y).second_transpose() == lmat_mul(Y.second_transpose(), X.second_transpose()));
  }
}

TEST_CASE("null-basis bilinear form") {
  LambdaVector e1{LambdaPoly(1), LambdaPoly(), LambdaPoly()}, e3{LambdaPoly(), LambdaPoly(), LambdaPoly(1)};
  CHECK(bilinear(e1, e3) == LambdaPoly(1));
  CHECK(bilinear(e1, e1).is_zero());
  RF g = P("z^2+1");
  LambdaVector v{LambdaPoly(1), LambdaPoly(g), LambdaPoly(RF(Q(-1, 2)) * g * g)};
  CHECK(bilinear(v, v).is_zero());
  CHECK_THROWS_AS(bilinear(e1, LambdaVector{LambdaPoly(1)}), SizeMismatch);
}

TEST_CASE("complex orthogonality check") {
  CHECK(check_complex_orthogonal(LambdaMatrix::identity(5)).pass);
  CHECK(check_complex_orthogonal(eq51(P("(z+i)/(z^2-3)"))).pass);
  LambdaMatrix B = eq51(P("z"));
  B.a(1, 3) = L("-1/2*z^2+1");
  OrthoReport rep = check_complex_orthogonal(B);
  CHECK_FALSE(rep.pass);
  bool found = false;
  for (const auto &f : rep.failures)
    if (f.i == 3 && f.j == 3) found = f.residual == LambdaPoly(2);
  CHECK(found);
}

TEST_CASE("orthogonal matrices preserve the form") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    RF g = random_rf(rng, 3, 1);
    LambdaMatrix A = eq51(g);
    LambdaVector v, w;
    for (int k = 0; k < 3; ++k) {
      v.push_back(L(random_rf(rng, 2), k % 2));
      w.push_back(L(random_rf(rng, 2), 0));
    }
    LambdaVector Av(3), Aw(3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Av[i] += A(i, j) * v[j];
        Aw[i] += A(i, j) * w[j];
      }
    CHECK(bilinear(Av, Aw) == bilinear(v, w));
    CHECK(bilinear(v, w) == bilinear(w, v));
  }
}

TEST_CASE("pointwise evaluation") {
  CanonicalElement xi = CanonicalElement::from_type({1, 2, 2, 1});
  CHECK(lmat_eval(gamma_xi(xi), C(2, 1), GR(1)).is_identity());
  ScalarMatrix m = lmat_eval(eq51(P("z")), GR(1), GR::i());
  CHECK(m(0, 1) == GR(-1));
  CHECK(m(1, 2) == GR(1));
  CHECK(m(0, 2) == Q(-1, 2));
  CHECK(m(1, 0).is_zero());
  CHECK_THROWS_AS(lmat_eval(eq51(P("1/z")), GR(0), GR(1)), PoleAtPoint);
}

TEST_CASE("scalar matrices") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + trial % 4;
    ScalarMatrix X(n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) X(i, j) = random_gr(rng);
    ScalarMatrix Y = X.second_transpose().second_transpose();
    CHECK(Y == X);
    CHECK(X.adjoint().adjoint() == X);
    CHECK(X.real_conj().real_conj() == X);
    try {
      CHECK((X * X.inverse()).is_identity());
    } catch (const DivisionByZero &) {
    }
  }
  CHECK_THROWS_AS(ScalarMatrix(2).inverse(), DivisionByZero);
}

TEST_CASE("lambda substitution") {
  LambdaMatrix A = LambdaMatrix::identity(3);
  A.a(1, 2) = L("z") + L(P("z^2"), 1) + L(P("1"), 2);
  CHECK(lambda_substitute(A, GR(1)) == A);
  LambdaMatrix A0 = lambda_substitute(A, GR(0));
  CHECK(A0.is_lambda_free());
  CHECK(A0.a(1, 2) == L("z"));
  GR mu = C(1, 1), nu = C(2, -1);
  CHECK(lambda_substitute(lambda_substitute(A, mu), nu) == lambda_substitute(A, mu * nu));
  CHECK(lambda_substitute(A, GR::i()).a(1, 2) == L("z") + L(P("i*z^2"), 1) + L(P("-1"), 2));
}

TEST_CASE("lambda matrix json round trip") {
  LambdaMatrix A = eq51(P("(z+i)/(z-2)"));
  A.a(1, 2) += L(P("3/4"), 2);
  nlohmann::json j = lmat_to_json(A);
  CHECK(j["n"] == 3);
  CHECK(j["entries"][1][2]["0"] == format_rf(P("(z+i)/(z-2)")));
  CHECK(lmat_from_json(j) == A);
  CHECK_THROWS_AS(lmat_from_json(nlohmann::json::parse(R"({"n":2,"entries":[[{}]]})")), SchemaError);
  CHECK_THROWS_AS(lmat_from_json(nlohmann::json::parse(R"({"n":1,"entries":[[{"x":"1"}]]})")), SchemaError);
}
