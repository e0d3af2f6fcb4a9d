#include <doctest.h>

#include "support.hpp"
#include "uniton/mesh.hpp"

using namespace uniton;
using namespace uniton::testing;

namespace {

RFVector V(std::initializer_list<const char *> xs) {
  RFVector v;
  for (const char *x : xs) v.push_back(P(x));
  return v;
}

// Nullity of χ′ written out by hand in each dimension.
RF quadratic(const RFVector &chi) {
  RFVector d = derivative(chi);
  if (d.size() == 3) return RF(2) * d[0] * d[2] + d[1] * d[1];
  return RF(2) * (d[0] * d[3] + d[1] * d[2]);
}

}  // namespace

TEST_CASE("Weierstrass curves in C3") {
  NullCurve c = weierstrass_c3({P("z"), P("z^3")});
  CHECK(c.n_ambient == 3);
  CHECK(c.components == V({"6*z", "3*z^2", "-z^3"}));
  CHECK(quadratic(c.components).is_zero());
  CHECK_THROWS_AS(weierstrass_c3({P("2"), P("z^3")}), DegenerateData);
  CHECK_THROWS_AS(weierstrass_c3({P("z^2+1"), P("1/2*(z^2+1)^2")}), DegenerateData);
  NullCurve g2 = weierstrass_c3({P("z^2"), P("z^6")});
  CHECK(quadratic(g2.components).is_zero());
}

TEST_CASE("Weierstrass curves in C4") {
  NullCurve c = weierstrass_c4({P("z"), P("z^2"), P("z^3")});
  CHECK(c.n_ambient == 4);
  CHECK(c.components == V({"2*z", "z^2", "3*z^2", "-2*z^3"}));
  CHECK(quadratic(c.components).is_zero());
  NullCurve flat = weierstrass_c4({P("z"), P("z^2"), RF()});
  CHECK(flat.components[2].is_zero());
  CHECK(flat.components[3].is_zero());
  CHECK(is_null(flat.components));
  CHECK_THROWS_AS(weierstrass_c4({P("3"), P("z^2"), P("z")}), DegenerateData);
  CHECK_THROWS_AS(weierstrass_c4({P("z"), P("z"), P("z^3")}), DegenerateData);
}

TEST_CASE("null curve validation") {
  CHECK_THROWS_AS(make_null_curve(V({"1", "2", "3"})), DegenerateCurve);
  CHECK_THROWS_AS(make_null_curve(V({"z", "z", "z"})), NotIsotropic);
  CHECK_THROWS_AS(make_null_curve(V({"z", "z"})), SizeMismatch);
  CHECK(make_null_curve(V({"z", "0", "0"})).n_ambient == 3);
  CHECK(null_pair(V({"1", "0", "0"}), V({"0", "0", "1"})) == RF(1));
}

TEST_CASE("curves and matrices") {
  NullCurve c = weierstrass_c3({P("z"), P("z^3")});
  SolutionCandidate a = curve_to_matrix(c);
  CHECK(a.xi.type() == std::vector<int>{1, 1, 1, 1, 1});
  CHECK(verifies(a));
  CHECK(a.A == build({1, 1, 1, 1, 1}, data({{"g", "z"}, {"nu1", "z^3"}})).A);
  CHECK(a.A.a(4, 5) == L("6*z"));
  CHECK(a.A.a(3, 5) == L("3*z^2"));
  CHECK(a.A.a(2, 5) == L("-z^3"));
  CHECK(matrix_to_data3(a) == WeierstrassData3{P("z"), P("z^3")});
  CHECK(matrix_to_curve(a).components == c.components);
  CHECK_THROWS_AS(curve_to_matrix(make_null_curve(V({"0", "0", "z"}))), DegenerateCurve);
  CHECK_THROWS_AS(curve_to_matrix(make_null_curve(V({"z", "0", "0"}))), DegenerateCurve);

  NullCurve d = weierstrass_c4({P("z"), P("z^2"), P("z^3")});
  SolutionCandidate b = curve_to_matrix(d);
  CHECK(b.xi.type() == std::vector<int>{1, 1, 2, 1, 1});
  CHECK(verifies(b));
  CHECK(b.A.a(5, 6) == L("2*z"));
  CHECK(b.A.a(2, 6) == L("-2*z^3"));
  CHECK(matrix_to_data4(b) == WeierstrassData4{P("z"), P("z^2"), P("z^3")});
  CHECK(b.A == build({1, 1, 2, 1, 1}, data({{"g1", "z"}, {"h1", "z^2"}, {"h2", "z^3"}})).A);
  CHECK_THROWS_AS(matrix_to_data4(a), TypeMismatch);
  CHECK_THROWS_AS(matrix_to_data3(b), TypeMismatch);
}

TEST_CASE("type (1,1,2,1,1) readout") {
  SolutionCandidate a = build({1, 1, 2, 1, 1}, data({{"g1", "z^2+z"}, {"h1", "z^3"}, {"h2", "z^4+z^2"}}));
  WeierstrassData4 d = matrix_to_data4(a);
  CHECK(d.g1 == a.A.a(4, 5).coeff(0));
  CHECK(d.h1 == a.A.a(1, 3).coeff(0));
  CHECK(d.h2 == a.A.a(1, 3).coeff(0) * a.A.a(3, 5).coeff(0) - a.A.a(1, 5).coeff(0));
  CHECK(d == WeierstrassData4{P("z^2+z"), P("z^3"), P("z^4+z^2")});
}

TEST_CASE("isotropy and fullness") {
  CHECK(isotropy_check(V({"1", "0", "0", "0", "0"}), 1));
  CHECK_FALSE(isotropy_check(V({"1", "0", "0", "0", "1"}), 1));
  SolutionCandidate a = build({1, 1, 1, 1, 1}, data({{"g", "z"}, {"nu1", "z^3"}}));
  RFVector F = last_column_map(a);
  CHECK(F[0] == RF(1));
  CHECK(isotropy_check(F, 3));
  CHECK(is_full(F));
  CHECK_FALSE(is_full(V({"1", "z", "0", "0", "0"})));
}

TEST_CASE("Calabi reconstruction") {
  RF g = P("z^2-i");
  RFVector F{RF(1), g, RF(Q(-1, 2)) * g * g};
  SolutionCandidate c = calabi_reconstruct(F);
  CHECK(c.A == build({1, 1, 1}, data({{"g", "z^2-i"}})).A);
  SolutionCandidate a = build({1, 1, 1, 1, 1}, data({{"g", "z^2"}, {"nu1", "z^5+z"}}));
  CHECK(calabi_reconstruct(last_column_map(a)).A == a.A);
  RFVector scaled = last_column_map(a);
  for (RF &x : scaled) x = x * P("z+3");
  CHECK(calabi_reconstruct(scaled).A == a.A);
  CHECK_THROWS_AS(calabi_reconstruct(V({"1", "z", "z^2"})), NotIsotropic);
  CHECK_THROWS_AS(calabi_reconstruct(V({"1", "0", "0"})), NotFull);
  CHECK_THROWS_AS(calabi_reconstruct(V({"0", "z", "0"})), SchemaError);
}

TEST_CASE("random Weierstrass data") {
  std::mt19937 rng(17);
  int c3 = 0, c4 = 0;
  for (int trial = 0; trial < 60; ++trial) {
    RF g = random_nonconstant(rng, 3, 1), nu = random_nonconstant(rng, 5, 1);
    NullCurve c;
    try {
      c = weierstrass_c3({g, nu});
    } catch (const DegenerateData &) {
      continue;
    }
    ++c3;
    CHECK(quadratic(c.components).is_zero());
    SolutionCandidate a = curve_to_matrix(c);
    CHECK(matrix_to_data3(a) == WeierstrassData3{g, nu});
    CHECK(curve_to_matrix(matrix_to_curve(a)).A == a.A);
    if (trial % 6 == 0) CHECK(verifies(a));
  }
  for (int trial = 0; trial < 60; ++trial) {
    RF g1 = random_nonconstant(rng, 3, 1), h1 = random_nonconstant(rng, 4), h2 = random_rf(rng, 5, 1);
    NullCurve c;
    try {
      c = weierstrass_c4({g1, h1, h2});
    } catch (const DegenerateData &) {
      continue;
    }
    ++c4;
    CHECK(quadratic(c.components).is_zero());
    SolutionCandidate a;
    try {
      a = curve_to_matrix(c);
    } catch (const DegenerateCurve &) {
      continue;
    }
    CHECK(matrix_to_data4(a) == WeierstrassData4{g1, h1, h2});
    CHECK(matrix_to_curve(a).components == c.components);
    if (trial % 6 == 0) CHECK(verifies(a));
  }
  CHECK(c3 >= 50);
  CHECK(c4 >= 50);
}

TEST_CASE("Calabi chain on random type (1,...,1) solutions") {
  std::mt19937 rng(23);
  for (int m = 1; m <= 3; ++m)
    for (int trial = 0; trial < 3; ++trial) {
      std::vector<RF> mu;
      for (int i = 0; i < m; ++i) mu.push_back(random_nonconstant(rng, 2));
      SolutionCandidate a;
      try {
        a = build_type_ones(mu);
      } catch (const DegenerateData &) {
        continue;
      }
      int n = a.xi.n();
      bool nondegenerate = true;
      for (int j = 1; j < n; ++j) nondegenerate = nondegenerate && !a.A.a(j, j + 1).coeff(0).derivative().is_zero();
      if (!nondegenerate) {
        CHECK_FALSE(is_full(last_column_map(a)));
        continue;
      }
      RFVector F = last_column_map(a);
      CHECK(isotropy_check(F, n - 2));
      CHECK(is_full(F));
      CHECK(calabi_reconstruct(F).A == a.A);
      if (n == 5) {
        RFVector mid{F[1], F[2], F[3]};
        CHECK(is_null(mid));
      }
    }
}

TEST_CASE("generalized and ordinary derivatives agree by the chain rule") {
  RF g = P("z^2+z"), nu = P("z^4-3*z");
  NullCurve c = weierstrass_c3({g, nu});
  RFVector d = derivative(c.components), dg;
  for (const RF &x : c.components) dg.push_back(generalized_derivative_wrt(x, g, 1));
  for (const GR &z0 : {GR(1), C(2, 1), Q(-3, 2)}) {
    GR gp = g.derivative().eval(z0);
    for (std::size_t k = 0; k < 3; ++k) CHECK(d[k].eval(z0) == dg[k].eval(z0) * gp);
    CHECK(null_pair(dg, dg).eval(z0) * gp * gp == null_pair(d, d).eval(z0));
  }
}

TEST_CASE("minimal surface meshes") {
  NullCurve c = weierstrass_c3({P("z"), P("z^3")});
  Mesh m = sample_mesh(c, MeshGrid{-1, 1, -1, 1, 16});
  CHECK(m.vertices.size() == 256);
  CHECK(m.faces.size() == 225);
  CHECK(m.stats.interior == 196);
  CHECK(m.stats.conformality_max < 0.05);
  NullCurve shifted = c;
  shifted.components[0] = shifted.components[0] + P("5/2");
  shifted.components[2] = shifted.components[2] + P("-i");
  Mesh t = sample_mesh(shifted, MeshGrid{-1, 1, -1, 1, 16});
  CHECK(t.stats.conformality_max == doctest::Approx(m.stats.conformality_max).epsilon(1e-6));
  CHECK(t.stats.orthogonality_max == doctest::Approx(m.stats.orthogonality_max).epsilon(1e-6));
  CHECK_THROWS_AS(sample_mesh(c, MeshGrid{-1, 1, -1, 1, 1}), SchemaError);
  NullCurve p = weierstrass_c3({P("z"), P("1/z")});
  CHECK_THROWS_AS(sample_mesh(p, MeshGrid{0, 0, 0, 0, 2}), EmptyGrid);
  Mesh holed = sample_mesh(p, MeshGrid{-1, 1, -1, 1, 5});
  CHECK(holed.stats.filtered == 1);
  CHECK(holed.faces.size() == 12);
  std::vector<std::complex<double>> e = to_euclidean({1, 0, 0, 0, 0});
  CHECK(std::abs(e[0] - std::sqrt(0.5)) < 1e-15);
  CHECK(std::abs(e[4] - std::complex<double>(0, std::sqrt(0.5))) < 1e-15);
}
