#pragma once

#include <functional>
#include <string>
#include <vector>

#include "support.hpp"

namespace uniton::testing {

// Expected value of a whole entry (k < 0) or of one λ-coefficient.
struct Expect {
  int i, j, k;
  LambdaPoly value;
};

struct Fixture {
  std::string name;
  SolutionCandidate cand;
  std::vector<Expect> expect;
};

inline std::vector<Expect> full_matrix(const std::vector<std::vector<LambdaPoly>> &rows) {
  std::vector<Expect> out;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      out.push_back({static_cast<int>(i) + 1, static_cast<int>(j) + 1, -1, rows[i][j]});
  return out;
}

inline std::vector<std::string> fixture_mismatches(const Fixture &f) {
  std::vector<std::string> bad;
  for (const Expect &e : f.expect) {
    const LambdaPoly &got = f.cand.A.a(e.i, e.j);
    bool ok = e.k < 0 ? got == e.value : LambdaPoly(got.coeff(e.k)) == e.value;
    if (!ok)
      bad.push_back(f.name + " a" + std::to_string(e.i) + std::to_string(e.j) +
                    (e.k < 0 ? "" : "[λ^" + std::to_string(e.k) + "]") + ": got " + got.str() +
                    ", want " + e.value.str());
  }
  return bad;
}

// Generalized derivative ν′/g′ iterated d times.
inline RF gdw(RF nu, const RF &g, int d = 1) {
  for (int k = 0; k < d; ++k) nu = nu.derivative() / g.derivative();
  return nu;
}

inline std::vector<Fixture> displayed_fixtures() {
  std::vector<Fixture> out;
  const RF half(Q(1, 2));
  const LambdaPoly O, I(1);
  auto l = [](const RF &c, int k = 0) { return LambdaPoly::monomial(c, k); };

  {
    RF g = P("(z^2+1)/(z-2)");
    out.push_back({"(1,1,1) matrix", build({1, 1, 1}, data({{"g", "(z^2+1)/(z-2)"}})),
                   full_matrix({{I, l(-g), l(-half * g * g)}, {O, I, l(g)}, {O, O, I}})});
  }
  {
    RF g = P("z^3-i");
    out.push_back({"(2,2) matrix", build({2, 2}, data({{"g", "z^3-i"}})),
                   full_matrix({{I, O, l(-g), O}, {O, I, O, l(g)}, {O, O, I, O}, {O, O, O, I}})});
  }
  {
    RF g1 = P("z^2"), g2 = P("1/(z+1)");
    out.push_back({"(1,2,1) matrix", build({1, 2, 1}, data({{"g1", "z^2"}, {"g2", "1/(z+1)"}})),
                   full_matrix({{I, l(-g1), l(-g2), l(-g1 * g2)},
                                {O, I, O, l(g2)},
                                {O, O, I, l(g1)},
                                {O, O, O, I}})});
  }
  {
    RF g = P("z^2"), nu = P("z^5+z"), s = P("z-3");
    RF n1 = gdw(nu, g);
    out.push_back({"(2,1,2) matrix",
                   build({2, 1, 2}, data({{"g", "z^2"}, {"nu", "z^5+z"}, {"sigma", "z-3"}})),
                   full_matrix({{I, O, l(-n1), l(nu) + l(s, 1), l(-half * n1 * n1)},
                                {O, I, l(g), l(-half * g * g), l(-nu + g * n1) + l(-s, 1)},
                                {O, O, I, l(-g), l(n1)},
                                {O, O, O, I, O},
                                {O, O, O, O, I}})});
  }
  {
    RF v1 = P("z"), v2 = P("z^2-i"), v3 = P("1/(z-1)");
    out.push_back({"(1,3,1) matrix",
                   build({1, 3, 1}, data({{"nu1", "z"}, {"nu2", "z^2-i"}, {"nu3", "1/(z-1)"}})),
                   full_matrix({{I, l(v1), l(v2), l(v3), l(-v1 * v3 - half * v2 * v2)},
                                {O, I, O, O, l(-v3)},
                                {O, O, I, O, l(-v2)},
                                {O, O, O, I, l(-v1)},
                                {O, O, O, O, I}})});
  }
  auto eq52 = [&](const RF &g, const RF &n) {
    RF d1 = gdw(n, g), d2 = gdw(n, g, 2);
    return std::vector<std::vector<LambdaPoly>>{
        {I, l(-d2), l(d1), l(n), l(n * d2 - half * d1 * d1)},
        {O, I, l(-g), l(-half * g * g), l(-n + g * d1 - half * g * g * d2)},
        {O, O, I, l(g), l(-d1 + g * d2)},
        {O, O, O, I, l(d2)},
        {O, O, O, O, I}};
  };
  {
    RF g = P("z^2+z"), n = P("z^4");
    out.push_back({"(1,1,1,1,1) matrix", build({1, 1, 1, 1, 1}, data({{"g", "z^2+z"}, {"nu1", "z^4"}})),
                   full_matrix(eq52(g, n))});
  }
  {
    RF g = P("z^2+z"), n = P("z^4"), v2 = P("z^3"), v3 = P("z+1");
    auto rows = eq52(g, n);
    std::vector<Expect> e;
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) {
        if (i == 1 && j == 5) continue;
        e.push_back({i, j, -1, rows[i - 1][j - 1]});
      }
    e.push_back({1, 5, 0, rows[0][4]});
    auto at = [&e](int i, int j) -> LambdaPoly & {
      for (Expect &x : e)
        if (x.i == i && x.j == j) return x.value;
      throw std::logic_error("no such entry");
    };
    RF d = gdw(v2, g);
    at(1, 3) += l(d, 1);
    at(1, 4) += l(v2, 1) + l(v3, 2);
    at(2, 5) += l(-(v2 - g * d), 1) + l(-v3, 2);
    at(3, 5) += l(-d, 1);
    out.push_back({"(1,1,1,1,1) with lambda terms",
                   build({1, 1, 1, 1, 1},
                         data({{"g", "z^2+z"}, {"nu1", "z^4"}, {"nu2", "z^3"}, {"nu3", "z+1"}})),
                   e});
  }
  {
    RF g = P("z"), h = P("z^2"), k = P("z^3");
    out.push_back({"(3,3) matrix", build({3, 3}, data({{"g", "z"}, {"h", "z^2"}, {"k", "z^3"}})),
                   full_matrix({{I, O, O, l(-h), l(-k), O},
                                {O, I, O, l(-g), O, l(k)},
                                {O, O, I, O, l(g), l(h)},
                                {O, O, O, I, O, O},
                                {O, O, O, O, I, O},
                                {O, O, O, O, O, I}})});
  }
  {
    RF g1 = P("z^2"), g2 = P("z"), t1 = P("z^3"), t2 = P("1/(z+2)"), v3 = P("z");
    std::vector<std::vector<LambdaPoly>> rows{
        {I, O, l(t1), l((t2.derivative() - g2.derivative() * t1) / g1.derivative()), l(t2) + l(v3, 1)},
        {O, I, l(-g1), l(-g2), l(-g1 * g2)},
        {O, O, I, O, l(g2)},
        {O, O, O, I, l(g1)},
        {O, O, O, O, I},
        {O, O, O, O, O}};
    std::vector<Expect> e = full_matrix(rows);
    e.push_back({5, 6, -1, O});
    e.push_back({6, 6, -1, I});
    out.push_back({"(2,2,2) matrix",
                   build({2, 2, 2}, data({{"g1", "z^2"}, {"g2", "z"}, {"nu1", "z^3"}, {"nu2", "1/(z+2)"}, {"nu3", "z"}})),
                   e});
  }
  {
    RF g = P("z^2+1"), v1 = P("z^3"), v2 = P("z"), v3 = P("1"), v4 = P("z^2");
    RF d1 = gdw(v1, g), d2 = gdw(v2, g);
    RF z0 = d1 * v2 - d2 * v1, z1 = -d1 * v4 - d2 * v3;
    out.push_back({"(1,2,2,1) matrix",
                   build({1, 2, 2, 1}, data({{"g", "z^2+1"}, {"nu1", "z^3"}, {"nu2", "z"}, {"nu3", "1"}, {"nu4", "z^2"}})),
                   full_matrix({{I, l(d1), l(d2), l(v1) + l(v3, 1), l(-v2) + l(v4, 1), l(z0) + l(z1, 1)},
                                {O, I, O, l(g), O, l(-g * d2 + v2) + l(-v4, 1)},
                                {O, O, I, O, l(-g), l(g * d1 - v1) + l(-v3, 1)},
                                {O, O, O, I, O, l(-d2)},
                                {O, O, O, O, I, l(-d1)},
                                {O, O, O, O, O, I}})});
  }
  {
    RF g1 = P("z^2+z"), h1 = P("z^3"), h2 = P("z^4+z^2");
    RF a = gdw(h1, g1), b = gdw(h2, g1);
    RF g2 = gdw(h2, g1, 2) / gdw(h1, g1, 2);
    out.push_back({"(1,1,2,1,1) matrix",
                   build({1, 1, 2, 1, 1}, data({{"g1", "z^2+z"}, {"h1", "z^3"}, {"h2", "z^4+z^2"}})),
                   full_matrix({{I, l(-a), l(h1), l(g2 * a - b), l(g2 * h1 - h2), l(h1 * b - h2 * a)},
                                {O, I, l(-g1), l(-g2), l(-g1 * g2), l(h2 - g1 * b)},
                                {O, O, I, O, l(g2), l(b)},
                                {O, O, O, I, l(g1), l(-h1 + g1 * a)},
                                {O, O, O, O, I, l(a)},
                                {O, O, O, O, O, I}})});
  }
  {
    // Generalized derivatives along the superdiagonal, computed independently.
    const int m = 3;
    std::vector<RF> mu{P("z^2+z"), P("z^5"), P("z^4-z")};
    std::vector<RF> rho(2 * m + 1);
    std::vector<std::vector<RF>> der(m + 1);
    for (int i = 1; i <= m; ++i) {
      der[i].push_back(mu[i - 1]);
      for (int j = 1; j <= 2 * i - 2; ++j)
        der[i].push_back(der[i].back().derivative() / rho[m + i - j].derivative());
      rho[m - i + 1] = der[i].back();
      rho[m + i] = -der[i].back();
    }
    std::vector<Expect> e;
    for (int i = 1; i <= 7; ++i)
      for (int j = 1; j <= 7; ++j) {
        if (j < i) e.push_back({i, j, -1, O});
        if (j == i) e.push_back({i, j, -1, I});
        if (j > i && i + j <= 2 * m + 1) e.push_back({i, j, -1, l(der[m + 1 - i][2 * m + 1 - i - j])});
      }
    e.push_back({4, 5, -1, l(-mu[0])});
    e.push_back({3, 5, -1, l(-half * mu[0] * mu[0])});
    e.push_back({5, 6, -1, l(-der[2][2])});
    e.push_back({6, 7, -1, l(-der[3][4])});
    FreeData d;
    d.params = {{"mu1", mu[0]}, {"mu2", mu[1]}, {"mu3", mu[2]}};
    out.push_back({"7x7 type (1,...,1) matrix", build(std::vector<int>(7, 1), d), e});
  }
  {
    RF m3 = P("z^2+1");
    std::vector<std::vector<LambdaPoly>> rows(7, std::vector<LambdaPoly>(7));
    for (int i = 0; i < 7; ++i) rows[i][i] = I;
    rows[0][1] = l(m3);
    rows[5][6] = l(-m3);
    out.push_back({"degenerate 7x7 matrix, mu2 constant", degenerate_fixture_left(m3), full_matrix(rows)});
  }
  {
    RF m2 = P("z^2"), m3 = P("z^3");
    RF d = m3.derivative() / m2.derivative();
    std::vector<std::vector<LambdaPoly>> rows(7, std::vector<LambdaPoly>(7));
    for (int i = 0; i < 7; ++i) rows[i][i] = I;
    rows[0][1] = l(d);
    rows[0][2] = l(m3);
    rows[1][2] = l(m2);
    rows[4][5] = l(-m2);
    rows[4][6] = l(m2 * d - m3);
    rows[5][6] = l(-d);
    out.push_back({"degenerate 7x7 matrix, mu2 non-constant", degenerate_fixture_right(m2, m3),
                   full_matrix(rows)});
  }
  return out;
}

}  // namespace uniton::testing
