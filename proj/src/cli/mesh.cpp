#include "uniton/mesh.hpp"

#include <cmath>
#include <iomanip>
#include <optional>

#include "uniton/errors.hpp"

namespace uniton {

using cd = std::complex<double>;

std::vector<cd> to_euclidean(const std::vector<cd> &v) {
  std::size_t n = v.size();
  const double s = 1 / std::sqrt(2.0);
  std::vector<cd> x(n);
  for (std::size_t j = 0; j < n / 2; ++j) {
    std::size_t jb = n - 1 - j;
    x[j] = s * (v[j] + v[jb]);
    x[jb] = cd(0, 1) * s * (v[j] - v[jb]);
  }
  if (n % 2 == 1) x[n / 2] = v[n / 2];
  return x;
}

namespace {

struct FloatPoly {
  std::vector<cd> c;
  cd eval(cd z) const {
    cd acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
  double magnitude(double r) const {
    double acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
  }
};

FloatPoly to_float(const Polynomial &p) {
  FloatPoly f;
  for (const GR &x : p.coeffs()) f.c.push_back(x.to_complex());
  return f;
}

struct FloatCurve {
  std::vector<FloatPoly> num, den;

  // Null-basis value, or nothing when a denominator nearly vanishes.
  std::optional<std::vector<cd>> eval(cd z) const {
    std::vector<cd> v;
    for (std::size_t k = 0; k < num.size(); ++k) {
      cd d = den[k].eval(z);
      if (std::abs(d) <= 1e-8 * den[k].magnitude(std::abs(z))) return std::nullopt;
      cd x = num[k].eval(z) / d;
      if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return std::nullopt;
      v.push_back(x);
    }
    return v;
  }
};

using Vec4 = std::array<double, 4>;

double dot(const Vec4 &a, const Vec4 &b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

}  // namespace

Mesh sample_mesh(const NullCurve &curve, const MeshGrid &grid) {
  if (grid.res < 2) throw SchemaError("mesh resolution must be at least 2");
  if (!std::isfinite(grid.x0) || !std::isfinite(grid.x1) || !std::isfinite(grid.y0) ||
      !std::isfinite(grid.y1))
    throw SchemaError("grid bounds must be finite");
  FloatCurve fc;
  for (const RF &x : curve.components) {
    fc.num.push_back(to_float(x.num()));
    fc.den.push_back(to_float(x.den()));
  }
  Mesh m;
  m.dim = static_cast<int>(curve.components.size());
  m.grid = grid;
  int N = grid.res;
  double hx = (grid.x1 - grid.x0) / (N - 1), hy = (grid.y1 - grid.y0) / (N - 1);
  m.index.assign(static_cast<std::size_t>(N) * N, -1);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) {
      cd z(grid.x0 + i * hx, grid.y0 + j * hy);
      auto v = fc.eval(z);
      if (!v) {
        ++m.stats.filtered;
        continue;
      }
      auto x = to_euclidean(*v);
      Vec4 p{0, 0, 0, 0};
      for (std::size_t k = 0; k < x.size(); ++k) p[k] = x[k].real();
      m.index[static_cast<std::size_t>(j) * N + i] = static_cast<int>(m.vertices.size());
      m.vertices.push_back(p);
    }
  if (m.vertices.empty()) throw EmptyGrid("every grid sample lies at a pole");
  auto at = [&](int i, int j) { return m.index[static_cast<std::size_t>(j) * N + i]; };
  for (int j = 0; j + 1 < N; ++j)
    for (int i = 0; i + 1 < N; ++i) {
      std::array<int, 4> f{at(i, j), at(i + 1, j), at(i + 1, j + 1), at(i, j + 1)};
      if (f[0] >= 0 && f[1] >= 0 && f[2] >= 0 && f[3] >= 0) m.faces.push_back(f);
    }
  MeshStats &st = m.stats;
  double csum = 0, osum = 0, lsum = 0;
  for (int j = 1; j + 1 < N; ++j)
    for (int i = 1; i + 1 < N; ++i) {
      int c = at(i, j), e = at(i + 1, j), w = at(i - 1, j), n = at(i, j + 1), s = at(i, j - 1);
      if (c < 0 || e < 0 || w < 0 || n < 0 || s < 0) continue;
      Vec4 sx, sy, lap;
      for (int k = 0; k < 4; ++k) {
        double C = m.vertices[c][k], E = m.vertices[e][k], W = m.vertices[w][k];
        double Nn = m.vertices[n][k], S = m.vertices[s][k];
        sx[k] = (E - W) / (2 * hx);
        sy[k] = (Nn - S) / (2 * hy);
        lap[k] = (E - 2 * C + W) / (hx * hx) + (Nn - 2 * C + S) / (hy * hy);
      }
      double ee = dot(sx, sx), gg = dot(sy, sy), ff = dot(sx, sy);
      double scale = ee + gg;
      if (!(scale > 0)) continue;
      double conf = std::abs(ee - gg) / scale, orth = 2 * std::abs(ff) / scale;
      double lr = std::sqrt(dot(lap, lap)) / std::sqrt(scale / 2);
      st.conformality_max = std::max(st.conformality_max, conf);
      st.orthogonality_max = std::max(st.orthogonality_max, orth);
      st.laplacian_max = std::max(st.laplacian_max, lr);
      csum += conf;
      osum += orth;
      lsum += lr;
      ++st.interior;
    }
  if (st.interior > 0) {
    st.conformality_mean = csum / st.interior;
    st.orthogonality_mean = osum / st.interior;
    st.laplacian_mean = lsum / st.interior;
  }
  return m;
}

void write_obj(const Mesh &m, std::ostream &os) {
  os << std::setprecision(17);
  for (const auto &v : m.vertices) os << "v " << v[0] << ' ' << v[1] << ' ' << v[2] << '\n';
  for (const auto &f : m.faces)
    os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << ' ' << f[3] + 1 << '\n';
}

void write_csv(const Mesh &m, std::ostream &os) {
  os << std::setprecision(17);
  for (int k = 0; k < m.dim; ++k) os << (k ? ",x" : "x") << k + 1;
  os << '\n';
  for (const auto &v : m.vertices) {
    for (int k = 0; k < m.dim; ++k) os << (k ? "," : "") << v[k];
    os << '\n';
  }
}

nlohmann::json mesh_stats_json(const Mesh &m) {
  const MeshStats &s = m.stats;
  return {{"resolution", m.grid.res},
          {"bounds", {m.grid.x0, m.grid.x1, m.grid.y0, m.grid.y1}},
          {"vertices", m.vertices.size()},
          {"faces", m.faces.size()},
          {"filtered", s.filtered},
          {"interior_stencils", s.interior},
          {"conformality_max", s.conformality_max},
          {"conformality_mean", s.conformality_mean},
          {"orthogonality_max", s.orthogonality_max},
          {"orthogonality_mean", s.orthogonality_mean},
          {"laplacian_max", s.laplacian_max},
          {"laplacian_mean", s.laplacian_mean}};
}

nlohmann::json mesh_json(const Mesh &m) {
  nlohmann::json verts = nlohmann::json::array(), faces = nlohmann::json::array();
  for (const auto &v : m.vertices) {
    nlohmann::json row = nlohmann::json::array();
    for (int k = 0; k < m.dim; ++k) row.push_back(v[k]);
    verts.push_back(row);
  }
  for (const auto &f : m.faces) faces.push_back({f[0], f[1], f[2], f[3]});
  return {{"dim", m.dim}, {"vertices", verts}, {"faces", faces}, {"stats", mesh_stats_json(m)}};
}

}  // namespace uniton
