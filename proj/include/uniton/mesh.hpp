#pragma once

#include <array>
#include <complex>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "uniton/nullcurve.hpp"

namespace uniton {

// Euclidean coordinates of a null-basis vector: x_j = (v_j + v_j̄)/√2,
// x_j̄ = i(v_j − v_j̄)/√2 for j < j̄, and x_j = v_j in the middle.
std::vector<std::complex<double>> to_euclidean(const std::vector<std::complex<double>> &v);

struct MeshGrid {
  double x0 = -1, x1 = 1, y0 = -1, y1 = 1;
  int res = 64;  // samples per side
};

struct MeshStats {
  int interior = 0;              // stencils evaluated
  int filtered = 0;              // samples dropped near poles
  double conformality_max = 0;   // |⟨S_x,S_x⟩ − ⟨S_y,S_y⟩| / (|S_x|² + |S_y|²)
  double orthogonality_max = 0;  // 2|⟨S_x,S_y⟩| / (|S_x|² + |S_y|²)
  double laplacian_max = 0;      // |ΔS| / |S_x|_rms
  double conformality_mean = 0, orthogonality_mean = 0, laplacian_mean = 0;
};

struct Mesh {
  int dim = 3;
  MeshGrid grid;
  std::vector<std::array<double, 4>> vertices;
  std::vector<int> index;  // grid sample (row-major, y outer) → vertex or −1
  std::vector<std::array<int, 4>> faces;  // 0-based, counterclockwise
  MeshStats stats;
};

// Samples Re χ on the grid; throws EmptyGrid when every sample is filtered
// and SchemaError for a grid with fewer than 2 samples per side.
Mesh sample_mesh(const NullCurve &curve, const MeshGrid &grid);

void write_obj(const Mesh &m, std::ostream &os);
void write_csv(const Mesh &m, std::ostream &os);
nlohmann::json mesh_stats_json(const Mesh &m);
nlohmann::json mesh_json(const Mesh &m);

}  // namespace uniton
