#pragma once
// The cut-and-project scheme: Minkowski lift of the return module, lattice
// covolume, window clouds (projected control points or chaos game), density
// bookkeeping, box counting and the Fourier module.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "caspr/inflation.hpp"
#include "caspr/ring.hpp"
#include "caspr/zmodule.hpp"

namespace caspr {

using Vec4 = std::array<double, 4>;

// (Re x, Im x, Re x*, Im x*) with x* the internal-space image
Vec4 lift(const RingElement& x);
Vec4 lift(const IntPt& x);

struct Lattice4 {
  std::array<RingElement, 4> generators;  // exact source elements
  std::array<Vec4, 4> basis;              // their lifts
  double covolume_numeric() const;        // |det| of the basis
  // squared covolume from the exact Gram matrix of the trace form
  Rational covolume_squared() const;
};
Lattice4 lattice_of(const ZModule4& m);
Lattice4 return_lattice();  // lift of L

struct CovolumeReport {
  Rational v_squared;         // exact, from the Gram matrix
  long v = 0;                 // its integer square root when it is a square
  double numeric = 0;         // determinant of the lifted basis
  Rational order_v_squared;   // same for the order
  long order_v = 0;
  Integer index;              // [O : L]
  Rational factored;          // 3/4 * |2 sqrt 15|^2 * 81
};
CovolumeReport covolume_report();

// ---- window clouds ----
struct CloudPoint {
  double x = 0, y = 0;  // internal-space coordinates
  int type = 0;         // cluster index 0..4
  int orientation = 0;  // 0..5
};

struct WindowCloud {
  std::string method;  // "project" or "chaos"
  std::uint64_t seed = 0;
  std::vector<CloudPoint> points;
};

// internal-space images of all control points of an even-parity patch
WindowCloud window_from_patch(const Patch& p);
// Graph-directed IFS on (tile type, rotation) states driven by the
// supertile rule; deterministic for a given seed.
WindowCloud chaos_game(std::size_t n_points, std::uint64_t seed, std::size_t burn_in = 64);

void write_cloud(std::ostream& os, const WindowCloud& c);
WindowCloud read_cloud(std::istream& is);  // throws DataFileError
void save_cloud(const std::string& path, const WindowCloud& c);
WindowCloud load_cloud(const std::string& path);

// per-cluster fractions of a cloud, and the expected ones from f
std::array<double, 5> cloud_fractions(const WindowCloud& c);
std::array<RealQuadratic, 5> expected_cluster_fractions();

// ---- densities ----
// A value c * sqrt(3) with c in Q(sqrt 15).
struct Sqrt3Value {
  RealQuadratic coeff;
  double value() const;
  std::string str() const;
};

struct DensityReport {
  Rational covolume;          // V
  Sqrt3Value window_area;     // A
  Sqrt3Value rho1;            // A / V
  Sqrt3Value average_area;    // f . areas
  RealQuadratic representative_frequency;  // sum of f over cluster representatives
  Sqrt3Value rho2;            // representative frequency / average area
  RealQuadratic abs2_d_physical;  // |d|^2 in physical space
  RealQuadratic abs2_d_internal;  // |d*|^2 in internal space
  bool rho_equal = false;
  std::string str() const;
};
Sqrt3Value window_area();
DensityReport density_report();

struct EmpiricalDensity {
  std::size_t count = 0;
  double radius = 0;
  double density = 0;
};
// control points per unit area inside the largest origin-free disc around
// the patch centroid that stays inside the patch
EmpiricalDensity empirical_density(const Patch& p);

// ---- fractal dimension ----
double hausdorff_dimension();  // log(5 + 2 sqrt 6) / log(4 + sqrt 15)

struct BoxCount {
  double dimension = 0;
  double r2 = 0;
  std::vector<double> eps;
  std::vector<std::size_t> counts;
};
// least-squares slope of log N(eps) against log(1/eps) over dyadic scales;
// scales stop before boxes hold fewer than `min_per_box` points on average
BoxCount box_counting(const std::vector<std::array<double, 2>>& pts, int k_min = 2, double min_per_box = 8.0);
// least-squares fit of the dimension and r^2 from b.eps and b.counts
void fit_dimension(BoxCount& b);
// Box counting on the subwindow boundaries. At each dyadic scale a grid cell
// is a boundary cell when it holds points and one of its eight neighbours is
// empty or holds another subwindow (cluster and orientation). Scales are used
// while at least `min_cells` cells are occupied and they hold at least
// `min_per_cell` points on average.
BoxCount boundary_box_counting(const WindowCloud& c, std::size_t min_cells = 2000, double min_per_cell = 16.0);

// ---- cloud statistics ----
double cloud_diameter(const WindowCloud& c);
double hausdorff_distance(const WindowCloud& a, const WindowCloud& b);
// fraction of occupied grid cells that hold points of two or more subwindows
double double_occupancy(const WindowCloud& c, double cell);

// ---- Fourier module ----
struct FourierModule {
  ZModule4 module;                   // recovered from the dual lattice
  bool equals_scaled_l = false;      // == (i sqrt5 / 135) L
  bool equals_trace_dual = false;    // == dual of L under the trace form
  std::vector<RingElement> points;   // enumerated elements
  bool closed_under_xi = false;
};
// Dual lattice of the lifted return module, pulled back to K and compared
// exactly; then elements y with |y| <= radius and |y*| <= internal_radius.
FourierModule fourier_module(double radius, double internal_radius);

}  // namespace caspr
