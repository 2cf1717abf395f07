#pragma once
// Z-linear reprojections of CASPr vertex positions onto hexagonal lattices:
// the regular-hexagon map and the meta-tile map, with the local vertex
// identifications that turn a reprojected patch into its target tiling.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "caspr/inflation.hpp"
#include "caspr/ring.hpp"

namespace caspr {

// Eisenstein integer a + b*xi
struct HexCoord {
  std::int64_t a = 0, b = 0;
  auto operator<=>(const HexCoord&) const = default;
};
HexCoord operator+(const HexCoord& x, const HexCoord& y);
HexCoord operator-(const HexCoord& x, const HexCoord& y);
HexCoord xi_times(int m, const HexCoord& x);
cplx to_complex(const HexCoord& x);  // unit lattice, xi = exp(i pi / 3)

// index 0..9 of a vertex label: p, rp, q, rq, s, rs, ..., r^5 s
int vertex_label_index(const VertexLabel& v);

struct ReprojectionMap {
  std::string name;
  double scale = 1;                          // length of one lattice step
  std::array<HexCoord, 4> basis_images{};    // images of 1, xi, lam, lam*xi
  std::array<HexCoord, 10> vertex_shift{};   // local shift per vertex label
  std::array<HexCoord, 8> slot_targets{};    // target of each edge type at rotation 0
  // solving the 45 (edge type, rotation) constraints
  std::size_t constraints = 0;
  std::size_t rank = 0;
  std::size_t unknowns = 0;
  bool consistent = false;
  std::vector<RingElement> kernel_on_l;  // Z-basis of the kernel restricted to L

  HexCoord apply(const IntPt& x) const;  // linear part only
  HexCoord apply(const RingElement& x) const;  // x must be integral
  // image of a vertex: linear part plus the shift of its label
  HexCoord vertex(const IntPt& x, const VertexLabel& label) const;
};

// Regular hexagons of side 2 sqrt 15, whose area 90 sqrt 3 equals the
// average tile area.
ReprojectionMap build_hex_reprojection();
// The hexagon map of the inflated tiling pulled back by 1/lam: each edge
// u + v*lam goes to u + 8v, on a lattice of step 2 sqrt 15 / lam.
ReprojectionMap build_metatile_reprojection();
ReprojectionMap reprojection_by_name(const std::string& name);  // "hex" or "metatile"

struct TaggedPoint {
  HexCoord pos;
  int cluster = 0;
  int rot = 0;
  auto operator<=>(const TaggedPoint&) const = default;
};

struct DeformedPatch {
  std::string projection;
  double scale = 1;
  std::vector<Placement> tiles;                       // original combinatorics
  std::vector<std::array<HexCoord, 6>> vertices;      // linear images of tile vertices
  std::vector<std::array<HexCoord, 6>> target;        // after the local vertex shifts
  std::vector<TaggedPoint> control_points;            // linear images of the control points
};

// requires an even-parity patch
DeformedPatch reproject(const Patch& p, const ReprojectionMap& m);

// control points of the target tiling, read off each target tile's type,
// rotation and first vertex only
std::vector<TaggedPoint> target_control_points(const DeformedPatch& d, const ReprojectionMap& m);

struct ReprojectionCheck {
  bool consistent = false;         // the slot constraints have an integral solution
  bool faces_close = false;        // every hexagon's mapped sides sum to zero
  bool regular_hexagons = false;   // target sides are unit lattice steps (hex map)
  bool edges_unique = false;       // no directed target edge occurs twice
  bool control_points_match = false;
  std::size_t kernel_rank = 0;
  double mean_displacement = 0;    // mean |mapped vertex - CASPr vertex|
  bool ok() const { return consistent && faces_close && edges_unique && control_points_match; }
};
ReprojectionCheck check_reprojection(const Patch& p, const ReprojectionMap& m);

// A raw real-linear projection given by the complex images of 1, xi, lam, lam*xi.
struct LinearProjection {
  std::array<cplx, 4> images{};
  cplx apply(const IntPt& x) const;
};
LinearProjection caspr_projection();  // the physical embedding itself
LinearProjection as_linear(const ReprojectionMap& m);

}  // namespace caspr
