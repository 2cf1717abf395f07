#pragma once
// Geometry of the nine collared meta-tiles: exact edge vectors, the
// combinatorial hexagons, polygons and areas, control points, and the
// 14-edge Tile(a, b) family.

#include <array>
#include <string>
#include <vector>

#include "caspr/complex_data.hpp"
#include "caspr/ring.hpp"

namespace caspr {

enum Tile : int { Gamma = 0, Delta, Theta, Lambda, Xi, Pi, Sigma, Phi, Psi };
enum Edge : int { Alpha = 0, Beta, GammaE, DeltaE, Epsilon, Zeta, ThetaE, Eta };
enum class Hand : int { Right = 0, Left = 1 };

int tile_from_name(const std::string& s);  // accepts names or symbols; -1 if unknown

// ---- edges ----
const RingElement& edge_base(int type);
// xi^m * e_type
RingElement edge_vector(int type, int m);
struct EdgeInfo {
  int orientations;  // 6, or 3 for the undirected eta
  bool directed;
};
EdgeInfo edge_info(int type);

// ---- combinatorial hexagons ----
struct SideLabel {
  int edge = 0;  // edge type
  int m = 0;     // rotation power of the edge chain
  int sign = 1;  // +1 if traversed along the edge's direction
};

enum class VertexKind : int { P = 0, Q = 1, S = 2 };
struct VertexLabel {
  VertexKind kind = VertexKind::S;
  int rot = 0;  // mod 2 for p, q and mod 6 for s
  bool operator==(const VertexLabel& o) const { return kind == o.kind && rot == o.rot; }
  std::string str() const;
};

struct CombHexagon {
  int tile = 0;
  std::array<SideLabel, 6> sides;       // counterclockwise; side k points along xi^(k+3)
  std::array<VertexLabel, 6> vertices;  // vertex k = start of side k
};

// Start/end vertex labels of edge type `type` at rotation 0, read off d1.
std::pair<VertexLabel, VertexLabel> edge_endpoints(int type);
VertexLabel rotate_label(const VertexLabel& v, int m);

const std::array<CombHexagon, 9>& comb_hexagons();
// Each side's end vertex equals the next side's start vertex, for every tile.
bool vertex_labels_consistent();
// Boundary chain of a face: sum of sign * r^m * edge, per edge type.
std::vector<GRPoly> face_boundary_chain(int tile);

// ---- geometric tiles ----
struct GeomTile {
  int tile = 0;
  int rot = 0;
  Hand hand = Hand::Right;
  std::vector<RingElement> vertices;  // counterclockwise
};

// vertices of the tile in its own frame: vertex 0 at the origin
const std::vector<RingElement>& tile_vertices(int tile);
GeomTile tile_polygon(int tile, int rot = 0, Hand hand = Hand::Right);
GeomTile mirrored(const GeomTile& t);
// Signed area as a coefficient of sqrt(3) (positive for counterclockwise).
RealQuadratic signed_area(const std::vector<RingElement>& poly);
RealQuadratic area(const GeomTile& t);
RealQuadratic tile_area(int tile);
bool is_closed(const std::vector<RingElement>& poly);
bool is_simple(const std::vector<RingElement>& poly);
bool is_simple(const std::vector<cplx>& poly);

// ---- clusters and control points ----
inline constexpr int kNumClusters = 5;
// cluster index (0: Gamma+Delta+Sigma, 1: Lambda+Theta, 2: Pi+Xi, 3: Phi, 4: Psi)
int cluster_of(int tile);
// the tile carrying the cluster's control point (Gamma, Lambda, Pi, Phi, Psi)
int cluster_representative(int cluster);
bool is_representative(int tile);
const std::vector<std::string>& cluster_names();
// control point offset in the representative's frame
const RingElement& control_offset(int cluster);
RingElement control_point(int tile, int rot, const RingElement& translation);

struct PartnerPlacement {
  int tile, drot;
  RingElement offset;  // in the representative's frame
};
// where the other members of a cluster sit relative to the representative
std::vector<PartnerPlacement> cluster_partners(int cluster);

// ---- Tile(a, b) ----
// 14 edges: eight a*xi^k and six i*b*xi^k in the boundary order of the Hat family.
struct TileABEdge {
  bool is_a;
  int k;
};
const std::array<TileABEdge, 14>& tile_ab_sequence();
std::vector<cplx> build_tile_ab(cplx a, cplx b);
double polygon_area(const std::vector<cplx>& poly);

}  // namespace caspr
