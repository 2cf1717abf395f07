#pragma once
// The substitution engine: half-step inflation and its square, patch
// generation, abelianization against the stored substitution matrices,
// frequencies and structural checks.

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "caspr/groupring.hpp"
#include "caspr/ring.hpp"
#include "caspr/tiles.hpp"

namespace caspr {

// ---- integral points of the order, with overflow-checked arithmetic ----
using IntPt = std::array<std::int64_t, 4>;

IntPt to_intpt(const RingElement& x);  // throws if x is not integral or out of range
RingElement to_ring(const IntPt& p);
IntPt add(const IntPt& a, const IntPt& b);
IntPt sub(const IntPt& a, const IntPt& b);
IntPt mul(const IntPt& a, const IntPt& b);
IntPt conj(const IntPt& a);
IntPt xi_pow_times(int m, const IntPt& a);
// mu * conj(a); throws if the result is not integral
IntPt half_step(const IntPt& a);
cplx embed(const IntPt& a);
cplx embed_internal(const IntPt& a);

// ---- placements and patches ----
struct Placement {
  int tile = 0;
  int rot = 0;
  Hand hand = Hand::Right;
  IntPt pos{0, 0, 0, 0};
  auto operator<=>(const Placement&) const = default;
};

GeomTile placement_polygon(const Placement& p);
std::vector<cplx> placement_polygon_embedded(const Placement& p);
RingElement placement_control_point(const Placement& p);  // only for representatives

struct Patch {
  std::vector<Placement> tiles;
  int parity = 0;  // number of half-steps mod 2
  std::string projection = "caspr";
  int seed = -1;   // seed tile, when generated from one
  int steps = -1;  // half-steps from the seed
  void canonicalize();  // sort into the byte-stable order
};

Patch seed_patch(int tile);
Patch inflate_once(const Patch& p);
Patch inflate_squared(const Patch& p);  // requires even parity
// Deterministic patch after `steps` half-steps from a single seed tile at the
// origin; throws std::length_error beyond the tile budget.
Patch generate_patch(int seed, int steps, std::size_t tile_budget = 20'000'000);
// Visits every tile of generate_patch(seed, steps) without storing the patch.
void for_each_tile(int seed, int steps, const std::function<void(const Placement&)>& fn);
// tiles produced by `steps` half-steps from one seed, from the matrix powers
std::uint64_t predicted_tile_count(int seed, int steps);

std::array<std::uint64_t, 9> type_counts(const Patch& p);

// ---- abelianization ----
struct AbelianReport {
  GroupRingMatrix face, edge;
  bool face_matches = false, edge_matches = false;
  bool edge_words_consistent = false;  // every occurrence of a parent edge type gives the same word
  bool corners_match = false;          // supertile corners are mu * conj(parent vertices)
  bool outline_simple = false;         // the children's union is bounded by one simple curve
  bool areas_match = false;            // that curve encloses exactly the children's total area
  std::vector<std::string> diffs;      // per-entry mismatch report
  bool ok() const {
    return face_matches && edge_matches && edge_words_consistent && corners_match && outline_simple && areas_match;
  }
};
AbelianReport abelianize();

// ---- edge eigen-identity ----
struct EigenCheck {
  std::vector<RingElement> residual;  // exact, one per edge type
  double numeric_residual = 0;
  double perturbed_residual = 0;  // negative control with a displaced alpha
  bool exact_zero() const;
};
EigenCheck edge_eigencheck();

// ---- frequencies ----
// right Perron-Frobenius vector of M2*(1), normalized to sum 1
std::array<RealQuadratic, 9> frequency_vector();
// left Perron-Frobenius vector, normalized to Gamma = 1
std::array<RealQuadratic, 9> left_pf_vector();
bool is_eigenvector(const std::array<RealQuadratic, 9>& v, bool left);

// ---- clusters ----
// Clusters can straddle supertile boundaries, so a finite patch may cut a
// pair on its rim. Every broken cluster must touch the rim.
struct ClusterCheck {
  std::array<std::uint64_t, 9> counts{};
  bool gamma_delta_sigma_equal = false;
  bool lambda_theta_equal = false;
  std::int64_t xi_minus_pi = 0;
  std::size_t broken = 0;          // members whose cluster mates are missing
  std::size_t broken_interior = 0;  // of those, the ones not on the rim
  bool ok() const { return gamma_delta_sigma_equal && lambda_theta_equal && broken_interior == 0; }
};
ClusterCheck cluster_check(const Patch& p);

// ---- disjointness ----
// Tile interiors are pairwise disjoint when every directed edge occurs once,
// the unmatched edges form a single simple counterclockwise curve, and that
// curve encloses exactly the total tile area. Random interior points of
// tiles are cross-checked against all other tiles as well.
struct OverlapCheck {
  bool directed_edges_unique = false;
  bool boundary_simple = false;
  bool area_accounting = false;
  RealQuadratic total_area;  // coefficient of sqrt(3)
  std::size_t samples = 0;
  std::size_t violations = 0;
  bool ok() const { return directed_edges_unique && boundary_simple && area_accounting && violations == 0; }
};
OverlapCheck overlap_check(const Patch& p, std::size_t samples, std::uint64_t rng_seed);
// unmatched directed edges of a patch, chained into closed curves
std::vector<std::vector<RingElement>> patch_boundary(const Patch& p);

// ---- border forcing ----
struct BorderForceReport {
  // distinct two-sided environments per edge type, at depth 0, 1, 2
  std::array<std::array<std::size_t, 3>, 8> environments{};
  std::array<std::size_t, 8> occurrences{};
  std::string str() const;
};
BorderForceReport border_force_check(const Patch& p);

}  // namespace caspr
