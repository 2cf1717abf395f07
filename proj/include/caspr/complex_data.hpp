#pragma once
// The four constant matrices of the Anderson-Putnam complex of the collared
// meta-tiles and their substitution.
//
// Orders: vertices (p, q, s); edges (alpha, beta, gamma, delta, epsilon, zeta,
// theta, eta); faces (Gamma, Delta, Theta, Lambda, Xi, Pi, Sigma, Phi, Psi).

#include <cstdint>
#include <string>
#include <vector>

#include "caspr/groupring.hpp"

namespace caspr {

inline constexpr int kNumVertexOrbits = 3;
inline constexpr int kNumEdgeTypes = 8;
inline constexpr int kNumTileTypes = 9;
inline constexpr int kEta = 7;

const std::vector<OrbitLabel>& vertex_labels();
const std::vector<OrbitLabel>& edge_labels();
const std::vector<OrbitLabel>& face_labels();

// ASCII names used in files and reports.
const std::vector<std::string>& edge_names();   // alpha ... eta
const std::vector<std::string>& tile_names();   // Gamma ... Psi
const std::vector<std::string>& tile_symbols(); // single letters G D Q L X P S F Y

const GroupRingMatrix& boundary1();  // 3 x 8, vertices x edges
const GroupRingMatrix& boundary2();  // 8 x 9, edges x faces
const GroupRingMatrix& edge_substitution();  // M1*, 8 x 8, child edge x superedge
const GroupRingMatrix& face_substitution();  // M2*, 9 x 9, child x parent

// The boundary map with the (s, delta) entry replaced by r^2 - r^4. It
// violates d1 d2 = 0 and serves as a negative control.
GroupRingMatrix boundary1_wrong_delta();

// Raw text of the four matrices, and an FNV-1a fingerprint over it.
const std::vector<std::string>& constants_text();
std::uint64_t constants_fingerprint();

}  // namespace caspr
