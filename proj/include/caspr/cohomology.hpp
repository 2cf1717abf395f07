#pragma once
// Cohomology of the Anderson-Putnam complex per representation r -> xi^k, the
// substitution action on it, direct limits over C and over Z.
//
// Row-vector convention: cochains are rows, coboundaries act by right
// multiplication (phi -> phi * d). H^1 = ker(.d2)/im(.d1) on edge rows,
// H^2 = faces / im(.d2).

#include <array>
#include <string>
#include <vector>

#include "caspr/complex_data.hpp"
#include "caspr/cyclotomic.hpp"
#include "caspr/linalg.hpp"

namespace caspr {

struct CellCounts {
  int vertices = 0, edges = 0, faces = 0;
  bool operator==(const CellCounts& o) const {
    return vertices == o.vertices && edges == o.edges && faces == o.faces;
  }
};

// Orbit indices that survive evaluation at r = xi^k: eta only when r^3 = -1,
// p and q only when r^2 = 1.
std::vector<std::size_t> kept_vertices(int k);
std::vector<std::size_t> kept_edges(int k);
CellCounts cell_counts(int k);

// Squared substitution maps Mhat = M* conj(M*) (two rounds of the half-step).
GroupRingMatrix squared_edge_substitution();
GroupRingMatrix squared_face_substitution();

// d1 d2 = 0 as module maps.
bool boundary_composite_vanishes(const GroupRingMatrix& d1, const GroupRingMatrix& d2);
// d2 M2* = -M1* conj(d2) and d2 Mhat2 = Mhat1 d2.
bool substitution_is_chain_map();

struct EvaluatedComplex {
  int k = 0;
  Matrix<CycQ> d1, d2, m1hat, m2hat;
};
EvaluatedComplex evaluate_complex(int k);

struct InducedMap {
  std::size_t dim = 0;
  Matrix<CycQ> map;          // row convention: row i = image of basis vector i
  bool well_defined = false;  // subspace and relations are preserved
};

std::size_t h1_dim(int k);
std::size_t h2_dim(int k);
InducedMap substitution_on_h(int k, int degree);

struct RepresentationCohomology {
  int k = 0;
  CellCounts counts;
  std::size_t rank_d1 = 0, rank_d2 = 0;
  std::size_t h1 = 0, h2 = 0;
  InducedMap sub_h1, sub_h2;
  Poly<CycQ> charpoly_h1, charpoly_h2;
  std::size_t h1_limit = 0, h2_limit = 0;
  bool d1d2_zero = false;
};

struct CohomologyReport {
  std::array<RepresentationCohomology, 6> reps;
  std::size_t h1_total = 0, h2_total = 0;
  bool chain_map = false;
};

RepresentationCohomology representation_cohomology(int k);
CohomologyReport cech_report();
std::string format_report(const CohomologyReport& r);
std::string format_poly(const Poly<CycQ>& p);

struct IntegralGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
  std::size_t iterations = 0;   // iterations until the image stabilized
  bool stabilized = false;
  bool well_defined = false;
  std::vector<std::size_t> rank_history;
};

struct IntegralReport {
  IntegralGroup h1, h2;
  std::string method;
};

// Direct limits over Z, computed as the stabilized image f^n(H) in H:
// S_{n+1} = S_n Mhat + R, reported once S_{n+1} = S_n held for `stable_rounds`
// consecutive iterations (so f is onto, hence an isomorphism, on S_N / R).
IntegralReport integral_report(std::size_t max_iter = 40, std::size_t stable_rounds = 3);
std::string format_integral(const IntegralReport& r);

}  // namespace caspr
