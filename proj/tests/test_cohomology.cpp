#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "caspr/cohomology.hpp"
#include "caspr/complex_data.hpp"
#include "doctest.h"

using namespace caspr;

namespace {

// Rank over F_p of an integer matrix, an oracle independent of the exact
// rational and cyclotomic linear algebra used by the library.
using ModMat = std::vector<std::vector<std::int64_t>>;
constexpr std::int64_t kP = 1000000007;

std::int64_t mod_pow(std::int64_t b, std::int64_t e) {
  std::int64_t r = 1;
  b %= kP;
  while (e) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % kP);
    b = static_cast<std::int64_t>((__int128)b * b % kP);
    e >>= 1;
  }
  return r;
}

ModMat to_mod(const IntMatrix& m) {
  ModMat out(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_class v = m(i, j) % kP;
      if (v < 0) v += kP;
      out[i][j] = v.get_si();
    }
  return out;
}

std::size_t mod_rank(ModMat a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const std::int64_t inv = mod_pow(a[r][c], kP - 2);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)a[i][c] * inv % kP);
      for (std::size_t j = c; j < cols; ++j)
        a[i][j] = static_cast<std::int64_t>(((__int128)a[i][j] - (__int128)f * a[r][j] % kP + kP) % kP);
    }
    ++r;
  }
  return r;
}

ModMat mod_mul(const ModMat& a, const ModMat& b) {
  ModMat c(a.size(), std::vector<std::int64_t>(b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        c[i][j] = static_cast<std::int64_t>((c[i][j] + (__int128)a[i][k] * b[k][j]) % kP);
    }
  return c;
}

std::vector<std::complex<double>> quadratic_roots(double b, double c) {
  const std::complex<double> d = std::sqrt(std::complex<double>(b * b - 4 * c));
  return {(-b + d) / 2.0, (-b - d) / 2.0};
}

}  // namespace

TEST_CASE("cell counts per representation") {
  CHECK(cell_counts(0) == CellCounts{3, 7, 9});
  CHECK(cell_counts(1) == CellCounts{1, 8, 9});
  CHECK(cell_counts(2) == CellCounts{1, 7, 9});
  CHECK(cell_counts(3) == CellCounts{3, 8, 9});
  // summed over representations the counts equal the number of cells
  int v = 0, e = 0, f = 0;
  for (int k = 0; k < 6; ++k) {
    v += cell_counts(k).vertices;
    e += cell_counts(k).edges;
    f += cell_counts(k).faces;
  }
  CHECK(v == 2 + 2 + 6);
  CHECK(e == 7 * 6 + 3);
  CHECK(f == 9 * 6);
}

TEST_CASE("per-representation dimensions add up to the rational cohomology of the complex") {
  const ModMat d1 = to_mod(boundary1().expand_integer());
  const ModMat d2 = to_mod(boundary2().expand_integer());
  const std::size_t r1 = mod_rank(d1), r2 = mod_rank(d2);
  std::size_t h1 = 0, h2 = 0, sum_r1 = 0, sum_r2 = 0;
  for (int k = 0; k < 6; ++k) {
    const auto rep = representation_cohomology(k);
    h1 += rep.h1;
    h2 += rep.h2;
    sum_r1 += rep.rank_d1;
    sum_r2 += rep.rank_d2;
    CHECK(rep.d1d2_zero);
    CHECK(h1_dim(k) == rep.h1);
    CHECK(h2_dim(k) == rep.h2);
  }
  CHECK(sum_r1 == r1);
  CHECK(sum_r2 == r2);
  CHECK(h1 == 45 - r1 - r2);
  CHECK(h2 == 54 - r2);
  // the complex is connected
  CHECK(10 - r1 == 1);
}

TEST_CASE("direct-limit dimensions") {
  const std::array<std::size_t, 6> h1 = {0, 2, 0, 0, 0, 2}, h2 = {2, 2, 1, 2, 1, 2};
  const CohomologyReport r = cech_report();
  for (int k = 0; k < 6; ++k) {
    CHECK(r.reps[k].h1_limit == h1[k]);
    CHECK(r.reps[k].h2_limit == h2[k]);
  }
  CHECK(r.h1_total == 4);
  CHECK(r.h2_total == 10);
  CHECK(r.chain_map);
}

TEST_CASE("H2 direct limit from the expanded substitution over a prime field") {
  // dim of the eventual image of Mhat2 in faces / im(d2)
  const ModMat d2 = to_mod(boundary2().expand_integer());
  ModMat m = to_mod(squared_face_substitution().expand_integer());
  for (int i = 0; i < 6; ++i) m = mod_mul(m, m);  // Mhat2^64
  ModMat stacked = d2;
  stacked.insert(stacked.end(), m.begin(), m.end());
  CHECK(mod_rank(stacked) - mod_rank(d2) == 10);
}

TEST_CASE("eigenvalues of the substitution on H1 are lambda and its inverse") {
  const double lam = 4 + std::sqrt(15.0);
  for (int k : {1, 5}) {
    const auto rep = representation_cohomology(k);
    REQUIRE(rep.charpoly_h1.size() == 3);
    REQUIRE(rep.charpoly_h1[2] == CycQ(1));
    const auto roots = quadratic_roots(rep.charpoly_h1[1].to_complex().real(), rep.charpoly_h1[0].to_complex().real());
    CHECK(std::abs(roots[0] - lam) < 1e-9);
    CHECK(std::abs(roots[1] - 1 / lam) < 1e-9);
    CHECK(rep.sub_h1.well_defined);
  }
}

TEST_CASE("eigenvalues on H2 in the trivial representation") {
  // nonzero eigenvalues lam^2 and lam^-2: trace 62, determinant of the
  // invertible part 1
  const auto rep = representation_cohomology(0);
  const double lam = 4 + std::sqrt(15.0);
  REQUIRE(rep.charpoly_h2.size() == 5);
  const double trace = -rep.charpoly_h2[3].to_complex().real();
  CHECK(trace == doctest::Approx(lam * lam + 1 / (lam * lam)));
  CHECK(rep.charpoly_h2[2] == CycQ(1));
  CHECK(rep.charpoly_h2[1].is_zero());
  CHECK(rep.charpoly_h2[0].is_zero());
  CHECK(rep.sub_h2.well_defined);
}

TEST_CASE("induced maps have full eventual rank equal to the limit") {
  for (int k = 0; k < 6; ++k) {
    const auto rep = representation_cohomology(k);
    CHECK(eventual_rank(rep.sub_h1.map) == rep.h1_limit);
    CHECK(eventual_rank(rep.sub_h2.map) == rep.h2_limit);
  }
}

TEST_CASE("integral direct limits are free") {
  const IntegralReport r = integral_report();
  CHECK(r.h1.rank == 4);
  CHECK(r.h1.torsion.empty());
  CHECK(r.h1.stabilized);
  CHECK(r.h2.rank == 10);
  CHECK(r.h2.torsion.empty());
  CHECK(r.h2.stabilized);
}

TEST_CASE("chain-map identities") {
  CHECK(substitution_is_chain_map());
  CHECK(boundary_composite_vanishes(boundary1(), boundary2()));
  CHECK_FALSE(boundary_composite_vanishes(boundary1_wrong_delta(), boundary2()));
}
