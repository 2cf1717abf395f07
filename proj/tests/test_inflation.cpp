#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "caspr/complex_data.hpp"
#include "caspr/inflation.hpp"
#include "caspr/patch_io.hpp"
#include "doctest.h"

using namespace caspr;

namespace {

// M2*(1) read entrywise, as plain integers
std::vector<std::vector<double>> m2_at_one() {
  const Matrix<CycQ> m = face_substitution().evaluate(0);
  std::vector<std::vector<double>> out(9, std::vector<double>(9));
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) out[i][j] = m(i, j).a().get_d();
  return out;
}

std::vector<double> mat_vec(const std::vector<std::vector<double>>& m, const std::vector<double>& v) {
  std::vector<double> w(9, 0);
  for (std::size_t i = 0; i < 9; ++i)
    for (std::size_t j = 0; j < 9; ++j) w[i] += m[i][j] * v[j];
  return w;
}

}  // namespace

TEST_CASE("checked integer points") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(add({big, 0, 0, 0}, {1, 0, 0, 0}), std::overflow_error);
  CHECK_THROWS_AS(mul({big / 2, 0, 0, 0}, {3, 0, 0, 0}), std::overflow_error);
  CHECK_THROWS(to_intpt(mu()));
  const IntPt a{3, -1, 2, 5}, b{-4, 7, 1, 0};
  CHECK(to_ring(mul(a, b)) == to_ring(a) * to_ring(b));
  CHECK(to_ring(conj(a)) == to_ring(a).conj());
  CHECK(to_ring(xi_pow_times(4, a)) == xi_pow(4) * to_ring(a));
  CHECK(to_ring(half_step({3, 0, 0, 0})) == mu() * Rational(3));
  CHECK_THROWS(half_step({1, 0, 0, 0}));
  CHECK(std::abs(embed(a) - to_ring(a).embed()) < 1e-9);
}

TEST_CASE("patch sizes follow the substitution matrix") {
  const auto m = m2_at_one();
  for (int seed = 0; seed < kNumTileTypes; ++seed) {
    std::vector<double> v(9, 0);
    v[seed] = 1;
    for (int steps = 0; steps <= 4; ++steps) {
      double total = 0;
      for (double x : v) total += x;
      const Patch p = generate_patch(seed, steps);
      CHECK(static_cast<double>(p.tiles.size()) == total);
      CHECK(predicted_tile_count(seed, steps) == static_cast<std::uint64_t>(total));
      const auto counts = type_counts(p);
      for (int t = 0; t < 9; ++t) CHECK(static_cast<double>(counts[t]) == v[t]);
      v = mat_vec(m, v);
    }
  }
  const std::uint64_t expected[] = {1, 7, 55, 433, 3409};
  for (int s = 0; s <= 4; ++s) CHECK(generate_patch(Gamma, s).tiles.size() == expected[s]);
}

TEST_CASE("for_each_tile visits the generated patch") {
  const Patch p = generate_patch(Phi, 3);
  std::vector<Placement> seen;
  for_each_tile(Phi, 3, [&](const Placement& t) { seen.push_back(t); });
  std::sort(seen.begin(), seen.end());
  std::vector<Placement> want = p.tiles;
  std::sort(want.begin(), want.end());
  CHECK(seen == want);
}

TEST_CASE("two half-steps equal one squared step") {
  Patch a = inflate_once(inflate_once(seed_patch(Lambda)));
  Patch b = inflate_squared(seed_patch(Lambda));
  a.canonicalize();
  b.canonicalize();
  CHECK(a.tiles == b.tiles);
  CHECK(inflate_once(seed_patch(Gamma)).parity == 1);
  CHECK_THROWS(inflate_squared(inflate_once(seed_patch(Gamma))));
}

TEST_CASE("tile budget") { CHECK_THROWS_AS(generate_patch(Gamma, 6, 1000), std::length_error); }

TEST_CASE("abelianization matches the substitution matrices") {
  const AbelianReport a = abelianize();
  CHECK(a.face_matches);
  CHECK(a.edge_matches);
  CHECK(a.edge_words_consistent);
  CHECK(a.corners_match);
  CHECK(a.outline_simple);
  CHECK(a.areas_match);
  CHECK(a.diffs.empty());
}

TEST_CASE("edge vectors are an eigenvector of the squared edge substitution") {
  const EigenCheck e = edge_eigencheck();
  CHECK(e.exact_zero());
  CHECK(e.numeric_residual < 1e-9);
  CHECK(e.perturbed_residual > 1e-3);
}

TEST_CASE("frequency vector against power iteration") {
  const auto m = m2_at_one();
  std::vector<double> v(9, 1.0 / 9);
  for (int it = 0; it < 200; ++it) {
    v = mat_vec(m, v);
    double s = 0;
    for (double x : v) s += x;
    for (double& x : v) x /= s;
  }
  const auto f = frequency_vector();
  RealQuadratic sum;
  for (int t = 0; t < 9; ++t) {
    CHECK(f[t].to_double() == doctest::Approx(v[t]).epsilon(1e-12));
    sum += f[t];
  }
  CHECK(sum == RealQuadratic(1));
  CHECK(is_eigenvector(f, false));
  CHECK(is_eigenvector(left_pf_vector(), true));
  CHECK(left_pf_vector()[0] == RealQuadratic(1));
}

TEST_CASE("average tile area") {
  const auto f = frequency_vector();
  RealQuadratic avg;
  for (int t = 0; t < 9; ++t) avg += f[t] * tile_area(t);
  CHECK(avg == RealQuadratic(90));
}

TEST_CASE("generated patches do not overlap") {
  const Patch p = generate_patch(Gamma, 4);
  const OverlapCheck o = overlap_check(p, 2000, 7);
  CHECK(o.directed_edges_unique);
  CHECK(o.boundary_simple);
  CHECK(o.area_accounting);
  CHECK(o.violations == 0);
  CHECK(o.samples == 2000);
  const auto counts = type_counts(p);
  RealQuadratic total;
  for (int t = 0; t < 9; ++t) total += tile_area(t) * RealQuadratic(static_cast<long>(counts[t]));
  CHECK(o.total_area == total);
  CHECK(patch_boundary(p).size() == 1);
}

TEST_CASE("overlap detection on a doubled tile") {
  Patch p = generate_patch(Delta, 2);
  Placement dup = p.tiles[0];
  dup.pos = add(dup.pos, {1, 0, 0, 0});
  p.tiles.push_back(dup);
  CHECK_FALSE(overlap_check(p, 500, 3).ok());
}

TEST_CASE("clusters pair up away from the rim") {
  for (int steps : {3, 4}) {
    const ClusterCheck c = cluster_check(generate_patch(Gamma, steps));
    CHECK(c.ok());
    CHECK(c.broken_interior == 0);
    CHECK(std::abs(c.xi_minus_pi) <= 1);
  }
}

TEST_CASE("edges are border forced at depth two") {
  const BorderForceReport b = border_force_check(generate_patch(Gamma, 4));
  for (int e = 0; e < kNumEdgeTypes; ++e) {
    CHECK(b.occurrences[e] > 0);
    CHECK(b.environments[e][2] == 1);
    CHECK(b.environments[e][1] <= b.environments[e][0]);
  }
}

TEST_CASE("patch files round-trip byte for byte") {
  const Patch p = generate_patch(Psi, 3);
  std::ostringstream a;
  write_patch(a, p);
  std::istringstream in(a.str());
  const Patch q = read_patch(in);
  CHECK(q.tiles.size() == p.tiles.size());
  CHECK(q.parity == p.parity);
  CHECK(q.seed == Psi);
  CHECK(q.steps == 3);
  std::ostringstream b;
  write_patch(b, q);
  CHECK(a.str() == b.str());
  CHECK(a.str().rfind("caspr-patch 1\n", 0) == 0);
}

TEST_CASE("malformed patch files are rejected") {
  std::ostringstream os;
  write_patch(os, generate_patch(Gamma, 1));
  const std::string good = os.str();
  auto rejects = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_patch(in), DataFileError);
  };
  rejects("");
  rejects("caspr-patch 2\n");
  rejects("not a patch\n");
  std::string wrong_count = good;
  wrong_count.replace(wrong_count.find("count 7"), 7, "count 8");
  rejects(wrong_count);
  rejects(good.substr(0, good.size() - 10));
  std::string bad_tile = good;
  bad_tile.replace(bad_tile.rfind('\n', bad_tile.size() - 2) + 1, 1, "Z");
  rejects(bad_tile);
}
