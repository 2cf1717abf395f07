#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "caspr/reprojection.hpp"
#include "caspr/zmodule.hpp"
#include "doctest.h"

using namespace caspr;

namespace {

IntPt random_point(std::mt19937& g) {
  std::uniform_int_distribution<std::int64_t> d(-50, 50);
  return {d(g), d(g), d(g), d(g)};
}

// the Eisenstein coordinates of a complex number on the unit lattice
HexCoord nearest(std::complex<double> z) {
  const double b = z.imag() / (std::sqrt(3.0) / 2);
  const double a = z.real() - b / 2;
  return {std::llround(a), std::llround(b)};
}

}  // namespace

TEST_CASE("Eisenstein coordinates") {
  const HexCoord one{1, 0};
  CHECK(xi_times(1, one) == HexCoord{0, 1});
  CHECK(xi_times(2, one) == HexCoord{-1, 1});
  CHECK(xi_times(3, one) == HexCoord{-1, 0});
  CHECK(xi_times(6, one) == one);
  for (int m = 0; m < 6; ++m) {
    const auto z = to_complex(xi_times(m, HexCoord{2, 1}));
    CHECK(std::abs(z - std::polar(1.0, M_PI * m / 3) * to_complex(HexCoord{2, 1})) < 1e-12);
    CHECK(nearest(z) == xi_times(m, HexCoord{2, 1}));
  }
  CHECK(vertex_label_index({VertexKind::P, 0}) == 0);
  CHECK(vertex_label_index({VertexKind::Q, 1}) == 3);
  CHECK(vertex_label_index({VertexKind::S, 5}) == 9);
}

TEST_CASE("the hexagon map takes each edge to its lambda part") {
  const ReprojectionMap m = build_hex_reprojection();
  CHECK(m.consistent);
  CHECK(m.constraints == 45);
  CHECK(m.unknowns == 26);
  CHECK(m.rank == 26);
  CHECK(m.scale == doctest::Approx(2 * std::sqrt(15.0)));
  std::mt19937 g(3);
  for (int i = 0; i < 100; ++i) {
    const IntPt x = random_point(g);
    CHECK(m.apply(x) == HexCoord{x[2], x[3]});
  }
  // a regular hexagon of this side has the average tile area 90 sqrt 3
  CHECK(1.5 * std::sqrt(3.0) * m.scale * m.scale == doctest::Approx(90 * std::sqrt(3.0)));
}

TEST_CASE("the meta-tile map is the lambda part of lambda x") {
  const ReprojectionMap m = build_metatile_reprojection();
  CHECK(m.consistent);
  CHECK(m.scale == doctest::Approx(2 * std::sqrt(15.0) / (4 + std::sqrt(15.0))));
  std::mt19937 g(4);
  for (int i = 0; i < 100; ++i) {
    const IntPt x = random_point(g);
    const RingElement y = lam() * to_ring(x);
    CHECK(m.apply(x) == HexCoord{y[2].get_num().get_si(), y[3].get_num().get_si()});
  }
  for (const auto& s : m.vertex_shift) CHECK(s == HexCoord{});
}

TEST_CASE("every edge lands on its slot target") {
  for (const auto& m : {build_hex_reprojection(), build_metatile_reprojection()}) {
    std::mt19937 g(5);
    for (int t = 0; t < kNumEdgeTypes; ++t) {
      const auto [from, to] = edge_endpoints(t);
      for (int r = 0; r < 6; ++r) {
        const IntPt x = random_point(g);
        const IntPt y = add(x, to_intpt(edge_vector(t, r)));
        const HexCoord d = m.vertex(y, rotate_label(to, r)) - m.vertex(x, rotate_label(from, r));
        CHECK(d == xi_times(r, m.slot_targets[t]));
      }
    }
  }
  for (const auto& s : build_hex_reprojection().slot_targets) {
    // unit steps on the hexagonal lattice
    CHECK(std::abs(std::abs(to_complex(s)) - 1) < 1e-12);
  }
}

TEST_CASE("kernels are rank two sublattices of L") {
  for (const auto& m : {build_hex_reprojection(), build_metatile_reprojection()}) {
    CHECK(m.kernel_on_l.size() == 2);
    for (const auto& k : m.kernel_on_l) {
      CHECK(return_module().contains(k));
      CHECK(m.apply(k) == HexCoord{});
    }
  }
}

TEST_CASE("linear projections") {
  const LinearProjection c = caspr_projection();
  std::mt19937 g(6);
  const ReprojectionMap h = build_hex_reprojection();
  const LinearProjection hl = as_linear(h);
  for (int i = 0; i < 50; ++i) {
    const IntPt x = random_point(g);
    CHECK(std::abs(c.apply(x) - to_ring(x).embed()) < 1e-9);
    CHECK(std::abs(hl.apply(x) - h.scale * to_complex(h.apply(x))) < 1e-9);
  }
}

TEST_CASE("reprojected patches") {
  const Patch p = generate_patch(Gamma, 4);
  const ReprojectionCheck hex = check_reprojection(p, build_hex_reprojection());
  CHECK(hex.ok());
  CHECK(hex.regular_hexagons);
  CHECK(hex.kernel_rank == 2);
  const ReprojectionCheck meta = check_reprojection(p, build_metatile_reprojection());
  CHECK(meta.ok());
  CHECK(meta.kernel_rank == 2);
  CHECK(meta.mean_displacement < hex.mean_displacement);
}

TEST_CASE("hexagon targets are regular") {
  const ReprojectionMap m = build_hex_reprojection();
  const DeformedPatch d = reproject(generate_patch(Sigma, 2), m);
  REQUIRE(d.target.size() == d.tiles.size());
  for (std::size_t i = 0; i < d.tiles.size(); ++i)
    for (int k = 0; k < 6; ++k) {
      const auto step = d.target[i][(k + 1) % 6] - d.target[i][k];
      CHECK(std::abs(std::abs(to_complex(step)) - 1) < 1e-12);
    }
  auto a = d.control_points, b = target_control_points(d, m);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  CHECK(a == b);
}

TEST_CASE("reprojection needs an even number of half-steps") {
  CHECK_THROWS(reproject(generate_patch(Gamma, 3), build_hex_reprojection()));
  CHECK(reprojection_by_name("hex").name == build_hex_reprojection().name);
  CHECK(reprojection_by_name("metatile").name == build_metatile_reprojection().name);
  CHECK_THROWS_AS(reprojection_by_name("square"), std::invalid_argument);
}
