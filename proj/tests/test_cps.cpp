#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "caspr/cps.hpp"
#include "caspr/patch_io.hpp"
#include "doctest.h"

using namespace caspr;

namespace {

double det4(std::array<Vec4, 4> a) {
  double det = 1;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return std::abs(det);
}

const double kLam = 4 + std::sqrt(15.0);

}  // namespace

TEST_CASE("lift is the Minkowski embedding") {
  const RingElement x(2, -1, 3, 1);
  const Vec4 v = lift(x);
  CHECK(v[0] == doctest::Approx(x.embed().real()));
  CHECK(v[1] == doctest::Approx(x.embed().imag()));
  CHECK(v[2] == doctest::Approx(x.embed_internal().real()));
  CHECK(v[3] == doctest::Approx(x.embed_internal().imag()));
  const Vec4 w = lift(IntPt{2, -1, 3, 1});
  for (int i = 0; i < 4; ++i) CHECK(w[i] == doctest::Approx(v[i]));
}

TEST_CASE("covolume of the return lattice") {
  const CovolumeReport r = covolume_report();
  CHECK(r.v == 3645);
  CHECK(r.v_squared == Rational(3645L * 3645L));
  CHECK(r.order_v == 45);
  CHECK(r.index == 81);
  std::array<Vec4, 4> b;
  const auto basis = return_module().basis();
  for (int i = 0; i < 4; ++i) b[i] = lift(basis[i]);
  CHECK(det4(b) == doctest::Approx(3645).epsilon(1e-9));
  CHECK(return_lattice().covolume_numeric() == doctest::Approx(3645).epsilon(1e-9));
  // 3/4 * |2 sqrt 15|^2 * 81 = 3/4 * 60 * 81
  CHECK(r.factored == Rational(3645));
}

TEST_CASE("densities agree") {
  const DensityReport d = density_report();
  CHECK(d.covolume == 3645);
  CHECK(d.window_area.coeff == RealQuadratic(540, Rational(-135, 2)));
  const RealQuadratic rho(Rational(4, 27), Rational(-1, 54));
  CHECK(d.rho1.coeff == rho);
  CHECK(d.rho2.coeff == rho);
  CHECK(d.rho_equal);
  CHECK(d.average_area.coeff == RealQuadratic(90));
  CHECK(d.rho1.value() == doctest::Approx(std::sqrt(3.0) * (4.0 / 27 - kLam / 54)));
  // the window area equals V times the density
  CHECK(d.window_area.value() == doctest::Approx(3645 * d.rho1.value()));
}

TEST_CASE("window area from grid occupancy of a chaos cloud") {
  // The window is a thin set with a fractal boundary, so the occupied-cell
  // area overshoots by a term that shrinks geometrically as the cells halve;
  // Aitken extrapolation over three resolutions removes it.
  const WindowCloud c = chaos_game(4'000'000, 5);
  double lo_x = 1e300, lo_y = 1e300;
  for (const auto& p : c.points) {
    lo_x = std::min(lo_x, p.x);
    lo_y = std::min(lo_y, p.y);
  }
  const double d = cloud_diameter(c);
  std::vector<double> est;
  for (int n : {200, 400, 800}) {
    const double cell = d / n;
    std::set<std::pair<long, long>> occupied;
    for (const auto& p : c.points)
      occupied.insert({static_cast<long>((p.x - lo_x) / cell), static_cast<long>((p.y - lo_y) / cell)});
    est.push_back(occupied.size() * cell * cell);
  }
  CHECK(est[0] > est[1]);
  CHECK(est[1] > est[2]);
  const double d1 = est[1] - est[0], d2 = est[2] - est[1];
  const double limit = est[2] - d2 * d2 / (d2 - d1);
  CHECK(limit == doctest::Approx(window_area().value()).epsilon(0.05));
}

TEST_CASE("empirical density of a patch") {
  const Patch p = generate_patch(Gamma, 4);
  const EmpiricalDensity e = empirical_density(p);
  CHECK(e.count > 100);
  CHECK(e.density == doctest::Approx(density_report().rho1.value()).epsilon(0.05));
}

TEST_CASE("projected control points fill the window") {
  const WindowCloud w = window_from_patch(generate_patch(Gamma, 4));
  CHECK(w.method == "project");
  CHECK(!w.points.empty());
  CHECK_THROWS(window_from_patch(generate_patch(Gamma, 3)));
  // every projected point sits within the chaos-game window
  const WindowCloud c = chaos_game(200'000, 1);
  CHECK(hausdorff_distance(w, c) < 0.1 * cloud_diameter(c));
}

TEST_CASE("chaos game is deterministic and matches the cluster fractions") {
  const WindowCloud a = chaos_game(20'000, 42), b = chaos_game(20'000, 42), c = chaos_game(20'000, 43);
  REQUIRE(a.points.size() == 20'000);
  bool same = true, differ = false;
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    same = same && a.points[i].x == b.points[i].x && a.points[i].y == b.points[i].y && a.points[i].type == b.points[i].type;
    differ = differ || a.points[i].x != c.points[i].x;
  }
  CHECK(same);
  CHECK(differ);
  const WindowCloud big = chaos_game(400'000, 9);
  const auto got = cloud_fractions(big);
  const auto want = expected_cluster_fractions();
  RealQuadratic total;
  for (int i = 0; i < 5; ++i) {
    total += want[i];
    CHECK(got[i] == doctest::Approx(want[i].to_double()).epsilon(0.02));
  }
  CHECK(total == RealQuadratic(1));
}

TEST_CASE("cloud files round-trip") {
  const WindowCloud a = chaos_game(500, 3);
  std::ostringstream os;
  write_cloud(os, a);
  std::istringstream in(os.str());
  const WindowCloud b = read_cloud(in);
  REQUIRE(b.points.size() == a.points.size());
  CHECK(b.method == a.method);
  CHECK(b.seed == a.seed);
  std::ostringstream again;
  write_cloud(again, b);
  CHECK(again.str() == os.str());
  std::istringstream bad("garbage\n");
  CHECK_THROWS_AS(read_cloud(bad), DataFileError);
  std::istringstream truncated(os.str().substr(0, os.str().size() / 2));
  CHECK_THROWS_AS(read_cloud(truncated), DataFileError);
}

TEST_CASE("Hausdorff dimension closed form") {
  const double d = std::log(5 + 2 * std::sqrt(6.0)) / std::log(kLam);
  CHECK(hausdorff_dimension() == doctest::Approx(d).epsilon(1e-14));
  CHECK(hausdorff_dimension() == doctest::Approx(1.110977).epsilon(1e-6));
}

TEST_CASE("box counting calibrates on a square and a segment") {
  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::array<double, 2>> square, segment;
  for (int i = 0; i < 400'000; ++i) {
    square.push_back({u(g), u(g)});
    const double t = u(g);
    segment.push_back({t, 0.3 * t});
  }
  CHECK(box_counting(square).dimension == doctest::Approx(2).epsilon(0.02));
  CHECK(box_counting(segment).dimension == doctest::Approx(1).epsilon(0.02));
}

TEST_CASE("fit_dimension recovers an exact power law") {
  BoxCount b;
  for (int k = 1; k <= 6; ++k) {
    b.eps.push_back(std::ldexp(1.0, -k));
    b.counts.push_back(static_cast<std::size_t>(std::llround(std::pow(2.0, 1.5 * k) * 10)));
  }
  fit_dimension(b);
  CHECK(b.dimension == doctest::Approx(1.5).epsilon(0.01));
  CHECK(b.r2 > 0.999);
}

TEST_CASE("boundary box counting sees a straight interface as one-dimensional") {
  std::mt19937_64 g(2);
  std::uniform_real_distribution<double> u(0, 1);
  WindowCloud c;
  for (int i = 0; i < 2'000'000; ++i) {
    CloudPoint p;
    p.x = u(g);
    p.y = u(g);
    p.type = p.x < 0.5 ? 0 : 1;
    c.points.push_back(p);
  }
  const BoxCount b = boundary_box_counting(c);
  REQUIRE(b.counts.size() >= 3);
  CHECK(b.dimension == doctest::Approx(1).epsilon(0.05));
}

TEST_CASE("cloud statistics") {
  WindowCloud a, b;
  a.points = {{0, 0, 0, 0}, {3, 4, 0, 0}};
  b.points = {{0, 0, 0, 0}, {3, 4, 0, 0}, {3, 6, 1, 0}};
  CHECK(cloud_diameter(a) == doctest::Approx(5));
  CHECK(hausdorff_distance(a, a) == 0);
  CHECK(hausdorff_distance(a, b) == doctest::Approx(2));
  CHECK(hausdorff_distance(b, a) == doctest::Approx(2));
  WindowCloud mixed;
  mixed.points = {{0.1, 0.1, 0, 0}, {0.2, 0.2, 1, 0}, {5.1, 5.1, 0, 0}, {5.2, 5.2, 0, 0}};
  CHECK(double_occupancy(mixed, 1.0) == doctest::Approx(0.5));
}

TEST_CASE("Fourier module is the scaled return module") {
  const FourierModule f = fourier_module(0.3, 0.3);
  CHECK(f.equals_scaled_l);
  CHECK(f.equals_trace_dual);
  CHECK(f.closed_under_xi);
  for (const auto& y : f.points) {
    CHECK(std::abs(y.embed()) <= 0.3 + 1e-12);
    CHECK(std::abs(y.embed_internal()) <= 0.3 + 1e-12);
    CHECK(f.module.contains(y));
    for (const auto& x : return_module().basis()) CHECK(trace_form(x, y).get_den() == 1);
  }
}
