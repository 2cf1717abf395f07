#include <cmath>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "caspr/render.hpp"
#include "doctest.h"

using namespace caspr;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (std::size_t pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
  return n;
}

std::vector<std::pair<double, double>> first_polygon(const std::string& svg) {
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, std::regex("<polygon points=\"([^\"]*)\"")));
  std::vector<std::pair<double, double>> out;
  const std::string pts = m[1];
  const std::regex num("(-?[0-9.]+),(-?[0-9.]+)");
  for (auto it = std::sregex_iterator(pts.begin(), pts.end(), num); it != std::sregex_iterator(); ++it)
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2])});
  return out;
}

bool well_formed(const std::string& svg) {
  return svg.rfind("<?xml", 0) == 0 && count(svg, "<svg ") == 1 && svg.find("</svg>\n") == svg.size() - 7;
}

}  // namespace

TEST_CASE("colour tables") {
  std::set<std::string> clusters;
  for (int c = 0; c < kNumClusters; ++c) clusters.insert(cluster_color(c));
  CHECK(clusters.size() == kNumClusters);
  CHECK(std::string(edge_color(Alpha)) == "#1f4fd1");
  CHECK(std::string(edge_color(Beta)) == "#d12020");
  CHECK(color_by_from_name("edge") == ColorBy::Edge);
  CHECK(color_by_from_name("parity") == ColorBy::Parity);
  CHECK(color_by_from_name("type") == ColorBy::Type);
  CHECK_THROWS(color_by_from_name("rainbow"));
}

TEST_CASE("empty inputs give valid documents") {
  CHECK(well_formed(render_patch_svg(Patch{})));
  CHECK(well_formed(render_cloud_svg(WindowCloud{})));
  CHECK(count(render_patch_svg(Patch{}), "<polygon") == 0);
}

TEST_CASE("one polygon per tile, byte-identical on repeat") {
  const Patch p = generate_patch(Gamma, 3);
  const std::string a = render_patch_svg(p), b = render_patch_svg(p);
  CHECK(a == b);
  CHECK(well_formed(a));
  CHECK(count(a, "<polygon") == p.tiles.size());
  RenderStyle s;
  s.color_by = ColorBy::Edge;
  const std::string e = render_patch_svg(p, s);
  CHECK(count(e, "<line") == 6 * p.tiles.size());
  for (int t : {Alpha, Beta, Epsilon}) CHECK(e.find(edge_color(t)) != std::string::npos);
  s.color_by = ColorBy::Parity;
  CHECK(render_patch_svg(p, s) != a);
}

TEST_CASE("the real axis points up") {
  // screen = (s * -Im z + tx, -s * Re z + ty) for one positive scale s
  const Patch p = seed_patch(Gamma);
  const auto z = placement_polygon_embedded(p.tiles[0]);
  const auto pts = first_polygon(render_patch_svg(p));
  REQUIRE(pts.size() == z.size());
  const double s = (pts[2].first - pts[0].first) / -(z[2].imag() - z[0].imag());
  CHECK(s > 0);
  for (std::size_t i = 0; i < z.size(); ++i) {
    CHECK(pts[i].first - pts[0].first == doctest::Approx(-s * (z[i].imag() - z[0].imag())).epsilon(1e-3));
    CHECK(pts[i].second - pts[0].second == doctest::Approx(-s * (z[i].real() - z[0].real())).epsilon(1e-3));
  }
}

TEST_CASE("clouds and deformed patches") {
  const WindowCloud c = chaos_game(300, 2);
  const std::string svg = render_cloud_svg(c);
  CHECK(well_formed(svg));
  CHECK(count(svg, "<circle") == c.points.size());
  CHECK(svg == render_cloud_svg(c));
  const ReprojectionMap m = build_hex_reprojection();
  const DeformedPatch d = reproject(generate_patch(Delta, 2), m);
  const std::string two = render_deformed_svg(d, m);
  CHECK(well_formed(two));
  CHECK(count(two, "<polygon") == 2 * d.tiles.size());
}
