#pragma once
// Byte-deterministic SVG output for patches, window clouds and reprojected
// patches. The display turns the complex plane so that the real axis points
// up: a point z is drawn at (x, y) = (-Im z, Re z).

#include <string>

#include "caspr/cps.hpp"
#include "caspr/inflation.hpp"
#include "caspr/reprojection.hpp"

namespace caspr {

enum class ColorBy { Type, Parity, Edge };
ColorBy color_by_from_name(const std::string& s);  // "type", "parity", "edge"

struct RenderStyle {
  ColorBy color_by = ColorBy::Type;
  double width = 800;         // output width in px; height follows the aspect ratio
  double stroke = 0.6;        // tile outline width in px
  double edge_stroke = 1.6;   // edge-type stroke width in px
  double point_radius = 1.2;  // cloud and control points, in px
  double margin = 10;         // px
};

// fill colour of a cluster, and the stroke colour of an edge type
const char* cluster_color(int cluster);
const char* edge_color(int edge);

std::string render_patch_svg(const Patch& p, const RenderStyle& style = {});
std::string render_cloud_svg(const WindowCloud& c, const RenderStyle& style = {});
// reprojected tiles with their control points (left) next to the target
// tiling with its own control points (right)
std::string render_deformed_svg(const DeformedPatch& d, const ReprojectionMap& m, const RenderStyle& style = {});

}  // namespace caspr
