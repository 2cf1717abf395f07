#include "caspr/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace caspr {

namespace {

struct Pt {
  double x, y;
};

// the display turn: real axis up
Pt display(cplx z) { return {-z.imag(), z.real()}; }

struct Shape {
  enum Kind { Polygon, Line, Circle } kind;
  std::vector<Pt> pts;
  std::string fill, stroke;
  double width = 0;  // stroke width, or radius for circles
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

class Canvas {
public:
  void polygon(std::vector<Pt> pts, std::string fill, std::string stroke, double w) {
    shapes_.push_back({Shape::Polygon, std::move(pts), std::move(fill), std::move(stroke), w});
  }
  void line(Pt a, Pt b, std::string stroke, double w) { shapes_.push_back({Shape::Line, {a, b}, "", std::move(stroke), w}); }
  void circle(Pt c, std::string fill, double r) { shapes_.push_back({Shape::Circle, {c}, std::move(fill), "", r}); }

  // Moves every shape added from index `first` on by (dx, dy).
  void shift(std::size_t first, double dx, double dy) {
    for (std::size_t i = first; i < shapes_.size(); ++i)
      for (auto& p : shapes_[i].pts) {
        p.x += dx;
        p.y += dy;
      }
  }
  std::size_t size() const { return shapes_.size(); }

  // bounding box of shapes [first, last)
  std::array<double, 4> bbox(std::size_t first, std::size_t last) const {
    std::array<double, 4> b = {1e300, 1e300, -1e300, -1e300};
    for (std::size_t i = first; i < last; ++i)
      for (const auto& p : shapes_[i].pts) {
        b[0] = std::min(b[0], p.x);
        b[1] = std::min(b[1], p.y);
        b[2] = std::max(b[2], p.x);
        b[3] = std::max(b[3], p.y);
      }
    return b;
  }

  std::string svg(const RenderStyle& st) const {
    std::string out;
    auto b = bbox(0, shapes_.size());
    if (shapes_.empty()) b = {0, 0, 1, 1};
    const double w = std::max(b[2] - b[0], 1e-9), h = std::max(b[3] - b[1], 1e-9);
    const double inner = st.width - 2 * st.margin;
    const double scale = inner / std::max(w, h);
    const double W = st.width, H = h * scale + 2 * st.margin;
    auto X = [&](const Pt& p) { return num(st.margin + (p.x - b[0]) * scale); };
    // SVG y grows downwards
    auto Y = [&](const Pt& p) { return num(st.margin + (b[3] - p.y) * scale); };
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(W) + "\" height=\"" + num(H) + "\" viewBox=\"0 0 " +
           num(W) + " " + num(H) + "\">\n";
    out += "<rect x=\"0\" y=\"0\" width=\"" + num(W) + "\" height=\"" + num(H) + "\" fill=\"#ffffff\"/>\n";
    for (const auto& s : shapes_) {
      switch (s.kind) {
        case Shape::Polygon: {
          out += "<polygon points=\"";
          for (std::size_t i = 0; i < s.pts.size(); ++i) out += (i ? " " : "") + X(s.pts[i]) + "," + Y(s.pts[i]);
          out += "\" fill=\"" + s.fill + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" + num(s.width) +
                 "\" stroke-linejoin=\"round\"/>\n";
          break;
        }
        case Shape::Line:
          out += "<line x1=\"" + X(s.pts[0]) + "\" y1=\"" + Y(s.pts[0]) + "\" x2=\"" + X(s.pts[1]) + "\" y2=\"" +
                 Y(s.pts[1]) + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" + num(s.width) +
                 "\" stroke-linecap=\"round\"/>\n";
          break;
        case Shape::Circle:
          out += "<circle cx=\"" + X(s.pts[0]) + "\" cy=\"" + Y(s.pts[0]) + "\" r=\"" + num(s.width) + "\" fill=\"" +
                 s.fill + "\"/>\n";
          break;
      }
    }
    out += "</svg>\n";
    return out;
  }

private:
  std::vector<Shape> shapes_;
};

constexpr const char* kOutline = "#333333";
constexpr const char* kShaded = "#b8c4d6";
constexpr const char* kUnshaded = "#f7f7f2";
constexpr const char* kPlain = "#eeeeee";
constexpr const char* kPoint = "#111111";

}  // namespace

ColorBy color_by_from_name(const std::string& s) {
  if (s == "type") return ColorBy::Type;
  if (s == "parity") return ColorBy::Parity;
  if (s == "edge") return ColorBy::Edge;
  throw std::invalid_argument("unknown colouring: " + s);
}

const char* cluster_color(int cluster) {
  static const std::array<const char*, kNumClusters> c = {"#e8b04a", "#7fb3d5", "#9bd49b", "#e58f8f", "#b9a0d8"};
  return c.at(cluster);
}

const char* edge_color(int edge) {
  switch (edge) {
    case Alpha: return "#1f4fd1";
    case Beta: return "#d12020";
    case GammaE: return "#8a2be2";
    case Epsilon: return "#1fb8c9";
    case Eta: return "#1e9e3a";
    default: return "#888888";
  }
}

std::string render_patch_svg(const Patch& p, const RenderStyle& style) {
  Canvas cv;
  for (const auto& t : p.tiles) {
    const auto poly = placement_polygon_embedded(t);
    std::vector<Pt> pts;
    for (const auto& z : poly) pts.push_back(display(z));
    switch (style.color_by) {
      case ColorBy::Type: cv.polygon(pts, cluster_color(cluster_of(t.tile)), kOutline, style.stroke); break;
      case ColorBy::Parity: cv.polygon(pts, t.rot % 2 == 0 ? kShaded : kUnshaded, kOutline, style.stroke); break;
      case ColorBy::Edge: {
        cv.polygon(pts, kPlain, "none", 0);
        const auto& h = comb_hexagons()[t.tile];
        const std::size_t n = pts.size();
        for (std::size_t k = 0; k < n; ++k) {
          // a mirrored tile lists v0, v5, ..., v1, so its k-th segment is side 5 - k
          const std::size_t side = t.hand == Hand::Right ? k : n - 1 - k;
          cv.line(pts[k], pts[(k + 1) % n], edge_color(h.sides[side].edge), style.edge_stroke);
        }
        break;
      }
    }
  }
  return cv.svg(style);
}

std::string render_cloud_svg(const WindowCloud& c, const RenderStyle& style) {
  Canvas cv;
  for (const auto& p : c.points) cv.circle(display(cplx(p.x, p.y)), cluster_color(p.type), style.point_radius);
  return cv.svg(style);
}

std::string render_deformed_svg(const DeformedPatch& d, const ReprojectionMap& m, const RenderStyle& style) {
  Canvas cv;
  auto panel = [&](const std::vector<std::array<HexCoord, 6>>& verts, const std::vector<TaggedPoint>& cps) {
    for (std::size_t i = 0; i < verts.size(); ++i) {
      std::vector<Pt> pts;
      for (const auto& v : verts[i]) pts.push_back(display(d.scale * to_complex(v)));
      cv.polygon(pts, cluster_color(cluster_of(d.tiles[i].tile)), kOutline, style.stroke);
    }
    for (const auto& c : cps) cv.circle(display(d.scale * to_complex(c.pos)), kPoint, style.point_radius);
  };
  panel(d.vertices, d.control_points);
  const std::size_t split = cv.size();
  panel(d.target, target_control_points(d, m));
  if (split > 0 && cv.size() > split) {
    const auto l = cv.bbox(0, split), r = cv.bbox(split, cv.size());
    const double gap = 0.05 * (l[2] - l[0]);
    cv.shift(split, l[2] + gap - r[0], l[1] - r[1]);
  }
  return cv.svg(style);
}

}  // namespace caspr
