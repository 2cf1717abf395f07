#include "caspr/tiles.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace caspr {

int tile_from_name(const std::string& s) {
  for (int i = 0; i < kNumTileTypes; ++i)
    if (s == tile_names()[i] || s == tile_symbols()[i]) return i;
  return -1;
}

// ---- edges ----

const RingElement& edge_base(int type) {
  static const std::array<RingElement, 8> e = {
      RingElement(0, 2, 1, -1),   // alpha = 2 xi + (1 - xi) lam
      RingElement(1, -3, 0, 1),   // beta
      RingElement(-2, 4, 2, -1),  // gamma
      RingElement(-9, 3, 3, 0),   // delta
      RingElement(1, -1, 1, 0),   // epsilon = 1 - xi + lam
      RingElement(-1, -4, 1, 1),  // zeta
      RingElement(-1, 1, 2, 0),   // theta
      RingElement(1, 2, 1, 0),    // eta
  };
  return e.at(type);
}

RingElement edge_vector(int type, int m) { return xi_pow(m) * edge_base(type); }

EdgeInfo edge_info(int type) {
  if (type == Eta) return {3, false};
  return {6, true};
}

// ---- combinatorial hexagons ----

std::string VertexLabel::str() const {
  const char* n = kind == VertexKind::P ? "p" : kind == VertexKind::Q ? "q" : "s";
  return (rot ? "r" + std::to_string(rot) : std::string()) + n;
}

VertexLabel rotate_label(const VertexLabel& v, int m) {
  int mod = v.kind == VertexKind::S ? 6 : 2;
  return {v.kind, (((v.rot + m) % mod) + mod) % mod};
}

std::pair<VertexLabel, VertexLabel> edge_endpoints(int type) {
  const auto& d1 = boundary1();
  VertexLabel start{}, end{};
  int nstart = 0, nend = 0;
  for (int i = 0; i < kNumVertexOrbits; ++i) {
    GRPoly p = d1(i, type).reduced(vertex_labels()[i].kind);
    for (int d = 0; d < 6; ++d) {
      if (sgn(p[d]) == 0) continue;
      VertexLabel v{static_cast<VertexKind>(i), d};
      if (p[d] == 1) {
        end = v;
        ++nend;
      } else if (p[d] == -1) {
        start = v;
        ++nstart;
      } else {
        throw std::logic_error("edge_endpoints: boundary is not a difference of two vertices");
      }
    }
  }
  if (nstart != 1 || nend != 1)
    throw std::logic_error("edge_endpoints: boundary is not a difference of two vertices");
  return {start, end};
}

namespace {

struct RawSide {
  int m;
  int edge;
};

// Sides in counterclockwise order, each as (rotation power, edge type), read
// off the combinatorial hexagon drawings.
const std::array<std::array<RawSide, 6>, 9> kHexSides = {{
    {{{3, Alpha}, {1, Alpha}, {5, GammaE}, {0, DeltaE}, {4, Beta}, {2, Beta}}},       // Gamma
    {{{0, GammaE}, {1, Beta}, {5, Epsilon}, {3, Alpha}, {1, GammaE}, {2, Zeta}}},     // Delta
    {{{0, GammaE}, {1, Beta}, {2, ThetaE}, {3, Beta}, {1, Eta}, {2, Beta}}},          // Theta
    {{{0, GammaE}, {1, Beta}, {5, Epsilon}, {3, Alpha}, {1, ThetaE}, {2, Beta}}},     // Lambda
    {{{3, Alpha}, {1, Epsilon}, {2, ThetaE}, {3, Beta}, {1, Eta}, {2, Beta}}},        // Xi
    {{{3, Alpha}, {1, Epsilon}, {5, Epsilon}, {3, Alpha}, {1, ThetaE}, {2, Beta}}},   // Pi
    {{{0, Zeta}, {1, Beta}, {5, Epsilon}, {3, Alpha}, {1, GammaE}, {5, DeltaE}}},     // Sigma
    {{{0, GammaE}, {1, Beta}, {5, Epsilon}, {3, Epsilon}, {1, Eta}, {2, Beta}}},      // Phi
    {{{3, Alpha}, {1, Epsilon}, {5, Epsilon}, {3, Epsilon}, {1, Eta}, {2, Beta}}},    // Psi
}};

std::array<CombHexagon, 9> build_hexagons() {
  std::array<CombHexagon, 9> out;
  for (int t = 0; t < 9; ++t) {
    out[t].tile = t;
    for (int k = 0; k < 6; ++k) {
      const RawSide& r = kHexSides[t][k];
      int dir = (k + 3) % 6;
      int sign;
      if (r.m % 6 == dir) sign = 1;
      else if ((r.m + 3) % 6 == dir) sign = -1;
      else throw std::logic_error("hexagon side does not point along its slot");
      out[t].sides[k] = {r.edge, r.m, sign};
      auto [s, e] = edge_endpoints(r.edge);
      out[t].vertices[k] = rotate_label(sign > 0 ? s : e, r.m);
    }
  }
  return out;
}

}  // namespace

const std::array<CombHexagon, 9>& comb_hexagons() {
  static const std::array<CombHexagon, 9> h = build_hexagons();
  return h;
}

bool vertex_labels_consistent() {
  for (const auto& h : comb_hexagons())
    for (int k = 0; k < 6; ++k) {
      const SideLabel& s = h.sides[k];
      auto [st, en] = edge_endpoints(s.edge);
      VertexLabel end = rotate_label(s.sign > 0 ? en : st, s.m);
      if (!(end == h.vertices[(k + 1) % 6])) return false;
    }
  return true;
}

std::vector<GRPoly> face_boundary_chain(int tile) {
  std::vector<GRPoly> chain(kNumEdgeTypes);
  for (const auto& s : comb_hexagons()[tile].sides) chain[s.edge] += GRPoly::monomial(s.m, s.sign);
  for (int e = 0; e < kNumEdgeTypes; ++e) chain[e] = chain[e].reduced(edge_labels()[e].kind);
  return chain;
}

// ---- geometric tiles ----

const std::vector<RingElement>& tile_vertices(int tile) {
  static const std::array<std::vector<RingElement>, 9> all = [] {
    std::array<std::vector<RingElement>, 9> out;
    for (int t = 0; t < 9; ++t) {
      RingElement v;
      for (const auto& s : comb_hexagons()[t].sides) {
        out[t].push_back(v);
        v += edge_vector(s.edge, s.m) * Rational(s.sign);
      }
      if (!v.is_zero()) throw std::logic_error("tile boundary does not close");
    }
    return out;
  }();
  return all.at(tile);
}

GeomTile tile_polygon(int tile, int rot, Hand hand) {
  GeomTile g;
  g.tile = tile;
  g.rot = ((rot % 6) + 6) % 6;
  g.hand = Hand::Right;
  RingElement r = xi_pow(rot);
  for (const auto& v : tile_vertices(tile)) g.vertices.push_back(r * v);
  if (hand == Hand::Left) g = mirrored(g);
  return g;
}

GeomTile mirrored(const GeomTile& t) {
  GeomTile g = t;
  g.hand = t.hand == Hand::Right ? Hand::Left : Hand::Right;
  g.vertices.clear();
  for (auto it = t.vertices.rbegin(); it != t.vertices.rend(); ++it) g.vertices.push_back(it->conj());
  // keep vertex 0 first
  std::rotate(g.vertices.begin(), g.vertices.end() - 1, g.vertices.end());
  return g;
}

RealQuadratic signed_area(const std::vector<RingElement>& poly) {
  RealQuadratic s;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    RingElement z = poly[i].conj() * poly[(i + 1) % n];
    // Im z = (z1 + z3 lam) sqrt(3)/2; the shoelace sum carries another 1/2
    s += RealQuadratic(z[1] / 4, z[3] / 4);
  }
  return s;
}

RealQuadratic area(const GeomTile& t) {
  RealQuadratic a = signed_area(t.vertices);
  return a.sign() < 0 ? -a : a;
}

RealQuadratic tile_area(int tile) { return area(tile_polygon(tile)); }

bool is_closed(const std::vector<RingElement>& poly) {
  // closed by construction as a vertex list; checks that no edge is degenerate
  for (std::size_t i = 0; i < poly.size(); ++i)
    if (poly[i] == poly[(i + 1) % poly.size()]) return false;
  return poly.size() >= 3;
}

namespace {

// Exact predicates over either representation.
struct ExactRing {
  using P = RingElement;
  static int orient(const P& a, const P& b, const P& c) {
    RingElement z = (b - a).conj() * (c - a);
    return RealQuadratic(z[1], z[3]).sign();
  }
  static int dot_sign(const P& a, const P& b, const P& c) {
    // sign of Re(conj(b - a)(c - a))
    RingElement z = (b - a).conj() * (c - a);
    return RealQuadratic(z[0] + z[1] / 2, z[2] + z[3] / 2).sign();
  }
  // is c within the bounding range of segment ab, given collinearity
  static bool on_segment(const P& a, const P& b, const P& c) {
    return dot_sign(a, b, c) >= 0 && dot_sign(b, a, c) >= 0;
  }
  static cplx approx(const P& a) { return a.embed(); }
};

struct ExactDouble {
  struct P {
    mpq_class x, y;
    bool operator==(const P& o) const { return x == o.x && y == o.y; }
  };
  static int orient(const P& a, const P& b, const P& c) {
    return sgn((b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x));
  }
  static int dot_sign(const P& a, const P& b, const P& c) {
    return sgn((b.x - a.x) * (c.x - a.x) + (b.y - a.y) * (c.y - a.y));
  }
  static bool on_segment(const P& a, const P& b, const P& c) {
    return dot_sign(a, b, c) >= 0 && dot_sign(b, a, c) >= 0;
  }
  static cplx approx(const P& a) { return {a.x.get_d(), a.y.get_d()}; }
};

template <class Pred>
bool segments_touch(const typename Pred::P& a, const typename Pred::P& b, const typename Pred::P& c,
                    const typename Pred::P& d) {
  int o1 = Pred::orient(a, b, c), o2 = Pred::orient(a, b, d);
  int o3 = Pred::orient(c, d, a), o4 = Pred::orient(c, d, b);
  if (o1 * o2 < 0 && o3 * o4 < 0) return true;
  if (o1 == 0 && Pred::on_segment(a, b, c)) return true;
  if (o2 == 0 && Pred::on_segment(a, b, d)) return true;
  if (o3 == 0 && Pred::on_segment(c, d, a)) return true;
  if (o4 == 0 && Pred::on_segment(c, d, b)) return true;
  return false;
}

template <class Pred>
bool simple_polygon(std::vector<typename Pred::P> pts) {
  // drop zero-length edges
  std::vector<typename Pred::P> v;
  for (const auto& p : pts)
    if (v.empty() || !(v.back() == p)) v.push_back(p);
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();
  const std::size_t n = v.size();
  if (n < 3) return false;
  // padded floating bounding boxes prune pairs that cannot meet
  std::vector<std::array<double, 4>> box(n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx a = Pred::approx(v[i]), b = Pred::approx(v[(i + 1) % n]);
    const double pad = 1e-6 * (1 + std::abs(a) + std::abs(b));
    box[i] = {std::min(a.real(), b.real()) - pad, std::max(a.real(), b.real()) + pad,
              std::min(a.imag(), b.imag()) - pad, std::max(a.imag(), b.imag()) + pad};
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return box[x][0] < box[y][0]; });
  for (std::size_t oi = 0; oi < n; ++oi) {
    for (std::size_t oj = oi + 1; oj < n && box[order[oj]][0] <= box[order[oi]][1]; ++oj) {
      std::size_t i = std::min(order[oi], order[oj]), j = std::max(order[oi], order[oj]);
      if (box[i][2] > box[j][3] || box[j][2] > box[i][3]) continue;
      const auto& a = v[i];
      const auto& b = v[(i + 1) % n];
      const auto& c = v[j];
      const auto& d = v[(j + 1) % n];
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // shared vertex; reject a fold back along the previous edge
        const auto& shared = (j == i + 1) ? b : a;
        const auto& p = (j == i + 1) ? a : b;
        const auto& q = (j == i + 1) ? d : c;
        if (Pred::orient(p, shared, q) == 0 && Pred::dot_sign(shared, p, q) > 0) return false;
        continue;
      }
      if (segments_touch<Pred>(a, b, c, d)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_simple(const std::vector<RingElement>& poly) { return simple_polygon<ExactRing>(poly); }

bool is_simple(const std::vector<cplx>& poly) {
  // Snap to a dyadic grid about 2^-32 of the polygon's extent, so that
  // vertices which coincide up to rounding are compared as equal.
  double extent = 0;
  for (const auto& z : poly) extent = std::max({extent, std::abs(z.real()), std::abs(z.imag())});
  const int e = extent > 0 ? std::ilogb(extent) - 32 : 0;
  std::vector<ExactDouble::P> p;
  for (const auto& z : poly) {
    const double x = std::ldexp(std::nearbyint(std::ldexp(z.real(), -e)), e);
    const double y = std::ldexp(std::nearbyint(std::ldexp(z.imag(), -e)), e);
    p.push_back({mpq_class(x), mpq_class(y)});
  }
  return simple_polygon<ExactDouble>(p);
}

// ---- clusters and control points ----

int cluster_of(int tile) {
  static const int c[9] = {0, 0, 1, 1, 2, 2, 0, 3, 4};
  return c[tile];
}

int cluster_representative(int cluster) {
  static const int r[5] = {Gamma, Lambda, Pi, Phi, Psi};
  return r[cluster];
}

bool is_representative(int tile) { return cluster_representative(cluster_of(tile)) == tile; }

const std::vector<std::string>& cluster_names() {
  static const std::vector<std::string> v = {"Gamma+Delta+Sigma", "Lambda+Theta", "Pi+Xi", "Phi",
                                             "Psi"};
  return v;
}

const RingElement& control_offset(int cluster) {
  // One point per cluster in the representative's frame, chosen in the unique
  // residue class mod L that puts every control point of a patch grown from
  // the origin into L itself, and nearest to the cluster's area centroid.
  static const std::array<RingElement, 5> o = {
      RingElement(-17, -2, 2, -1),  // Gamma (+Delta+Sigma)
      RingElement(-1, 8, 1, -2),    // Lambda (+Theta)
      RingElement(-1, 8, 1, -2),    // Pi (+Xi)
      RingElement(-7, 11, 1, -2),   // Phi
      RingElement(-24, -3, 3, 0),   // Psi
  };
  return o.at(cluster);
}

RingElement control_point(int tile, int rot, const RingElement& translation) {
  return translation + xi_pow(rot) * control_offset(cluster_of(tile));
}

std::vector<PartnerPlacement> cluster_partners(int cluster) {
  switch (cluster) {
    case 0:
      return {{Delta, 5, RingElement(4, -2, -1, -1)}, {Sigma, 1, RingElement(4, -2, -1, -1)}};
    case 1: return {{Theta, 5, RingElement(1, -2, 2, -1)}};
    case 2: return {{Xi, 5, RingElement(1, -2, 2, -1)}};
    default: return {};
  }
}

// ---- Tile(a, b) ----

const std::array<TileABEdge, 14>& tile_ab_sequence() {
  static const std::array<TileABEdge, 14> s = {{{true, 0},
                                                {true, 5},
                                                {false, 5},
                                                {false, 0},
                                                {true, 0},
                                                {true, 1},
                                                {false, 1},
                                                {false, 2},
                                                {true, 2},
                                                {true, 3},
                                                {true, 3},
                                                {true, 4},
                                                {false, 4},
                                                {false, 3}}};
  return s;
}

std::vector<cplx> build_tile_ab(cplx a, cplx b) {
  std::vector<cplx> v;
  cplx z(0, 0);
  const cplx ib = cplx(0, 1) * b;
  for (const auto& e : tile_ab_sequence()) {
    v.push_back(z);
    cplx w = std::polar(1.0, M_PI * e.k / 3.0);
    z += (e.is_a ? a : ib) * w;
  }
  return v;
}

double polygon_area(const std::vector<cplx>& poly) {
  double s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const cplx& p = poly[i];
    const cplx& q = poly[(i + 1) % poly.size()];
    s += p.real() * q.imag() - p.imag() * q.real();
  }
  return 0.5 * s;
}

}  // namespace caspr
