#include "caspr/reprojection.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "caspr/zmodule.hpp"

namespace caspr {

namespace {

std::int64_t checked(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("hex coordinate out of range");
  return static_cast<std::int64_t>(v);
}

HexCoord from_rationals(const Rational& a, const Rational& b) {
  if (a.get_den() != 1 || b.get_den() != 1) throw std::logic_error("reprojection: non-integral image");
  return {a.get_num().get_si(), b.get_num().get_si()};
}

// x = sum c_i b_i in the basis 1, xi, lam, lam*xi; integral
std::array<std::int64_t, 4> int_coords(const RingElement& x) {
  if (!x.is_integral()) throw std::invalid_argument("reprojection: element is not integral");
  std::array<std::int64_t, 4> c;
  for (int i = 0; i < 4; ++i) c[i] = x[i].get_num().get_si();
  return c;
}

// Exact Gaussian elimination on augmented rows [A | b]; returns the rank of A,
// whether the system is consistent, and the solution with free variables 0.
struct Solved {
  std::size_t rank = 0;
  bool consistent = false;
  std::vector<Rational> x;
};

Solved solve_exact(std::vector<std::vector<Rational>> rows, std::size_t n) {
  Solved s;
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && sgn(rows[p][c]) == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = c; j <= n; ++j) rows[i][j] -= f * rows[r][j];
    }
    piv.push_back(c);
    ++r;
  }
  s.rank = r;
  s.consistent = true;
  for (std::size_t i = r; i < rows.size(); ++i)
    if (sgn(rows[i][n]) != 0) s.consistent = false;
  s.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < r; ++i) s.x[piv[i]] = rows[i][n];
  return s;
}

// Solve for the basis images and vertex shifts from the slot targets. The
// shift of p is fixed to zero (a global translation is otherwise free).
ReprojectionMap solve_map(const std::string& name, double scale, const std::array<HexCoord, 8>& targets) {
  ReprojectionMap m;
  m.name = name;
  m.scale = scale;
  m.slot_targets = targets;
  // unknowns: 4 basis images (2 each), then shifts of labels 1..9 (2 each)
  constexpr std::size_t n = 8 + 18;
  auto shift_col = [](int label) { return 8 + 2 * static_cast<std::size_t>(label - 1); };
  std::vector<std::vector<Rational>> rows;
  for (int t = 0; t < kNumEdgeTypes; ++t) {
    const auto [start, end] = edge_endpoints(t);
    for (int k = 0; k < edge_info(t).orientations; ++k) {
      const auto c = int_coords(edge_vector(t, k));
      const HexCoord target = xi_times(k, targets[t]);
      const int ls = vertex_label_index(rotate_label(start, k));
      const int le = vertex_label_index(rotate_label(end, k));
      for (int comp = 0; comp < 2; ++comp) {
        std::vector<Rational> row(n + 1, Rational(0));
        for (int i = 0; i < 4; ++i) row[2 * i + comp] += c[i];
        if (le != 0) row[shift_col(le) + comp] += 1;
        if (ls != 0) row[shift_col(ls) + comp] -= 1;
        row[n] = comp == 0 ? target.a : target.b;
        rows.push_back(std::move(row));
      }
    }
  }
  m.constraints = rows.size() / 2;
  m.unknowns = n;
  const Solved s = solve_exact(rows, n);
  m.rank = s.rank;
  m.consistent = s.consistent;
  if (!s.consistent) return m;
  for (int i = 0; i < 4; ++i) m.basis_images[i] = from_rationals(s.x[2 * i], s.x[2 * i + 1]);
  for (int l = 1; l < 10; ++l) m.vertex_shift[l] = from_rationals(s.x[shift_col(l)], s.x[shift_col(l) + 1]);

  // kernel of the linear part on L
  const auto lb = return_module().basis();
  IntMatrix img(4, 2);
  for (int i = 0; i < 4; ++i) {
    const HexCoord h = m.apply(lb[i]);
    img(i, 0) = static_cast<long>(h.a);
    img(i, 1) = static_cast<long>(h.b);
  }
  const IntMatrix ker = integer_left_kernel(img);
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    RingElement k;
    for (int i = 0; i < 4; ++i) k += lb[i] * Rational(ker(r, i));
    m.kernel_on_l.push_back(k);
  }
  return m;
}

}  // namespace

HexCoord operator+(const HexCoord& x, const HexCoord& y) {
  return {checked(static_cast<__int128>(x.a) + y.a), checked(static_cast<__int128>(x.b) + y.b)};
}

HexCoord operator-(const HexCoord& x, const HexCoord& y) {
  return {checked(static_cast<__int128>(x.a) - y.a), checked(static_cast<__int128>(x.b) - y.b)};
}

HexCoord xi_times(int m, const HexCoord& x) {
  HexCoord r = x;
  m = ((m % 6) + 6) % 6;
  for (int i = 0; i < m; ++i) r = {-r.b, checked(static_cast<__int128>(r.a) + r.b)};  // xi^2 = xi - 1
  return r;
}

cplx to_complex(const HexCoord& x) {
  return cplx(static_cast<double>(x.a) + 0.5 * static_cast<double>(x.b), std::sqrt(3.0) / 2 * static_cast<double>(x.b));
}

int vertex_label_index(const VertexLabel& v) {
  switch (v.kind) {
    case VertexKind::P: return v.rot % 2;
    case VertexKind::Q: return 2 + v.rot % 2;
    case VertexKind::S: return 4 + v.rot % 6;
  }
  return -1;
}

HexCoord ReprojectionMap::apply(const IntPt& x) const {
  __int128 a = 0, b = 0;
  for (int i = 0; i < 4; ++i) {
    a += static_cast<__int128>(x[i]) * basis_images[i].a;
    b += static_cast<__int128>(x[i]) * basis_images[i].b;
  }
  return {checked(a), checked(b)};
}

HexCoord ReprojectionMap::apply(const RingElement& x) const {
  const auto c = int_coords(x);
  return apply(IntPt{c[0], c[1], c[2], c[3]});
}

HexCoord ReprojectionMap::vertex(const IntPt& x, const VertexLabel& label) const {
  return apply(x) + vertex_shift[vertex_label_index(label)];
}

ReprojectionMap build_hex_reprojection() {
  // every edge becomes one side of a regular hexagon along its own direction
  std::array<HexCoord, 8> t;
  t.fill(HexCoord{1, 0});
  return solve_map("hex", 2 * std::sqrt(15.0), t);
}

ReprojectionMap build_metatile_reprojection() {
  // meta-tile edge vectors u + 8v for the edges u + v*lam, u, v in Z[xi]
  static const std::array<HexCoord, 8> t = {{
      {8, -6},   // alpha
      {1, 5},    // beta
      {14, -4},  // gamma
      {15, 3},   // delta
      {9, -1},   // epsilon
      {7, 4},    // zeta
      {15, 1},   // theta
      {9, 2},    // eta
  }};
  return solve_map("metatile", 2 * std::sqrt(15.0) / kLambda, t);
}

ReprojectionMap reprojection_by_name(const std::string& name) {
  if (name == "hex") return build_hex_reprojection();
  if (name == "metatile") return build_metatile_reprojection();
  throw std::invalid_argument("unknown reprojection target: " + name);
}

DeformedPatch reproject(const Patch& p, const ReprojectionMap& m) {
  if (p.parity != 0) throw std::invalid_argument("reproject: patch has odd parity");
  DeformedPatch d;
  d.projection = m.name;
  d.scale = m.scale;
  d.tiles = p.tiles;
  std::array<std::array<IntPt, 6>, 9> base;
  for (int t = 0; t < 9; ++t)
    for (int k = 0; k < 6; ++k) base[t][k] = to_intpt(tile_vertices(t)[k]);
  for (const auto& t : p.tiles) {
    if (t.hand != Hand::Right) throw std::invalid_argument("reproject: mirrored tile in an even patch");
    std::array<HexCoord, 6> lin, tgt;
    const auto& h = comb_hexagons()[t.tile];
    for (int k = 0; k < 6; ++k) {
      const IntPt v = add(t.pos, xi_pow_times(t.rot, base[t.tile][k]));
      lin[k] = m.apply(v);
      tgt[k] = m.vertex(v, rotate_label(h.vertices[k], t.rot));
    }
    d.vertices.push_back(lin);
    d.target.push_back(tgt);
    if (is_representative(t.tile))
      d.control_points.push_back({m.apply(to_intpt(control_point(t.tile, t.rot, to_ring(t.pos)))), cluster_of(t.tile), t.rot});
  }
  std::sort(d.control_points.begin(), d.control_points.end());
  return d;
}

std::vector<TaggedPoint> target_control_points(const DeformedPatch& d, const ReprojectionMap& m) {
  // offset from the first target vertex to the control point, per cluster and rotation
  std::array<std::array<HexCoord, 6>, kNumClusters> off;
  for (int cl = 0; cl < kNumClusters; ++cl) {
    const int rep = cluster_representative(cl);
    for (int r = 0; r < 6; ++r) {
      const VertexLabel v0 = rotate_label(comb_hexagons()[rep].vertices[0], r);
      off[cl][r] = m.apply(xi_pow(r) * control_offset(cl)) - m.vertex_shift[vertex_label_index(v0)];
    }
  }
  std::vector<TaggedPoint> out;
  for (std::size_t i = 0; i < d.tiles.size(); ++i) {
    const auto& t = d.tiles[i];
    if (!is_representative(t.tile)) continue;
    const int cl = cluster_of(t.tile);
    out.push_back({d.target[i][0] + off[cl][t.rot], cl, t.rot});
  }
  std::sort(out.begin(), out.end());
  return out;
}

ReprojectionCheck check_reprojection(const Patch& p, const ReprojectionMap& m) {
  ReprojectionCheck c;
  c.consistent = m.consistent;
  c.kernel_rank = m.kernel_on_l.size();
  if (!m.consistent) return c;

  c.faces_close = true;
  for (const auto& h : comb_hexagons()) {
    HexCoord sum;
    for (const auto& s : h.sides) {
      const HexCoord e = m.apply(edge_vector(s.edge, s.m)) + m.vertex_shift[vertex_label_index(rotate_label(edge_endpoints(s.edge).second, s.m))] -
                         m.vertex_shift[vertex_label_index(rotate_label(edge_endpoints(s.edge).first, s.m))];
      sum = s.sign > 0 ? sum + e : sum - e;
    }
    if (sum != HexCoord{}) c.faces_close = false;
  }

  const DeformedPatch d = reproject(p, m);
  c.regular_hexagons = true;
  std::set<std::pair<HexCoord, HexCoord>> edges;
  c.edges_unique = true;
  double disp = 0;
  std::size_t nv = 0;
  for (std::size_t i = 0; i < d.tiles.size(); ++i) {
    for (int k = 0; k < 6; ++k) {
      const HexCoord a = d.target[i][k], b = d.target[i][(k + 1) % 6];
      if (b - a != xi_times(k + 3 + d.tiles[i].rot, HexCoord{1, 0})) c.regular_hexagons = false;
      if (!edges.insert({a, b}).second) c.edges_unique = false;
    }
    const auto orig = placement_polygon_embedded(d.tiles[i]);
    for (int k = 0; k < 6; ++k) {
      disp += std::abs(m.scale * to_complex(d.vertices[i][k]) - orig[k]);
      ++nv;
    }
  }
  c.mean_displacement = nv ? disp / static_cast<double>(nv) : 0;
  c.control_points_match = d.control_points == target_control_points(d, m);
  return c;
}

cplx LinearProjection::apply(const IntPt& x) const {
  cplx z(0, 0);
  for (int i = 0; i < 4; ++i) z += static_cast<double>(x[i]) * images[i];
  return z;
}

LinearProjection caspr_projection() {
  LinearProjection l;
  const std::array<RingElement, 4> b = {RingElement(1, 0, 0, 0), xi(), lam(), lam() * xi()};
  for (int i = 0; i < 4; ++i) l.images[i] = b[i].embed();
  return l;
}

LinearProjection as_linear(const ReprojectionMap& m) {
  LinearProjection l;
  for (int i = 0; i < 4; ++i) l.images[i] = m.scale * to_complex(m.basis_images[i]);
  return l;
}

}  // namespace caspr
