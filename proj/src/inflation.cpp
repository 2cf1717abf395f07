#include "caspr/inflation.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "caspr/complex_data.hpp"
#include "caspr/linalg.hpp"
#include "caspr/rng.hpp"
#include "caspr/supertile_rule.hpp"

namespace caspr {

// ---- integral points ----

namespace {

using i128 = __int128;

std::int64_t narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("patch coordinate exceeds 64 bits");
  return static_cast<std::int64_t>(v);
}

// (a + b xi)(c + d xi) with xi^2 = xi - 1
std::pair<i128, i128> xi_mul(i128 a, i128 b, i128 c, i128 d) {
  return {a * c - b * d, a * d + b * c + b * d};
}

}  // namespace

IntPt to_intpt(const RingElement& x) {
  if (!x.is_integral()) throw std::domain_error("to_intpt: element is not integral");
  IntPt p;
  for (int i = 0; i < 4; ++i) {
    mpz_class z = x[i].get_num();
    if (!z.fits_slong_p()) throw std::overflow_error("to_intpt: coordinate out of range");
    p[i] = z.get_si();
  }
  return p;
}

RingElement to_ring(const IntPt& p) {
  return RingElement(Rational(mpz_class(static_cast<long>(p[0]))), Rational(mpz_class(static_cast<long>(p[1]))),
                     Rational(mpz_class(static_cast<long>(p[2]))), Rational(mpz_class(static_cast<long>(p[3]))));
}

IntPt add(const IntPt& a, const IntPt& b) {
  IntPt r;
  for (int i = 0; i < 4; ++i)
    if (__builtin_add_overflow(a[i], b[i], &r[i])) throw std::overflow_error("patch coordinate exceeds 64 bits");
  return r;
}

IntPt sub(const IntPt& a, const IntPt& b) {
  IntPt r;
  for (int i = 0; i < 4; ++i)
    if (__builtin_sub_overflow(a[i], b[i], &r[i])) throw std::overflow_error("patch coordinate exceeds 64 bits");
  return r;
}

IntPt mul(const IntPt& a, const IntPt& b) {
  // (A + B lam)(C + D lam) = (AC - BD) + (AD + BC + 8 BD) lam
  auto ac = xi_mul(a[0], a[1], b[0], b[1]);
  auto bd = xi_mul(a[2], a[3], b[2], b[3]);
  auto ad = xi_mul(a[0], a[1], b[2], b[3]);
  auto bc = xi_mul(a[2], a[3], b[0], b[1]);
  return {narrow(ac.first - bd.first), narrow(ac.second - bd.second),
          narrow(ad.first + bc.first + 8 * bd.first), narrow(ad.second + bc.second + 8 * bd.second)};
}

IntPt conj(const IntPt& a) {
  return {narrow(i128(a[0]) + a[1]), narrow(-i128(a[1])), narrow(i128(a[2]) + a[3]), narrow(-i128(a[3]))};
}

IntPt xi_pow_times(int m, const IntPt& a) {
  m = ((m % 6) + 6) % 6;
  IntPt r = a;
  for (int k = 0; k < m; ++k) {
    // xi (u + v xi) = -v + (u + v) xi
    r = {narrow(-i128(r[1])), narrow(i128(r[0]) + r[1]), narrow(-i128(r[3])), narrow(i128(r[2]) + r[3])};
  }
  return r;
}

IntPt half_step(const IntPt& a) {
  static const IntPt mu3{0, 1, -1, 1};  // 3 mu
  IntPt t = mul(mu3, conj(a));
  for (auto& v : t) {
    if (v % 3 != 0) throw std::domain_error("half_step: result is not integral");
    v /= 3;
  }
  return t;
}

cplx embed(const IntPt& a) {
  static const cplx w(0.5, std::sqrt(3.0) / 2);
  return (double(a[0]) + double(a[1]) * w) + kLambda * (double(a[2]) + double(a[3]) * w);
}

cplx embed_internal(const IntPt& a) {
  static const cplx w(0.5, -std::sqrt(3.0) / 2);
  return (double(a[0]) + double(a[1]) * w) + (8.0 - kLambda) * (double(a[2]) + double(a[3]) * w);
}

// ---- placements ----

namespace {

// integral vertices of each tile type at each rotation
const std::vector<IntPt>& tile_vertices_int(int tile, int rot) {
  static const auto table = [] {
    std::array<std::array<std::vector<IntPt>, 6>, 9> t;
    for (int i = 0; i < 9; ++i)
      for (int r = 0; r < 6; ++r)
        for (const auto& v : tile_polygon(i, r).vertices) t[i][r].push_back(to_intpt(v));
    return t;
  }();
  return table[tile][rot];
}

struct IntChild {
  int tile, rot;
  IntPt offset;
};

const std::array<std::vector<IntChild>, 9>& int_rule() {
  static const auto r = [] {
    std::array<std::vector<IntChild>, 9> out;
    for (int t = 0; t < 9; ++t)
      for (const auto& c : supertile_rule()[t]) out[t].push_back({c.tile, c.rot, to_intpt(c.offset)});
    return out;
  }();
  return r;
}

void append_children(const Placement& p, std::vector<Placement>& out) {
  const IntPt base = half_step(p.pos);
  for (const auto& c : int_rule()[p.tile]) {
    Placement q;
    q.tile = c.tile;
    q.rot = ((c.rot - p.rot) % 6 + 6) % 6;
    q.hand = p.hand;
    q.pos = add(base, xi_pow_times(-p.rot, c.offset));
    out.push_back(q);
  }
}

std::vector<IntPt> placement_vertices(const Placement& p) {
  std::vector<IntPt> v;
  for (const auto& x : tile_vertices_int(p.tile, p.rot)) v.push_back(add(p.pos, x));
  return v;
}

}  // namespace

GeomTile placement_polygon(const Placement& p) {
  GeomTile g = tile_polygon(p.tile, p.rot, p.hand);
  RingElement t = to_ring(p.pos);
  for (auto& v : g.vertices) v += t;
  return g;
}

std::vector<cplx> placement_polygon_embedded(const Placement& p) {
  std::vector<cplx> out;
  if (p.hand == Hand::Right) {
    for (const auto& v : placement_vertices(p)) out.push_back(embed(v));
  } else {
    for (const auto& v : placement_polygon(p).vertices) out.push_back(v.embed());
  }
  return out;
}

RingElement placement_control_point(const Placement& p) {
  if (!is_representative(p.tile)) throw std::invalid_argument("control point requested for a non-representative tile");
  return control_point(p.tile, p.rot, to_ring(p.pos));
}

void Patch::canonicalize() { std::sort(tiles.begin(), tiles.end()); }

Patch seed_patch(int tile) {
  Patch p;
  p.tiles.push_back(Placement{tile, 0, Hand::Right, {0, 0, 0, 0}});
  p.seed = tile;
  p.steps = 0;
  return p;
}

Patch inflate_once(const Patch& p) {
  Patch out;
  out.parity = 1 - p.parity;
  out.projection = p.projection;
  out.seed = p.seed;
  out.steps = p.steps < 0 ? -1 : p.steps + 1;
  const std::size_t n = p.tiles.size();
  // offsets of each parent's children in the output
  std::vector<std::size_t> start(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) start[i + 1] = start[i] + int_rule()[p.tiles[i].tile].size();
  out.tiles.resize(start[n]);
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t nthreads = n < 4096 ? 1 : std::min<std::size_t>(hw, 16);
  auto work = [&](std::size_t lo, std::size_t hi) {
    std::vector<Placement> buf;
    for (std::size_t i = lo; i < hi; ++i) {
      buf.clear();
      append_children(p.tiles[i], buf);
      std::copy(buf.begin(), buf.end(), out.tiles.begin() + static_cast<std::ptrdiff_t>(start[i]));
    }
  };
  if (nthreads == 1) {
    work(0, n);
  } else {
    std::vector<std::thread> th;
    std::vector<std::exception_ptr> errs(nthreads);
    for (std::size_t k = 0; k < nthreads; ++k) {
      std::size_t lo = n * k / nthreads, hi = n * (k + 1) / nthreads;
      th.emplace_back([&, lo, hi, k] {
        try {
          work(lo, hi);
        } catch (...) {
          errs[k] = std::current_exception();
        }
      });
    }
    for (auto& t : th) t.join();
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
  }
  return out;
}

Patch inflate_squared(const Patch& p) {
  if (p.parity != 0) throw std::invalid_argument("inflate_squared: patch has odd parity");
  return inflate_once(inflate_once(p));
}

namespace {

std::array<std::array<std::uint64_t, 9>, 9> child_count_matrix() {
  std::array<std::array<std::uint64_t, 9>, 9> m{};
  for (int t = 0; t < 9; ++t)
    for (const auto& c : supertile_rule()[t]) ++m[c.tile][t];
  return m;
}

}  // namespace

std::uint64_t predicted_tile_count(int seed, int steps) {
  auto m = child_count_matrix();
  std::array<std::uint64_t, 9> v{};
  v[seed] = 1;
  for (int s = 0; s < steps; ++s) {
    std::array<std::uint64_t, 9> w{};
    for (int i = 0; i < 9; ++i)
      for (int j = 0; j < 9; ++j) w[i] += m[i][j] * v[j];
    v = w;
  }
  std::uint64_t total = 0;
  for (auto x : v) total += x;
  return total;
}

Patch generate_patch(int seed, int steps, std::size_t tile_budget) {
  if (seed < 0 || seed >= kNumTileTypes) throw std::invalid_argument("generate_patch: unknown seed tile");
  if (steps < 0) throw std::invalid_argument("generate_patch: negative step count");
  if (predicted_tile_count(seed, steps) > tile_budget)
    throw std::length_error("generate_patch: patch exceeds the tile budget");
  Patch p = seed_patch(seed);
  for (int s = 0; s < steps; ++s) p = inflate_once(p);
  p.canonicalize();
  return p;
}

void for_each_tile(int seed, int steps, const std::function<void(const Placement&)>& fn) {
  std::function<void(const Placement&, int)> rec = [&](const Placement& p, int depth) {
    if (depth == 0) {
      fn(p);
      return;
    }
    std::vector<Placement> kids;
    append_children(p, kids);
    for (const auto& k : kids) rec(k, depth - 1);
  };
  rec(seed_patch(seed).tiles[0], steps);
}

std::array<std::uint64_t, 9> type_counts(const Patch& p) {
  std::array<std::uint64_t, 9> c{};
  for (const auto& t : p.tiles) ++c[t.tile];
  return c;
}

// ---- abelianization ----

namespace {

struct SideRec {
  int edge, m, sign;  // world label sign * r^m * edge
};

using IntEdge = std::pair<IntPt, IntPt>;

}  // namespace

AbelianReport abelianize() {
  AbelianReport rep;
  rep.face = GroupRingMatrix(face_labels(), face_labels());
  rep.edge = GroupRingMatrix(edge_labels(), edge_labels());
  std::array<bool, 8> edge_seen{};
  rep.edge_words_consistent = true;
  rep.corners_match = true;
  rep.outline_simple = true;
  rep.areas_match = true;

  for (int t = 0; t < kNumTileTypes; ++t) {
    const auto& kids = supertile_rule()[t];
    RealQuadratic child_area;
    std::map<IntEdge, SideRec> edges;
    for (const auto& c : kids) {
      rep.face(c.tile, t) += GRPoly::monomial(c.rot);
      child_area += tile_area(c.tile);
      Placement q{c.tile, c.rot, Hand::Right, to_intpt(c.offset)};
      auto v = placement_vertices(q);
      const auto& hex = comb_hexagons()[c.tile];
      for (int k = 0; k < 6; ++k) {
        const auto& s = hex.sides[k];
        edges[{v[k], v[(k + 1) % 6]}] = SideRec{s.edge, (s.m + c.rot) % 6, s.sign};
      }
    }

    // boundary edges of the children's union, keyed by start point
    std::map<IntPt, std::pair<IntPt, SideRec>> boundary;
    for (const auto& [e, s] : edges)
      if (!edges.count({e.second, e.first})) {
        if (boundary.count(e.first)) rep.corners_match = false;  // boundary is not a simple curve
        boundary[e.first] = {e.second, s};
      }

    std::array<IntPt, 6> corner;
    const auto& pv = tile_vertices(t);
    for (int j = 0; j < 6; ++j) {
      corner[j] = to_intpt(half_step_point(pv[j]));
      if (!boundary.count(corner[j])) rep.corners_match = false;
    }
    if (!rep.corners_match) continue;

    std::size_t walked = 0;
    std::array<std::vector<RingElement>, 6> runs;
    for (int k = 0; k < 6; ++k) {
      // parent side k, reflected, is the counterclockwise boundary run c_{k+1} -> c_k
      std::vector<GRPoly> chain(kNumEdgeTypes);
      IntPt at = corner[(k + 1) % 6];
      const IntPt& stop = corner[k];
      std::size_t guard = 0;
      while (at != stop) {
        auto it = boundary.find(at);
        if (it == boundary.end() || ++guard > boundary.size()) {
          rep.corners_match = false;
          break;
        }
        const SideRec& s = it->second.second;
        runs[k].push_back(to_ring(at));
        chain[s.edge] += GRPoly::monomial(s.m, s.sign);
        at = it->second.first;
        ++walked;
      }
      if (!rep.corners_match) break;
      const SideLabel& side = comb_hexagons()[t].sides[k];
      GRPoly factor = GRPoly::monomial(side.m, -side.sign);
      std::vector<GRPoly> word(kNumEdgeTypes);
      for (int e = 0; e < kNumEdgeTypes; ++e) word[e] = (factor * chain[e]).reduced(edge_labels()[e].kind);
      if (!edge_seen[side.edge]) {
        edge_seen[side.edge] = true;
        for (int e = 0; e < kNumEdgeTypes; ++e) rep.edge(e, side.edge) = word[e];
      } else {
        for (int e = 0; e < kNumEdgeTypes; ++e)
          if (rep.edge(e, side.edge) != word[e]) rep.edge_words_consistent = false;
      }
    }
    if (rep.corners_match && walked != boundary.size()) rep.corners_match = false;
    if (!rep.corners_match) continue;
    // the runs join up in the order c_0 -> c_5 -> ... -> c_1 -> c_0
    std::vector<RingElement> outline;
    for (int k = 5; k >= 0; --k) outline.insert(outline.end(), runs[k].begin(), runs[k].end());
    if (!is_simple(outline)) rep.outline_simple = false;
    if (!(signed_area(outline) == child_area)) rep.areas_match = false;
  }

  auto compare = [&](const GroupRingMatrix& got, const GroupRingMatrix& want, const char* what,
                     const std::vector<std::string>& rn, const std::vector<std::string>& cn) {
    GroupRingMatrix a = got.reduced(), b = want.reduced();
    bool ok = true;
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j)
        if (a(i, j) != b(i, j)) {
          ok = false;
          rep.diffs.push_back(std::string(what) + "[" + rn[i] + "," + cn[j] + "]: rule gives " + a(i, j).str() +
                              ", stored " + b(i, j).str());
        }
    return ok;
  };
  rep.face_matches = compare(rep.face, face_substitution(), "M2*", tile_names(), tile_names());
  rep.edge_matches = compare(rep.edge, edge_substitution(), "M1*", edge_names(), edge_names());
  return rep;
}

// ---- edge eigen-identity ----

bool EigenCheck::exact_zero() const {
  for (const auto& r : residual)
    if (!r.is_zero()) return false;
  return !residual.empty();
}

namespace {

RingElement cyc_to_ring(const CycQ& c) { return RingElement(c.a(), c.b(), Rational(0), Rational(0)); }

std::vector<RingElement> row_times(const std::vector<RingElement>& v, const Matrix<CycQ>& m) {
  std::vector<RingElement> out(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero()) out[j] += v[i] * cyc_to_ring(m(i, j));
  return out;
}

double numeric_residual(const std::vector<RingElement>& e, const Matrix<CycQ>& m, const Matrix<CycQ>& mb) {
  const std::size_t n = e.size();
  std::vector<cplx> v(n), w(n, 0.0), u(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) v[i] = e[i].embed();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) w[j] += v[i] * m(i, j).to_complex();
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) u[j] += w[i] * mb(i, j).to_complex();
  double r = 0;
  for (std::size_t i = 0; i < n; ++i) r = std::max(r, std::abs(u[i] - kLambda * v[i]));
  return r;
}

}  // namespace

EigenCheck edge_eigencheck() {
  EigenCheck out;
  const Matrix<CycQ> m = edge_substitution().evaluate(1);
  const Matrix<CycQ> mb = edge_substitution().evaluate(5);  // entrywise conjugate
  std::vector<RingElement> e;
  for (int i = 0; i < kNumEdgeTypes; ++i) e.push_back(edge_base(i));
  auto img = row_times(row_times(e, m), mb);
  for (int i = 0; i < kNumEdgeTypes; ++i) out.residual.push_back(img[i] - lam() * e[i]);
  out.numeric_residual = numeric_residual(e, m, mb);
  auto bad = e;
  bad[Alpha] += RingElement(1, 0, 0, 0);
  out.perturbed_residual = numeric_residual(bad, m, mb);
  return out;
}

// ---- frequencies ----

namespace {

Matrix<RealQuadratic> face_matrix_at_one() {
  const auto& m2 = face_substitution();
  Matrix<RealQuadratic> a(9, 9);
  for (int i = 0; i < 9; ++i)
    for (int j = 0; j < 9; ++j) a(i, j) = RealQuadratic(m2(i, j).evaluate(0).a());
  return a;
}

std::array<RealQuadratic, 9> pf_vector(bool left) {
  Matrix<RealQuadratic> a = face_matrix_at_one();
  for (int i = 0; i < 9; ++i) a(i, i) -= RealQuadratic(0, 1);
  Matrix<RealQuadratic> k = left_kernel(left ? a : a.transposed());
  if (k.rows() != 1) throw std::logic_error("Perron-Frobenius eigenspace is not one-dimensional");
  std::array<RealQuadratic, 9> v;
  for (int i = 0; i < 9; ++i) v[i] = k(0, i);
  RealQuadratic norm;
  if (left) {
    norm = v[0];
  } else {
    for (const auto& x : v) norm += x;
  }
  for (auto& x : v) x = x / norm;
  return v;
}

}  // namespace

std::array<RealQuadratic, 9> frequency_vector() {
  static const auto f = pf_vector(false);
  return f;
}

std::array<RealQuadratic, 9> left_pf_vector() {
  static const auto l = pf_vector(true);
  return l;
}

bool is_eigenvector(const std::array<RealQuadratic, 9>& v, bool left) {
  Matrix<RealQuadratic> a = face_matrix_at_one();
  const RealQuadratic l(0, 1);
  for (int i = 0; i < 9; ++i) {
    RealQuadratic s;
    for (int j = 0; j < 9; ++j) s += (left ? a(j, i) : a(i, j)) * v[j];
    if (!(s == l * v[i])) return false;
  }
  return true;
}

// ---- clusters ----

namespace {

std::set<IntEdge> directed_edge_set(const Patch& p) {
  std::set<IntEdge> out;
  for (const auto& t : p.tiles) {
    auto v = placement_vertices(t);
    for (std::size_t k = 0; k < v.size(); ++k) out.insert({v[k], v[(k + 1) % v.size()]});
  }
  return out;
}

bool on_rim(const Placement& t, const std::set<IntEdge>& edges) {
  auto v = placement_vertices(t);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (!edges.count({v[(k + 1) % v.size()], v[k]})) return true;
  return false;
}

}  // namespace

ClusterCheck cluster_check(const Patch& p) {
  ClusterCheck c;
  c.counts = type_counts(p);
  c.gamma_delta_sigma_equal = c.counts[Gamma] == c.counts[Delta] && c.counts[Gamma] == c.counts[Sigma];
  c.lambda_theta_equal = c.counts[Lambda] == c.counts[Theta];
  c.xi_minus_pi = static_cast<std::int64_t>(c.counts[Xi]) - static_cast<std::int64_t>(c.counts[Pi]);
  const std::set<Placement> all(p.tiles.begin(), p.tiles.end());
  const auto edges = directed_edge_set(p);
  for (const auto& t : p.tiles) {
    const int cl = cluster_of(t.tile);
    const int rep_tile = cluster_representative(cl);
    std::vector<Placement> mates;
    if (t.tile == rep_tile) {
      for (const auto& pp : cluster_partners(cl))
        mates.push_back({pp.tile, (t.rot + pp.drot) % 6, t.hand, add(t.pos, xi_pow_times(t.rot, to_intpt(pp.offset)))});
    } else {
      for (const auto& pp : cluster_partners(cl)) {
        if (pp.tile != t.tile) continue;
        Placement r{rep_tile, ((t.rot - pp.drot) % 6 + 6) % 6, t.hand, {}};
        r.pos = sub(t.pos, xi_pow_times(r.rot, to_intpt(pp.offset)));
        mates.push_back(r);
      }
    }
    bool complete = true;
    for (const auto& m : mates)
      if (!all.count(m)) complete = false;
    if (!complete) {
      ++c.broken;
      if (!on_rim(t, edges)) ++c.broken_interior;
    }
  }
  return c;
}

// ---- disjointness ----

namespace {

bool point_in_polygon(cplx pt, const std::vector<cplx>& poly) {
  bool in = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const cplx& a = poly[i];
    const cplx& b = poly[j];
    if ((a.imag() > pt.imag()) != (b.imag() > pt.imag())) {
      double x = (b.real() - a.real()) * (pt.imag() - a.imag()) / (b.imag() - a.imag()) + a.real();
      if (pt.real() < x) in = !in;
    }
  }
  return in;
}

// centroid of a convex corner triangle that contains no other vertex
cplx interior_point(const std::vector<cplx>& v) {
  const std::size_t n = v.size();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx a = v[(k + n - 1) % n], b = v[k], c = v[(k + 1) % n];
    const double cross = std::imag(std::conj(b - a) * (c - b));
    if (cross <= 0) continue;
    bool empty = true;
    std::vector<cplx> tri{a, b, c};
    for (std::size_t j = 0; j < n; ++j) {
      if (j == k || j == (k + 1) % n || j == (k + n - 1) % n) continue;
      if (point_in_polygon(v[j], tri)) empty = false;
    }
    if (empty) return (a + b + c) / 3.0;
  }
  throw std::logic_error("polygon has no ear");
}

}  // namespace

std::vector<std::vector<RingElement>> patch_boundary(const Patch& p) {
  const auto edges = directed_edge_set(p);
  std::map<IntPt, std::vector<IntPt>> next;
  for (const auto& e : edges)
    if (!edges.count({e.second, e.first})) next[e.first].push_back(e.second);
  std::vector<std::vector<RingElement>> cycles;
  while (!next.empty()) {
    std::vector<RingElement> cyc;
    IntPt start = next.begin()->first, at = start;
    do {
      auto it = next.find(at);
      if (it == next.end()) break;  // open chain; reported as its own curve
      cyc.push_back(to_ring(at));
      IntPt to = it->second.back();
      it->second.pop_back();
      if (it->second.empty()) next.erase(it);
      at = to;
    } while (at != start);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

OverlapCheck overlap_check(const Patch& p, std::size_t samples, std::uint64_t rng_seed) {
  OverlapCheck out;
  std::set<IntEdge> directed;
  out.directed_edges_unique = true;
  for (const auto& t : p.tiles) {
    auto v = placement_vertices(t);
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!directed.insert({v[k], v[(k + 1) % v.size()]}).second) out.directed_edges_unique = false;
  }
  auto counts = type_counts(p);
  for (int i = 0; i < 9; ++i)
    out.total_area += RealQuadratic(Rational(mpz_class(static_cast<unsigned long>(counts[i])))) * tile_area(i);
  const auto cycles = patch_boundary(p);
  out.boundary_simple = cycles.size() == 1 && is_simple(cycles[0]);
  out.area_accounting = out.boundary_simple && signed_area(cycles[0]) == out.total_area;

  if (p.tiles.empty() || samples == 0) return out;
  std::vector<std::vector<cplx>> polys;
  std::vector<std::array<double, 4>> box;
  for (const auto& t : p.tiles) {
    polys.push_back(placement_polygon_embedded(t));
    std::array<double, 4> b{1e300, -1e300, 1e300, -1e300};
    for (const auto& z : polys.back()) {
      b[0] = std::min(b[0], z.real());
      b[1] = std::max(b[1], z.real());
      b[2] = std::min(b[2], z.imag());
      b[3] = std::max(b[3], z.imag());
    }
    box.push_back(b);
  }
  Rng rng(rng_seed);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t i = rng.below(polys.size());
    const cplx pt = interior_point(polys[i]);
    ++out.samples;
    std::size_t hits = 0;
    for (std::size_t j = 0; j < polys.size(); ++j) {
      const auto& b = box[j];
      if (pt.real() < b[0] || pt.real() > b[1] || pt.imag() < b[2] || pt.imag() > b[3]) continue;
      if (point_in_polygon(pt, polys[j])) ++hits;
    }
    if (hits != 1) ++out.violations;
  }
  return out;
}

// ---- border forcing ----

namespace {

struct EdgeOccurrence {
  int edge;
  int m;       // canonical rotation (0..5, or 0..2 for eta)
  IntPt start;
  Placement a, b;  // the two tiles sharing the edge
};

// canonical (start, rotation) of the side k of placement p
std::pair<IntPt, int> canonical_side(const Placement& p, int k, const std::vector<IntPt>& v) {
  const SideLabel& s = comb_hexagons()[p.tile].sides[k];
  int m = (s.m + p.rot) % 6;
  bool forward = s.sign > 0;
  if (s.edge == Eta && m >= 3) {
    m -= 3;
    forward = !forward;
  }
  return {forward ? v[k] : v[(k + 1) % 6], m};
}

std::vector<Placement> descendants(const Placement& p, int depth) {
  std::vector<Placement> cur{p}, next;
  for (int d = 0; d < depth; ++d) {
    next.clear();
    for (const auto& q : cur) append_children(q, next);
    cur.swap(next);
  }
  return cur;
}

std::vector<Placement> environment(const EdgeOccurrence& e, int depth) {
  auto da = descendants(e.a, depth), db = descendants(e.b, depth);
  std::set<IntEdge> b_edges;
  for (const auto& q : db) {
    auto v = placement_vertices(q);
    for (int k = 0; k < 6; ++k) b_edges.insert({v[k], v[(k + 1) % 6]});
  }
  std::set<std::size_t> a_touch;
  std::set<IntEdge> shared;
  for (std::size_t i = 0; i < da.size(); ++i) {
    auto v = placement_vertices(da[i]);
    for (int k = 0; k < 6; ++k)
      if (b_edges.count({v[(k + 1) % 6], v[k]})) {
        a_touch.insert(i);
        shared.insert({v[(k + 1) % 6], v[k]});
      }
  }
  std::vector<Placement> env;
  for (auto i : a_touch) env.push_back(da[i]);
  for (const auto& q : db) {
    auto v = placement_vertices(q);
    for (int k = 0; k < 6; ++k)
      if (shared.count({v[k], v[(k + 1) % 6]})) {
        env.push_back(q);
        break;
      }
  }
  // normalize into the frame of the (inflated) edge
  IntPt s = e.start;
  for (int d = 0; d < depth; ++d) s = half_step(s);
  const int m = (depth % 2 == 0) ? e.m : -e.m;
  for (auto& q : env) {
    q.rot = ((q.rot - m) % 6 + 6) % 6;
    q.pos = xi_pow_times(-m, sub(q.pos, s));
  }
  std::sort(env.begin(), env.end());
  return env;
}

}  // namespace

BorderForceReport border_force_check(const Patch& p) {
  BorderForceReport rep;
  // shared edges: directed edge -> (tile index, side)
  std::map<IntEdge, std::pair<std::size_t, int>> directed;
  std::vector<std::vector<IntPt>> verts;
  for (std::size_t i = 0; i < p.tiles.size(); ++i) {
    verts.push_back(placement_vertices(p.tiles[i]));
    for (int k = 0; k < 6; ++k) directed[{verts[i][k], verts[i][(k + 1) % 6]}] = {i, k};
  }
  // distinct depth-0 configurations, keyed by their normalized environment
  std::map<std::vector<Placement>, EdgeOccurrence> configs;
  for (const auto& [e, ik] : directed) {
    auto it = directed.find({e.second, e.first});
    if (it == directed.end()) continue;
    const auto [i, k] = ik;
    const SideLabel& s = comb_hexagons()[p.tiles[i].tile].sides[k];
    auto [start, m] = canonical_side(p.tiles[i], k, verts[i]);
    // visit each shared edge once: from the tile whose side starts at the canonical start
    if (start != e.first) continue;
    EdgeOccurrence occ{s.edge, m, start, p.tiles[i], p.tiles[it->second.first]};
    ++rep.occurrences[s.edge];
    configs.emplace(environment(occ, 0), occ);
  }
  std::array<std::array<std::set<std::vector<Placement>>, 3>, 8> envs;
  for (const auto& [key, occ] : configs) {
    envs[occ.edge][0].insert(key);
    for (int d = 1; d < 3; ++d) envs[occ.edge][d].insert(environment(occ, d));
  }
  for (int e = 0; e < 8; ++e)
    for (int d = 0; d < 3; ++d) rep.environments[e][d] = envs[e][d].size();
  return rep;
}

std::string BorderForceReport::str() const {
  std::ostringstream os;
  os << "edge      occurrences  depth0  depth1  depth2\n";
  for (int e = 0; e < 8; ++e) {
    os << edge_names()[e];
    for (std::size_t k = edge_names()[e].size(); k < 10; ++k) os << ' ';
    os << occurrences[e];
    for (std::size_t k = std::to_string(occurrences[e]).size(); k < 13; ++k) os << ' ';
    for (int d = 0; d < 3; ++d) os << environments[e][d] << (d < 2 ? "       " : "\n");
  }
  return os.str();
}

}  // namespace caspr
