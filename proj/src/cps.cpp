#include "caspr/cps.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "caspr/linalg.hpp"
#include "caspr/patch_io.hpp"
#include "caspr/rng.hpp"
#include "caspr/supertile_rule.hpp"

namespace caspr {

Vec4 lift(const RingElement& x) {
  const cplx p = x.embed(), q = x.embed_internal();
  return {p.real(), p.imag(), q.real(), q.imag()};
}

Vec4 lift(const IntPt& x) {
  const cplx p = embed(x), q = embed_internal(x);
  return {p.real(), p.imag(), q.real(), q.imag()};
}

namespace {

double det4(const std::array<Vec4, 4>& m) {
  std::array<Vec4, 4> a = m;
  double d = 1;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (a[p][c] == 0) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return d;
}

// solves x * m = v for a row vector x (m rows are basis vectors)
Vec4 solve_rows(const std::array<Vec4, 4>& m, const Vec4& v) {
  // augment the transposed system m^T x^T = v^T
  std::array<std::array<double, 5>, 4> a;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) a[i][j] = m[j][i];
    a[i][4] = v[i];
  }
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    std::swap(a[p], a[c]);
    for (int r = 0; r < 4; ++r) {
      if (r == c) continue;
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < 5; ++k) a[r][k] -= f * a[c][k];
    }
  }
  Vec4 x;
  for (int i = 0; i < 4; ++i) x[i] = a[i][4] / a[i][i];
  return x;
}

Rational isqrt_exact(const Rational& v, bool& exact) {
  mpz_class n = v.get_num(), d = v.get_den();
  mpz_class rn = sqrt(n), rd = sqrt(d);
  exact = rn * rn == n && rd * rd == d;
  return Rational(rn, rd);
}

}  // namespace

double Lattice4::covolume_numeric() const { return std::abs(det4(basis)); }

Rational Lattice4::covolume_squared() const {
  Matrix<Rational> g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = trace_form(generators[i], generators[j]);
  // determinant by elimination over Q
  Rational d = 1;
  for (std::size_t c = 0; c < 4; ++c) {
    std::size_t p = c;
    while (p < 4 && sgn(g(p, c)) == 0) ++p;
    if (p == 4) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < 4; ++k) std::swap(g(p, k), g(c, k));
      d = -d;
    }
    d *= g(c, c);
    for (std::size_t r = c + 1; r < 4; ++r) {
      Rational f = g(r, c) / g(c, c);
      for (std::size_t k = c; k < 4; ++k) g(r, k) -= f * g(c, k);
    }
  }
  return abs(d);
}

Lattice4 lattice_of(const ZModule4& m) {
  if (m.rank() != 4) throw std::invalid_argument("lattice_of: module must have rank 4");
  Lattice4 l;
  auto b = m.basis();
  for (int i = 0; i < 4; ++i) {
    l.generators[i] = b[i];
    l.basis[i] = lift(b[i]);
  }
  return l;
}

Lattice4 return_lattice() { return lattice_of(return_module()); }

CovolumeReport covolume_report() {
  CovolumeReport r;
  Lattice4 l = return_lattice();
  r.v_squared = l.covolume_squared();
  bool exact = false;
  Rational v = isqrt_exact(r.v_squared, exact);
  r.v = exact && v.get_den() == 1 ? v.get_num().get_si() : -1;
  r.numeric = l.covolume_numeric();
  r.order_v_squared = lattice_of(order_module()).covolume_squared();
  Rational ov = isqrt_exact(r.order_v_squared, exact);
  r.order_v = exact && ov.get_den() == 1 ? ov.get_num().get_si() : -1;
  r.index = module_index(order_module(), return_module());
  // 3/4 * |2 sqrt(15)|^2 * 81
  r.factored = Rational(3, 4) * Rational(60) * Rational(81);
  return r;
}

// ---- window clouds ----

WindowCloud window_from_patch(const Patch& p) {
  if (p.parity != 0) throw std::invalid_argument("window_from_patch: patch has odd parity");
  WindowCloud c;
  c.method = "project";
  std::array<std::array<IntPt, 6>, 5> offs;
  for (int cl = 0; cl < kNumClusters; ++cl)
    for (int r = 0; r < 6; ++r) offs[cl][r] = xi_pow_times(r, to_intpt(control_offset(cl)));
  for (const auto& t : p.tiles) {
    if (!is_representative(t.tile)) continue;
    const int cl = cluster_of(t.tile);
    const cplx z = embed_internal(add(t.pos, offs[cl][t.rot]));
    c.points.push_back({z.real(), z.imag(), cl, t.rot});
  }
  return c;
}

namespace {

struct ChaosChild {
  int tile, rot;
  cplx offset_internal;  // star(offset)
  double cumulative;     // cumulative transition probability
};

struct ChaosTables {
  std::array<std::vector<ChaosChild>, 9> children;
  std::array<double, 9> accept{};  // 1 / l, scaled so the largest is 1
  std::array<cplx, 5> control_internal{};
  cplx s;                // star(mu)
  std::array<cplx, 6> rot_phys{}, rot_int{};
};

const ChaosTables& chaos_tables() {
  static const ChaosTables t = [] {
    ChaosTables t;
    const auto l = left_pf_vector();
    std::array<double, 9> ld;
    for (int i = 0; i < 9; ++i) ld[i] = l[i].to_double();
    const double lmin = *std::min_element(ld.begin(), ld.end());
    for (int i = 0; i < 9; ++i) t.accept[i] = lmin / ld[i];
    for (int p = 0; p < 9; ++p) {
      double cum = 0;
      for (const auto& c : supertile_rule()[p]) {
        cum += ld[c.tile] / (kLambda * ld[p]);
        t.children[p].push_back({c.tile, c.rot, c.offset.embed_internal(), cum});
      }
      t.children[p].back().cumulative = 1.0;  // absorb rounding
    }
    for (int cl = 0; cl < 5; ++cl) t.control_internal[cl] = control_offset(cl).embed_internal();
    t.s = mu().embed_internal();
    for (int m = 0; m < 6; ++m) {
      t.rot_phys[m] = std::polar(1.0, M_PI * m / 3.0);
      t.rot_int[m] = std::conj(t.rot_phys[m]);
    }
    return t;
  }();
  return t;
}

void run_stream(std::uint64_t seed, std::uint64_t stream, std::size_t n, std::size_t burn_in,
                std::vector<CloudPoint>& out) {
  const ChaosTables& tb = chaos_tables();
  Rng rng(seed, stream);
  int tile = Gamma, rot = 0;
  cplx w(0, 0);
  std::size_t steps = 0;
  while (out.size() < n) {
    const double u = rng.uniform();
    const auto& kids = tb.children[tile];
    std::size_t k = 0;
    while (k + 1 < kids.size() && u >= kids[k].cumulative) ++k;
    const ChaosChild& c = kids[k];
    // child position mu * conj(t) + xi^(-m) o, seen in internal space
    w = tb.s * std::conj(w) + tb.rot_phys[rot] * c.offset_internal;
    rot = ((c.rot - rot) % 6 + 6) % 6;
    tile = c.tile;
    ++steps;
    if (steps <= burn_in || !is_representative(tile)) continue;
    if (rng.uniform() >= tb.accept[tile]) continue;
    const int cl = cluster_of(tile);
    const cplx z = w + tb.rot_int[rot] * tb.control_internal[cl];
    out.push_back({z.real(), z.imag(), cl, rot});
  }
}

}  // namespace

WindowCloud chaos_game(std::size_t n_points, std::uint64_t seed, std::size_t burn_in) {
  if (n_points == 0) throw std::invalid_argument("chaos_game: need at least one point");
  constexpr std::size_t kStreams = 8;
  std::array<std::vector<CloudPoint>, kStreams> parts;
  std::vector<std::thread> th;
  for (std::size_t s = 0; s < kStreams; ++s) {
    const std::size_t n = n_points / kStreams + (s < n_points % kStreams ? 1 : 0);
    parts[s].reserve(n);
    th.emplace_back([&, s, n] { run_stream(seed, s, n, burn_in, parts[s]); });
  }
  for (auto& t : th) t.join();
  WindowCloud c;
  c.method = "chaos";
  c.seed = seed;
  for (auto& p : parts) c.points.insert(c.points.end(), p.begin(), p.end());
  return c;
}

void write_cloud(std::ostream& os, const WindowCloud& c) {
  os << "# caspr-cloud 1\n# method " << c.method << "\n# seed " << c.seed << "\n# count " << c.points.size()
     << "\nx,y,type,orientation\n";
  char buf[96];
  for (const auto& p : c.points) {
    std::snprintf(buf, sizeof buf, "%.9f,%.9f,%d,%d\n", p.x, p.y, p.type, p.orientation);
    os << buf;
  }
}

WindowCloud read_cloud(std::istream& is) {
  WindowCloud c;
  std::string line, key;
  auto header = [&](const std::string& want) {
    if (!std::getline(is, line)) throw DataFileError("cloud file: missing header");
    std::istringstream ls(line);
    std::string hash, k, v;
    ls >> hash >> k >> v;
    if (hash != "#" || k != want || v.empty()) throw DataFileError("cloud file: expected '" + want + "', got '" + line + "'");
    return v;
  };
  if (header("caspr-cloud") != "1") throw DataFileError("cloud file: unsupported version");
  c.method = header("method");
  std::size_t count = 0;
  try {
    c.seed = std::stoull(header("seed"));
    count = std::stoull(header("count"));
  } catch (const std::logic_error&) {
    throw DataFileError("cloud file: bad numeric header");
  }
  if (!std::getline(is, line) || line != "x,y,type,orientation") throw DataFileError("cloud file: missing column row");
  c.points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(is, line)) throw DataFileError("cloud file: truncated");
    CloudPoint p;
    if (std::sscanf(line.c_str(), "%lf,%lf,%d,%d", &p.x, &p.y, &p.type, &p.orientation) != 4 || p.type < 0 ||
        p.type > 4 || p.orientation < 0 || p.orientation > 5)
      throw DataFileError("cloud file: malformed row '" + line + "'");
    c.points.push_back(p);
  }
  return c;
}

void save_cloud(const std::string& path, const WindowCloud& c) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataFileError("cannot write " + path);
  write_cloud(os, c);
}

WindowCloud load_cloud(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataFileError("cannot read " + path);
  return read_cloud(is);
}

std::array<double, 5> cloud_fractions(const WindowCloud& c) {
  std::array<double, 5> f{};
  for (const auto& p : c.points) f[p.type] += 1;
  for (auto& x : f) x /= std::max<std::size_t>(1, c.points.size());
  return f;
}

std::array<RealQuadratic, 5> expected_cluster_fractions() {
  const auto f = frequency_vector();
  RealQuadratic total;
  for (int cl = 0; cl < 5; ++cl) total += f[cluster_representative(cl)];
  std::array<RealQuadratic, 5> out;
  for (int cl = 0; cl < 5; ++cl) out[cl] = f[cluster_representative(cl)] / total;
  return out;
}

// ---- densities ----

double Sqrt3Value::value() const { return coeff.to_double() * std::sqrt(3.0); }
std::string Sqrt3Value::str() const { return "(" + coeff.str() + ")*sqrt3"; }

Sqrt3Value window_area() {
  // the triangular cell spanned by d and xi*d has area (sqrt 3 / 2) |d|^2
  const RingElement d(31, 4, -4, -1);
  return {d.abs2() * RealQuadratic(Rational(1, 2))};
}

DensityReport density_report() {
  DensityReport r;
  const RingElement d(31, 4, -4, -1);
  r.abs2_d_physical = d.abs2();
  r.abs2_d_internal = d.star().abs2();
  bool exact = false;
  r.covolume = isqrt_exact(return_lattice().covolume_squared(), exact);
  if (!exact) throw std::logic_error("covolume is not rational");
  r.window_area = window_area();
  r.rho1 = {r.window_area.coeff / RealQuadratic(r.covolume)};
  const auto f = frequency_vector();
  for (int i = 0; i < 9; ++i) r.average_area.coeff += f[i] * tile_area(i);
  for (int cl = 0; cl < 5; ++cl) r.representative_frequency += f[cluster_representative(cl)];
  // n / (c sqrt 3) = (n / 3c) sqrt 3
  r.rho2 = {r.representative_frequency / (RealQuadratic(3) * r.average_area.coeff)};
  r.rho_equal = r.rho1.coeff == r.rho2.coeff;
  return r;
}

std::string DensityReport::str() const {
  std::ostringstream os;
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return std::string(buf);
  };
  os << "V      = " << covolume.get_str() << "\n";
  os << "A      = " << window_area.str() << " = " << num(window_area.value()) << "\n";
  os << "rho1   = A/V = " << rho1.str() << " = " << num(rho1.value()) << "\n";
  os << "f.area = " << average_area.str() << " = " << num(average_area.value()) << "\n";
  os << "sum f over representatives = " << representative_frequency.str() << "\n";
  os << "rho2   = " << rho2.str() << " = " << num(rho2.value()) << "\n";
  os << "rho1 == rho2: " << (rho_equal ? "yes" : "no") << "\n";
  os << "|d|^2 physical = " << abs2_d_physical.str() << ", internal = " << abs2_d_internal.str() << " = "
     << num(abs2_d_internal.to_double()) << "\n";
  return os.str();
}

EmpiricalDensity empirical_density(const Patch& p) {
  EmpiricalDensity e;
  if (p.tiles.empty()) return e;
  cplx centre(0, 0);
  for (const auto& t : p.tiles) centre += embed(t.pos);
  centre /= static_cast<double>(p.tiles.size());
  double r = 1e300;
  for (const auto& cyc : patch_boundary(p))
    for (const auto& v : cyc) r = std::min(r, std::abs(v.embed() - centre));
  e.radius = r;
  std::array<IntPt, 5> offs;
  for (const auto& t : p.tiles) {
    if (!is_representative(t.tile)) continue;
    const int cl = cluster_of(t.tile);
    offs[cl] = xi_pow_times(t.rot, to_intpt(control_offset(cl)));
    if (std::abs(embed(add(t.pos, offs[cl])) - centre) <= r) ++e.count;
  }
  e.density = static_cast<double>(e.count) / (M_PI * r * r);
  return e;
}

// ---- fractal dimension ----

double hausdorff_dimension() { return std::log(5 + 2 * std::sqrt(6.0)) / std::log(4 + std::sqrt(15.0)); }

namespace {

std::uint64_t cell_key(long i, long j) {
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(i)) << 32) | static_cast<std::uint32_t>(j);
}

}  // namespace

BoxCount box_counting(const std::vector<std::array<double, 2>>& pts, int k_min, double min_per_box) {
  BoxCount b;
  if (pts.size() < 2) return b;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& p : pts) {
    x0 = std::min(x0, p[0]);
    x1 = std::max(x1, p[0]);
    y0 = std::min(y0, p[1]);
    y1 = std::max(y1, p[1]);
  }
  const double side = std::max(x1 - x0, y1 - y0) * (1 + 1e-9);
  for (int k = k_min; k < 30; ++k) {
    const double eps = side / std::ldexp(1.0, k);
    std::unordered_set<std::uint64_t> cells;
    cells.reserve(pts.size());
    for (const auto& p : pts)
      cells.insert(cell_key(static_cast<long>((p[0] - x0) / eps), static_cast<long>((p[1] - y0) / eps)));
    if (static_cast<double>(pts.size()) / static_cast<double>(cells.size()) < min_per_box) break;
    b.eps.push_back(eps);
    b.counts.push_back(cells.size());
  }
  fit_dimension(b);
  return b;
}

namespace {

int subwindow(const CloudPoint& p) { return p.type * 6 + p.orientation; }

}  // namespace

void fit_dimension(BoxCount& b) {
  const std::size_t n = b.eps.size();
  if (n < 2) return;
  double sx = 0, sy = 0, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = std::log(1 / b.eps[i]), y = std::log(static_cast<double>(b.counts[i]));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    syy += y * y;
  }
  const double cov = sxy - sx * sy / n, vx = sxx - sx * sx / n, vy = syy - sy * sy / n;
  b.dimension = cov / vx;
  b.r2 = vy > 0 ? cov * cov / (vx * vy) : 1.0;
}

namespace {

// uniform grid over cloud points
struct Grid {
  double x0 = 0, y0 = 0, h = 1;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> cells;
  Grid(const std::vector<CloudPoint>& pts, double cell) : h(cell) {
    x0 = y0 = 1e300;
    for (const auto& p : pts) {
      x0 = std::min(x0, p.x);
      y0 = std::min(y0, p.y);
    }
    for (std::size_t i = 0; i < pts.size(); ++i) cells[key(pts[i].x, pts[i].y)].push_back(static_cast<std::uint32_t>(i));
  }
  long ix(double x) const { return static_cast<long>(std::floor((x - x0) / h)); }
  long iy(double y) const { return static_cast<long>(std::floor((y - y0) / h)); }
  std::uint64_t key(double x, double y) const { return cell_key(ix(x), iy(y)); }
  const std::vector<std::uint32_t>* at(long i, long j) const {
    auto it = cells.find(cell_key(i, j));
    return it == cells.end() ? nullptr : &it->second;
  }
};

}  // namespace

BoxCount boundary_box_counting(const WindowCloud& c, std::size_t min_cells, double min_per_cell) {
  BoxCount b;
  if (c.points.size() < 2) return b;
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const auto& p : c.points) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  const double side = std::max(x1 - x0, y1 - y0) * (1 + 1e-9);
  constexpr int kMixed = -1;
  for (int k = 1; k < 30; ++k) {
    const double eps = side / std::ldexp(1.0, k);
    // cell -> its subwindow, or kMixed; indices shifted so neighbours stay non-negative
    std::unordered_map<std::uint64_t, int> cells;
    cells.reserve(c.points.size());
    for (const auto& p : c.points) {
      const auto key = cell_key(static_cast<long>((p.x - x0) / eps) + 1, static_cast<long>((p.y - y0) / eps) + 1);
      auto [it, fresh] = cells.emplace(key, subwindow(p));
      if (!fresh && it->second != subwindow(p)) it->second = kMixed;
    }
    const double per_cell = static_cast<double>(c.points.size()) / static_cast<double>(cells.size());
    if (per_cell < min_per_cell) break;
    if (cells.size() < min_cells) continue;
    std::size_t boundary = 0;
    for (const auto& [key, cls] : cells) {
      const long i = static_cast<long>(key >> 32), j = static_cast<long>(key & 0xffffffffu);
      bool edge = cls == kMixed;
      for (long di = -1; di <= 1 && !edge; ++di)
        for (long dj = -1; dj <= 1 && !edge; ++dj) {
          if (di == 0 && dj == 0) continue;
          auto it = cells.find(cell_key(i + di, j + dj));
          if (it == cells.end() || it->second != cls) edge = true;
        }
      if (edge) ++boundary;
    }
    b.eps.push_back(eps);
    b.counts.push_back(boundary);
  }
  fit_dimension(b);
  return b;
}

double cloud_diameter(const WindowCloud& c) {
  // convex hull (monotone chain), then all hull pairs
  std::vector<std::pair<double, double>> p;
  for (const auto& q : c.points) p.push_back({q.x, q.y});
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 2) return 0;
  auto cross = [](const std::pair<double, double>& o, const std::pair<double, double>& a,
                  const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<std::pair<double, double>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  double best = 0;
  for (std::size_t i = 0; i < h.size(); ++i)
    for (std::size_t j = i + 1; j < h.size(); ++j)
      best = std::max(best, std::hypot(h[i].first - h[j].first, h[i].second - h[j].second));
  return best;
}

namespace {

// largest distance from a point of a to the nearest point of b
double directed_hausdorff(const WindowCloud& a, const WindowCloud& b, double cell) {
  Grid g(b.points, cell);
  double worst = 0;
  for (const auto& p : a.points) {
    const long i = g.ix(p.x), j = g.iy(p.y);
    double best = 1e300;
    for (long ring = 0;; ++ring) {
      for (long di = -ring; di <= ring; ++di)
        for (long dj = -ring; dj <= ring; ++dj) {
          if (std::max(std::labs(di), std::labs(dj)) != ring) continue;
          const auto* v = g.at(i + di, j + dj);
          if (!v) continue;
          for (auto k : *v) best = std::min(best, std::hypot(b.points[k].x - p.x, b.points[k].y - p.y));
        }
      // every unvisited cell is at least ring * cell away
      if (best <= ring * cell || ring > 1 << 16) break;
    }
    worst = std::max(worst, best);
  }
  return worst;
}

}  // namespace

double hausdorff_distance(const WindowCloud& a, const WindowCloud& b) {
  if (a.points.empty() || b.points.empty()) return 0;
  const double cell = std::max(cloud_diameter(b), 1e-12) / 256;
  return std::max(directed_hausdorff(a, b, cell), directed_hausdorff(b, a, cell));
}

double double_occupancy(const WindowCloud& c, double cell) {
  Grid g(c.points, cell);
  std::size_t shared = 0;
  for (const auto& [k, v] : g.cells) {
    const int first = subwindow(c.points[v.front()]);
    for (auto i : v)
      if (subwindow(c.points[i]) != first) {
        ++shared;
        break;
      }
  }
  return g.cells.empty() ? 0.0 : static_cast<double>(shared) / static_cast<double>(g.cells.size());
}

// ---- Fourier module ----

namespace {

// best rational approximation with denominator at most max_den
Rational rationalize(double x, long max_den) {
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double v = x;
  for (int it = 0; it < 64; ++it) {
    const double a = std::floor(v);
    const long ai = static_cast<long>(a);
    const long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > max_den) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(v - a) < 1e-12) break;
    v = 1 / (v - a);
  }
  return Rational(h1, k1);
}

}  // namespace

FourierModule fourier_module(double radius, double internal_radius) {
  FourierModule fm;
  const Lattice4 l = return_lattice();
  // standard dual basis: rows d_i with <d_i, b_j> = delta_ij
  std::array<Vec4, 4> dual;
  for (int i = 0; i < 4; ++i) {
    // solve B d^T = e_i, i.e. d * B^T = e_i^T
    std::array<Vec4, 4> bt;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) bt[r][c] = l.basis[c][r];
    Vec4 e{0, 0, 0, 0};
    e[i] = 1;
    dual[i] = solve_rows(bt, e);
  }
  // pull each dual vector back to K through the lift of the power basis
  std::array<Vec4, 4> power;
  const std::array<RingElement, 4> pb = {RingElement(1, 0, 0, 0), RingElement(0, 1, 0, 0), RingElement(0, 0, 1, 0),
                                         RingElement(0, 0, 0, 1)};
  for (int i = 0; i < 4; ++i) power[i] = lift(pb[i]);
  std::vector<RingElement> gens;
  for (int i = 0; i < 4; ++i) {
    Vec4 c = solve_rows(power, dual[i]);
    gens.push_back(RingElement(rationalize(c[0], 100000), rationalize(c[1], 100000), rationalize(c[2], 100000),
                               rationalize(c[3], 100000)));
  }
  fm.module = ZModule4::from_generators(gens);
  const RingElement scale = i_sqrt5() / Rational(135);
  fm.equals_scaled_l = fm.module == return_module().scaled(scale);
  fm.equals_trace_dual = fm.module == dual_module(return_module());

  // enumerate the cylinder |y| <= radius, |y*| <= internal_radius
  const auto basis = fm.module.basis();
  std::array<Vec4, 4> lb;
  for (int i = 0; i < 4; ++i) lb[i] = lift(basis[i]);
  const double r = std::hypot(radius, internal_radius);
  std::array<long, 4> bound{};
  for (int i = 0; i < 4; ++i) {
    // |c_i| <= r * |column i of the inverse|
    double s = 0;
    for (int k = 0; k < 4; ++k) {
      Vec4 e{0, 0, 0, 0};
      e[k] = 1;
      s += std::pow(solve_rows(lb, e)[i], 2);
    }
    bound[i] = static_cast<long>(std::ceil(r * std::sqrt(s)));
  }
  std::set<RingElement> found;
  std::array<long, 4> c{};
  for (c[0] = -bound[0]; c[0] <= bound[0]; ++c[0])
    for (c[1] = -bound[1]; c[1] <= bound[1]; ++c[1])
      for (c[2] = -bound[2]; c[2] <= bound[2]; ++c[2])
        for (c[3] = -bound[3]; c[3] <= bound[3]; ++c[3]) {
          Vec4 v{0, 0, 0, 0};
          for (int i = 0; i < 4; ++i)
            for (int k = 0; k < 4; ++k) v[k] += static_cast<double>(c[i]) * lb[i][k];
          const double pr = std::hypot(v[0], v[1]), ir = std::hypot(v[2], v[3]);
          if (pr > radius * (1 + 1e-12) || ir > internal_radius * (1 + 1e-12)) continue;
          RingElement y;
          for (int i = 0; i < 4; ++i) y += basis[i] * Rational(c[i]);
          // decide the boundary cases exactly
          const RealQuadratic a = y.abs2(), b = y.star().abs2();
          if ((RealQuadratic(Rational(radius * radius)) - a).sign() < 0) continue;
          if ((RealQuadratic(Rational(internal_radius * internal_radius)) - b).sign() < 0) continue;
          found.insert(y);
        }
  fm.points.assign(found.begin(), found.end());
  fm.closed_under_xi = true;
  for (const auto& y : fm.points)
    if (!found.count(xi() * y)) {
      fm.closed_under_xi = false;
      break;
    }
  return fm;
}

}  // namespace caspr
