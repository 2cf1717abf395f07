#include "caspr/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "caspr/cohomology.hpp"
#include "caspr/cps.hpp"
#include "caspr/inflation.hpp"
#include "caspr/patch_io.hpp"
#include "caspr/render.hpp"
#include "caspr/reprojection.hpp"
#include "caspr/rng.hpp"
#include "caspr/tiles.hpp"
#include "caspr/zmodule.hpp"

namespace caspr {

namespace {

class Report {
public:
  explicit Report(CriterionResult& r) : r_(r) { r_.pass = true; }
  // records one measured quantity and whether it met its target
  void check(bool ok, const std::string& what) {
    if (!ok) r_.pass = false;
    r_.detail += std::string(ok ? "  ok    " : "  FAIL  ") + what + "\n";
  }
  // records a measured quantity that has no target of its own
  void note(const std::string& what) { r_.detail += "  info  " + what + "\n"; }

private:
  CriterionResult& r_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

template <class C>
std::string join(const C& c) {
  std::string s;
  for (const auto& x : c) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "(" + s + ")";
}

void cohomology(Report& rep) {
  const CohomologyReport r = cech_report();
  std::array<std::size_t, 6> h1{}, h2{};
  for (int k = 0; k < 6; ++k) {
    h1[k] = r.reps[k].h1_limit;
    h2[k] = r.reps[k].h2_limit;
  }
  rep.check(h1 == std::array<std::size_t, 6>{0, 2, 0, 0, 0, 2}, "H1 limit dimensions per k = " + join(h1));
  rep.check(h2 == std::array<std::size_t, 6>{2, 2, 1, 2, 1, 2}, "H2 limit dimensions per k = " + join(h2));
  const Poly<CycQ> q = {CycQ(1), CycQ(-8), CycQ(1)};
  for (int k : {1, 5}) {
    const std::size_t m = divisibility_multiplicity(r.reps[k].charpoly_h1, q);
    rep.check(m == 1, "k=" + std::to_string(k) + ": t^2-8t+1 divides the H1 characteristic polynomial " +
                          format_poly(r.reps[k].charpoly_h1) + " with multiplicity " + std::to_string(m));
  }
  rep.check(r.h1_total == 4 && r.h2_total == 10,
            "totals H1 = C^" + std::to_string(r.h1_total) + ", H2 = C^" + std::to_string(r.h2_total));
  rep.check(r.chain_map, "substitution commutes with the boundary maps");
}

void integral(Report& rep) {
  const IntegralReport r = integral_report();
  rep.check(r.h1.stabilized && r.h1.rank == 4 && r.h1.torsion.empty(),
            "H1 over Z: rank " + std::to_string(r.h1.rank) + ", torsion factors " + std::to_string(r.h1.torsion.size()));
  rep.check(r.h2.stabilized && r.h2.rank == 10 && r.h2.torsion.empty(),
            "H2 over Z: rank " + std::to_string(r.h2.rank) + ", torsion factors " + std::to_string(r.h2.torsion.size()));
}

void eigen(Report& rep) {
  const EigenCheck e = edge_eigencheck();
  rep.check(e.exact_zero(), "exact residual of e M1*(xi) conj(M1*(xi)) - lam e is zero for all 8 edges");
  rep.check(e.numeric_residual < 1e-9, "floating-point residual " + fmt("%.3g", e.numeric_residual));
  rep.check(e.perturbed_residual > 1e-3, "perturbed alpha gives residual " + fmt("%.3g", e.perturbed_residual));
}

void geometry(Report& rep) {
  const AbelianReport a = abelianize();
  rep.check(a.face_matches, "abelianized tile counts equal M2* entrywise");
  rep.check(a.edge_matches && a.edge_words_consistent, "abelianized superedge words equal M1* entrywise");
  rep.check(a.corners_match && a.outline_simple && a.areas_match, "supertile outlines: corners, simplicity, area");
  bool closed = true, simple = true, chains = true;
  for (int t = 0; t < kNumTileTypes; ++t) {
    const auto& v = tile_vertices(t);
    closed = closed && is_closed(v);
    simple = simple && is_simple(v);
    const auto ch = face_boundary_chain(t);
    for (int e = 0; e < kNumEdgeTypes; ++e)
      if (ch[e] != boundary2()(e, t).reduced(edge_labels()[e].kind)) chains = false;
  }
  rep.check(closed && simple, "all nine tile polygons close and are simple");
  rep.check(chains && vertex_labels_consistent(), "every face boundary chain equals its d2 column");
}

void modules(Report& rep) {
  const ZModule4 O = order_module(), E = edge_module(), L = return_module(), OK = maximal_order();
  const Integer oe = module_index(O, E), el = module_index(E, L), ol = module_index(O, L);
  rep.check(oe == 9 && el == 9 && ol == 81,
            "[O:E], [E:L], [O:L] = " + oe.get_str() + ", " + el.get_str() + ", " + ol.get_str());
  rep.check(L.is_ideal(), "L is an O-ideal");
  rep.check(L == O.scaled(g1()) + O.scaled(g3()), "L = O g1 + O g3");
  const ZModule4 Ld = dual_module(L), Od = dual_module(O), OKd = dual_module(OK);
  const std::array<Integer, 5> chain = {module_index(O, L), module_index(OK, O), module_index(OKd, OK),
                                        module_index(Od, OKd), module_index(Ld, Od)};
  std::string cs;
  for (const auto& c : chain) cs += (cs.empty() ? "" : ",") + c.get_str();
  rep.check(chain == std::array<Integer, 5>{81, 3, 225, 3, 81}, "dual chain indices (" + cs + ")");
  rep.check(Ld == L.scaled(i_sqrt5() / Rational(135)), "dual of L = (i sqrt5 / 135) L");
  const Integer ko = module_index(OK, O), oi = module_index(O, OK.scaled(i_sqrt3()));
  rep.check(ko == 3 && oi == 3, "[O_K:O] = " + ko.get_str() + ", [O : i sqrt3 O_K] = " + oi.get_str());
}

void densities(Report& rep) {
  const DensityReport d = density_report();
  rep.check(d.covolume == 3645, "V = " + d.covolume.get_str());
  rep.check(d.window_area.coeff == RealQuadratic(540, Rational(-135, 2)), "A = " + d.window_area.str());
  const RealQuadratic rho(Rational(4, 27), Rational(-1, 54));
  rep.check(d.rho1.coeff == rho && d.rho2.coeff == rho && d.rho_equal,
            "rho1 = " + d.rho1.str() + ", rho2 = " + d.rho2.str());
  rep.check(frequency_vector() == expected_frequencies(), "frequency vector f equals the expected closed forms");
  rep.check(d.average_area.coeff == RealQuadratic(90), "f . areas = " + d.average_area.str());
  const Patch p = generate_patch(Gamma, 6);
  const EmpiricalDensity e = empirical_density(p);
  const double rel = e.density / d.rho1.value() - 1;
  rep.check(p.tiles.size() >= 10000 && std::abs(rel) < 0.01,
            std::to_string(p.tiles.size()) + "-tile patch: " + std::to_string(e.count) + " control points, density " +
                fmt("%.6g", e.density) + " vs " + fmt("%.6g", d.rho1.value()) + " (" + fmt("%+.3f%%", 100 * rel) + ")");
}

void frequencies(Report& rep) {
  const auto f = expected_frequencies();
  std::vector<double> errs;
  for (int steps : {2, 4, 6, 8}) {
    std::array<std::uint64_t, 9> c{};
    std::uint64_t n = 0;
    for_each_tile(Gamma, steps, [&](const Placement& t) {
      ++c[t.tile];
      ++n;
    });
    double worst = 0;
    for (int i = 0; i < 9; ++i)
      worst = std::max(worst, std::abs(static_cast<double>(c[i]) / static_cast<double>(n) / f[i].to_double() - 1));
    errs.push_back(worst);
    rep.note(std::to_string(steps) + " steps: " + std::to_string(n) + " tiles, worst relative error " +
                        fmt("%.4f%%", 100 * worst));
  }
  rep.check(errs.back() < 0.01, "8-step fractions within 1% of f");
  rep.check(errs[0] > errs[1] && errs[1] > errs[2] && errs[2] > errs[3], "error decreases over 2, 4, 6, 8 steps");
}

void window(Report& rep) {
  const WindowCloud proj6 = window_from_patch(generate_patch(Gamma, 6));
  const WindowCloud proj4 = window_from_patch(generate_patch(Gamma, 4));
  const WindowCloud chaos = chaos_game(100'000, 1);
  const double diam = cloud_diameter(chaos);
  const double dh = hausdorff_distance(proj6, chaos);
  rep.check(dh / diam < 0.02, "Hausdorff distance projected/chaos " + fmt("%.4f", dh) + " = " +
                                  fmt("%.3f%%", 100 * dh / diam) + " of the diameter " + fmt("%.4f", diam));
  const auto expect = expected_cluster_fractions();
  const WindowCloud big = chaos_game(1'000'000, 1);
  for (const auto* c : {&proj6, &big}) {
    const auto fr = cloud_fractions(*c);
    double worst = 0;
    for (int i = 0; i < kNumClusters; ++i) worst = std::max(worst, std::abs(fr[i] / expect[i].to_double() - 1));
    rep.check(worst < 0.02, c->method + " cloud (" + std::to_string(c->points.size()) +
                                " points): worst cluster fraction error " + fmt("%.3f%%", 100 * worst));
  }
  const double d4 = cloud_diameter(proj4), d6 = cloud_diameter(proj6);
  rep.check(std::abs(d6 / d4 - 1) < 0.02,
            "diameter after 4 and 6 steps: " + fmt("%.4f", d4) + ", " + fmt("%.4f", d6));
  std::vector<double> occ;
  std::string occ_s;
  for (double div : {20.0, 40.0, 80.0, 160.0}) {
    occ.push_back(double_occupancy(big, diam / div));
    occ_s += (occ_s.empty() ? "" : ", ") + fmt("%.4f", occ.back());
  }
  rep.check(occ[0] > occ[1] && occ[1] > occ[2] && occ[2] > occ[3],
            "double occupancy at cells D/20 ... D/160: " + occ_s);
}

void dimension(Report& rep) {
  const double d = hausdorff_dimension();
  rep.check(std::abs(d - 1.110977) < 1e-6, "closed form " + fmt("%.7f", d));
  Rng rng(7);
  std::vector<std::array<double, 2>> square(1'000'000);
  for (auto& p : square) p = {rng.uniform(), rng.uniform()};
  const BoxCount sq = box_counting(square);
  rep.check(std::abs(sq.dimension - 2) < 0.05, "filled square calibrates to " + fmt("%.4f", sq.dimension));
  // the boundary estimator on six straight-edged sectors of a disc
  WindowCloud disc;
  while (disc.points.size() < 4'000'000) {
    const double x = 2 * rng.uniform() - 1, y = 2 * rng.uniform() - 1;
    if (x * x + y * y > 1) continue;
    disc.points.push_back({x, y, 0, static_cast<int>((std::atan2(y, x) + M_PI) / (M_PI / 3)) % 6});
  }
  const BoxCount dc = boundary_box_counting(disc);
  rep.check(std::abs(dc.dimension - 1) < 0.05, "smooth subwindow boundaries calibrate to " + fmt("%.4f", dc.dimension));
  const BoxCount b = boundary_box_counting(chaos_game(4'000'000, 1));
  rep.check(std::abs(b.dimension - d) < 0.1, "subwindow boundary box counting " + fmt("%.4f", b.dimension) + " over " +
                                                  std::to_string(b.eps.size()) + " scales (r^2 " + fmt("%.5f", b.r2) + ")");
}

void fourier(Report& rep) {
  const FourierModule f = fourier_module(0.5, 0.5);
  rep.check(f.equals_scaled_l, "dual lattice projects onto (i sqrt5 / 135) L");
  rep.check(f.equals_trace_dual, "and equals the trace-form dual of L");
  rep.check(f.closed_under_xi && !f.points.empty(),
            std::to_string(f.points.size()) + " enumerated Bragg positions, closed under multiplication by xi");
}

void reprojection(Report& rep) {
  const Patch p = generate_patch(Gamma, 4);
  const ReprojectionMap hex = build_hex_reprojection(), meta = build_metatile_reprojection();
  const ReprojectionCheck h = check_reprojection(p, hex), m = check_reprojection(p, meta);
  for (const auto* x : {&hex, &meta})
    rep.check(x->consistent && x->rank == x->unknowns,
              x->name + ": " + std::to_string(x->constraints) + " slot constraints, consistent with a unique solution");
  rep.check(h.ok() && h.regular_hexagons, "hex: target tiles are regular hexagons of an edge-to-edge tiling");
  rep.check(RealQuadratic(Rational(3, 2) * 60) == density_report().average_area.coeff,
            "hex: hexagon area (3 sqrt3 / 2) 60 equals the average tile area");
  rep.check(h.control_points_match, "hex: reprojected control points equal those of the hexagon tiling");
  rep.check(m.ok(), "metatile: control points equal those of the target tiling, faces close");
  rep.check(m.mean_displacement < h.mean_displacement,
            "mean vertex displacement metatile " + fmt("%.4f", m.mean_displacement) + " < hex " +
                fmt("%.4f", h.mean_displacement));
  rep.check(h.kernel_rank == 2 && m.kernel_rank == 2, "kernel on L has rank 2 for both maps");
}

void determinism(Report& rep) {
  auto patch_bytes = [] {
    std::ostringstream os;
    write_patch(os, generate_patch(Psi, 4));
    return os.str();
  };
  auto cloud_bytes = [] {
    std::ostringstream os;
    write_cloud(os, chaos_game(100'000, 1));
    return os.str();
  };
  auto svg_bytes = [] {
    RenderStyle s;
    s.color_by = ColorBy::Edge;
    return render_patch_svg(generate_patch(Psi, 2), s);
  };
  const std::string p1 = patch_bytes(), c1 = cloud_bytes(), s1 = svg_bytes();
  rep.check(p1 == patch_bytes(), "patch files identical (" + std::to_string(p1.size()) + " bytes)");
  rep.check(c1 == cloud_bytes(), "chaos cloud files identical (" + std::to_string(c1.size()) + " bytes)");
  rep.check(s1 == svg_bytes(), "SVG files identical (" + std::to_string(s1.size()) + " bytes)");
  std::istringstream is(p1);
  std::ostringstream again;
  write_patch(again, read_patch(is));
  rep.check(again.str() == p1, "patch file survives a read/write round trip byte for byte");
}

struct Entry {
  const char* name;
  void (*fn)(Report&);
};

const std::array<Entry, kNumCriteria> kCriteria = {{
    {"cohomology over C", cohomology},
    {"integral cohomology", integral},
    {"edge eigen-identity", eigen},
    {"geometry and topology agree", geometry},
    {"module arithmetic", modules},
    {"densities", densities},
    {"tile frequencies", frequencies},
    {"window clouds", window},
    {"Hausdorff dimension", dimension},
    {"Fourier module", fourier},
    {"reprojection", reprojection},
    {"determinism", determinism},
}};

}  // namespace

std::array<RealQuadratic, 9> expected_frequencies() {
  return {RealQuadratic(8, -1),     RealQuadratic(8, -1),    RealQuadratic(63, -8),
          RealQuadratic(63, -8),    RealQuadratic(-118, 15), RealQuadratic(-118, 15),
          RealQuadratic(8, -1),     RealQuadratic(-110, 14), RealQuadratic(197, -25)};
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kNumCriteria) throw std::out_of_range("no criterion " + std::to_string(id));
  CriterionResult r;
  r.id = id;
  r.name = kCriteria[id - 1].name;
  const auto t0 = std::chrono::steady_clock::now();
  Report rep(r);
  try {
    kCriteria[id - 1].fn(rep);
  } catch (const std::exception& e) {
    rep.check(false, std::string("exception: ") + e.what());
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CriterionResult> run_criteria(const std::vector<int>& ids,
                                          const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<int> todo = ids;
  if (todo.empty())
    for (int i = 1; i <= kNumCriteria; ++i) todo.push_back(i);
  std::vector<CriterionResult> out;
  for (int id : todo) {
    out.push_back(run_criterion(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r, bool with_detail) {
  char head[160];
  std::snprintf(head, sizeof head, "%s criterion %2d: %s (%.1f s)\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  return with_detail ? head + r.detail : std::string(head);
}

}  // namespace caspr
