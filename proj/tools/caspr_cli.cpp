// Command-line front end: cohomology reports, patch generation and rendering,
// window clouds, densities, the Fourier module, reprojections and the full
// verification run.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 data-file error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "caspr/cohomology.hpp"
#include "caspr/cps.hpp"
#include "caspr/inflation.hpp"
#include "caspr/patch_io.hpp"
#include "caspr/render.hpp"
#include "caspr/reprojection.hpp"
#include "caspr/verify.hpp"

namespace fs = std::filesystem;
using namespace caspr;

namespace {

constexpr int kOk = 0, kMismatch = 1, kUsage = 2, kDataFile = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Relative output paths land in $CASPR_OUT_DIR when it is set.
std::string out_path(const std::string& p) {
  const char* dir = std::getenv("CASPR_OUT_DIR");
  if (p.empty() || !dir || !*dir || fs::path(p).is_absolute()) return p;
  fs::create_directories(dir);
  return (fs::path(dir) / p).string();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(out_path(path), std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out_path(path));
  f << text;
}

int parse_tile(const std::string& s) {
  const int t = tile_from_name(s);
  if (t < 0) throw UsageError("unknown tile: " + s);
  return t;
}

// expected per-representation cohomology, optionally overridden by a file:
//   h1 <6 numbers>
//   h2 <6 numbers>
//   total <h1> <h2>
struct CohomologyExpectation {
  std::array<std::size_t, 6> h1{0, 2, 0, 0, 0, 2}, h2{2, 2, 1, 2, 1, 2};
  std::size_t t1 = 4, t2 = 10;
};

CohomologyExpectation read_expectation(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DataFileError("cannot open " + path);
  CohomologyExpectation e;
  std::string line;
  int seen = 0;
  while (std::getline(f, line)) {
    std::istringstream is(line);
    std::string key;
    if (!(is >> key) || key[0] == '#') continue;
    auto read6 = [&](std::array<std::size_t, 6>& a) {
      for (auto& x : a)
        if (!(is >> x)) throw DataFileError(path + ": expected six numbers after " + key);
    };
    if (key == "h1") read6(e.h1);
    else if (key == "h2") read6(e.h2);
    else if (key == "total") {
      if (!(is >> e.t1 >> e.t2)) throw DataFileError(path + ": expected two numbers after total");
    } else
      throw DataFileError(path + ": unknown key " + key);
    ++seen;
  }
  if (seen != 3) throw DataFileError(path + ": need h1, h2 and total lines");
  return e;
}

int cmd_cohomology(bool integral, const std::string& expect_file, const std::string& out) {
  const CohomologyExpectation e = expect_file.empty() ? CohomologyExpectation{} : read_expectation(expect_file);
  std::string text;
  bool ok = true;
  if (integral) {
    const IntegralReport r = integral_report();
    text = format_integral(r);
    ok = r.h1.stabilized && r.h2.stabilized && r.h1.rank == e.t1 && r.h2.rank == e.t2 && r.h1.torsion.empty() &&
         r.h2.torsion.empty();
  } else {
    const CohomologyReport r = cech_report();
    text = format_report(r);
    for (int k = 0; k < 6; ++k) ok = ok && r.reps[k].h1_limit == e.h1[k] && r.reps[k].h2_limit == e.h2[k];
    ok = ok && r.h1_total == e.t1 && r.h2_total == e.t2;
  }
  text += ok ? "result: matches the expected values\n" : "result: MISMATCH with the expected values\n";
  std::cout << text;
  if (!out.empty()) write_text(out, text);
  return ok ? kOk : kMismatch;
}

int cmd_inflate(const std::string& seed, int steps, const std::string& out) {
  if (steps < 0) throw UsageError("--steps must be non-negative");
  const Patch p = generate_patch(parse_tile(seed), steps);
  save_patch(out_path(out), p);
  std::cout << "wrote " << p.tiles.size() << " tiles to " << out_path(out) << "\n";
  return kOk;
}

int cmd_render(const std::string& in, const std::string& svg, const std::string& color_by) {
  RenderStyle st;
  try {
    st.color_by = color_by_from_name(color_by);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const Patch p = load_patch(in);
  write_text(svg, render_patch_svg(p, st));
  std::cout << "rendered " << p.tiles.size() << " tiles to " << out_path(svg) << "\n";
  return kOk;
}

int cmd_window(const std::string& method, std::size_t points, std::uint64_t seed, int steps, const std::string& svg,
               const std::string& out) {
  WindowCloud c;
  if (method == "chaos") c = chaos_game(points, seed);
  else if (method == "project") {
    if (steps < 0 || steps % 2) throw UsageError("--steps must be even for projected clouds");
    c = window_from_patch(generate_patch(Gamma, steps));
  } else
    throw UsageError("unknown --method " + method);
  if (!out.empty()) save_cloud(out_path(out), c);
  if (!svg.empty()) write_text(svg, render_cloud_svg(c));
  const auto fr = cloud_fractions(c);
  std::cout << method << " cloud: " << c.points.size() << " points, cluster fractions";
  for (double f : fr) std::cout << " " << f;
  std::cout << "\n";
  return kOk;
}

int cmd_density() {
  const DensityReport d = density_report();
  std::cout << d.str();
  const RealQuadratic rho(Rational(4, 27), Rational(-1, 54));
  const bool ok = d.covolume == 3645 && d.window_area.coeff == RealQuadratic(540, Rational(-135, 2)) &&
                  d.rho1.coeff == rho && d.rho2.coeff == rho && d.rho_equal;
  std::cout << (ok ? "result: matches the expected values\n" : "result: MISMATCH with the expected values\n");
  return ok ? kOk : kMismatch;
}

int cmd_dual(double radius, double internal) {
  const FourierModule f = fourier_module(radius, internal);
  std::cout << "Fourier module basis:\n";
  for (const auto& b : f.module.basis()) std::cout << "  " << b << "\n";
  std::cout << "equals (i sqrt5 / 135) L: " << (f.equals_scaled_l ? "yes" : "no") << "\n";
  std::cout << "equals the trace-form dual of L: " << (f.equals_trace_dual ? "yes" : "no") << "\n";
  std::cout << "enumerated points: " << f.points.size() << ", closed under xi: " << (f.closed_under_xi ? "yes" : "no")
            << "\n";
  return f.equals_scaled_l && f.equals_trace_dual && f.closed_under_xi ? kOk : kMismatch;
}

int cmd_reproject(const std::string& target, const std::string& in, int steps, const std::string& out,
                  const std::string& svg) {
  ReprojectionMap m;
  try {
    m = reprojection_by_name(target);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Patch p;
  if (!in.empty()) p = load_patch(in);
  else {
    if (steps < 0 || steps % 2) throw UsageError("--steps must be even");
    p = generate_patch(Gamma, steps);
  }
  if (p.parity != 0) throw UsageError("reprojection needs an even-parity patch");
  const ReprojectionCheck c = check_reprojection(p, m);
  std::cout << "target " << m.name << ": " << m.constraints << " constraints, rank " << m.rank << " of " << m.unknowns
            << ", consistent " << (c.consistent ? "yes" : "no") << "\n";
  std::cout << "kernel on L:";
  for (const auto& k : m.kernel_on_l) std::cout << " " << k;
  std::cout << "\nfaces close " << (c.faces_close ? "yes" : "no") << ", edge-to-edge " << (c.edges_unique ? "yes" : "no")
            << ", control points match " << (c.control_points_match ? "yes" : "no") << "\n";
  std::cout << "mean vertex displacement " << c.mean_displacement << "\n";
  if (!out.empty()) {
    Patch q = p;
    q.projection = m.name;
    save_patch(out_path(out), q);
  }
  if (!svg.empty()) write_text(svg, render_deformed_svg(reproject(p, m), m));
  return c.ok() ? kOk : kMismatch;
}

int cmd_verify(const std::vector<int>& ids, bool verbose) {
  bool all = true;
  run_criteria(ids, [&](const CriterionResult& r) {
    all = all && r.pass;
    std::cout << format_result(r, verbose) << std::flush;
  });
  return all ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact reconstruction and verification of the CASPr tiling"};
  app.require_subcommand(1);

  bool integral = false;
  std::string expect_file, cohom_out;
  auto* coh = app.add_subcommand("cohomology", "Cech cohomology of the tiling space");
  coh->add_flag("--integral", integral, "integer coefficients");
  coh->add_option("--expect", expect_file, "file with expected dimensions");
  coh->add_option("--out", cohom_out, "also write the report to this file");

  std::string seed = "Gamma", patch_out = "patch.txt";
  int steps = 4;
  auto* inf = app.add_subcommand("inflate", "generate a patch by inflation");
  inf->add_option("--seed", seed, "seed tile name or symbol");
  inf->add_option("--steps", steps, "number of half-steps");
  inf->add_option("--out", patch_out, "patch file");

  std::string render_in, render_svg = "patch.svg", color_by = "type";
  auto* ren = app.add_subcommand("render", "render a patch file as SVG");
  ren->add_option("file", render_in, "patch file")->required();
  ren->add_option("--svg", render_svg, "output SVG");
  ren->add_option("--color-by", color_by, "type, parity or edge");

  std::string method = "chaos", window_svg, window_out;
  std::size_t points = 100000;
  std::uint64_t window_seed = 1;
  int window_steps = 6;
  auto* win = app.add_subcommand("window", "window cloud by projection or chaos game");
  win->add_option("--method", method, "project or chaos");
  win->add_option("--points", points, "number of chaos-game points");
  win->add_option("--seed", window_seed, "chaos-game seed");
  win->add_option("--steps", window_steps, "half-steps of the projected patch");
  win->add_option("--svg", window_svg, "output SVG");
  win->add_option("--out", window_out, "output CSV");

  auto* den = app.add_subcommand("density", "covolume, window area and control-point densities");

  double radius = 0.5, internal = 0.5;
  auto* dual = app.add_subcommand("dual", "Fourier module from the dual lattice");
  dual->add_option("--radius", radius, "physical radius of the enumeration");
  dual->add_option("--internal-radius", internal, "internal radius of the enumeration");

  std::string target = "hex", repro_in, repro_out, repro_svg;
  int repro_steps = 4;
  auto* rep = app.add_subcommand("reproject", "reproject a patch onto a hexagonal lattice");
  rep->add_option("--target", target, "hex or metatile");
  rep->add_option("--patch", repro_in, "even-parity patch file (default: generated)");
  rep->add_option("--steps", repro_steps, "half-steps of the generated patch");
  rep->add_option("--out", repro_out, "output patch file with the projection recorded");
  rep->add_option("--svg", repro_svg, "output SVG");

  std::vector<int> ids;
  bool verbose = false;
  auto* ver = app.add_subcommand("verify", "run the verification criteria");
  ver->add_option("--criteria", ids, "criteria to run (default: all)")->delimiter(',');
  ver->add_flag("-v,--verbose", verbose, "print every measured quantity");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (coh->parsed()) return cmd_cohomology(integral, expect_file, cohom_out);
    if (inf->parsed()) return cmd_inflate(seed, steps, patch_out);
    if (ren->parsed()) return cmd_render(render_in, render_svg, color_by);
    if (win->parsed()) return cmd_window(method, points, window_seed, window_steps, window_svg, window_out);
    if (den->parsed()) return cmd_density();
    if (dual->parsed()) return cmd_dual(radius, internal);
    if (rep->parsed()) return cmd_reproject(target, repro_in, repro_steps, repro_out, repro_svg);
    if (ver->parsed()) {
      for (int id : ids)
        if (id < 1 || id > kNumCriteria) throw UsageError("no criterion " + std::to_string(id));
      return cmd_verify(ids, verbose);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DataFileError& e) {
    std::cerr << "data file error: " << e.what() << "\n";
    return kDataFile;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataFile;
  }
  return kUsage;
}
