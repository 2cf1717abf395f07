#include "caspr/cohomology.hpp"

#include <sstream>

namespace caspr {

std::vector<std::size_t> kept_vertices(int k) {
  k = ((k % 6) + 6) % 6;
  if (k == 0 || k == 3) return {0, 1, 2};
  return {2};
}

std::vector<std::size_t> kept_edges(int k) {
  k = ((k % 6) + 6) % 6;
  if (k % 2 == 1) return {0, 1, 2, 3, 4, 5, 6, 7};
  return {0, 1, 2, 3, 4, 5, 6};
}

CellCounts cell_counts(int k) {
  return {static_cast<int>(kept_vertices(k).size()), static_cast<int>(kept_edges(k).size()),
          kNumTileTypes};
}

GroupRingMatrix squared_edge_substitution() {
  return edge_substitution() * edge_substitution().conj();
}

GroupRingMatrix squared_face_substitution() {
  return face_substitution() * face_substitution().conj();
}

bool boundary_composite_vanishes(const GroupRingMatrix& d1, const GroupRingMatrix& d2) {
  GroupRingMatrix p = d1 * d2;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j)
      if (!p(i, j).is_zero()) return false;
  return true;
}

bool substitution_is_chain_map() {
  const auto& d2 = boundary2();
  bool half = (d2 * face_substitution()).same_map(-(edge_substitution() * d2.conj()));
  bool full = (d2 * squared_face_substitution()).same_map(squared_edge_substitution() * d2);
  return half && full;
}

namespace {
std::vector<std::size_t> all_faces() {
  std::vector<std::size_t> v(kNumTileTypes);
  for (int i = 0; i < kNumTileTypes; ++i) v[i] = i;
  return v;
}

// Induced map of `m` on span(z_gens) / span(b_gens), with b inside z.
InducedMap induced_on_quotient(const Matrix<CycQ>& z_gens, const Matrix<CycQ>& b_gens,
                               const Matrix<CycQ>& m, const Matrix<CycQ>* z_test) {
  RowSpace<CycQ> b(b_gens);
  Matrix<CycQ> residues(0, z_gens.cols());
  for (std::size_t i = 0; i < z_gens.rows(); ++i) residues.append_row(b.reduce(z_gens.row(i)));
  RowSpace<CycQ> q(residues);
  InducedMap out;
  out.dim = q.dim();
  out.map = Matrix<CycQ>(out.dim, out.dim);
  bool ok = true;
  for (std::size_t i = 0; i < out.dim; ++i) {
    auto img = b.reduce(vec_mat(q.basis().row(i), m));
    auto c = q.coords(img);
    if (!c) {
      ok = false;
      continue;
    }
    for (std::size_t j = 0; j < out.dim; ++j) out.map(i, j) = (*c)[j];
  }
  // relations map to relations
  for (std::size_t i = 0; i < b.dim() && ok; ++i) {
    auto img = vec_mat(b.basis().row(i), m);
    if (!b.contains(img)) ok = false;
  }
  // cycles map to cycles
  if (z_test) {
    for (std::size_t i = 0; i < z_gens.rows() && ok; ++i) {
      auto img = vec_mat(vec_mat(z_gens.row(i), m), *z_test);
      for (const auto& x : img)
        if (!x.is_zero()) ok = false;
    }
  }
  out.well_defined = ok;
  return out;
}
}  // namespace

EvaluatedComplex evaluate_complex(int k) {
  EvaluatedComplex c;
  c.k = k;
  auto kv = kept_vertices(k), ke = kept_edges(k), kf = all_faces();
  c.d1 = boundary1().evaluate(k).submatrix(kv, ke);
  c.d2 = boundary2().evaluate(k).submatrix(ke, kf);
  c.m1hat = squared_edge_substitution().evaluate(k).submatrix(ke, ke);
  c.m2hat = squared_face_substitution().evaluate(k);
  return c;
}

std::size_t h1_dim(int k) {
  auto c = evaluate_complex(k);
  return c.d2.rows() - rank(c.d2) - rank(c.d1);
}

std::size_t h2_dim(int k) {
  auto c = evaluate_complex(k);
  return c.d2.cols() - rank(c.d2);
}

InducedMap substitution_on_h(int k, int degree) {
  auto c = evaluate_complex(k);
  if (degree == 1) {
    Matrix<CycQ> z = left_kernel(c.d2);
    return induced_on_quotient(z, c.d1, c.m1hat, &c.d2);
  }
  if (degree == 2) {
    return induced_on_quotient(Matrix<CycQ>::identity(c.d2.cols()), c.d2, c.m2hat, nullptr);
  }
  throw std::invalid_argument("substitution_on_h: degree must be 1 or 2");
}

RepresentationCohomology representation_cohomology(int k) {
  RepresentationCohomology r;
  r.k = k;
  auto c = evaluate_complex(k);
  r.counts = cell_counts(k);
  r.rank_d1 = rank(c.d1);
  r.rank_d2 = rank(c.d2);
  r.d1d2_zero = (c.d1 * c.d2).is_zero();
  r.h1 = c.d2.rows() - r.rank_d2 - r.rank_d1;
  r.h2 = c.d2.cols() - r.rank_d2;
  r.sub_h1 = substitution_on_h(k, 1);
  r.sub_h2 = substitution_on_h(k, 2);
  r.charpoly_h1 = characteristic_polynomial(r.sub_h1.map);
  r.charpoly_h2 = characteristic_polynomial(r.sub_h2.map);
  r.h1_limit = eventual_rank(r.sub_h1.map);
  r.h2_limit = eventual_rank(r.sub_h2.map);
  return r;
}

CohomologyReport cech_report() {
  CohomologyReport rep;
  for (int k = 0; k < 6; ++k) {
    rep.reps[k] = representation_cohomology(k);
    rep.h1_total += rep.reps[k].h1_limit;
    rep.h2_total += rep.reps[k].h2_limit;
  }
  rep.chain_map = substitution_is_chain_map();
  return rep;
}

std::string format_poly(const Poly<CycQ>& p) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i].is_zero()) continue;
    if (!first) os << " + ";
    std::string c = p[i].str();
    bool one = p[i] == CycQ(1);
    if (i == 0) os << c;
    else {
      if (!one) os << "(" << c << ")";
      os << "t";
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::string format_report(const CohomologyReport& r) {
  std::ostringstream os;
  os << "# AP-complex cohomology, squared substitution acting on the right\n";
  for (const auto& x : r.reps) {
    os << "[k=" << x.k << "]\n";
    os << "  cells (v,e,f)   = (" << x.counts.vertices << "," << x.counts.edges << ","
       << x.counts.faces << ")\n";
    os << "  rank d1, d2     = " << x.rank_d1 << ", " << x.rank_d2
       << (x.d1d2_zero ? "  (d1 d2 = 0)" : "  (d1 d2 != 0!)") << "\n";
    os << "  H1 dim          = " << x.h1 << "  charpoly " << format_poly(x.charpoly_h1)
       << "  limit " << x.h1_limit << (x.sub_h1.well_defined ? "" : "  (ill-defined!)") << "\n";
    os << "  H2 dim          = " << x.h2 << "  charpoly " << format_poly(x.charpoly_h2)
       << "  limit " << x.h2_limit << (x.sub_h2.well_defined ? "" : "  (ill-defined!)") << "\n";
  }
  os << "[total]\n";
  os << "  H1(Omega, C) = C^" << r.h1_total << "\n";
  os << "  H2(Omega, C) = C^" << r.h2_total << "\n";
  os << "  substitution is a chain map: " << (r.chain_map ? "yes" : "no") << "\n";
  return os.str();
}

namespace {

IntegralGroup limit_group(const IntMatrix& start, const IntMatrix& rel, const IntMatrix& mhat,
                          std::size_t max_iter, std::size_t stable_rounds) {
  IntegralGroup g;
  IntMatrix s = hermite_form(start.stacked(rel));
  IntMatrix rh = hermite_form(rel);
  // well-definedness: relations and the cycle lattice are preserved
  g.well_defined = true;
  IntMatrix rimg = rh * mhat;
  for (std::size_t i = 0; i < rimg.rows(); ++i)
    if (!lattice_coordinates(rh, rimg.row(i))) g.well_defined = false;
  IntMatrix simg = s * mhat;
  for (std::size_t i = 0; i < simg.rows(); ++i)
    if (!lattice_coordinates(s, simg.row(i))) g.well_defined = false;

  QuotientStructure prev = lattice_quotient(s, rh);
  g.rank_history.push_back(prev.free_rank);
  std::size_t stable = 0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    IntMatrix next = hermite_form((s * mhat).stacked(rh));
    QuotientStructure q = lattice_quotient(next, rh);
    g.rank_history.push_back(q.free_rank);
    bool same = next == s && q == prev;
    s = next;
    prev = q;
    stable = same ? stable + 1 : 0;
    if (stable >= stable_rounds) {
      g.stabilized = true;
      g.iterations = it;
      break;
    }
  }
  g.rank = prev.free_rank;
  g.torsion = prev.torsion;
  return g;
}

}  // namespace

IntegralReport integral_report(std::size_t max_iter, std::size_t stable_rounds) {
  IntegralReport r;
  r.method =
      "stabilized image: S_{n+1} = S_n * Mhat + R over Z, Hermite forms compared each round, "
      "quotient structure from Smith invariants";
  IntMatrix d1 = boundary1().expand_integer();
  IntMatrix d2 = boundary2().expand_integer();
  IntMatrix m1 = squared_edge_substitution().expand_integer();
  IntMatrix m2 = squared_face_substitution().expand_integer();
  IntMatrix z = integer_left_kernel(d2);
  r.h1 = limit_group(z, d1, m1, max_iter, stable_rounds);
  r.h2 = limit_group(IntMatrix::identity(d2.cols()), d2, m2, max_iter, stable_rounds);
  return r;
}

std::string format_integral(const IntegralReport& r) {
  std::ostringstream os;
  auto group = [&os](const char* name, const IntegralGroup& g) {
    os << "  " << name << "(Omega, Z) = Z^" << g.rank;
    for (const auto& t : g.torsion) os << " + Z/" << t.get_str();
    os << (g.stabilized ? "" : "  (inconclusive: image did not stabilize)")
       << (g.well_defined ? "" : "  (substitution not well defined!)") << "\n";
    os << "    stabilized after " << g.iterations << " iterations; free rank history:";
    for (auto x : g.rank_history) os << " " << x;
    os << "\n";
  };
  os << "# integral cohomology of the tiling space\n";
  os << "  method: " << r.method << "\n";
  group("H1", r.h1);
  group("H2", r.h2);
  return os.str();
}

}  // namespace caspr
