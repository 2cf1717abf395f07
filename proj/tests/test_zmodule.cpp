#include <cmath>
#include <complex>

#include "caspr/intmat.hpp"
#include "caspr/zmodule.hpp"
#include "doctest.h"

using namespace caspr;

namespace {

// |det| of the real 4x4 matrix of lifted basis vectors (x, x*), a floating
// point oracle for covolumes and indices
double lifted_covolume(const ZModule4& m) {
  const auto b = m.basis();
  double a[4][4];
  for (int i = 0; i < 4; ++i) {
    const auto p = b[i].embed(), q = b[i].embed_internal();
    a[i][0] = p.real();
    a[i][1] = p.imag();
    a[i][2] = q.real();
    a[i][3] = q.imag();
  }
  double det = 1;
  for (int c = 0; c < 4; ++c) {
    int p = c;
    for (int r = c + 1; r < 4; ++r)
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    if (p != c) {
      for (int k = 0; k < 4; ++k) std::swap(a[p][k], a[c][k]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < 4; ++r) {
      const double f = a[r][c] / a[c][c];
      for (int k = c; k < 4; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return std::abs(det);
}

double numeric_index(const ZModule4& big, const ZModule4& small) {
  return lifted_covolume(small) / lifted_covolume(big);
}

}  // namespace

TEST_CASE("Hermite and Smith forms on hand-computed examples") {
  const IntMatrix a = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  // invariant factors of this classical example are 2, 6, 12
  CHECK(smith_invariants(a) == std::vector<Integer>{2, 6, 12});
  CHECK(integer_rank(a) == 3);
  const IntMatrix h = hermite_form(IntMatrix::from_rows({{4, 6}, {6, 9}}));
  CHECK(h.rows() == 1);
  CHECK(h(0, 0) == 2);
  CHECK(h(0, 1) == 3);
}

TEST_CASE("integer kernels are saturated") {
  const IntMatrix a = IntMatrix::from_rows({{2, 0}, {4, 0}, {0, 3}});
  const IntMatrix k = integer_left_kernel(a);
  REQUIRE(k.rows() == 1);
  // the primitive relation 2*row0 = row1
  CHECK(((k(0, 0) == 2 && k(0, 1) == -1) || (k(0, 0) == -2 && k(0, 1) == 1)));
  CHECK(k(0, 2) == 0);
  CHECK((k * a).is_zero());
}

TEST_CASE("quotient structure") {
  const IntMatrix s = IntMatrix::identity(2);
  const IntMatrix r = IntMatrix::from_rows({{2, 0}, {0, 6}});
  const QuotientStructure q = lattice_quotient(s, r);
  CHECK(q.free_rank == 0);
  CHECK(q.torsion == std::vector<Integer>{2, 6});
}

TEST_CASE("indices of E and L inside the order") {
  const ZModule4 O = order_module(), E = edge_module(), L = return_module();
  CHECK(module_index(O, E) == 9);
  CHECK(module_index(E, L) == 9);
  CHECK(module_index(O, L) == 81);
  CHECK(numeric_index(O, L) == doctest::Approx(81).epsilon(1e-9));
  CHECK(numeric_index(O, E) == doctest::Approx(9).epsilon(1e-9));
}

TEST_CASE("ideal structure") {
  const ZModule4 O = order_module(), E = edge_module(), L = return_module();
  CHECK(L.is_ideal());
  CHECK(E.is_ideal());
  CHECK(L == O.scaled(g1()) + O.scaled(g3()));
  CHECK(g2() == xi() * g1());
  CHECK(L.contains(g4()));
  // L is not principal: no generator of small norm spans it
  CHECK(O.scaled(g1()) != L);
  CHECK(O.scaled(g3()) != L);
}

TEST_CASE("maximal order and units") {
  const ZModule4 O = order_module(), OK = maximal_order();
  CHECK(module_index(OK, O) == 3);
  CHECK(module_index(O, OK.scaled(i_sqrt3())) == 3);
  CHECK(OK.contains(alpha_element()));
  CHECK_FALSE(O.contains(alpha_element()));
  // lam is a unit of norm 1
  CHECK(lam().norm() == 1);
}

TEST_CASE("dual modules against the defining pairing") {
  const ZModule4 L = return_module(), Ld = dual_module(L);
  for (const auto& x : L.basis())
    for (const auto& y : Ld.basis()) {
      const Rational t = trace_form(x, y);
      CHECK(t.get_den() == 1);
    }
  // covolumes of dual lattices are reciprocal
  CHECK(lifted_covolume(L) * lifted_covolume(Ld) == doctest::Approx(1).epsilon(1e-9));
  CHECK(Ld == L.scaled(i_sqrt5() / Rational(135)));
  CHECK(dual_module(order_module()) == order_module().scaled(i_sqrt5() / Rational(15)));
  CHECK(dual_module(Ld) == L);
}

TEST_CASE("dual chain indices") {
  const ZModule4 O = order_module(), OK = maximal_order(), L = return_module();
  const ZModule4 OKd = dual_module(OK), Od = dual_module(O), Ld = dual_module(L);
  CHECK(module_index(OKd, OK) == 225);
  CHECK(module_index(Od, OKd) == 3);
  CHECK(module_index(Ld, Od) == 81);
  CHECK(module_index(Od, O) == 45 * 45);
  CHECK(numeric_index(OKd, OK) == doctest::Approx(225).epsilon(1e-9));
}

TEST_CASE("module index rejects non-submodules") {
  CHECK_THROWS(module_index(return_module(), order_module()));
}
