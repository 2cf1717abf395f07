#include <cmath>
#include <complex>
#include <vector>

#include "caspr/complex_data.hpp"
#include "caspr/groupring.hpp"
#include "doctest.h"

using namespace caspr;

TEST_CASE("parsing and printing group-ring elements") {
  CHECK(GRPoly::parse("0").is_zero());
  CHECK(GRPoly::parse("r2-r4") == GRPoly::monomial(2) - GRPoly::monomial(4));
  CHECK(GRPoly::parse("1+r2") == GRPoly::monomial(0) + GRPoly::monomial(2));
  CHECK(GRPoly::parse("-r5") == GRPoly::monomial(5, -1));
  CHECK(GRPoly::parse("r+r4+r5")[1] == 1);
  CHECK(GRPoly::parse(GRPoly::parse("r2-r4").str()) == GRPoly::parse("r2-r4"));
}

TEST_CASE("multiplication is cyclic convolution") {
  const GRPoly a = GRPoly::parse("1+r5"), b = GRPoly::parse("r+r3");
  // (1 + r^5)(r + r^3) = r + r^3 + r^6 + r^8 = 1 + r + r^2 + r^3
  CHECK(a * b == GRPoly::parse("1+r+r2+r3"));
  CHECK(GRPoly::parse("r2").conj() == GRPoly::parse("r4"));
}

TEST_CASE("evaluation is a ring homomorphism") {
  const GRPoly a = GRPoly::parse("1-r2+r5"), b = GRPoly::parse("r+r3-r4");
  for (int k = 0; k < 6; ++k) {
    CHECK((a * b).evaluate(k) == a.evaluate(k) * b.evaluate(k));
    // oracle: substitute exp(i pi k / 3) numerically
    std::complex<double> z = 0;
    for (int d = 0; d < 6; ++d) z += a[d].get_d() * std::polar(1.0, M_PI * k * d / 3);
    CHECK(std::abs(a.evaluate(k).to_complex() - z) < 1e-12);
  }
}

TEST_CASE("reduction in the small orbits") {
  // eta: r^3 = -1, so r^4 reduces to -r
  CHECK(GRPoly::parse("r4").reduced(OrbitKind::Negacyclic3) == GRPoly::parse("-r"));
  // p, q: r^2 = 1
  CHECK(GRPoly::parse("r3").reduced(OrbitKind::Swap2) == GRPoly::parse("r"));
  CHECK(GRPoly::parse("r2+r5").reduced(OrbitKind::Free6) == GRPoly::parse("r2+r5"));
}

TEST_CASE("shapes of the constant matrices") {
  CHECK(boundary1().rows() == 3);
  CHECK(boundary1().cols() == 8);
  CHECK(boundary2().rows() == 8);
  CHECK(boundary2().cols() == 9);
  CHECK(edge_substitution().rows() == 8);
  CHECK(face_substitution().rows() == 9);
  CHECK(boundary1().is_well_defined());
  CHECK(boundary2().is_well_defined());
  CHECK(edge_substitution().is_well_defined());
  CHECK(face_substitution().is_well_defined());
}

TEST_CASE("the boundary maps compose to zero") {
  const GroupRingMatrix c = boundary1() * boundary2();
  CHECK(c.reduced() == GroupRingMatrix(c.row_labels(), c.col_labels()).reduced());
  CHECK((boundary1().expand_integer() * boundary2().expand_integer()).is_zero());
}

TEST_CASE("a wrong delta entry breaks d1 d2 = 0") {
  CHECK_FALSE((boundary1_wrong_delta().expand_integer() * boundary2().expand_integer()).is_zero());
  CHECK_FALSE(boundary1_wrong_delta().same_map(boundary1()));
}

TEST_CASE("face substitution at r = 1 reproduces the patch sizes") {
  // a single Gamma grows to 7, 55 and 433 tiles under repeated substitution
  const Matrix<CycQ> m = face_substitution().evaluate(0);
  std::vector<mpq_class> v(9, 0);
  v[0] = 1;
  const long expected[] = {7, 55, 433};
  for (long want : expected) {
    std::vector<mpq_class> w(9, 0);
    for (std::size_t i = 0; i < 9; ++i)
      for (std::size_t j = 0; j < 9; ++j) w[i] += m(i, j).a() * v[j];
    v = w;
    mpq_class total = 0;
    for (const auto& x : v) total += x;
    CHECK(total == want);
  }
}

TEST_CASE("integer expansion of a group-ring matrix") {
  const IntMatrix e = boundary2().expand_integer();
  // 7 free edge orbits of size 6 and eta of size 3; 9 faces of size 6
  CHECK(e.rows() == 7 * 6 + 3);
  CHECK(e.cols() == 9 * 6);
}
