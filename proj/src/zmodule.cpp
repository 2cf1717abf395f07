#include "caspr/zmodule.hpp"

#include <stdexcept>

namespace caspr {

namespace {

Rational frac(const Integer& n, const Integer& d) {
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::vector<Rational> solve_rational(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) throw std::domain_error("singular rational system");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || sgn(a[i][c]) == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (std::size_t i = 0; i < n; ++i) b[i] /= a[i][i];
  return b;
}

Integer det_square(const IntMatrix& m) {
  // determinant via fraction-free elimination (Bareiss)
  const std::size_t n = m.rows();
  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a[k][k]) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a[p][k]) == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

}  // namespace

ZModule4 ZModule4::from_generators(const std::vector<RingElement>& gens) {
  ZModule4 m;
  Integer d = 1;
  for (const auto& g : gens) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), g.denominator().get_mpz_t());
  IntMatrix a(gens.size(), 4);
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int j = 0; j < 4; ++j) {
      Rational v = gens[i][j] * d;
      a(i, j) = v.get_num();
    }
  IntMatrix h = hermite_form(a);
  // strip common content shared with the denominator
  Integer g = d;
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (int j = 0; j < 4; ++j) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h(i, j).get_mpz_t());
  if (g > 1) {
    for (std::size_t i = 0; i < h.rows(); ++i)
      for (int j = 0; j < 4; ++j) h(i, j) /= g;
    d /= g;
  }
  m.den_ = d;
  m.basis_ = h.rows() ? h : IntMatrix(0, 4);
  return m;
}

std::vector<RingElement> ZModule4::basis() const {
  std::vector<RingElement> out;
  for (std::size_t i = 0; i < basis_.rows(); ++i)
    out.emplace_back(frac(basis_(i, 0), den_), frac(basis_(i, 1), den_), frac(basis_(i, 2), den_),
                     frac(basis_(i, 3), den_));
  return out;
}

bool ZModule4::contains(const RingElement& x) const {
  Rational s[4];
  std::vector<Integer> v(4);
  for (int j = 0; j < 4; ++j) {
    s[j] = x[j] * den_;
    if (s[j].get_den() != 1) return false;
    v[j] = s[j].get_num();
  }
  return lattice_coordinates(basis_, v).has_value();
}

bool ZModule4::contains(const ZModule4& n) const {
  for (const auto& b : n.basis())
    if (!contains(b)) return false;
  return true;
}

std::vector<Integer> ZModule4::coordinates(const RingElement& x) const {
  std::vector<Integer> v(4);
  for (int j = 0; j < 4; ++j) {
    Rational s = x[j] * den_;
    if (s.get_den() != 1) throw std::invalid_argument("ZModule4: element not in module");
    v[j] = s.get_num();
  }
  auto c = lattice_coordinates(basis_, v);
  if (!c) throw std::invalid_argument("ZModule4: element not in module");
  return *c;
}

bool ZModule4::is_ideal() const {
  for (const auto& b : basis())
    if (!contains(xi() * b) || !contains(lam() * b)) return false;
  return true;
}

ZModule4 ZModule4::scaled(const RingElement& x) const {
  std::vector<RingElement> g;
  for (const auto& b : basis()) g.push_back(x * b);
  return from_generators(g);
}

ZModule4 ZModule4::operator+(const ZModule4& o) const {
  auto g = basis();
  auto h = o.basis();
  g.insert(g.end(), h.begin(), h.end());
  return from_generators(g);
}

Rational ZModule4::covolume() const {
  if (rank() != 4) throw std::domain_error("ZModule4: covolume of a rank-deficient module");
  Integer det = abs(det_square(basis_));
  Integer d4 = den_ * den_ * den_ * den_;
  return frac(det, d4);
}

Integer module_index(const ZModule4& m, const ZModule4& n) {
  if (m.rank() != 4 || n.rank() != 4) throw std::domain_error("module_index: rank-deficient module");
  if (!m.contains(n)) throw std::invalid_argument("module_index: not a submodule");
  Rational q = n.covolume() / m.covolume();
  if (q.get_den() != 1) throw std::logic_error("module_index: non-integral index");
  return q.get_num();
}

ZModule4 dual_module(const ZModule4& m) {
  if (m.rank() != 4) throw std::domain_error("dual_module: rank-deficient module");
  auto b = m.basis();
  // dual basis y_j with B(b_i, y_j) = delta_ij; B(b_i, y) is linear in y's coordinates
  std::vector<std::vector<Rational>> a(4, std::vector<Rational>(4));
  const RingElement unit[4] = {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) a[i][k] = trace_form(b[i], unit[k]);
  std::vector<RingElement> dual;
  for (int j = 0; j < 4; ++j) {
    std::vector<Rational> rhs(4, 0);
    rhs[j] = 1;
    auto y = solve_rational(a, rhs);
    dual.emplace_back(y[0], y[1], y[2], y[3]);
  }
  return ZModule4::from_generators(dual);
}

ZModule4 order_module() {
  return ZModule4::from_generators({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

ZModule4 edge_module() {
  return ZModule4::from_generators({{1, 0, 0, 1}, {0, -1, 1, -1}, {-1, -1, 1, 1}, {0, 1, 2, 1}});
}

ZModule4 return_module() {
  return ZModule4::from_generators({{-1, -1, 1, -2}, {2, -1, 1, 1}, {2, 2, 1, -2}, {-2, 1, 2, 2}});
}

RingElement alpha_element() { return (RingElement(1, 1, 0, 0) * RingElement(-4, 0, 1, 0)) / Rational(3); }

ZModule4 maximal_order() {
  RingElement a = alpha_element();
  RingElement a2 = a * a, a3 = a2 * a;
  return ZModule4::from_generators({{1, 0, 0, 0}, a, a2 / Rational(5), a3 / Rational(5)});
}

RingElement g1() { return {-1, -1, 1, -2}; }
RingElement g2() { return xi() * g1(); }
RingElement g3() { return {-2, 1, 2, 2}; }
RingElement g4() { return {-2, -2, -1, 2}; }

}  // namespace caspr
