#pragma once
// Rank <= 4 Z-submodules of K in canonical Hermite form.

#include <vector>

#include "caspr/intmat.hpp"
#include "caspr/ring.hpp"

namespace caspr {

class ZModule4 {
public:
  ZModule4() = default;
  static ZModule4 from_generators(const std::vector<RingElement>& gens);

  std::size_t rank() const { return basis_.rows(); }
  const Integer& denominator() const { return den_; }
  // integer numerators of the canonical basis (rows), to be divided by denominator()
  const IntMatrix& numerators() const { return basis_; }
  std::vector<RingElement> basis() const;

  bool contains(const RingElement& x) const;
  bool contains(const ZModule4& n) const;
  bool is_ideal() const;  // xi*M and lam*M inside M
  ZModule4 scaled(const RingElement& x) const;
  ZModule4 operator+(const ZModule4& o) const;
  // coordinates of x in the canonical basis; throws if x not in M
  std::vector<Integer> coordinates(const RingElement& x) const;

  // covolume |det| / den^4 relative to the coordinate lattice Z^4
  Rational covolume() const;

  bool operator==(const ZModule4& o) const { return den_ == o.den_ && basis_ == o.basis_; }
  bool operator!=(const ZModule4& o) const { return !(*this == o); }

private:
  Integer den_ = 1;
  IntMatrix basis_{0, 4};
};

// [M : N] for N inside M; throws if N is not a full-rank submodule of M.
Integer module_index(const ZModule4& m, const ZModule4& n);

// Dual with respect to the rational form B(x, y) = pairing(x, y) + pairing(x, y)'.
ZModule4 dual_module(const ZModule4& m);

// The modules used throughout.
ZModule4 order_module();       // Z[xi, lam]
ZModule4 edge_module();        // E, spanned by the edge vectors
ZModule4 return_module();      // L
ZModule4 maximal_order();      // O_K = <1, a, a^2/5, a^3/5>, a = (1 + xi)(lam - 4)/3
RingElement alpha_element();  // (1 + xi)(lam - 4)/3

// Generators of L.
RingElement g1();
RingElement g2();  // xi * g1
RingElement g3();
RingElement g4();

}  // namespace caspr
