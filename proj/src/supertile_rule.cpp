#include "caspr/supertile_rule.hpp"

#include "caspr/tiles.hpp"

namespace caspr {

const std::array<std::vector<ChildRule>, 9>& supertile_rule() {
  static const std::array<std::vector<ChildRule>, 9> rule = {{
    // Gamma
    {
      {Gamma, 0, RingElement(0, 0, 0, 0)},
      {Pi, 4, RingElement(2, -4, -2, 1)},
      {Phi, 2, RingElement(-5, 1, 2, -1)},
      {Delta, 5, RingElement(4, -2, -1, -1)},
      {Sigma, 1, RingElement(4, -2, -1, -1)},
      {Xi, 1, RingElement(-3, 3, 3, -3)},
      {Theta, 0, RingElement(0, 3, 0, -3)},
    },
    // Delta
    {
      {Gamma, 0, RingElement(0, 0, 0, 0)},
      {Xi, 4, RingElement(2, -4, -2, 1)},
      {Phi, 2, RingElement(-5, 1, 2, -1)},
      {Delta, 5, RingElement(4, -2, -1, -1)},
      {Sigma, 1, RingElement(4, -2, -1, -1)},
      {Pi, 1, RingElement(-3, 3, 3, -3)},
      {Xi, 5, RingElement(2, -1, -2, -2)},
      {Phi, 0, RingElement(0, 3, 0, -3)},
    },
    // Theta
    {
      {Gamma, 0, RingElement(0, 0, 0, 0)},
      {Psi, 4, RingElement(2, -4, -2, 1)},
      {Phi, 2, RingElement(-5, 1, 2, -1)},
      {Delta, 5, RingElement(4, -2, -1, -1)},
      {Sigma, 1, RingElement(4, -2, -1, -1)},
      {Pi, 1, RingElement(-3, 3, 3, -3)},
      {Pi, 5, RingElement(2, -1, -2, -2)},
      {Phi, 0, RingElement(0, 3, 0, -3)},
    },
    // Lambda
    {
      {Gamma, 0, RingElement(0, 0, 0, 0)},
      {Psi, 4, RingElement(2, -4, -2, 1)},
      {Phi, 2, RingElement(-5, 1, 2, -1)},
      {Delta, 5, RingElement(4, -2, -1, -1)},
      {Sigma, 1, RingElement(4, -2, -1, -1)},
      {Pi, 1, RingElement(-3, 3, 3, -3)},
      {Xi, 5, RingElement(2, -1, -2, -2)},
      {Phi, 0, RingElement(0, 3, 0, -3)},
    },
    // Xi
    {
      {Gamma, 0, RingElement(0, 0, 0, 0)},
      {Psi, 4, RingElement(2, -4, -2, 1)},
      {Phi, 2, RingElement(-5, 1, 2, -1)},
      {Delta, 5, RingElement(4, -2, -1, -1)},
      {Sigma, 1, RingElement(4, -2, -1, -1)},
      {Psi, 1, RingElement(-3, 3, 3, -3)},
      {Pi, 5, RingElement(2, -1, -2, -2)},
      {Phi, 0, RingElement(0, 3, 0, -3)},
    },
    // Pi
    {
      {Gamma, 0, RingElement(0, 0, 0, 0)},
      {Psi, 4, RingElement(2, -4, -2, 1)},
      {Phi, 2, RingElement(-5, 1, 2, -1)},
      {Delta, 5, RingElement(4, -2, -1, -1)},
      {Sigma, 1, RingElement(4, -2, -1, -1)},
      {Psi, 1, RingElement(-3, 3, 3, -3)},
      {Xi, 5, RingElement(2, -1, -2, -2)},
      {Phi, 0, RingElement(0, 3, 0, -3)},
    },
    // Sigma
    {
      {Gamma, 0, RingElement(3, 0, -3, 0)},
      {Xi, 4, RingElement(5, -4, -5, 1)},
      {Lambda, 2, RingElement(-2, 1, -1, -1)},
      {Delta, 5, RingElement(7, -2, -4, -1)},
      {Sigma, 1, RingElement(7, -2, -4, -1)},
      {Pi, 1, RingElement(0, 3, 0, -3)},
      {Xi, 5, RingElement(5, -1, -5, -2)},
      {Phi, 0, RingElement(3, 3, -3, -3)},
    },
    // Phi
    {
      {Gamma, 0, RingElement(0, 0, 0, 0)},
      {Psi, 4, RingElement(2, -4, -2, 1)},
      {Phi, 2, RingElement(-5, 1, 2, -1)},
      {Delta, 5, RingElement(4, -2, -1, -1)},
      {Sigma, 1, RingElement(4, -2, -1, -1)},
      {Pi, 1, RingElement(-3, 3, 3, -3)},
      {Psi, 5, RingElement(2, -1, -2, -2)},
      {Phi, 0, RingElement(0, 3, 0, -3)},
    },
    // Psi
    {
      {Gamma, 0, RingElement(0, 0, 0, 0)},
      {Psi, 4, RingElement(2, -4, -2, 1)},
      {Phi, 2, RingElement(-5, 1, 2, -1)},
      {Delta, 5, RingElement(4, -2, -1, -1)},
      {Sigma, 1, RingElement(4, -2, -1, -1)},
      {Psi, 1, RingElement(-3, 3, 3, -3)},
      {Psi, 5, RingElement(2, -1, -2, -2)},
      {Phi, 0, RingElement(0, 3, 0, -3)},
    },
  }};
  return rule;
}

RingElement half_step_point(const RingElement& z) { return mu() * z.conj(); }

}  // namespace caspr
