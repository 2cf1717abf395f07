#pragma once
// Placement data of the half-step substitution: for each parent type, the
// children filling its reflected, sqrt(lambda)-scaled outline.

#include <array>
#include <vector>

#include "caspr/ring.hpp"

namespace caspr {

struct ChildRule {
  int tile;            // child type
  int rot;             // child rotation in the frame of a parent at rotation 0
  RingElement offset;  // child translation in that frame
};

// rule[parent] = children, for parents in the order Gamma ... Psi
const std::array<std::vector<ChildRule>, 9>& supertile_rule();

// The half-step linear map on positions: z -> mu * conj(z), |mu|^2 = lambda.
RingElement half_step_point(const RingElement& z);

}  // namespace caspr
