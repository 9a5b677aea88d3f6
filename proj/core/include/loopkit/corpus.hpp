#pragma once

#include <string>
#include <vector>

#include "loopkit/table.hpp"

namespace loopkit {

struct NamedGroup {
  std::string name;
  Group group;
};

/// C3, C5, C7, C9, C15, C3xC3, C7x|C3, Heisenberg(3), Heisenberg(5) and the
/// nonmetabelian group of order 375, in that order.
std::vector<NamedGroup> odd_group_corpus();

/// The order-6 commutative Gamma-loop with every nonidentity element of
/// order 2 that is not automorphic.
Loop nonautomorphic_gamma_6();

/// Z_3^4 with (x)(y) = (x1+y1, x2+y2, x3+y3, x4+y4+(x3-y3)(x1 y2 - x2 y1)),
/// the smallest nonassociative commutative Moufang loop. Element index
/// ((x1 * 3 + x2) * 3 + x3) * 3 + x4.
Loop commutative_moufang_81();

}  // namespace loopkit
