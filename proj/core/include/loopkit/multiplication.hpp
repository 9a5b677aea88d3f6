#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "loopkit/perm.hpp"
#include "loopkit/report.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

enum class MltKind { left, full };

/// Mlt_left = <L_x>, Mlt = <L_x, R_x>, as permutation groups on the loop.
PermGroup mlt_group(const Loop& t, MltKind which, std::size_t cap = kDefaultClosureCap);

enum class InnerKind { left, right, middle };

/// One standard inner-mapping generator:
///   left   L_{x,y} = L_x L_y L_{yx}^-1   z -> (yx) \ (y(xz))
///   right  R_{x,y} = R_x R_y R_{xy}^-1   z -> ((zx)y) / (xy)
///   middle T_x     = R_x L_x^-1          z -> x \ (zx)      (y unused)
struct InnerGenerator {
  InnerKind kind = InnerKind::left;
  Element x = 0;
  Element y = 0;
  Permutation map;

  std::string name() const;
  /// The image of `z` written as a term over variables a (= x), b (= y)
  /// and `z_var`, in the identity language.
  std::string term(std::string_view z_var) const;
};

Element apply_inner(const Loop& t, InnerKind kind, Element x, Element y, Element z);

/// Calls `visit` for every L_{x,y}, then every R_{x,y}, then every T_x, each
/// family in lexicographic (x, y) order. Stops early if `visit` returns
/// false. Use this instead of inner_generators() for large loops.
void for_each_inner_generator(const Loop& t,
                              const std::function<bool(const InnerGenerator&)>& visit);

/// All 2n^2 + n inner generators, materialized. Each fixes 0.
std::vector<InnerGenerator> inner_generators(const Loop& t);

/// Twisted subset test inside a group given by its table: 1 in S, S closed
/// under inversion and (x, y) -> xyx.
Report is_twisted_subset(const Group& g, std::span<const Element> subset);

/// Same test for a set of permutations inside a permutation group. When the
/// group closure is complete the subset must also lie in the group.
Report is_twisted_subset(const PermGroup& g, std::span<const Permutation> subset);

/// {L_x : x in Q}, indexed by x.
std::vector<Permutation> left_translations(const Loop& t);

}  // namespace loopkit
