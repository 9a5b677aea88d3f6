#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "loopkit/perm.hpp"
#include "loopkit/report.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

enum class GroupFamily { cyclic, abelian_product, semidirect, heisenberg, g375 };

/// Parameters per family:
///   cyclic           {n}
///   abelian_product  {n1, n2, ...}     C_n1 x C_n2 x ...
///   semidirect       {m, k, r}         C_m x| C_k, generator acts by a -> r*a
///   heisenberg       {p}               unitriangular 3x3 matrices mod p
///   g375             {}                Heisenberg(5) x| C_3
struct GroupSpec {
  GroupFamily family = GroupFamily::cyclic;
  std::vector<std::size_t> params;
};

GroupFamily parse_group_family(std::string_view name);
std::string to_string(GroupFamily family);

/// Builds the table and verifies associativity exhaustively. Throws
/// InputError on malformed parameters or an invalid action.
Group build_group(const GroupSpec& spec);

Group cyclic_group(std::size_t n);
Group abelian_group(std::span<const std::size_t> moduli);

/// Elements are pairs (a, b) with index a * |acting| + b and product
/// (a, b)(a', b') = (a * phi_b(a'), b b'), where `action[b]` is phi_b.
/// Each phi_b must be an automorphism of `normal` and b -> phi_b a
/// homomorphism (phi_{bb'} = phi_b after phi_{b'}); otherwise InputError
/// names the failing pair.
Group semidirect_product(const Group& normal, const Group& acting,
                         std::span<const Permutation> action);

/// C_m x| C_k where the generator of C_k multiplies C_m by r
/// (requires r^k = 1 mod m).
Group cyclic_semidirect(std::size_t m, std::size_t k, std::size_t r);

/// Matrices [[1,a,c],[0,1,b],[0,0,1]] over Z/p, element index
/// (a * p + b) * p + c.
Group heisenberg_group(std::size_t p);

/// Heisenberg(5) x| C_3. The C_3 generator acts on the Frattini quotient
/// (F_5)^2 by (u, v) -> (v, -u - v) and fixes the center pointwise. The
/// build asserts the result is not metabelian.
Group nonmetabelian_375();

/// Pass iff the derived subgroup (generated by all commutators) is
/// abelian; the report carries `derived_order`.
Report is_metabelian(const Group& g);

/// Subgroup generated by all commutators [x, y] = x^-1 y^-1 x y.
std::vector<Element> derived_subgroup(const Group& g);

/// [a, b] = a^-1 b^-1 a b.
Element group_commutator(const Group& g, Element a, Element b);

/// x^((m+1)/2) where m is the order of x. Throws PreconditionError when m
/// is even.
Element group_sqrt(const Group& g, Element x);

}  // namespace loopkit
