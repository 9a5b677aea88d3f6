#pragma once

#include <chrono>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "loopkit/perm.hpp"
#include "loopkit/report.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

/// Outcome of an exhaustive axiom scan.
///
/// A failing report names the violated law as an equation in the identity
/// language (see identity.hpp) and the witness assigns values to that
/// equation's variables in alphabetical order. The witness is the
/// lexicographically first violation of the scan.
struct VarietyReport {
  std::string variety;
  bool pass = true;
  std::vector<Element> witness;
  std::string equation;
  std::vector<std::pair<std::string, std::string>> notes;
  std::chrono::microseconds elapsed{0};

  explicit operator bool() const { return pass; }
  VarietyReport& note(std::string key, std::string value) {
    notes.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  std::string note_value(std::string_view key) const;
  Report to_report() const;
};

enum class BasicProperty { associative, commutative };
enum class BolBruck { bol, bruck };

VarietyReport check_basic(const Loop& t, BasicProperty which);

/// x \ e == e / x for all x.
VarietyReport check_two_sided_inverses(const Loop& t);

/// (xy)^-1 = x^-1 y^-1. Checks two-sided inverses first; a mismatch there
/// fails with note stage=inverse.
VarietyReport check_aip(const Loop& t);

/// L_x L_{x^-1} = L_{x^-1} L_x.
VarietyReport check_gamma3(const Loop& t);

/// P_x P_y P_x = P_{yP_x} with P_x = L_x L_{x^-1}^-1.
VarietyReport check_gamma4(const Loop& t);

/// Commutativity, AIP, gamma3, gamma4 in that order; the first failing
/// axiom is reported in note `failed_axiom`.
VarietyReport check_gamma(const Loop& t);

/// Left Bol identity x(y(xz)) = (x(yx))z; `bruck` additionally needs AIP.
VarietyReport check_bol_bruck(const Loop& t, BolBruck which);

/// x^2 (yz) = (xy)(xz). Fails on the commutativity witness when `t` is not
/// commutative (note stage=precondition).
VarietyReport check_moufang_commutative(const Loop& t);

/// Every 1-generated subloop is an abelian group.
VarietyReport check_power_associative(const Loop& t);

/// Every standard inner-mapping generator is an automorphism.
VarietyReport check_automorphic(const Loop& t);

/// L_{x^k} = L_x^k for 1 <= k <= |x|.
VarietyReport check_left_power_alternative(const Loop& t);

// -- operator identities of gamma-loops and Bruck loops ---------------------

/// P_x for every x, indexed by x.
std::vector<Permutation> p_operators(const Loop& t);

/// P_x = L_x L_{x^-1}^-1 = L_{x^-1}^-1 L_x and P_x L_x = L_x P_x.
VarietyReport check_p_operator_identities(const Loop& t);

/// For k, m in [-E, E] (E the exponent): x^m P_x = x^(m+2),
/// P_x^m = P_{x^m} and x^k P_{x^m} = x^(k+2m).
VarietyReport check_power_operator_identities(const Loop& t);

/// x^i x^j = x^(i+j) for i in [-m, m], j in [-m-1, m+1].
VarietyReport check_pa(const Loop& t, std::size_t m);

/// (xy)^2 = x(y^2 x).
VarietyReport check_bruck_square(const Loop& t);

/// Names accepted by check_named (CLI spellings).
std::vector<std::string> known_varieties();

/// Dispatches by name; throws InputError for unknown names.
VarietyReport check_named(const Loop& t, std::string_view name);

/// The term for x^k in the identity language: x*(x*(...)) for k > 0,
/// x\(x\(...\e)) for k < 0, e for k = 0.
std::string power_term(std::string_view var, long long k);

}  // namespace loopkit
