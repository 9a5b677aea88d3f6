#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "loopkit/perm.hpp"
#include "loopkit/report.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

enum class ConstructionKind {
  gamma_from_group,
  bruck_from_group,
  bruck_from_gamma,
  gamma_from_bruck,
  gamma_from_bruck_translations,
};

std::string to_string(ConstructionKind kind);

struct ConstructionOptions {
  /// Run the variety check the construction assumes of its input and throw
  /// PreconditionError (stage = construction name) when it fails.
  bool verify_input = true;
  /// Run the variety check the output should satisfy and record it in
  /// ConstructionResult::verification.
  bool verify_output = true;
  std::size_t closure_cap = kDefaultClosureCap;
};

struct ConstructionResult {
  Loop loop;
  ConstructionKind kind;
  /// Free-form description of the input, e.g. "group order=21".
  std::string source;
  /// Every check that ran, prefixed `input.` or `output.`.
  Report verification;
};

/// x o y = x y [y,x]^(1/2). Throws PreconditionError naming an element of
/// even order when squaring in `g` is not bijective.
ConstructionResult gamma_from_group(const Group& g, const ConstructionOptions& options = {});

/// x (+) y = (x y y x)^(1/2).
ConstructionResult bruck_from_group(const Group& g, const ConstructionOptions& options = {});

/// x (+) y = (x^-1 \ ((y o y) o x))^(1/2) computed in the Gamma-loop `q`.
ConstructionResult bruck_from_gamma(const Loop& q, const ConstructionOptions& options = {});

/// Inverse of bruck_from_gamma via the right-division formula
/// b /o a = (a^-1 b^(1/2)) / b^(-1/2), inverted column by column. Throws
/// ConsistencyError if a column of that formula is not a bijection.
ConstructionResult gamma_from_bruck(const Loop& q, const ConstructionOptions& options = {});

/// Same loop as gamma_from_bruck, computed as x o y = 0 (L_x L_y [L_y, L_x]^(1/2))
/// inside the left multiplication group. Throws IncompleteError when the
/// closure of the left translations exceeds `options.closure_cap`.
ConstructionResult gamma_from_bruck_via_translations(const Loop& q,
                                                     const ConstructionOptions& options = {});

enum class LoopKind { gamma, bruck };

/// gamma: gamma_from_bruck(bruck_from_gamma(q)) == q; bruck: the other way
/// round. A precondition failure on the way fails the report with `stage`.
Report round_trip_report(const Loop& q, LoopKind kind);

/// (y P_x)^2 = (x^2) P_y P_x for all x, y, with z P_x = x^-1 \ (x z).
Report square_operator_report(const Loop& gamma);

/// For every x, y in the Bruck loop `q`, the set of z with
/// x (+) z^(-1/2) = y^-1 (+) z^(1/2) is exactly {x o y}, where o is the
/// operation of gamma_from_bruck(q).
Report bruck_solution_uniqueness_report(const Loop& q);

/// a \o b = (a^-1 b a^-1 b^-1)^(1/2) b for all a, b, where `gamma` is
/// gamma_from_group(g).
Report gamma_left_division_report(const Group& g, const Loop& gamma);

/// For a commutative Moufang loop of odd order, the loop equals its own
/// image under both gamma_from_bruck and bruck_from_gamma.
Report moufang_coincidence_report(const Loop& q);

/// power(t, x, k) agrees across all `loops` for every x and |k| <= radius.
Report power_coincidence_report(std::span<const Loop> loops, long long radius);

/// First cell where two equal-order loops differ, as a failing report; pass
/// when the tables are identical.
Report table_equality_report(const Loop& a, const Loop& b, std::string name = "table_equality");

}  // namespace loopkit
