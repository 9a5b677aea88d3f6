#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "loopkit/identity.hpp"
#include "loopkit/report.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

enum class DedupeMode { raw, up_to_isomorphism };

/// A finite-model search problem over loops with identity 0.
///
/// Row 0 and column 0 are always pinned to the identity permutation.
struct SearchSpec {
  std::size_t order = 1;
  std::vector<Identity> identities;
  /// Only cells on or above the diagonal are searched; the rest mirror them.
  bool commutative = false;
  DedupeMode dedupe = DedupeMode::raw;
  /// Caps; zero means unlimited. max_solutions counts emitted solutions
  /// (representatives in up-to-isomorphism mode).
  std::size_t max_solutions = 0;
  std::uint64_t node_budget = 0;
  std::uint64_t budget_ms = 0;
};

inline constexpr std::size_t kMaxSearchOrder = 64;

struct SearchResult {
  /// In lexicographic order of the row-major table.
  std::vector<Loop> solutions;
  /// Solutions seen before isomorphism filtering.
  std::size_t raw_solutions = 0;
  /// Assignments tried.
  std::uint64_t nodes = 0;
  /// False when a cap stopped the search; `stop_reason` says which.
  bool complete = true;
  std::string stop_reason;
  std::chrono::milliseconds elapsed{0};
};

/// Backtracking Latin-square completion in row-major cell order with values
/// tried in increasing order. Each identity instance (identity plus values
/// for its variables) is checked as soon as both sides are defined on the
/// partial table. Throws InputError on order 0 or above kMaxSearchOrder.
SearchResult search_loops(const SearchSpec& spec);

/// The identity set used for Gamma-loop searches: AIP, the L_x L_{x^-1}
/// commutation law and the P-operator law. Commutativity is expected as
/// SearchSpec::commutative.
std::vector<Identity> gamma_identities();

/// Left Bol and AIP.
std::vector<Identity> bruck_identities();

struct BruckSearchSummary {
  Report report;
  /// Nonassociative representatives found, across all requested orders.
  std::vector<Loop> nonassociative;
};

/// Searches Bruck loops (up to isomorphism) at each odd order in `orders`
/// and runs the round-trip and center-transfer checks on every
/// nonassociative find; for orders p^2 the Gamma image must be an abelian
/// group. Counts are reported, never asserted against expectations.
BruckSearchSummary search_bruck_odd(std::span<const std::size_t> orders,
                                    std::uint64_t budget_ms_per_order = 0);

}  // namespace loopkit
