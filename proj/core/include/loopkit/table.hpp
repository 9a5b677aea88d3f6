#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopkit/perm.hpp"
#include "loopkit/report.hpp"

namespace loopkit {

/// An n x n operation table over 0..n-1.
///
/// Only the shape and entry range are enforced here; loop axioms are checked
/// by validate_loop() and enforced by the Loop type.
class CayleyTable {
 public:
  CayleyTable() = default;

  /// Throws InputError if `cells.size() != order * order` or an entry is
  /// out of range.
  CayleyTable(std::size_t order, std::vector<Element> cells);

  /// Throws InputError on ragged rows or out-of-range entries.
  static CayleyTable from_rows(const std::vector<std::vector<Element>>& rows);

  std::size_t order() const { return order_; }
  Element at(Element x, Element y) const { return cells_[x * order_ + y]; }
  std::span<const Element> row(Element x) const {
    return {cells_.data() + x * order_, order_};
  }
  const std::vector<Element>& cells() const { return cells_; }

  /// Optional human-readable element names (empty when absent).
  const std::vector<std::string>& labels() const { return labels_; }
  CayleyTable with_labels(std::vector<std::string> labels) const;

  /// Applies the bijection `relabel` (old index -> new index) to both the
  /// positions and the entries.
  CayleyTable relabeled(std::span<const Element> relabel) const;

  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.order_ == b.order_ && a.cells_ == b.cells_;
  }

 private:
  std::size_t order_ = 0;
  std::vector<Element> cells_;
  std::vector<std::string> labels_;
};

/// Latin-square and two-sided identity (at index 0) check.
///
/// A failing report carries `violation` (row/column/identity), the offending
/// `row` or `column` and the first repeated `cell`.
Report validate_loop(const CayleyTable& t);

enum class Operation { mul, ldiv, rdiv };
enum class Side { left, right };

struct ElementOrderProfile {
  std::vector<std::size_t> orders;  // 0 where no power <= n hit the identity
  std::size_t exponent = 1;         // lcm of the resolved orders
  bool complete = true;
  std::optional<Element> first_unresolved;
};

struct SqrtMap {
  std::vector<Element> square;
  std::optional<std::vector<Element>> root;

  bool bijective() const { return root.has_value(); }
  /// Throws PreconditionError when squaring is not bijective.
  Element sqrt(Element x) const;
};

/// A validated finite loop with identity 0.
///
/// Multiplication and both division tables are materialized at
/// construction. Element orders and the square-root map are computed on
/// first request and cached; copies share all of this state and concurrent
/// reads are safe.
class Loop {
 public:
  /// Throws InputError (with the validation detail) if `table` is not a
  /// loop with identity 0.
  explicit Loop(CayleyTable table);

  std::size_t order() const;
  const CayleyTable& table() const;

  Element mul(Element x, Element y) const { return mul_[x * n_ + y]; }
  /// Unique z with x*z == y.
  Element ldiv(Element x, Element y) const { return ldiv_[x * n_ + y]; }
  /// Unique z with z*y == x.
  Element rdiv(Element x, Element y) const { return rdiv_[x * n_ + y]; }
  /// x^-1 := x \ e, the convention used by every loop formula here.
  Element inverse(Element x) const { return ldiv(x, kIdentity); }

  const ElementOrderProfile& element_orders() const;
  const SqrtMap& sqrt_map() const;

  friend bool operator==(const Loop& a, const Loop& b) { return a.table() == b.table(); }

 private:
  struct State;
  std::shared_ptr<const State> state_;
  std::size_t n_ = 0;
  const Element* mul_ = nullptr;
  const Element* ldiv_ = nullptr;
  const Element* rdiv_ = nullptr;
};

/// A loop whose operation has been verified associative.
class Group {
 public:
  /// Throws InputError naming the first non-associative triple.
  static Group from_loop(Loop loop);

  const Loop& loop() const { return loop_; }
  std::size_t order() const { return loop_.order(); }
  Element mul(Element x, Element y) const { return loop_.mul(x, y); }
  Element inverse(Element x) const { return loop_.inverse(x); }

  friend bool operator==(const Group& a, const Group& b) { return a.loop_ == b.loop_; }

 private:
  explicit Group(Loop loop) : loop_(std::move(loop)) {}
  Loop loop_;
};

/// First (x, y, z) in lexicographic order with (x*y)*z != x*(y*z).
std::optional<std::array<Element, 3>> find_nonassociative_triple(const Loop& t);

/// Range-checked dispatch onto Loop::mul / ldiv / rdiv.
Element evaluate(const Loop& t, Operation op, Element x, Element y);

Permutation translation(const Loop& t, Element x, Side side);

/// Identity element moved along L_x |k| times; negative k uses L_x^-1.
Element power(const Loop& t, Element x, long long k);

const ElementOrderProfile& element_orders(const Loop& t);
const SqrtMap& sqrt_map(const Loop& t);

/// Least subset containing `seed` and 0 that is closed under the loop
/// operations, sorted ascending. In a finite loop closure under `*` alone
/// already yields closure under both divisions.
std::vector<Element> generated_subloop(const Loop& t, std::span<const Element> seed);

/// Returns a bijection f (indexed by element of `a`) with
/// f(x*y) == f(x)*f(y), or empty when the loops are not isomorphic.
std::optional<std::vector<Element>> is_isomorphic(const Loop& a, const Loop& b);

/// Componentwise product on pairs; pair (i, j) has index i * |b| + j.
Loop direct_product(const Loop& a, const Loop& b);

/// Relabels `t` so that its two-sided identity becomes index 0 by swapping
/// it with 0. Throws InputError if there is no two-sided identity.
CayleyTable normalize_identity(const CayleyTable& t);

/// The loop on `elements` (sorted, containing 0) induced by `t`, relabeled
/// to 0..k-1 in ascending order. Throws InputError if not closed.
Loop extract_subloop(const Loop& t, std::span<const Element> elements);

}  // namespace loopkit
