#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopkit/report.hpp"

namespace loopkit {

/// A bijection of {0, ..., n-1}.
///
/// Permutations act on the right: `(point)(p * q) == q(p(point))`, i.e. the
/// product applies `p` first. This matches the convention `yL_x = x*y` used
/// for loop translations, so `(z)(L_x * L_y) == y*(x*z)`.
class Permutation {
 public:
  Permutation() = default;

  /// Validates that `images` is a bijection; throws InputError otherwise.
  explicit Permutation(std::vector<Element> images);

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint cycles, e.g. `from_cycles(3, {{0, 1, 2}})`.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Element>>& cycles);

  /// No bijectivity check; callers guarantee the invariant.
  static Permutation from_images_unchecked(std::vector<Element> images);

  std::size_t degree() const { return images_.size(); }
  Element operator()(Element point) const { return images_[point]; }
  std::span<const Element> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  Permutation operator*(const Permutation& then) const;
  Permutation pow(long long exponent) const;

  /// Least k > 0 with p^k = id (lcm of cycle lengths).
  std::size_t order() const;

  /// p^((m+1)/2) for odd order m; empty for even order.
  std::optional<Permutation> sqrt() const;

  /// Cycle lengths sorted ascending, fixed points included.
  std::vector<std::size_t> cycle_type() const;

  /// Cycle notation without fixed points; identity renders as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Element> images_;
};

enum class PermOp { compose, inverse, commutator };

Permutation compose(const Permutation& p, const Permutation& q);

/// p^-1 q^-1 p q.
Permutation commutator(const Permutation& p, const Permutation& q);

/// Dispatching form of compose / inverse (of `p`, ignoring `q`) /
/// commutator. Throws InputError on mismatched degrees.
Permutation perm_algebra(const Permutation& p, const Permutation& q, PermOp op);

struct OrderAndSqrt {
  std::size_t order = 1;
  std::optional<Permutation> sqrt;
};

OrderAndSqrt perm_order_and_sqrt(const Permutation& p);

inline constexpr std::size_t kDefaultClosureCap = 2'000'000;

/// Finite permutation group stored as its full element list.
///
/// Elements are kept in discovery order (identity first). The element set
/// is immutable once built, so copies share storage.
class PermGroup {
 public:
  std::size_t degree() const;
  std::size_t size() const;

  /// False when the closure cap was hit; no closure claims hold then.
  bool complete() const;
  std::size_t cap() const;

  const std::vector<Permutation>& generators() const;
  Permutation element(std::size_t index) const;
  std::span<const Element> element_images(std::size_t index) const;
  bool contains(const Permutation& p) const;
  bool contains(std::span<const Element> images) const;

 private:
  friend PermGroup closure(std::size_t degree,
                           std::span<const Permutation> generators,
                           std::size_t cap);
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Breadth-first product closure of `generators` on `degree` points.
///
/// The discovery order is deterministic: elements are taken first-in
/// first-out and multiplied on the right by each generator in the given
/// order. If more than `cap` elements would be needed the result is
/// flagged incomplete.
PermGroup closure(std::size_t degree, std::span<const Permutation> generators,
                  std::size_t cap = kDefaultClosureCap);

}  // namespace loopkit
