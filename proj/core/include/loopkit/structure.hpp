#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "loopkit/report.hpp"
#include "loopkit/table.hpp"

namespace loopkit {

/// A subloop given by its sorted carrier.
struct SubloopHandle {
  std::vector<Element> elements;    // sorted, contains 0
  std::vector<Element> generators;  // the seed it was generated from
  std::optional<bool> normal;       // filled in by annotate_normal()
  std::optional<std::size_t> prime;  // set when every element has p-power order

  std::size_t order() const { return elements.size(); }
  bool contains(Element x) const;
  friend bool operator==(const SubloopHandle& a, const SubloopHandle& b) {
    return a.elements == b.elements;
  }
};

/// Least subloop containing `seed`.
SubloopHandle subloop_generate(const Loop& t, std::span<const Element> seed);

/// Closure of `elements` under *, \ and /.
bool is_subloop(const Loop& t, std::span<const Element> elements);

struct SubloopLattice {
  std::vector<SubloopHandle> subloops;  // sorted by (order, carrier)
  bool complete = true;
};

inline constexpr std::size_t kDefaultSubloopCap = 100'000;

/// Closures of all subsets of size <= 2, then joins of pairs of found
/// subloops until nothing new appears. `complete` is false if more than
/// `cap` subloops turned up before the fixpoint.
SubloopLattice enumerate_subloops(const Loop& t, std::size_t cap = kDefaultSubloopCap);

/// Invariance under every standard inner-mapping generator. A failing
/// report names the first moving generator (`generator`) and an element of
/// `h` it maps outside (`element`, `image`).
Report normality_report(const Loop& t, std::span<const Element> h);
bool is_normal(const Loop& t, std::span<const Element> h);

/// Sets `h.normal`.
void annotate_normal(const Loop& t, SubloopHandle& h);

struct Quotient {
  Loop loop;
  /// Block index of every element of the ambient loop. Blocks are numbered
  /// by smallest member, so the block of 0 is 0.
  std::vector<Element> block_of;
};

/// Q/H on the cosets xH. Throws InputError if the cosets do not partition
/// the loop or the block product is not well defined.
Quotient quotient(const Loop& t, std::span<const Element> h);

/// Elements a with xa = ax, (ax)y = a(xy), (xa)y = x(ay), (xy)a = x(ya).
SubloopHandle center(const Loop& t);

struct SeriesRecord {
  std::vector<SubloopHandle> terms;
  /// upper central series: the last term is the whole loop;
  /// derived series: the last term is {0}.
  bool reaches_end = false;
  /// Number of steps taken (nilpotency class or derived length when
  /// reaches_end holds).
  std::size_t length = 0;
  /// False when a step depended on an incomplete subloop enumeration.
  bool reliable = true;
};

/// Z_0 = 1, Z_{k+1} = preimage of Z(Q/Z_k), until the series stabilizes.
/// Throws ConsistencyError if some term fails the normality check.
SeriesRecord upper_central_series(const Loop& t);

enum class DerivedMethod {
  /// Normal closure of all commutators (yx)\(xy) and associators
  /// (x(yz))\((xy)z).
  normal_closure,
  /// Intersection of all normal subloops with abelian-group quotient, taken
  /// over enumerate_subloops().
  enumeration,
};

/// Smallest normal subloop with abelian-group quotient. The quotient is
/// re-checked and a failure throws ConsistencyError. `reliable` is false
/// when the enumeration method ran on an incomplete lattice.
SubloopHandle derived_subloop(const Loop& t, DerivedMethod method = DerivedMethod::normal_closure,
                              bool* reliable = nullptr);

/// Q = D_0 > D_1 > ... with D_{k+1} the derived subloop of D_k, until it
/// stabilizes. reaches_end means the series ends in {0} (solvable).
SeriesRecord derived_series(const Loop& t, DerivedMethod method = DerivedMethod::normal_closure);

inline constexpr std::size_t kDefaultSubloopSearchBudget = 1'000'000;

struct SubloopSearch {
  std::optional<SubloopHandle> found;
  std::size_t attempts = 0;
  bool budget_exhausted = false;
};

/// Greedy depth-first search for a subloop of exactly `order` elements.
/// Candidates are elements whose order divides `order`, and every
/// intermediate closure must have order dividing `order`.
SubloopSearch find_subloop_of_order(const Loop& t, std::size_t order,
                                    std::size_t budget = kDefaultSubloopSearchBudget);

/// A subloop of order p^v, p^v the full p-part of |Q|, all of whose elements
/// have p-power order. Throws InputError if p is not a prime dividing |Q|
/// and ConsistencyError if the search fails within `budget`.
SubloopHandle sylow_subloop(const Loop& t, std::size_t p,
                            std::size_t budget = kDefaultSubloopSearchBudget);

/// Same for the pi-part of |Q| with pi = `primes`.
SubloopHandle hall_subloop(const Loop& t, std::span<const std::size_t> primes,
                           std::size_t budget = kDefaultSubloopSearchBudget);

/// Over the enumerated subloops: |A| divides |B| whenever A <= B, and an
/// element of order p exists for every odd prime p dividing |Q|. Primes
/// without such an element are listed in `missing_primes`; p = 2 is
/// recorded but not asserted.
Report lagrange_cauchy_audit(const Loop& t, std::size_t cap = kDefaultSubloopCap);

/// Z(Q, +) == Z(Q, o) for an odd-order Bruck loop and its Gamma-loop.
Report center_transfer_check(const Loop& bruck);

/// Distinct prime divisors, ascending.
std::vector<std::size_t> prime_divisors(std::size_t n);

}  // namespace loopkit
