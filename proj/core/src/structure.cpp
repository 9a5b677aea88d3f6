#include "loopkit/structure.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "loopkit/constructions.hpp"
#include "loopkit/error.hpp"
#include "loopkit/multiplication.hpp"

namespace loopkit {

namespace {

// Multiplicative closure with early exit, reusing one mark array.
class Closer {
 public:
  explicit Closer(const Loop& t) : t_(t), mark_(t.order(), 0) {}

  // `base` must already be closed. Returns nullopt when the closure would
  // exceed `cap` elements or contain an element `admit` rejects.
  std::optional<std::vector<Element>> close(std::span<const Element> base,
                                            std::span<const Element> extra, std::size_t cap,
                                            const std::function<bool(Element)>& admit = {}) {
    ++stamp_;
    members_.assign(base.begin(), base.end());
    for (Element x : members_) mark_[x] = stamp_;
    auto add = [&](Element x) {
      if (mark_[x] == stamp_) return true;
      if (members_.size() >= cap || (admit && !admit(x))) return false;
      mark_[x] = stamp_;
      members_.push_back(x);
      return true;
    };
    for (Element x : extra) {
      if (!add(x)) return std::nullopt;
    }
    for (std::size_t i = base.size(); i < members_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const Element a = members_[i], b = members_[j];
        if (!add(t_.mul(a, b)) || !add(t_.mul(b, a))) return std::nullopt;
      }
    }
    std::vector<Element> out = members_;
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  const Loop& t_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t stamp_ = 0;
  std::vector<Element> members_;
};

std::vector<char> membership(std::size_t n, std::span<const Element> h) {
  std::vector<char> in(n, 0);
  for (Element x : h) in[x] = 1;
  return in;
}

bool is_subset(std::span<const Element> a, std::span<const Element> b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<Element> all_elements(std::size_t n) {
  std::vector<Element> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Element>(i);
  return out;
}

bool is_abelian_group(const Loop& t) {
  for (Element x = 0; x < t.order(); ++x) {
    for (Element y = 0; y < x; ++y) {
      if (t.mul(x, y) != t.mul(y, x)) return false;
    }
  }
  return !find_nonassociative_triple(t).has_value();
}

void require_abelian_quotient(const Loop& t, std::span<const Element> s) {
  if (!is_abelian_group(quotient(t, s).loop)) {
    throw ConsistencyError("derived subloop candidate of order " + std::to_string(s.size()) +
                           " does not have an abelian group quotient");
  }
}

bool only_primes(std::size_t m, std::span<const std::size_t> primes) {
  if (m == 0) return false;
  for (std::size_t p : primes) {
    while (m % p == 0) m /= p;
  }
  return m == 1;
}

SubloopSearch greedy_search(const Loop& t, std::size_t target,
                            const std::function<bool(Element)>& admit, std::size_t budget) {
  SubloopSearch result;
  if (target == 1) {
    result.found = SubloopHandle{{kIdentity}, {}, std::nullopt, std::nullopt};
    return result;
  }
  std::vector<Element> candidates;
  for (Element x = 1; x < t.order(); ++x) {
    if (admit(x)) candidates.push_back(x);
  }
  Closer closer(t);
  std::set<std::vector<Element>> visited;
  std::function<void(const std::vector<Element>&, std::vector<Element>&)> dfs =
      [&](const std::vector<Element>& s, std::vector<Element>& gens) {
        for (Element c : candidates) {
          if (result.found) return;
          if (std::binary_search(s.begin(), s.end(), c)) continue;
          if (result.attempts >= budget) {
            result.budget_exhausted = true;
            return;
          }
          ++result.attempts;
          const Element one[] = {c};
          auto next = closer.close(s, one, target, admit);
          if (!next || target % next->size() != 0) continue;
          gens.push_back(c);
          if (next->size() == target) {
            result.found = SubloopHandle{std::move(*next), gens, std::nullopt, std::nullopt};
            return;
          }
          if (visited.insert(*next).second) dfs(*next, gens);
          gens.pop_back();
        }
      };
  std::vector<Element> gens;
  dfs({kIdentity}, gens);
  return result;
}

std::size_t part_of(std::size_t n, std::span<const std::size_t> primes) {
  std::size_t out = 1;
  for (std::size_t p : primes) {
    while (n % p == 0) {
      n /= p;
      out *= p;
    }
  }
  return out;
}

}  // namespace

bool SubloopHandle::contains(Element x) const {
  return std::binary_search(elements.begin(), elements.end(), x);
}

std::vector<std::size_t> prime_divisors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

SubloopHandle subloop_generate(const Loop& t, std::span<const Element> seed) {
  for (Element x : seed) {
    if (x >= t.order()) throw InputError("seed element " + std::to_string(x) + " out of range");
  }
  SubloopHandle h;
  h.elements = generated_subloop(t, seed);
  h.generators.assign(seed.begin(), seed.end());
  return h;
}

bool is_subloop(const Loop& t, std::span<const Element> elements) {
  const auto in = membership(t.order(), elements);
  if (elements.empty() || !in[kIdentity]) return false;
  for (Element x : elements) {
    for (Element y : elements) {
      if (!in[t.mul(x, y)] || !in[t.ldiv(x, y)] || !in[t.rdiv(x, y)]) return false;
    }
  }
  return true;
}

SubloopLattice enumerate_subloops(const Loop& t, std::size_t cap) {
  const std::size_t n = t.order();
  const std::size_t half = n / 2;
  const auto whole = all_elements(n);
  SubloopLattice lattice;
  std::set<std::vector<Element>> seen;
  std::vector<SubloopHandle> found;

  auto add = [&](std::vector<Element> elements, std::vector<Element> gens) {
    if (!seen.insert(elements).second) return;
    found.push_back(SubloopHandle{std::move(elements), std::move(gens), std::nullopt, std::nullopt});
  };

  Closer closer(t);
  const Element zero[] = {kIdentity};
  add({kIdentity}, {});
  std::vector<std::vector<Element>> cyclic(n);
  for (Element x = 0; x < n; ++x) {
    const Element one[] = {x};
    cyclic[x] = *closer.close(zero, one, n);
    add(cyclic[x], {x});
  }
  for (Element x = 1; x < n && found.size() <= cap; ++x) {
    for (Element y = x + 1; y < n; ++y) {
      if (std::binary_search(cyclic[x].begin(), cyclic[x].end(), y) ||
          std::binary_search(cyclic[y].begin(), cyclic[y].end(), x)) {
        continue;
      }
      const Element one[] = {y};
      // A proper subloop has at most n/2 elements: its cosets by elements
      // outside it are disjoint from it.
      auto c = closer.close(cyclic[x], one, half);
      add(c ? std::move(*c) : whole, {x, y});
    }
  }
  for (std::size_t i = 1; i < found.size() && found.size() <= cap; ++i) {
    for (std::size_t j = 1; j < i && found.size() <= cap; ++j) {
      const auto a = found[i].elements, b = found[j].elements;
      if (is_subset(a, b) || is_subset(b, a)) continue;
      std::vector<Element> gens = found[i].generators;
      gens.insert(gens.end(), found[j].generators.begin(), found[j].generators.end());
      auto c = a.size() + b.size() > half ? std::nullopt : closer.close(a, b, half);
      add(c ? std::move(*c) : whole, std::move(gens));
    }
  }
  lattice.complete = found.size() <= cap;
  std::sort(found.begin(), found.end(), [](const SubloopHandle& a, const SubloopHandle& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  lattice.subloops = std::move(found);
  return lattice;
}

Report normality_report(const Loop& t, std::span<const Element> h) {
  Report r("normality");
  const std::size_t n = t.order();
  r.add("order", h.size());
  const auto in = membership(n, h);
  auto moved = [&](InnerKind kind, Element x, Element y) {
    for (Element s : h) {
      const Element image = apply_inner(t, kind, x, y, s);
      if (!in[image]) {
        InnerGenerator g;
        g.kind = kind;
        g.x = x;
        g.y = y;
        r.fail()
            .add("generator", g.name())
            .add("element", std::size_t{s})
            .add("image", std::size_t{image});
        return true;
      }
    }
    return false;
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (moved(InnerKind::left, x, y)) return r;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (moved(InnerKind::right, x, y)) return r;
  for (Element x = 0; x < n; ++x)
    if (moved(InnerKind::middle, x, 0)) return r;
  return r;
}

bool is_normal(const Loop& t, std::span<const Element> h) { return normality_report(t, h).pass(); }

void annotate_normal(const Loop& t, SubloopHandle& h) { h.normal = is_normal(t, h.elements); }

Quotient quotient(const Loop& t, std::span<const Element> h) {
  const std::size_t n = t.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> block_of(n, kUnset);
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    if (block_of[x] != kUnset) continue;
    const auto id = static_cast<Element>(reps.size());
    reps.push_back(x);
    for (Element s : h) {
      const Element xs = t.mul(x, s);
      if (block_of[xs] != kUnset) {
        throw InputError("cosets of the subloop do not partition the loop (element " +
                         std::to_string(xs) + ")");
      }
      block_of[xs] = id;
    }
  }
  const std::size_t m = reps.size();
  std::vector<Element> cells(m * m, kUnset);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element& cell = cells[block_of[x] * m + block_of[y]];
      const Element b = block_of[t.mul(x, y)];
      if (cell == kUnset) {
        cell = b;
      } else if (cell != b) {
        throw InputError("block product is not well defined at (" + std::to_string(x) + "," +
                         std::to_string(y) + ")");
      }
    }
  }
  return Quotient{Loop(CayleyTable(m, std::move(cells))), std::move(block_of)};
}

SubloopHandle center(const Loop& t) {
  const std::size_t n = t.order();
  std::vector<Element> z;
  for (Element a = 0; a < n; ++a) {
    bool central = true;
    for (Element x = 0; x < n && central; ++x) {
      if (t.mul(x, a) != t.mul(a, x)) central = false;
      for (Element y = 0; y < n && central; ++y) {
        const Element xy = t.mul(x, y);
        central = t.mul(t.mul(a, x), y) == t.mul(a, xy) &&
                  t.mul(t.mul(x, a), y) == t.mul(x, t.mul(a, y)) &&
                  t.mul(xy, a) == t.mul(x, t.mul(y, a));
      }
    }
    if (central) z.push_back(a);
  }
  if (!is_subloop(t, z)) throw ConsistencyError("center is not closed");
  SubloopHandle h;
  h.elements = std::move(z);
  return h;
}

SeriesRecord upper_central_series(const Loop& t) {
  const std::size_t n = t.order();
  SeriesRecord series;
  SubloopHandle z;
  z.elements = {kIdentity};
  for (;;) {
    if (!is_normal(t, z.elements)) {
      throw ConsistencyError("upper central term of order " + std::to_string(z.order()) +
                             " is not normal");
    }
    z.normal = true;
    series.terms.push_back(z);
    if (z.order() == n) break;
    const auto q = quotient(t, z.elements);
    const auto zq = center(q.loop);
    const auto in = membership(q.loop.order(), zq.elements);
    SubloopHandle next;
    for (Element x = 0; x < n; ++x) {
      if (in[q.block_of[x]]) next.elements.push_back(x);
    }
    if (next.elements == z.elements) break;
    z = std::move(next);
  }
  series.reaches_end = series.terms.back().order() == n;
  series.length = series.terms.size() - 1;
  return series;
}

SubloopHandle derived_subloop(const Loop& t, DerivedMethod method, bool* reliable) {
  const std::size_t n = t.order();
  if (reliable) *reliable = true;
  SubloopHandle h;
  if (method == DerivedMethod::enumeration) {
    const auto lattice = enumerate_subloops(t);
    if (reliable) *reliable = lattice.complete;
    std::vector<char> in(n, 1);
    for (const auto& s : lattice.subloops) {
      if (!is_normal(t, s.elements)) continue;
      if (!is_abelian_group(quotient(t, s.elements).loop)) continue;
      const auto mine = membership(n, s.elements);
      for (Element x = 0; x < n; ++x) in[x] = in[x] && mine[x];
    }
    for (Element x = 0; x < n; ++x) {
      if (in[x]) h.elements.push_back(x);
    }
    if (!is_subloop(t, h.elements) || !is_normal(t, h.elements)) {
      throw ConsistencyError("intersection of normal subloops is not a normal subloop");
    }
  } else {
    std::vector<char> seen(n, 0);
    std::vector<Element> seeds;
    auto seed = [&](Element s) {
      if (!seen[s]) {
        seen[s] = 1;
        seeds.push_back(s);
      }
    };
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        const Element xy = t.mul(x, y);
        seed(t.ldiv(t.mul(y, x), xy));
        for (Element z = 0; z < n; ++z) seed(t.ldiv(t.mul(x, t.mul(y, z)), t.mul(xy, z)));
      }
    }
    std::vector<Element> s = generated_subloop(t, seeds);
    Closer closer(t);
    for (;;) {
      const auto in = membership(n, s);
      std::vector<char> queued(n, 0);
      std::vector<Element> fresh;
      auto image = [&](Element e) {
        if (!in[e] && !queued[e]) {
          queued[e] = 1;
          fresh.push_back(e);
        }
      };
      for (Element x = 0; x < n; ++x) {
        for (Element a : s) {
          image(apply_inner(t, InnerKind::middle, x, 0, a));
          for (Element y = 0; y < n; ++y) {
            image(apply_inner(t, InnerKind::left, x, y, a));
            image(apply_inner(t, InnerKind::right, x, y, a));
          }
        }
      }
      if (fresh.empty()) break;
      s = *closer.close(s, fresh, n);
    }
    h.elements = std::move(s);
  }
  h.normal = true;
  require_abelian_quotient(t, h.elements);
  return h;
}

SeriesRecord derived_series(const Loop& t, DerivedMethod method) {
  SeriesRecord series;
  SubloopHandle current;
  current.elements = all_elements(t.order());
  current.normal = true;
  series.terms.push_back(current);
  while (current.order() > 1) {
    const Loop sub = extract_subloop(t, current.elements);
    bool reliable = true;
    const auto d = derived_subloop(sub, method, &reliable);
    series.reliable = series.reliable && reliable;
    if (d.order() == current.order()) break;
    SubloopHandle next;
    for (Element x : d.elements) next.elements.push_back(current.elements[x]);
    next.normal = is_normal(t, next.elements);
    series.terms.push_back(next);
    current = std::move(next);
  }
  series.reaches_end = series.terms.back().order() == 1;
  series.length = series.terms.size() - 1;
  return series;
}

SubloopSearch find_subloop_of_order(const Loop& t, std::size_t order, std::size_t budget) {
  if (order == 0) throw InputError("subloop order must be positive");
  const auto& orders = t.element_orders().orders;
  return greedy_search(
      t, order, [&](Element x) { return orders[x] != 0 && order % orders[x] == 0; }, budget);
}

SubloopHandle sylow_subloop(const Loop& t, std::size_t p, std::size_t budget) {
  const auto primes = prime_divisors(t.order());
  if (std::find(primes.begin(), primes.end(), p) == primes.end()) {
    throw InputError(std::to_string(p) + " is not a prime divisor of " +
                     std::to_string(t.order()));
  }
  const std::size_t one[] = {p};
  auto h = hall_subloop(t, one, budget);
  h.prime = p;
  return h;
}

SubloopHandle hall_subloop(const Loop& t, std::span<const std::size_t> primes,
                           std::size_t budget) {
  const auto divisors = prime_divisors(t.order());
  for (std::size_t p : primes) {
    if (std::find(divisors.begin(), divisors.end(), p) == divisors.end()) {
      throw InputError(std::to_string(p) + " is not a prime divisor of " +
                       std::to_string(t.order()));
    }
  }
  const std::size_t target = part_of(t.order(), primes);
  const auto& orders = t.element_orders().orders;
  auto search = greedy_search(
      t, target, [&](Element x) { return only_primes(orders[x], primes); }, budget);
  if (!search.found) {
    throw ConsistencyError("no subloop of order " + std::to_string(target) + " found after " +
                           std::to_string(search.attempts) + " attempts" +
                           (search.budget_exhausted ? " (budget exhausted)" : ""));
  }
  if (primes.size() == 1) search.found->prime = primes[0];
  return *search.found;
}

Report lagrange_cauchy_audit(const Loop& t, std::size_t cap) {
  Report r("lagrange_cauchy_audit");
  const std::size_t n = t.order();
  const auto lattice = enumerate_subloops(t, cap);
  r.add("order", n).add("subloops", lattice.subloops.size()).add("complete", lattice.complete);
  if (!lattice.complete) r.fail();

  std::set<std::size_t> sizes;
  for (const auto& s : lattice.subloops) sizes.insert(s.order());
  std::string size_list;
  for (std::size_t s : sizes) size_list += (size_list.empty() ? "" : ",") + std::to_string(s);
  r.add("subloop_orders", size_list);

  bool lagrange = true;
  const auto& subs = lattice.subloops;
  for (std::size_t i = 0; i < subs.size() && lagrange; ++i) {
    for (std::size_t j = i + 1; j < subs.size() && lagrange; ++j) {
      const auto& a = subs[i];
      const auto& b = subs[j];
      if (a.order() > b.order() || !is_subset(a.elements, b.elements)) continue;
      if (b.order() % a.order() != 0) {
        lagrange = false;
        r.add_elements("lagrange_small", a.elements).add_elements("lagrange_large", b.elements);
      }
    }
  }
  r.add("lagrange", std::string(lagrange ? "pass" : "fail"));

  const auto& orders = t.element_orders().orders;
  std::string missing;
  bool cauchy = true;
  for (std::size_t p : prime_divisors(n)) {
    const bool has = std::find(orders.begin(), orders.end(), p) != orders.end();
    if (!has) {
      missing += (missing.empty() ? "" : ",") + std::to_string(p);
      if (p != 2) cauchy = false;
    }
  }
  r.add("cauchy", std::string(cauchy ? "pass" : "fail")).add("missing_primes", missing);
  if (!lagrange || !cauchy) r.fail();
  return r;
}

Report center_transfer_check(const Loop& bruck) {
  Report r("center_transfer");
  const auto gamma = gamma_from_bruck(bruck, {true, false, kDefaultClosureCap}).loop;
  const auto zb = center(bruck);
  const auto zg = center(gamma);
  r.add("bruck_center_order", zb.order()).add("gamma_center_order", zg.order());
  if (zb.elements != zg.elements) {
    r.fail().add_elements("bruck_center", zb.elements).add_elements("gamma_center", zg.elements);
  }
  return r;
}

}  // namespace loopkit
