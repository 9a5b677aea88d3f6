#include "loopkit/table.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "loopkit/error.hpp"

namespace loopkit {

// ---------------------------------------------------------------------------
// CayleyTable

CayleyTable::CayleyTable(std::size_t order, std::vector<Element> cells)
    : order_(order), cells_(std::move(cells)) {
  if (order_ == 0) throw InputError("table order must be positive");
  if (cells_.size() != order_ * order_) {
    throw InputError("table has " + std::to_string(cells_.size()) + " cells, expected " +
                     std::to_string(order_ * order_));
  }
  for (std::size_t i = 0; i < cells_.size(); ++i) {
    if (cells_[i] >= order_) {
      throw InputError("entry " + std::to_string(cells_[i]) + " at row " +
                       std::to_string(i / order_) + " column " + std::to_string(i % order_) +
                       " is out of range 0.." + std::to_string(order_ - 1));
    }
  }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Element>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Element> cells;
  cells.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw InputError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                       " entries, expected " + std::to_string(n));
    }
    cells.insert(cells.end(), rows[r].begin(), rows[r].end());
  }
  return CayleyTable(n, std::move(cells));
}

CayleyTable CayleyTable::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != order_) {
    throw InputError("label count does not match table order");
  }
  CayleyTable copy = *this;
  copy.labels_ = std::move(labels);
  return copy;
}

CayleyTable CayleyTable::relabeled(std::span<const Element> relabel) const {
  if (relabel.size() != order_) throw InputError("relabeling has wrong length");
  Permutation check(std::vector<Element>(relabel.begin(), relabel.end()));
  std::vector<Element> cells(order_ * order_);
  for (std::size_t x = 0; x < order_; ++x) {
    for (std::size_t y = 0; y < order_; ++y) {
      cells[relabel[x] * order_ + relabel[y]] = relabel[at(x, y)];
    }
  }
  CayleyTable out(order_, std::move(cells));
  if (!labels_.empty()) {
    std::vector<std::string> labels(order_);
    for (std::size_t x = 0; x < order_; ++x) labels[relabel[x]] = labels_[x];
    out.labels_ = std::move(labels);
  }
  return out;
}

Report validate_loop(const CayleyTable& t) {
  Report report("validate_loop");
  const std::size_t n = t.order();
  report.add("order", n);
  if (n == 0) {
    report.fail().add("violation", std::string("empty"));
    return report;
  }
  std::vector<int> seen(n);
  for (Element r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), -1);
    for (Element c = 0; c < n; ++c) {
      const Element v = t.at(r, c);
      if (seen[v] >= 0) {
        report.fail()
            .add("violation", std::string("row"))
            .add("row", std::size_t{r})
            .add("column", std::size_t{c})
            .add("value", std::size_t{v});
        return report;
      }
      seen[v] = static_cast<int>(c);
    }
  }
  for (Element c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), -1);
    for (Element r = 0; r < n; ++r) {
      const Element v = t.at(r, c);
      if (seen[v] >= 0) {
        report.fail()
            .add("violation", std::string("column"))
            .add("row", std::size_t{r})
            .add("column", std::size_t{c})
            .add("value", std::size_t{v});
        return report;
      }
      seen[v] = static_cast<int>(r);
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (t.at(kIdentity, x) != x || t.at(x, kIdentity) != x) {
      report.fail()
          .add("violation", std::string("identity"))
          .add("element", std::size_t{x});
      return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Loop

struct Loop::State {
  CayleyTable table;
  std::vector<Element> ldiv;
  std::vector<Element> rdiv;

  mutable std::once_flag orders_once;
  mutable ElementOrderProfile orders;
  mutable std::once_flag sqrt_once;
  mutable SqrtMap sqrt;
};

Loop::Loop(CayleyTable table) {
  Report check = validate_loop(table);
  if (!check.pass()) {
    std::string detail;
    for (const auto& [k, v] : check.fields()) detail += " " + k + "=" + v;
    throw InputError("not a loop with identity 0:" + detail);
  }
  auto state = std::make_shared<State>();
  const std::size_t n = table.order();
  state->ldiv.resize(n * n);
  state->rdiv.resize(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element z = table.at(x, y);
      state->ldiv[x * n + z] = y;  // x \ z = y
      state->rdiv[z * n + y] = x;  // z / y = x
    }
  }
  state->table = std::move(table);
  n_ = n;
  mul_ = state->table.cells().data();
  ldiv_ = state->ldiv.data();
  rdiv_ = state->rdiv.data();
  state_ = std::move(state);
}

std::size_t Loop::order() const { return n_; }
const CayleyTable& Loop::table() const { return state_->table; }

const ElementOrderProfile& Loop::element_orders() const {
  std::call_once(state_->orders_once, [this] {
    ElementOrderProfile& profile = state_->orders;
    profile.orders.assign(n_, 0);
    for (Element x = 0; x < n_; ++x) {
      Element z = kIdentity;
      for (std::size_t k = 1; k <= n_; ++k) {
        z = mul(x, z);
        if (z == kIdentity) {
          profile.orders[x] = k;
          break;
        }
      }
      if (profile.orders[x] == 0) {
        profile.complete = false;
        if (!profile.first_unresolved) profile.first_unresolved = x;
      } else {
        profile.exponent = std::lcm(profile.exponent, profile.orders[x]);
      }
    }
  });
  return state_->orders;
}

const SqrtMap& Loop::sqrt_map() const {
  std::call_once(state_->sqrt_once, [this] {
    SqrtMap& map = state_->sqrt;
    map.square.resize(n_);
    std::vector<Element> root(n_, 0);
    std::vector<bool> hit(n_, false);
    bool bijective = true;
    for (Element x = 0; x < n_; ++x) {
      const Element s = mul(x, x);
      map.square[x] = s;
      if (hit[s]) bijective = false;
      hit[s] = true;
      root[s] = x;
    }
    if (bijective) map.root = std::move(root);
  });
  return state_->sqrt;
}

Element SqrtMap::sqrt(Element x) const {
  if (!root) throw PreconditionError("sqrt", "squaring map is not bijective");
  return (*root)[x];
}

// ---------------------------------------------------------------------------
// Group

std::optional<std::array<Element, 3>> find_nonassociative_triple(const Loop& t) {
  const std::size_t n = t.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = t.mul(x, y);
      for (Element z = 0; z < n; ++z) {
        if (t.mul(xy, z) != t.mul(x, t.mul(y, z))) return std::array<Element, 3>{x, y, z};
      }
    }
  }
  return std::nullopt;
}

Group Group::from_loop(Loop loop) {
  if (auto bad = find_nonassociative_triple(loop)) {
    throw InputError("operation is not associative at (x,y,z)=(" +
                     std::to_string((*bad)[0]) + "," + std::to_string((*bad)[1]) + "," +
                     std::to_string((*bad)[2]) + ")");
  }
  return Group(std::move(loop));
}

// ---------------------------------------------------------------------------
// Elementwise operations

Element evaluate(const Loop& t, Operation op, Element x, Element y) {
  if (x >= t.order() || y >= t.order()) throw InputError("element out of range");
  switch (op) {
    case Operation::mul:
      return t.mul(x, y);
    case Operation::ldiv:
      return t.ldiv(x, y);
    case Operation::rdiv:
      return t.rdiv(x, y);
  }
  throw InputError("unknown operation");
}

Permutation translation(const Loop& t, Element x, Side side) {
  if (x >= t.order()) throw InputError("element out of range");
  std::vector<Element> images(t.order());
  for (Element y = 0; y < t.order(); ++y) {
    images[y] = side == Side::left ? t.mul(x, y) : t.mul(y, x);
  }
  return Permutation::from_images_unchecked(std::move(images));
}

Element power(const Loop& t, Element x, long long k) {
  if (x >= t.order()) throw InputError("element out of range");
  Element z = kIdentity;
  if (k >= 0) {
    for (long long i = 0; i < k; ++i) z = t.mul(x, z);
  } else {
    for (long long i = 0; i < -k; ++i) z = t.ldiv(x, z);
  }
  return z;
}

const ElementOrderProfile& element_orders(const Loop& t) { return t.element_orders(); }
const SqrtMap& sqrt_map(const Loop& t) { return t.sqrt_map(); }

std::vector<Element> generated_subloop(const Loop& t, std::span<const Element> seed) {
  const std::size_t n = t.order();
  std::vector<char> member(n, 0);
  std::vector<Element> elements;
  auto add = [&](Element v) {
    if (!member[v]) {
      member[v] = 1;
      elements.push_back(v);
    }
  };
  add(kIdentity);
  for (Element s : seed) {
    if (s >= n) throw InputError("seed element out of range");
    add(s);
  }
  // Every pair (i, j) with i, j < processed has had both products added.
  for (std::size_t processed = 0; processed < elements.size(); ++processed) {
    const Element a = elements[processed];
    for (std::size_t j = 0; j <= processed; ++j) {
      const Element b = elements[j];
      add(t.mul(a, b));
      add(t.mul(b, a));
    }
  }
  std::sort(elements.begin(), elements.end());
  return elements;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

struct ElementInvariant {
  std::size_t order;
  std::vector<std::size_t> left_cycles;
  std::vector<std::size_t> right_cycles;
  auto operator<=>(const ElementInvariant&) const = default;
};

std::vector<ElementInvariant> invariants(const Loop& t) {
  const auto& orders = t.element_orders().orders;
  std::vector<ElementInvariant> out;
  out.reserve(t.order());
  for (Element x = 0; x < t.order(); ++x) {
    out.push_back({orders[x], translation(t, x, Side::left).cycle_type(),
                   translation(t, x, Side::right).cycle_type()});
  }
  return out;
}

constexpr Element kUnset = static_cast<Element>(-1);

class IsoSearch {
 public:
  IsoSearch(const Loop& a, const Loop& b) : a_(a), b_(b), n_(a.order()) {}

  std::optional<std::vector<Element>> run() {
    const auto inv_a = invariants(a_);
    const auto inv_b = invariants(b_);
    {
      auto sa = inv_a, sb = inv_b;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) return std::nullopt;
    }
    // Candidate images of x: elements of b with the same invariant, ascending.
    std::map<ElementInvariant, std::vector<Element>> classes;
    for (Element y = 0; y < n_; ++y) classes[inv_b[y]].push_back(y);
    candidates_.resize(n_);
    for (Element x = 0; x < n_; ++x) candidates_[x] = &classes[inv_a[x]];

    // Greedy generating set of a, preferring small candidate classes.
    std::vector<Element> order(n_);
    std::iota(order.begin(), order.end(), Element{0});
    std::stable_sort(order.begin(), order.end(), [&](Element l, Element r) {
      return candidates_[l]->size() < candidates_[r]->size();
    });
    std::vector<Element> span_set = {kIdentity};
    for (Element x : order) {
      if (span_set.size() == n_) break;
      if (std::binary_search(span_set.begin(), span_set.end(), x)) continue;
      generators_.push_back(x);
      span_set = generated_subloop(a_, generators_);
    }

    std::vector<Element> f(n_, kUnset), finv(n_, kUnset);
    std::vector<Element> mapped;
    f[kIdentity] = kIdentity;
    finv[kIdentity] = kIdentity;
    mapped.push_back(kIdentity);
    if (!extend(f, finv, mapped)) return std::nullopt;
    if (assign(0, f, finv, mapped)) return result_;
    return std::nullopt;
  }

 private:
  bool set(Element x, Element y, std::vector<Element>& f, std::vector<Element>& finv,
           std::vector<Element>& mapped) {
    if (f[x] != kUnset) return f[x] == y;
    if (finv[y] != kUnset) return false;
    f[x] = y;
    finv[y] = x;
    mapped.push_back(x);
    return true;
  }

  // Propagates f over all products of mapped elements.
  bool extend(std::vector<Element>& f, std::vector<Element>& finv,
              std::vector<Element>& mapped) {
    for (std::size_t i = 0; i < mapped.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        const Element u = mapped[i], v = mapped[j];
        if (!set(a_.mul(u, v), b_.mul(f[u], f[v]), f, finv, mapped)) return false;
        if (!set(a_.mul(v, u), b_.mul(f[v], f[u]), f, finv, mapped)) return false;
      }
    }
    return true;
  }

  bool assign(std::size_t level, const std::vector<Element>& f,
              const std::vector<Element>& finv, const std::vector<Element>& mapped) {
    if (level == generators_.size()) {
      if (mapped.size() != n_) return false;
      result_ = f;
      return true;
    }
    const Element g = generators_[level];
    if (f[g] != kUnset) return assign(level + 1, f, finv, mapped);
    for (Element image : *candidates_[g]) {
      if (finv[image] != kUnset) continue;
      auto f2 = f, finv2 = finv, mapped2 = mapped;
      if (!set(g, image, f2, finv2, mapped2)) continue;
      if (!extend(f2, finv2, mapped2)) continue;
      if (assign(level + 1, f2, finv2, mapped2)) return true;
    }
    return false;
  }

  const Loop& a_;
  const Loop& b_;
  std::size_t n_;
  std::vector<const std::vector<Element>*> candidates_;
  std::vector<Element> generators_;
  std::vector<Element> result_;
};

}  // namespace

std::optional<std::vector<Element>> is_isomorphic(const Loop& a, const Loop& b) {
  if (a.order() != b.order()) return std::nullopt;
  return IsoSearch(a, b).run();
}

Loop direct_product(const Loop& a, const Loop& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    const Element xa = x / nb, xb = x % nb;
    for (Element y = 0; y < n; ++y) {
      const Element ya = y / nb, yb = y % nb;
      cells[x * n + y] = static_cast<Element>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  return Loop(CayleyTable(n, std::move(cells)));
}

CayleyTable normalize_identity(const CayleyTable& t) {
  const std::size_t n = t.order();
  for (Element e = 0; e < n; ++e) {
    bool identity = true;
    for (Element x = 0; x < n && identity; ++x) {
      identity = t.at(e, x) == x && t.at(x, e) == x;
    }
    if (!identity) continue;
    std::vector<Element> relabel(n);
    std::iota(relabel.begin(), relabel.end(), Element{0});
    std::swap(relabel[0], relabel[e]);
    return t.relabeled(relabel);
  }
  throw InputError("table has no two-sided identity element");
}

Loop extract_subloop(const Loop& t, std::span<const Element> elements) {
  const std::size_t k = elements.size();
  if (k == 0 || elements[0] != kIdentity) throw InputError("subloop must contain 0");
  std::vector<Element> index(t.order(), kUnset);
  for (std::size_t i = 0; i < k; ++i) {
    if (i > 0 && elements[i] <= elements[i - 1]) throw InputError("subloop elements not sorted");
    index[elements[i]] = static_cast<Element>(i);
  }
  std::vector<Element> cells(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element v = index[t.mul(elements[i], elements[j])];
      if (v == kUnset) throw InputError("element set is not closed under multiplication");
      cells[i * k + j] = v;
    }
  }
  return Loop(CayleyTable(k, std::move(cells)));
}

}  // namespace loopkit
