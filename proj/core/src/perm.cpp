#include "loopkit/perm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "loopkit/error.hpp"

namespace loopkit {

Permutation::Permutation(std::vector<Element> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Element v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw InputError("permutation images are not a bijection of 0.." +
                       std::to_string(images_.size() == 0 ? 0 : images_.size() - 1));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  return from_images_unchecked(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     const std::vector<std::vector<Element>>& cycles) {
  std::vector<Element> images(degree);
  std::iota(images.begin(), images.end(), Element{0});
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (cycle[i] >= degree) throw InputError("cycle point out of range");
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::from_images_unchecked(std::vector<Element> images) {
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Element> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<Element>(i);
  return from_images_unchecked(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& then) const {
  if (then.degree() != degree()) throw InputError("permutation degree mismatch");
  std::vector<Element> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = then.images_[images_[i]];
  return from_images_unchecked(std::move(out));
}

Permutation Permutation::pow(long long exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  unsigned long long e = exponent < 0 ? static_cast<unsigned long long>(-exponent)
                                      : static_cast<unsigned long long>(exponent);
  Permutation result = identity(degree());
  while (e) {
    if (e & 1ULL) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::size_t Permutation::order() const {
  std::size_t m = 1;
  for (std::size_t len : cycle_type()) m = std::lcm(m, len);
  return m;
}

std::optional<Permutation> Permutation::sqrt() const {
  const std::size_t m = order();
  if (m % 2 == 0) return std::nullopt;
  return pow(static_cast<long long>((m + 1) / 2));
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    bool first = true;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation compose(const Permutation& p, const Permutation& q) { return p * q; }

Permutation commutator(const Permutation& p, const Permutation& q) {
  return p.inverse() * q.inverse() * p * q;
}

Permutation perm_algebra(const Permutation& p, const Permutation& q, PermOp op) {
  if (p.degree() != q.degree()) throw InputError("permutation degree mismatch");
  switch (op) {
    case PermOp::compose:
      return compose(p, q);
    case PermOp::inverse:
      return p.inverse();
    case PermOp::commutator:
      return commutator(p, q);
  }
  throw InputError("unknown permutation operation");
}

OrderAndSqrt perm_order_and_sqrt(const Permutation& p) {
  OrderAndSqrt out;
  out.order = p.order();
  out.sqrt = p.sqrt();
  return out;
}

// ---------------------------------------------------------------------------
// PermGroup

namespace {

std::size_t hash_images(const Element* p, std::size_t degree) {
  std::size_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < degree; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

struct PermGroup::Impl {
  std::size_t degree = 0;
  std::size_t cap = 0;
  bool complete = true;
  std::vector<Permutation> generators;
  std::vector<Element> storage;  // row-major, one row per element
  std::size_t count = 0;
  std::unordered_multimap<std::size_t, std::size_t> by_hash;

  const Element* row(std::size_t i) const { return storage.data() + i * degree; }

  std::optional<std::size_t> find(const Element* images, std::size_t h) const {
    auto [lo, hi] = by_hash.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (std::equal(images, images + degree, row(it->second))) return it->second;
    }
    return std::nullopt;
  }
};

std::size_t PermGroup::degree() const { return impl_ ? impl_->degree : 0; }
std::size_t PermGroup::size() const { return impl_ ? impl_->count : 0; }
bool PermGroup::complete() const { return impl_ && impl_->complete; }
std::size_t PermGroup::cap() const { return impl_ ? impl_->cap : 0; }

const std::vector<Permutation>& PermGroup::generators() const {
  static const std::vector<Permutation> empty;
  return impl_ ? impl_->generators : empty;
}

std::span<const Element> PermGroup::element_images(std::size_t i) const {
  return {impl_->row(i), impl_->degree};
}

Permutation PermGroup::element(std::size_t i) const {
  auto s = element_images(i);
  return Permutation::from_images_unchecked({s.begin(), s.end()});
}

bool PermGroup::contains(std::span<const Element> images) const {
  if (!impl_ || images.size() != impl_->degree) return false;
  return impl_->find(images.data(), hash_images(images.data(), images.size())).has_value();
}

bool PermGroup::contains(const Permutation& p) const { return contains(p.images()); }

PermGroup closure(std::size_t degree, std::span<const Permutation> generators,
                  std::size_t cap) {
  for (const auto& g : generators) {
    if (g.degree() != degree) throw InputError("generator degree mismatch in closure");
  }
  auto impl = std::make_shared<PermGroup::Impl>();
  impl->degree = degree;
  impl->cap = cap;
  impl->generators.assign(generators.begin(), generators.end());

  auto& storage = impl->storage;
  std::vector<Element> scratch(degree);
  auto try_add = [&]() -> bool {
    const std::size_t h = hash_images(scratch.data(), degree);
    if (impl->find(scratch.data(), h)) return false;
    if (impl->count >= cap) {
      impl->complete = false;
      return false;
    }
    storage.insert(storage.end(), scratch.begin(), scratch.end());
    impl->by_hash.emplace(h, impl->count);
    ++impl->count;
    return true;
  };

  for (std::size_t i = 0; i < degree; ++i) scratch[i] = static_cast<Element>(i);
  try_add();

  for (std::size_t head = 0; head < impl->count && impl->complete; ++head) {
    for (const auto& g : generators) {
      const Element* a = impl->row(head);
      for (std::size_t i = 0; i < degree; ++i) scratch[i] = g(a[i]);
      try_add();
      if (!impl->complete) break;
    }
  }
  storage.shrink_to_fit();

  PermGroup group;
  group.impl_ = std::move(impl);
  return group;
}

}  // namespace loopkit
