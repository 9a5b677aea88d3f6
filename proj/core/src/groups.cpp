#include "loopkit/groups.hpp"

#include <array>

#include "loopkit/error.hpp"

namespace loopkit {

GroupFamily parse_group_family(std::string_view name) {
  if (name == "cyclic") return GroupFamily::cyclic;
  if (name == "abelian" || name == "abelian-product") return GroupFamily::abelian_product;
  if (name == "semidirect") return GroupFamily::semidirect;
  if (name == "heisenberg") return GroupFamily::heisenberg;
  if (name == "g375") return GroupFamily::g375;
  throw InputError("unknown group family '" + std::string(name) + "'");
}

std::string to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::cyclic:
      return "cyclic";
    case GroupFamily::abelian_product:
      return "abelian-product";
    case GroupFamily::semidirect:
      return "semidirect";
    case GroupFamily::heisenberg:
      return "heisenberg";
    case GroupFamily::g375:
      return "g375";
  }
  return "unknown";
}

namespace {

void expect_params(const GroupSpec& spec, std::size_t count) {
  if (spec.params.size() != count) {
    throw InputError("family '" + to_string(spec.family) + "' takes " + std::to_string(count) +
                     " parameter(s), got " + std::to_string(spec.params.size()));
  }
}

Loop loop_from_product(std::size_t n, auto&& product) {
  std::vector<Element> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) cells[x * n + y] = static_cast<Element>(product(x, y));
  }
  return Loop(CayleyTable(n, std::move(cells)));
}

}  // namespace

Group build_group(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::cyclic:
      expect_params(spec, 1);
      return cyclic_group(spec.params[0]);
    case GroupFamily::abelian_product:
      if (spec.params.empty()) throw InputError("abelian-product needs at least one modulus");
      return abelian_group(spec.params);
    case GroupFamily::semidirect:
      expect_params(spec, 3);
      return cyclic_semidirect(spec.params[0], spec.params[1], spec.params[2]);
    case GroupFamily::heisenberg:
      expect_params(spec, 1);
      return heisenberg_group(spec.params[0]);
    case GroupFamily::g375:
      expect_params(spec, 0);
      return nonmetabelian_375();
  }
  throw InputError("unknown group family");
}

Group cyclic_group(std::size_t n) {
  if (n == 0) throw InputError("cyclic group order must be positive");
  return Group::from_loop(loop_from_product(n, [n](std::size_t x, std::size_t y) {
    return (x + y) % n;
  }));
}

Group abelian_group(std::span<const std::size_t> moduli) {
  if (moduli.empty()) throw InputError("abelian group needs at least one modulus");
  Loop acc = cyclic_group(moduli[0]).loop();
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    acc = direct_product(acc, cyclic_group(moduli[i]).loop());
  }
  return Group::from_loop(std::move(acc));
}

Group semidirect_product(const Group& normal, const Group& acting,
                         std::span<const Permutation> action) {
  const std::size_t na = normal.order(), nb = acting.order();
  if (action.size() != nb) throw InputError("action needs one map per acting element");
  for (std::size_t b = 0; b < nb; ++b) {
    const Permutation& phi = action[b];
    if (phi.degree() != na) throw InputError("action map has wrong degree");
    for (Element x = 0; x < na; ++x) {
      for (Element y = 0; y < na; ++y) {
        if (phi(normal.mul(x, y)) != normal.mul(phi(x), phi(y))) {
          throw InputError("action of acting element " + std::to_string(b) +
                           " is not an automorphism at pair (" + std::to_string(x) + "," +
                           std::to_string(y) + ")");
        }
      }
    }
  }
  for (Element b = 0; b < nb; ++b) {
    for (Element c = 0; c < nb; ++c) {
      // phi_{bc} must equal phi_b after phi_c.
      if (action[acting.mul(b, c)] != action[c] * action[b]) {
        throw InputError("action is not a homomorphism at acting pair (" + std::to_string(b) +
                         "," + std::to_string(c) + ")");
      }
    }
  }
  const std::size_t n = na * nb;
  return Group::from_loop(loop_from_product(n, [&](std::size_t x, std::size_t y) {
    const Element a = static_cast<Element>(x / nb), b = static_cast<Element>(x % nb);
    const Element a2 = static_cast<Element>(y / nb), b2 = static_cast<Element>(y % nb);
    return normal.mul(a, action[b](a2)) * nb + acting.mul(b, b2);
  }));
}

Group cyclic_semidirect(std::size_t m, std::size_t k, std::size_t r) {
  if (m == 0 || k == 0) throw InputError("semidirect factors must be nontrivial");
  std::size_t rk = 1;
  for (std::size_t i = 0; i < k; ++i) rk = rk * r % m;
  if (rk != 1 % m) {
    throw InputError("r^k is not 1 mod m; the action is not well defined");
  }
  std::vector<Permutation> action;
  std::size_t rb = 1 % m;
  for (std::size_t b = 0; b < k; ++b) {
    std::vector<Element> images(m);
    for (std::size_t a = 0; a < m; ++a) images[a] = static_cast<Element>(rb * a % m);
    action.emplace_back(std::move(images));  // throws if r is not a unit mod m
    rb = rb * r % m;
  }
  return semidirect_product(cyclic_group(m), cyclic_group(k), action);
}

Group heisenberg_group(std::size_t p) {
  if (p < 2) throw InputError("heisenberg modulus must be at least 2");
  const std::size_t n = p * p * p;
  return Group::from_loop(loop_from_product(n, [p](std::size_t x, std::size_t y) {
    const std::size_t a = x / (p * p), b = (x / p) % p, c = x % p;
    const std::size_t a2 = y / (p * p), b2 = (y / p) % p, c2 = y % p;
    return (((a + a2) % p) * p + (b + b2) % p) * p + (c + c2 + a * b2) % p;
  }));
}

Group nonmetabelian_375() {
  constexpr std::size_t p = 5;
  constexpr std::size_t half = 3;  // 2 * 3 = 1 mod 5
  const Group h = heisenberg_group(p);

  // In coordinates (u, v, s) with s = c - uv/2 the product is
  // (v + v', s + s' + (uv' - u'v)/2), so any determinant-one linear map on
  // (u, v) that fixes s is an automorphism.
  auto apply = [&](std::size_t x, int times) {
    std::size_t u = x / (p * p), v = (x / p) % p, c = x % p;
    const std::size_t s = (c + p * p - (u * v * half) % p) % p;
    for (int i = 0; i < times; ++i) {
      const std::size_t nu = v, nv = (2 * p - u - v) % p;
      u = nu;
      v = nv;
    }
    const std::size_t c2 = (s + u * v * half) % p;
    return static_cast<Element>((u * p + v) * p + c2);
  };
  std::vector<Permutation> action;
  for (int b = 0; b < 3; ++b) {
    std::vector<Element> images(h.order());
    for (std::size_t x = 0; x < h.order(); ++x) images[x] = apply(x, b);
    action.emplace_back(std::move(images));
  }
  Group g = semidirect_product(h, cyclic_group(3), action);
  if (is_metabelian(g).pass()) {
    throw ConsistencyError("order-375 construction unexpectedly metabelian");
  }
  return g;
}

Element group_commutator(const Group& g, Element a, Element b) {
  return g.mul(g.mul(g.inverse(a), g.inverse(b)), g.mul(a, b));
}

std::vector<Element> derived_subgroup(const Group& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Element> commutators;
  for (Element a = 0; a < g.order(); ++a) {
    for (Element b = 0; b < g.order(); ++b) {
      const Element c = group_commutator(g, a, b);
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  return generated_subloop(g.loop(), commutators);
}

Report is_metabelian(const Group& g) {
  Report report("metabelian");
  const auto derived = derived_subgroup(g);
  report.add("order", g.order()).add("derived_order", derived.size());
  for (Element a : derived) {
    for (Element b : derived) {
      if (g.mul(a, b) != g.mul(b, a)) {
        report.fail().add("noncommuting_x", std::size_t{a}).add("noncommuting_y", std::size_t{b});
        return report;
      }
    }
  }
  return report;
}

Element group_sqrt(const Group& g, Element x) {
  if (x >= g.order()) throw InputError("element out of range");
  const std::size_t m = g.loop().element_orders().orders[x];
  if (m % 2 == 0) {
    throw PreconditionError("group_sqrt", "element " + std::to_string(x) + " has even order " +
                                              std::to_string(m));
  }
  return power(g.loop(), x, static_cast<long long>((m + 1) / 2));
}

}  // namespace loopkit
