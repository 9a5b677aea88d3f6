#include "loopkit/varieties.hpp"

#include <functional>
#include <map>
#include <set>

#include "loopkit/error.hpp"
#include "loopkit/multiplication.hpp"
#include "loopkit/parallel.hpp"

namespace loopkit {

namespace {

using Clock = std::chrono::steady_clock;

struct Violation {
  std::vector<Element> witness;
  std::string equation;
  std::vector<std::pair<std::string, std::string>> notes;
};

VarietyReport finish(std::string variety, Clock::time_point start,
                     std::optional<Violation> violation) {
  VarietyReport r;
  r.variety = std::move(variety);
  if (violation) {
    r.pass = false;
    r.witness = std::move(violation->witness);
    r.equation = std::move(violation->equation);
    r.notes = std::move(violation->notes);
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return r;
}

template <class Probe>
std::optional<Violation> scan(std::size_t n, Probe&& probe) {
  if (auto hit = first_hit(n, std::forward<Probe>(probe))) return std::move(hit->second);
  return std::nullopt;
}

std::string paren(const std::string& term) {
  return term.size() == 1 ? term : "(" + term + ")";
}

// x^k for k in [-radius, radius], stored at index k + radius.
std::vector<Element> power_table(const Loop& t, Element x, long long radius) {
  std::vector<Element> out(static_cast<std::size_t>(2 * radius + 1));
  out[radius] = kIdentity;
  for (long long k = 1; k <= radius; ++k) {
    out[radius + k] = t.mul(x, out[radius + k - 1]);
    out[radius - k] = t.ldiv(x, out[radius - k + 1]);
  }
  return out;
}

std::size_t effective_exponent(const Loop& t) {
  const auto& profile = t.element_orders();
  return profile.complete ? profile.exponent : t.order();
}

std::size_t effective_order(const Loop& t, Element x) {
  const std::size_t m = t.element_orders().orders[x];
  return m == 0 ? t.order() : m;
}

VarietyReport relabel(VarietyReport r, std::string variety, std::string failed_axiom) {
  if (!r.pass) r.notes.emplace(r.notes.begin(), "failed_axiom", std::move(failed_axiom));
  r.variety = std::move(variety);
  return r;
}

}  // namespace

std::string VarietyReport::note_value(std::string_view key) const {
  for (const auto& [k, v] : notes) {
    if (k == key) return v;
  }
  return {};
}

Report VarietyReport::to_report() const {
  Report r("variety", pass);
  r.add("variety", variety);
  if (!pass) {
    r.add("equation", equation);
    r.add_elements("witness", witness);
  }
  for (const auto& [k, v] : notes) r.add(k, v);
  return r;
}

std::string power_term(std::string_view var, long long k) {
  const std::string v(var);
  if (k == 0) return "e";
  std::string s = k > 0 ? v : v + "\\e";
  for (long long i = 1; i < (k > 0 ? k : -k); ++i) {
    s = k > 0 ? v + "*" + paren(s) : v + "\\" + paren(s);
  }
  return s;
}

VarietyReport check_basic(const Loop& t, BasicProperty which) {
  const auto start = Clock::now();
  const std::size_t n = t.order();
  if (which == BasicProperty::commutative) {
    return finish("commutative", start, scan(n, [&](std::size_t x) -> std::optional<Violation> {
                    for (Element y = 0; y < n; ++y) {
                      if (t.mul(x, y) != t.mul(y, x)) {
                        return Violation{{Element(x), y}, "x*y = y*x", {}};
                      }
                    }
                    return std::nullopt;
                  }));
  }
  return finish("associative", start, scan(n, [&](std::size_t x) -> std::optional<Violation> {
                  for (Element y = 0; y < n; ++y) {
                    const Element xy = t.mul(x, y);
                    for (Element z = 0; z < n; ++z) {
                      if (t.mul(xy, z) != t.mul(x, t.mul(y, z))) {
                        return Violation{{Element(x), y, z}, "(x*y)*z = x*(y*z)", {}};
                      }
                    }
                  }
                  return std::nullopt;
                }));
}

VarietyReport check_two_sided_inverses(const Loop& t) {
  const auto start = Clock::now();
  std::optional<Violation> v;
  for (Element x = 0; x < t.order() && !v; ++x) {
    if (t.ldiv(x, kIdentity) != t.rdiv(kIdentity, x)) {
      v = Violation{{x}, "x\\e = e/x", {{"stage", "inverse"}}};
    }
  }
  return finish("inverse", start, std::move(v));
}

VarietyReport check_aip(const Loop& t) {
  const auto start = Clock::now();
  if (auto inv = check_two_sided_inverses(t); !inv.pass) return relabel(inv, "aip", "inverse");
  const std::size_t n = t.order();
  return finish("aip", start, scan(n, [&](std::size_t x) -> std::optional<Violation> {
                  for (Element y = 0; y < n; ++y) {
                    if (t.inverse(t.mul(x, y)) != t.mul(t.inverse(x), t.inverse(y))) {
                      return Violation{{Element(x), y}, "(x*y)\\e = (x\\e)*(y\\e)", {}};
                    }
                  }
                  return std::nullopt;
                }));
}

VarietyReport check_gamma3(const Loop& t) {
  const auto start = Clock::now();
  if (auto inv = check_two_sided_inverses(t); !inv.pass) return relabel(inv, "gamma3", "inverse");
  const std::size_t n = t.order();
  return finish("gamma3", start, scan(n, [&](std::size_t x) -> std::optional<Violation> {
                  const Element xi = t.inverse(x);
                  for (Element y = 0; y < n; ++y) {
                    if (t.mul(xi, t.mul(x, y)) != t.mul(x, t.mul(xi, y))) {
                      return Violation{{Element(x), y}, "(x\\e)*(x*y) = x*((x\\e)*y)", {}};
                    }
                  }
                  return std::nullopt;
                }));
}

std::vector<Permutation> p_operators(const Loop& t) {
  const std::size_t n = t.order();
  std::vector<Permutation> out;
  out.reserve(n);
  std::vector<Element> images(n);
  for (Element x = 0; x < n; ++x) {
    const Element xi = t.inverse(x);
    for (Element z = 0; z < n; ++z) images[z] = t.ldiv(xi, t.mul(x, z));
    out.push_back(Permutation::from_images_unchecked(images));
  }
  return out;
}

VarietyReport check_gamma4(const Loop& t) {
  const auto start = Clock::now();
  const std::size_t n = t.order();
  const auto P = p_operators(t);
  return finish(
      "gamma4", start, scan(n, [&](std::size_t x) -> std::optional<Violation> {
        const auto& px = P[x];
        for (Element y = 0; y < n; ++y) {
          const auto& py = P[y];
          const auto& pw = P[px(y)];
          for (Element z = 0; z < n; ++z) {
            if (px(py(px(z))) != pw(z)) {
              return Violation{
                  {Element(x), y, z},
                  "(x\\e)\\(x*((y\\e)\\(y*((x\\e)\\(x*z))))) = "
                  "(((x\\e)\\(x*y))\\e)\\(((x\\e)\\(x*y))*z)",
                  {}};
            }
          }
        }
        return std::nullopt;
      }));
}

VarietyReport check_gamma(const Loop& t) {
  const auto start = Clock::now();
  auto done = [&](VarietyReport r, const char* axiom) {
    r = relabel(std::move(r), "gamma", axiom);
    r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
    return r;
  };
  if (auto r = check_basic(t, BasicProperty::commutative); !r.pass) return done(r, "gamma1");
  if (auto r = check_aip(t); !r.pass) return done(r, "gamma2");
  if (auto r = check_gamma3(t); !r.pass) return done(r, "gamma3");
  if (auto r = check_gamma4(t); !r.pass) return done(r, "gamma4");
  return done(VarietyReport{}, "");
}

VarietyReport check_bol_bruck(const Loop& t, BolBruck which) {
  const auto start = Clock::now();
  const std::size_t n = t.order();
  auto bol = finish("bol", start, scan(n, [&](std::size_t x) -> std::optional<Violation> {
                      for (Element y = 0; y < n; ++y) {
                        const Element xyx = t.mul(x, t.mul(y, x));
                        for (Element z = 0; z < n; ++z) {
                          if (t.mul(x, t.mul(y, t.mul(x, z))) != t.mul(xyx, z)) {
                            return Violation{
                                {Element(x), y, z}, "x*(y*(x*z)) = (x*(y*x))*z", {}};
                          }
                        }
                      }
                      return std::nullopt;
                    }));
  if (which == BolBruck::bol) return bol;
  if (!bol.pass) return relabel(bol, "bruck", "bol");
  auto aip = check_aip(t);
  aip = relabel(aip, "bruck", "aip");
  aip.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
  return aip;
}

VarietyReport check_moufang_commutative(const Loop& t) {
  const auto start = Clock::now();
  if (auto c = check_basic(t, BasicProperty::commutative); !c.pass) {
    c.notes.emplace_back("stage", "precondition");
    return relabel(c, "moufang", "commutative");
  }
  const std::size_t n = t.order();
  return finish("moufang", start, scan(n, [&](std::size_t x) -> std::optional<Violation> {
                  const Element xx = t.mul(x, x);
                  for (Element y = 0; y < n; ++y) {
                    const Element xy = t.mul(x, y);
                    for (Element z = 0; z < n; ++z) {
                      if (t.mul(xx, t.mul(y, z)) != t.mul(xy, t.mul(x, z))) {
                        return Violation{
                            {Element(x), y, z}, "(x*x)*(y*z) = (x*y)*(x*z)", {}};
                      }
                    }
                  }
                  return std::nullopt;
                }));
}

VarietyReport check_power_associative(const Loop& t) {
  const auto start = Clock::now();
  return finish(
      "power-associative", start, scan(t.order(), [&](std::size_t x) -> std::optional<Violation> {
        const Element gen = static_cast<Element>(x);
        const auto sub = generated_subloop(t, std::span<const Element>(&gen, 1));
        const std::vector<std::pair<std::string, std::string>> notes = {
            {"generator", std::to_string(x)}, {"subloop_order", std::to_string(sub.size())}};
        for (Element u : sub) {
          for (Element v : sub) {
            if (t.mul(u, v) != t.mul(v, u)) return Violation{{u, v}, "x*y = y*x", notes};
          }
        }
        for (Element u : sub) {
          for (Element v : sub) {
            const Element uv = t.mul(u, v);
            for (Element w : sub) {
              if (t.mul(uv, w) != t.mul(u, t.mul(v, w))) {
                return Violation{{u, v, w}, "(x*y)*z = x*(y*z)", notes};
              }
            }
          }
        }
        return std::nullopt;
      }));
}

VarietyReport check_automorphic(const Loop& t) {
  const auto start = Clock::now();
  const std::size_t n = t.order();
  std::set<std::vector<Element>> verified;
  std::optional<Violation> violation;
  std::size_t distinct = 0;
  for_each_inner_generator(t, [&](const InnerGenerator& g) {
    std::vector<Element> images(g.map.images().begin(), g.map.images().end());
    if (verified.count(images)) return true;
    ++distinct;
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (g.map(t.mul(x, y)) != t.mul(g.map(x), g.map(y))) {
          Violation v;
          v.equation = g.term("(x*y)") + " = (" + g.term("x") + ")*(" + g.term("y") + ")";
          v.witness = g.kind == InnerKind::middle ? std::vector<Element>{g.x, x, y}
                                                  : std::vector<Element>{g.x, g.y, x, y};
          v.notes = {{"generator", g.name()}};
          violation = std::move(v);
          return false;
        }
      }
    }
    verified.insert(std::move(images));
    return true;
  });
  auto r = finish("automorphic", start, std::move(violation));
  r.notes.emplace_back("distinct_generators_checked", std::to_string(distinct));
  return r;
}

VarietyReport check_left_power_alternative(const Loop& t) {
  const auto start = Clock::now();
  const std::size_t n = t.order();
  return finish(
      "left-power-alternative", start, scan(n, [&](std::size_t xi) -> std::optional<Violation> {
        const Element x = static_cast<Element>(xi);
        const std::size_t m = effective_order(t, x);
        std::vector<Element> lx_k(n);  // y L_x^k, updated per k
        for (Element y = 0; y < n; ++y) lx_k[y] = y;
        Element xk = kIdentity;
        for (std::size_t k = 1; k <= m; ++k) {
          xk = t.mul(x, xk);
          for (Element y = 0; y < n; ++y) lx_k[y] = t.mul(x, lx_k[y]);
          for (Element y = 0; y < n; ++y) {
            if (t.mul(xk, y) != lx_k[y]) {
              std::string rhs = "y";
              for (std::size_t i = 0; i < k; ++i) rhs = "x*" + paren(rhs);
              return Violation{{x, y},
                               paren(power_term("x", static_cast<long long>(k))) + "*y = " + rhs,
                               {{"k", std::to_string(k)}}};
            }
          }
        }
        return std::nullopt;
      }));
}

VarietyReport check_p_operator_identities(const Loop& t) {
  const auto start = Clock::now();
  const std::size_t n = t.order();
  return finish("p-operators", start, scan(n, [&](std::size_t xi) -> std::optional<Violation> {
                  const Element x = static_cast<Element>(xi);
                  const Element inv = t.inverse(x);
                  for (Element y = 0; y < n; ++y) {
                    if (t.ldiv(inv, t.mul(x, y)) != t.mul(x, t.ldiv(inv, y))) {
                      return Violation{{x, y}, "(x\\e)\\(x*y) = x*((x\\e)\\y)", {{"law", "P1"}}};
                    }
                  }
                  for (Element y = 0; y < n; ++y) {
                    const Element lhs = t.mul(x, t.ldiv(inv, t.mul(x, y)));
                    const Element rhs = t.ldiv(inv, t.mul(x, t.mul(x, y)));
                    if (lhs != rhs) {
                      return Violation{
                          {x, y}, "x*((x\\e)\\(x*y)) = (x\\e)\\(x*(x*y))", {{"law", "P2"}}};
                    }
                  }
                  return std::nullopt;
                }));
}

VarietyReport check_power_operator_identities(const Loop& t) {
  const auto start = Clock::now();
  const std::size_t n = t.order();
  const long long E = static_cast<long long>(effective_exponent(t));
  const auto P = p_operators(t);
  return finish(
      "power-operators", start, scan(n, [&](std::size_t xi) -> std::optional<Violation> {
        const Element x = static_cast<Element>(xi);
        const long long R = 3 * E + 2;
        const auto pw = power_table(t, x, R);
        auto at = [&](long long k) { return pw[static_cast<std::size_t>(k + R)]; };
        auto X = [](long long k) { return paren(power_term("x", k)); };

        for (long long m = -E; m <= E; ++m) {
          if (P[x](at(m)) != at(m + 2)) {
            return Violation{{x},
                             "(x\\e)\\(x*" + X(m) + ") = " + power_term("x", m + 2),
                             {{"law", "a"}, {"m", std::to_string(m)}}};
          }
        }

        const Permutation px_inv = P[x].inverse();
        auto check_b = [&](long long m, const Permutation& pm) -> std::optional<Violation> {
          const auto& rhs = P[at(m)];
          for (Element y = 0; y < n; ++y) {
            if (pm(y) != rhs(y)) {
              std::string lhs = "y";
              for (long long i = 0; i < (m > 0 ? m : -m); ++i) {
                lhs = m > 0 ? "(x\\e)\\(x*" + paren(lhs) + ")" : "x\\((x\\e)*" + paren(lhs) + ")";
              }
              const std::string w = X(m);
              return Violation{{x, y},
                               lhs + " = (" + w + "\\e)\\(" + w + "*y)",
                               {{"law", "b"}, {"m", std::to_string(m)}}};
            }
          }
          return std::nullopt;
        };
        Permutation up = Permutation::identity(n), down = Permutation::identity(n);
        for (long long m = 0; m <= E; ++m) {
          if (auto v = check_b(m, up)) return v;
          if (m > 0) {
            if (auto v = check_b(-m, down)) return v;
          }
          up = up * P[x];
          down = down * px_inv;
        }

        for (long long m = -E; m <= E; ++m) {
          const auto& pm = P[at(m)];
          for (long long k = -E; k <= E; ++k) {
            if (pm(at(k)) != at(k + 2 * m)) {
              const std::string w = X(m);
              return Violation{{x},
                               "(" + w + "\\e)\\(" + w + "*" + X(k) + ") = " +
                                   power_term("x", k + 2 * m),
                               {{"law", "c"}, {"k", std::to_string(k)}, {"m", std::to_string(m)}}};
            }
          }
        }
        return std::nullopt;
      }));
}

VarietyReport check_pa(const Loop& t, std::size_t m_in) {
  const auto start = Clock::now();
  const long long m = static_cast<long long>(m_in);
  auto r = finish("pa", start, scan(t.order(), [&](std::size_t xi) -> std::optional<Violation> {
                    const Element x = static_cast<Element>(xi);
                    const long long R = 2 * m + 1;
                    const auto pw = power_table(t, x, R);
                    auto at = [&](long long k) { return pw[static_cast<std::size_t>(k + R)]; };
                    for (long long i = -m; i <= m; ++i) {
                      for (long long j = -m - 1; j <= m + 1; ++j) {
                        if (t.mul(at(i), at(j)) != at(i + j)) {
                          return Violation{{x},
                                           paren(power_term("x", i)) + "*" +
                                               paren(power_term("x", j)) + " = " +
                                               power_term("x", i + j),
                                           {{"i", std::to_string(i)}, {"j", std::to_string(j)}}};
                        }
                      }
                    }
                    return std::nullopt;
                  }));
  r.notes.emplace_back("m", std::to_string(m));
  return r;
}

VarietyReport check_bruck_square(const Loop& t) {
  const auto start = Clock::now();
  const std::size_t n = t.order();
  return finish("bruck-square", start, scan(n, [&](std::size_t x) -> std::optional<Violation> {
                  for (Element y = 0; y < n; ++y) {
                    const Element xy = t.mul(x, y);
                    if (t.mul(xy, xy) != t.mul(x, t.mul(t.mul(y, y), x))) {
                      return Violation{{Element(x), y}, "(x*y)*(x*y) = x*((y*y)*x)", {}};
                    }
                  }
                  return std::nullopt;
                }));
}

namespace {

const std::map<std::string, std::function<VarietyReport(const Loop&)>, std::less<>>& registry() {
  static const std::map<std::string, std::function<VarietyReport(const Loop&)>, std::less<>> r = {
      {"associative", [](const Loop& t) { return check_basic(t, BasicProperty::associative); }},
      {"commutative", [](const Loop& t) { return check_basic(t, BasicProperty::commutative); }},
      {"inverse", check_two_sided_inverses},
      {"aip", check_aip},
      {"gamma3", check_gamma3},
      {"gamma4", check_gamma4},
      {"gamma", check_gamma},
      {"bol", [](const Loop& t) { return check_bol_bruck(t, BolBruck::bol); }},
      {"bruck", [](const Loop& t) { return check_bol_bruck(t, BolBruck::bruck); }},
      {"moufang", check_moufang_commutative},
      {"power-assoc", check_power_associative},
      {"automorphic", check_automorphic},
      {"left-power-alternative", check_left_power_alternative},
      {"p-operators", check_p_operator_identities},
      {"power-operators", check_power_operator_identities},
      {"pa", [](const Loop& t) { return check_pa(t, effective_exponent(t)); }},
      {"bruck-square", check_bruck_square},
  };
  return r;
}

}  // namespace

std::vector<std::string> known_varieties() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

VarietyReport check_named(const Loop& t, std::string_view name) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw InputError("unknown variety '" + std::string(name) + "'");
  return it->second(t);
}

}  // namespace loopkit
