#include "loopkit/constructions.hpp"

#include "loopkit/error.hpp"
#include "loopkit/groups.hpp"
#include "loopkit/multiplication.hpp"
#include "loopkit/varieties.hpp"

namespace loopkit {

namespace {

const std::vector<Element>& roots_or_throw(const Loop& t, const std::string& stage) {
  const auto& map = t.sqrt_map();
  if (map.bijective()) return *map.root;
  const auto& orders = t.element_orders().orders;
  for (Element x = 0; x < t.order(); ++x) {
    if (orders[x] % 2 == 0) {
      throw PreconditionError(stage, "element " + std::to_string(x) + " has even order " +
                                         std::to_string(orders[x]));
    }
  }
  throw PreconditionError(stage, "squaring map is not bijective");
}

void require(const VarietyReport& r, const std::string& stage) {
  if (r.pass) return;
  std::string what = "input fails " + r.variety;
  if (auto axiom = r.note_value("failed_axiom"); !axiom.empty()) what += " (" + axiom + ")";
  what += ": " + r.equation + " at " + join_elements(r.witness);
  throw PreconditionError(stage, what);
}

Loop table_loop(std::size_t n, std::vector<Element> cells) {
  return Loop(CayleyTable(n, std::move(cells)));
}

ConstructionResult make_result(Loop loop, ConstructionKind kind, std::string source,
                               Report verification, const ConstructionOptions& options,
                               VarietyReport (*output_check)(const Loop&)) {
  if (options.verify_output) {
    const auto r = output_check(loop);
    verification.merge(r.to_report(), "output." + r.variety);
    if (!r.pass) verification.fail();
  }
  return ConstructionResult{std::move(loop), kind, std::move(source), std::move(verification)};
}

VarietyReport bruck_check(const Loop& t) { return check_bol_bruck(t, BolBruck::bruck); }

std::string describe(const Loop& t, const char* what) {
  return std::string(what) + " order=" + std::to_string(t.order());
}

}  // namespace

std::string to_string(ConstructionKind kind) {
  switch (kind) {
    case ConstructionKind::gamma_from_group:
      return "gamma_from_group";
    case ConstructionKind::bruck_from_group:
      return "bruck_from_group";
    case ConstructionKind::bruck_from_gamma:
      return "bruck_from_gamma";
    case ConstructionKind::gamma_from_bruck:
      return "gamma_from_bruck";
    case ConstructionKind::gamma_from_bruck_translations:
      return "gamma_from_bruck_translations";
  }
  return "unknown";
}

ConstructionResult gamma_from_group(const Group& g, const ConstructionOptions& options) {
  const Loop& t = g.loop();
  const auto& root = roots_or_throw(t, "gamma_from_group");
  const std::size_t n = t.order();
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element yx_comm = group_commutator(g, y, x);
      cells[x * n + y] = t.mul(t.mul(x, y), root[yx_comm]);
    }
  }
  return make_result(table_loop(n, std::move(cells)), ConstructionKind::gamma_from_group,
                     describe(t, "group"), Report("verification"), options, check_gamma);
}

ConstructionResult bruck_from_group(const Group& g, const ConstructionOptions& options) {
  const Loop& t = g.loop();
  const auto& root = roots_or_throw(t, "bruck_from_group");
  const std::size_t n = t.order();
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element xy = t.mul(x, y);
      const Element yx = t.mul(y, x);
      cells[x * n + y] = root[t.mul(xy, yx)];
    }
  }
  return make_result(table_loop(n, std::move(cells)), ConstructionKind::bruck_from_group,
                     describe(t, "group"), Report("verification"), options, bruck_check);
}

ConstructionResult bruck_from_gamma(const Loop& q, const ConstructionOptions& options) {
  Report verification("verification");
  if (options.verify_input) {
    const auto r = check_gamma(q);
    verification.merge(r.to_report(), "input.gamma");
    require(r, "bruck_from_gamma");
  }
  const auto& root = roots_or_throw(q, "bruck_from_gamma");
  const std::size_t n = q.order();
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    const Element xi = q.inverse(x);
    for (Element y = 0; y < n; ++y) {
      cells[x * n + y] = root[q.ldiv(xi, q.mul(q.mul(y, y), x))];
    }
  }
  return make_result(table_loop(n, std::move(cells)), ConstructionKind::bruck_from_gamma,
                     describe(q, "gamma-loop"), std::move(verification), options, bruck_check);
}

ConstructionResult gamma_from_bruck(const Loop& q, const ConstructionOptions& options) {
  Report verification("verification");
  if (options.verify_input) {
    const auto r = check_bol_bruck(q, BolBruck::bruck);
    verification.merge(r.to_report(), "input.bruck");
    require(r, "gamma_from_bruck");
  }
  const auto& root = roots_or_throw(q, "gamma_from_bruck");
  const std::size_t n = q.order();
  constexpr Element kUnset = ~Element{0};
  std::vector<Element> cells(n * n, kUnset);
  for (Element a = 0; a < n; ++a) {
    const Element ai = q.inverse(a);
    for (Element b = 0; b < n; ++b) {
      // d = b /o a, i.e. d o a = b.
      const Element d = q.rdiv(q.mul(ai, root[b]), root[q.inverse(b)]);
      Element& cell = cells[d * n + a];
      if (cell != kUnset) {
        throw ConsistencyError("gamma_from_bruck: division column " + std::to_string(a) +
                               " repeats value " + std::to_string(d));
      }
      cell = b;
    }
  }
  return make_result(table_loop(n, std::move(cells)), ConstructionKind::gamma_from_bruck,
                     describe(q, "bruck-loop"), std::move(verification), options, check_gamma);
}

ConstructionResult gamma_from_bruck_via_translations(const Loop& q,
                                                     const ConstructionOptions& options) {
  Report verification("verification");
  if (options.verify_input) {
    const auto r = check_bol_bruck(q, BolBruck::bruck);
    verification.merge(r.to_report(), "input.bruck");
    require(r, "gamma_from_bruck_via_translations");
  }
  const std::size_t n = q.order();
  const PermGroup mlt = mlt_group(q, MltKind::left, options.closure_cap);
  if (!mlt.complete()) {
    throw IncompleteError("left multiplication group exceeds closure cap " +
                          std::to_string(options.closure_cap));
  }
  verification.add("mlt_left_order", mlt.size());
  if (mlt.size() % 2 == 0) {
    throw PreconditionError("gamma_from_bruck_via_translations",
                            "left multiplication group has even order " +
                                std::to_string(mlt.size()));
  }
  const auto L = left_translations(q);
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const auto root = commutator(L[y], L[x]).sqrt();
      if (!root) throw ConsistencyError("commutator of even order in an odd-order group");
      cells[x * n + y] = (*root)(L[y](L[x](kIdentity)));
    }
  }
  return make_result(table_loop(n, std::move(cells)),
                     ConstructionKind::gamma_from_bruck_translations, describe(q, "bruck-loop"),
                     std::move(verification), options, check_gamma);
}

Report table_equality_report(const Loop& a, const Loop& b, std::string name) {
  Report r(std::move(name));
  r.add("order", a.order());
  if (a.order() != b.order()) {
    r.fail().add("other_order", b.order());
    return r;
  }
  for (Element x = 0; x < a.order(); ++x) {
    for (Element y = 0; y < a.order(); ++y) {
      if (a.mul(x, y) != b.mul(x, y)) {
        r.fail()
            .add("x", std::size_t{x})
            .add("y", std::size_t{y})
            .add("left", std::size_t{a.mul(x, y)})
            .add("right", std::size_t{b.mul(x, y)});
        return r;
      }
    }
  }
  return r;
}

Report round_trip_report(const Loop& q, LoopKind kind) {
  Report r("round_trip");
  r.add("kind", std::string(kind == LoopKind::gamma ? "gamma" : "bruck"));
  r.add("order", q.order());
  const ConstructionOptions quiet{true, false, kDefaultClosureCap};
  const ConstructionOptions unchecked{false, false, kDefaultClosureCap};
  std::string stage;
  try {
    if (kind == LoopKind::gamma) {
      stage = "bruck_from_gamma";
      const auto there = bruck_from_gamma(q, quiet);
      stage = "gamma_from_bruck";
      const auto back = gamma_from_bruck(there.loop, unchecked);
      r.merge(table_equality_report(q, back.loop), "compare");
      r.set_pass(r.get("compare.status") == "pass");
    } else {
      stage = "gamma_from_bruck";
      const auto there = gamma_from_bruck(q, quiet);
      stage = "bruck_from_gamma";
      const auto back = bruck_from_gamma(there.loop, unchecked);
      r.merge(table_equality_report(q, back.loop), "compare");
      r.set_pass(r.get("compare.status") == "pass");
    }
  } catch (const PreconditionError& e) {
    r.fail().add("stage", e.stage()).add("error", std::string(e.what()));
  } catch (const ConsistencyError& e) {
    r.fail().add("stage", stage).add("error", std::string(e.what()));
  }
  return r;
}

Report square_operator_report(const Loop& gamma) {
  Report r("square_operator");
  const std::size_t n = gamma.order();
  const auto P = p_operators(gamma);
  for (Element x = 0; x < n; ++x) {
    const Element xx = gamma.mul(x, x);
    for (Element y = 0; y < n; ++y) {
      const Element ypx = P[x](y);
      if (gamma.mul(ypx, ypx) != P[x](P[y](xx))) {
        r.fail().add_elements("witness", std::vector<Element>{x, y});
        return r;
      }
    }
  }
  return r;
}

Report bruck_solution_uniqueness_report(const Loop& q) {
  Report r("bruck_solution_uniqueness");
  const auto gamma = gamma_from_bruck(q, {true, false, kDefaultClosureCap}).loop;
  const auto& root = roots_or_throw(q, "bruck_solution_uniqueness");
  const std::size_t n = q.order();
  std::vector<Element> neg_root(n);
  for (Element z = 0; z < n; ++z) neg_root[z] = q.inverse(root[z]);
  std::size_t pairs = 0;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      const Element yi = q.inverse(y);
      const Element expected = gamma.mul(x, y);
      std::size_t solutions = 0;
      bool expected_found = false;
      for (Element z = 0; z < n; ++z) {
        if (q.mul(x, neg_root[z]) == q.mul(yi, root[z])) {
          ++solutions;
          expected_found = expected_found || z == expected;
        }
      }
      if (solutions != 1 || !expected_found) {
        r.fail()
            .add_elements("witness", std::vector<Element>{x, y})
            .add("solutions", solutions)
            .add("expected_is_solution", expected_found);
        return r;
      }
      ++pairs;
    }
  }
  r.add("pairs", pairs);
  return r;
}

Report gamma_left_division_report(const Group& g, const Loop& gamma) {
  Report r("gamma_left_division");
  const Loop& t = g.loop();
  const auto& root = roots_or_throw(t, "gamma_left_division");
  const std::size_t n = t.order();
  for (Element a = 0; a < n; ++a) {
    const Element ai = t.inverse(a);
    for (Element b = 0; b < n; ++b) {
      const Element inner = t.mul(t.mul(ai, b), t.mul(ai, t.inverse(b)));
      if (gamma.ldiv(a, b) != t.mul(root[inner], b)) {
        r.fail().add_elements("witness", std::vector<Element>{a, b});
        return r;
      }
    }
  }
  return r;
}

Report moufang_coincidence_report(const Loop& q) {
  Report r("moufang_coincidence");
  const auto moufang = check_moufang_commutative(q);
  r.merge(moufang.to_report(), "input.moufang");
  if (!moufang.pass) return r.fail();
  try {
    const ConstructionOptions opts{true, false, kDefaultClosureCap};
    r.merge(table_equality_report(q, gamma_from_bruck(q, opts).loop), "gamma");
    r.merge(table_equality_report(q, bruck_from_gamma(q, opts).loop), "bruck");
    r.set_pass(r.get("gamma.status") == "pass" && r.get("bruck.status") == "pass");
  } catch (const PreconditionError& e) {
    r.fail().add("stage", e.stage()).add("error", std::string(e.what()));
  }
  return r;
}

Report power_coincidence_report(std::span<const Loop> loops, long long radius) {
  Report r("power_coincidence");
  r.add("loops", loops.size()).add("radius", radius);
  if (loops.empty()) return r;
  const std::size_t n = loops[0].order();
  for (const auto& t : loops) {
    if (t.order() != n) return r.fail().add("error", std::string("orders differ"));
  }
  for (Element x = 0; x < n; ++x) {
    for (long long k = -radius; k <= radius; ++k) {
      const Element ref = power(loops[0], x, k);
      for (std::size_t i = 1; i < loops.size(); ++i) {
        if (power(loops[i], x, k) != ref) {
          return r.fail()
              .add("x", std::size_t{x})
              .add("k", k)
              .add("loop_index", i);
        }
      }
    }
  }
  return r;
}

}  // namespace loopkit
