#include "experiments.hpp"

#include <functional>
#include <map>

#include "loopkit/constructions.hpp"
#include "loopkit/corpus.hpp"
#include "loopkit/error.hpp"
#include "loopkit/groups.hpp"
#include "loopkit/multiplication.hpp"
#include "loopkit/structure.hpp"
#include "loopkit/varieties.hpp"

namespace loopkit::cli {

namespace {

const char* word(bool pass) { return pass ? "pass" : "fail"; }

ConstructionOptions unchecked() { return {false, false, kDefaultClosureCap}; }

Report example_order6() {
  Report r("example-2.8");
  const Loop q = nonautomorphic_gamma_6();
  const auto gamma = check_gamma(q);
  const auto automorphic = check_automorphic(q);
  r.add("order", q.order()).add("gamma", word(gamma.pass)).add("automorphic", word(automorphic.pass));
  if (!automorphic.pass) {
    r.add("automorphic.generator", automorphic.note_value("generator"))
        .add("automorphic.equation", automorphic.equation)
        .add_elements("automorphic.witness", automorphic.witness);
  }
  r.set_pass(gamma.pass && !automorphic.pass);
  return r;
}

Report baer_trick() {
  Report r("baer-trick");
  for (const auto& [name, g] : odd_group_corpus()) {
    const bool abelian = check_basic(g.loop(), BasicProperty::commutative).pass;
    const bool class_two = name == "heisenberg3" || name == "heisenberg5";
    if (!abelian && !class_two) continue;
    const auto gamma = gamma_from_group(g, unchecked()).loop;
    const auto bruck = bruck_from_group(g, unchecked()).loop;
    const bool assoc = !find_nonassociative_triple(gamma).has_value();
    const bool comm = check_basic(gamma, BasicProperty::commutative).pass;
    const bool same = gamma == bruck;
    r.add(name + ".associative", word(assoc))
        .add(name + ".commutative", word(comm))
        .add(name + ".gamma_equals_bruck", word(same));
    if (!(assoc && comm && same)) r.fail();
  }
  return r;
}

Report g375() {
  Report r("g375");
  const Group g = nonmetabelian_375();
  const auto meta = is_metabelian(g);
  r.add("order", g.order()).add("metabelian", word(meta.pass()));
  r.add("derived_order", *meta.get("derived_order"));
  const auto gamma = gamma_from_group(g);
  const bool gamma_ok = gamma.verification.pass();
  r.add("gamma", word(gamma_ok));
  const auto bruck = bruck_from_group(g, unchecked()).loop;
  const bool same = bruck_from_gamma(gamma.loop, unchecked()).loop == bruck;
  r.add("bruck_from_gamma_equals_bruck_from_group", word(same));
  bool ok = g.order() == 375 && !meta.pass() && gamma_ok && same;

  const auto hunt = find_subloop_of_order(gamma.loop, 75);
  r.add("subloop75.attempts", hunt.attempts);
  if (hunt.found) {
    const auto& h = hunt.found->elements;
    const auto twisted = is_twisted_subset(g, h);
    const Loop sub = extract_subloop(gamma.loop, h);
    const auto sub_gamma = check_gamma(sub);
    const auto sub_auto = check_automorphic(sub);
    r.add("subloop75.found", true)
        .add_elements("subloop75.generators", hunt.found->generators)
        .add("subloop75.twisted_subset", word(twisted.pass()))
        .add("subloop75.gamma", word(sub_gamma.pass))
        .add("subloop75.automorphic", word(sub_auto.pass));
    ok = ok && twisted.pass() && sub_gamma.pass && !sub_auto.pass;
  } else {
    r.add("subloop75.found", false);
    ok = false;
  }
  return r.set_pass(ok);
}

Report roundtrip_corpus() {
  Report r("roundtrip-corpus");
  for (const auto& [name, g] : odd_group_corpus()) {
    const auto gamma = gamma_from_group(g, unchecked()).loop;
    const auto bruck = bruck_from_group(g, unchecked()).loop;
    const auto a = round_trip_report(gamma, LoopKind::gamma);
    const auto b = round_trip_report(bruck, LoopKind::bruck);
    r.add(name + ".gamma", word(a.pass())).add(name + ".bruck", word(b.pass()));
    if (!a.pass() || !b.pass()) r.fail();
  }
  return r;
}

Report sylow_hall() {
  Report r("sylow-hall");
  bool ok = true;
  auto record = [&](const std::string& key, const Loop& q, std::vector<std::size_t> primes,
                    std::size_t expected) {
    const auto h = primes.size() == 1 ? sylow_subloop(q, primes[0]) : hall_subloop(q, primes);
    r.add(key, h.order());
    ok = ok && h.order() == expected;
  };
  const auto g21 = gamma_from_group(cyclic_semidirect(7, 3, 2), unchecked()).loop;
  record("order21.sylow3", g21, {3}, 3);
  record("order21.sylow7", g21, {7}, 7);
  record("order21.hall37", g21, {3, 7}, 21);

  const auto g = gamma_from_group(nonmetabelian_375(), unchecked()).loop;
  const auto hunt = find_subloop_of_order(g, 75);
  if (!hunt.found) {
    r.add("order75.found", false);
    return r.fail();
  }
  const Loop sub = extract_subloop(g, hunt.found->elements);
  record("order75.sylow3", sub, {3}, 3);
  record("order75.sylow5", sub, {5}, 25);
  record("order75.hall5", sub, {5}, 25);
  record("order375.sylow5", g, {5}, 125);
  return r.set_pass(ok);
}

// Reported only: whether Gamma-loops of metabelian groups are automorphic.
Report metabelian_conjecture() {
  Report r("metabelian-conjecture");
  std::vector<std::pair<std::string, Group>> groups;
  for (auto& [name, g] : odd_group_corpus()) groups.emplace_back(name, g);
  groups.emplace_back("C13:C3", cyclic_semidirect(13, 3, 3));
  groups.emplace_back("C9:C3", cyclic_semidirect(9, 3, 4));
  groups.emplace_back("C19:C3", cyclic_semidirect(19, 3, 7));
  for (const auto& [name, g] : groups) {
    const bool metabelian = is_metabelian(g).pass();
    r.add(name + ".metabelian", metabelian);
    if (!metabelian) continue;
    const auto gamma = gamma_from_group(g, unchecked()).loop;
    r.add(name + ".gamma_automorphic", check_automorphic(gamma).pass);
  }
  return r;
}

const std::map<std::string, std::function<Report()>, std::less<>>& registry() {
  static const std::map<std::string, std::function<Report()>, std::less<>> r = {
      {"example-2.8", example_order6},       {"baer-trick", baer_trick},
      {"g375", g375},                        {"roundtrip-corpus", roundtrip_corpus},
      {"sylow-hall", sylow_hall},            {"metabelian-conjecture", metabelian_conjecture},
  };
  return r;
}

}  // namespace

std::vector<std::string> experiment_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : registry()) out.push_back(name);
  return out;
}

Report run_experiment(std::string_view name) {
  const auto& r = registry();
  const auto it = r.find(name);
  if (it == r.end()) throw InputError("unknown experiment '" + std::string(name) + "'");
  return it->second();
}

}  // namespace loopkit::cli
