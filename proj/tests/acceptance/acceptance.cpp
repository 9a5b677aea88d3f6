// Acceptance run: one line per criterion, nonzero exit if any required
// criterion fails. Criterion 8 is reported as STRETCH-MISS rather than FAIL
// when the order-75 subloop is not found within its budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "loopkit/constructions.hpp"
#include "loopkit/corpus.hpp"
#include "loopkit/groups.hpp"
#include "loopkit/multiplication.hpp"
#include "loopkit/search.hpp"
#include "loopkit/structure.hpp"
#include "loopkit/varieties.hpp"

using namespace loopkit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  enum Kind { pass, fail, stretch_miss } kind = pass;
  std::string detail;
};

struct Context {
  std::vector<NamedGroup> corpus = odd_group_corpus();
  std::vector<Loop> gammas;
  std::vector<Loop> brucks;

  Context() {
    const ConstructionOptions fast{false, false, kDefaultClosureCap};
    for (const auto& g : corpus) {
      gammas.push_back(gamma_from_group(g.group, fast).loop);
      brucks.push_back(bruck_from_group(g.group, fast).loop);
    }
  }
};

// Collects failures; the first few are kept for the report line.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_++ < 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  Outcome outcome(std::string note = {}) const {
    std::string d = std::to_string(checks_) + " checks";
    if (!note.empty()) d += ", " + note;
    if (failures_) return {Outcome::fail, d + ", " + std::to_string(failures_) + " failed: " + first_};
    return {Outcome::pass, d};
  }

 private:
  std::size_t checks_ = 0, failures_ = 0;
  std::string first_;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

Outcome gamma_validity(Context& c) {
  Tally t;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    t.expect(check_gamma(c.gammas[i]).pass, c.corpus[i].name);
  }
  const double s = seconds_since(start);
  t.expect(s < 60.0, "over 60s");
  return t.outcome(secs(s));
}

Outcome baer_trick(Context& c) {
  Tally t;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    const auto& name = c.corpus[i].name;
    const bool abelian = check_basic(c.corpus[i].group.loop(), BasicProperty::commutative).pass;
    if (!abelian && name != "heisenberg3" && name != "heisenberg5") continue;
    const Loop& q = c.gammas[i];
    t.expect(check_basic(q, BasicProperty::associative).pass, name + " associative");
    t.expect(check_basic(q, BasicProperty::commutative).pass, name + " commutative");
    t.expect(table_equality_report(q, c.brucks[i]).pass(), name + " equals Bruck loop");
  }
  return t.outcome();
}

Outcome same_bruck(Context& c) {
  Tally t;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    const Loop via = bruck_from_gamma(c.gammas[i], {false, false, kDefaultClosureCap}).loop;
    t.expect(table_equality_report(c.brucks[i], via).pass(), c.corpus[i].name);
  }
  return t.outcome();
}

Outcome round_trips(Context& c) {
  Tally t;
  const auto start = Clock::now();
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    t.expect(round_trip_report(c.gammas[i], LoopKind::gamma).pass(), c.corpus[i].name + " gamma");
    t.expect(round_trip_report(c.brucks[i], LoopKind::bruck).pass(), c.corpus[i].name + " bruck");
  }
  const double s = seconds_since(start);
  t.expect(s < 60.0, "over 60s");
  return t.outcome(secs(s));
}

Outcome power_coincidence(Context& c) {
  Tally t;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    const Loop& g = c.corpus[i].group.loop();
    const long long radius = 2 * static_cast<long long>(g.element_orders().exponent);
    const std::vector<Loop> loops{g, c.gammas[i], c.brucks[i]};
    t.expect(power_coincidence_report(loops, radius).pass(), c.corpus[i].name);
  }
  return t.outcome();
}

Outcome power_associativity(Context& c) {
  Tally t;
  std::vector<std::pair<std::string, Loop>> loops;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) loops.emplace_back(c.corpus[i].name, c.gammas[i]);
  loops.emplace_back("order-6 table", nonautomorphic_gamma_6());
  for (const auto& [name, q] : loops) {
    t.expect(check_power_associative(q).pass, name + " power-associative");
    t.expect(check_p_operator_identities(q).pass, name + " P-operators");
    t.expect(check_power_operator_identities(q).pass, name + " power operators");
  }
  return t.outcome();
}

Outcome order_six_example() {
  Tally t;
  const Loop q = nonautomorphic_gamma_6();
  t.expect(check_gamma(q).pass, "embedded table is not Gamma");
  t.expect(!check_automorphic(q).pass, "embedded table is automorphic");
  const auto start = Clock::now();
  bool six_found = false;
  for (std::size_t n = 2; n <= 6; ++n) {
    SearchSpec spec;
    spec.order = n;
    spec.identities = gamma_identities();
    spec.commutative = true;
    spec.dedupe = DedupeMode::up_to_isomorphism;
    spec.budget_ms = 600'000;
    const auto r = search_loops(spec);
    t.expect(r.complete, "search " + std::to_string(n) + " incomplete");
    for (const auto& s : r.solutions) {
      const bool assoc = !find_nonassociative_triple(s).has_value();
      if (n < 6) t.expect(assoc, "nonassociative solution at order " + std::to_string(n));
      if (n == 6 && is_isomorphic(s, q)) six_found = true;
    }
  }
  t.expect(six_found, "order 6 search misses the embedded table");
  return t.outcome("search " + secs(seconds_since(start)));
}

Outcome g375_experiment() {
  const auto start = Clock::now();
  Tally t;
  const Group g = nonmetabelian_375();
  t.expect(g.order() == 375, "order");
  t.expect(!is_metabelian(g).pass(), "metabelian");
  const Loop gamma = gamma_from_group(g, {false, false, kDefaultClosureCap}).loop;
  t.expect(check_gamma(gamma).pass, "Gamma check");
  const auto hunt = find_subloop_of_order(gamma, 75);
  if (!hunt.found) {
    return {Outcome::stretch_miss, "no order-75 subloop after " + std::to_string(hunt.attempts) +
                                       " attempts"};
  }
  const auto& h = *hunt.found;
  t.expect(is_twisted_subset(g, h.elements).pass(), "carrier not twisted");
  t.expect(!check_automorphic(extract_subloop(gamma, h.elements)).pass, "subloop automorphic");
  const double s = seconds_since(start);
  t.expect(s < 300.0, "over 5 minutes");
  return t.outcome(std::to_string(hunt.attempts) + " attempts, " + secs(s));
}

Outcome structure_theory(Context& c) {
  const auto start = Clock::now();
  Tally t;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    const auto& name = c.corpus[i].name;
    t.expect(lagrange_cauchy_audit(c.gammas[i]).pass(), name + " audit");
    t.expect(derived_series(c.gammas[i]).reaches_end, name + " not solvable");
  }
  auto find = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < c.corpus.size(); ++i)
      if (c.corpus[i].name == name) return i;
    return 0;
  };
  const Loop& g21 = c.gammas[find("C7:C3")];
  t.expect(sylow_subloop(g21, 3).order() == 3, "Sylow 3 in order 21");
  t.expect(sylow_subloop(g21, 7).order() == 7, "Sylow 7 in order 21");
  const Loop& g375 = c.gammas[find("g375")];
  const auto h = find_subloop_of_order(g375, 75);
  if (h.found) {
    const Loop sub = extract_subloop(g375, h.found->elements);
    t.expect(sylow_subloop(sub, 3).order() == 3, "Sylow 3 in order 75");
    t.expect(sylow_subloop(sub, 5).order() == 25, "Sylow 5 in order 75");
  } else {
    t.expect(false, "no order-75 subloop");
  }
  t.expect(center_transfer_check(c.brucks[find("C7:C3")]).pass(), "center transfer C7:C3");
  t.expect(center_transfer_check(c.brucks[find("g375")]).pass(), "center transfer g375");
  const double s = seconds_since(start);
  t.expect(s < 300.0, "over 5 minutes");
  return t.outcome(secs(s));
}

Outcome solution_uniqueness(Context& c) {
  Tally t;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    t.expect(bruck_solution_uniqueness_report(c.brucks[i]).pass(), c.corpus[i].name);
  }
  return t.outcome();
}

Outcome bruck_invariants(Context& c) {
  Tally t;
  std::size_t twisted_checked = 0;
  for (std::size_t i = 0; i < c.corpus.size(); ++i) {
    const auto& name = c.corpus[i].name;
    const Loop& b = c.brucks[i];
    t.expect(check_bruck_square(b).pass, name + " square law");
    t.expect(check_left_power_alternative(b).pass, name + " left power-alternative");
    // Orders up to 27 must fit; larger ones are checked when the closure
    // stays under the cap.
    const auto mlt = mlt_group(b, MltKind::left, b.order() <= 27 ? kDefaultClosureCap : 200'000);
    if (!mlt.complete()) {
      t.expect(b.order() > 27, name + " closure incomplete");
      continue;
    }
    ++twisted_checked;
    t.expect(mlt.size() % 2 == 1, name + " even Mlt_left");
    t.expect(is_twisted_subset(mlt, left_translations(b)).pass(), name + " L_Q not twisted");
  }
  return t.outcome("twisted check on " + std::to_string(twisted_checked) + " loops");
}

}  // namespace

int main() {
  Context c;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"gamma construction validity", [&] { return gamma_validity(c); }},
      {"class-two groups collapse to abelian groups", [&] { return baer_trick(c); }},
      {"Bruck loop via Gamma-loop equals Bruck loop of group", [&] { return same_bruck(c); }},
      {"functor round trips", [&] { return round_trips(c); }},
      {"power coincidence", [&] { return power_coincidence(c); }},
      {"power-associativity and operator identities", [&] { return power_associativity(c); }},
      {"order-6 nonautomorphic Gamma-loop", [] { return order_six_example(); }},
      {"g375 order-75 subloop", [] { return g375_experiment(); }},
      {"odd-order structure theory", [&] { return structure_theory(c); }},
      {"Bruck equation has a unique solution", [&] { return solution_uniqueness(c); }},
      {"Bruck loop invariants", [&] { return bruck_invariants(c); }},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {Outcome::fail, std::string("exception: ") + e.what()};
    }
    const char* tag = o.kind == Outcome::pass ? "PASS" : o.kind == Outcome::fail ? "FAIL" : "STRETCH-MISS";
    std::printf("criterion %zu: %s: %s (%s)\n", i + 1, tag, criteria[i].first.c_str(), o.detail.c_str());
    std::fflush(stdout);
    if (o.kind == Outcome::fail) ++failed;
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
