#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "experiments.hpp"
#include "loopkit/constructions.hpp"
#include "loopkit/error.hpp"
#include "loopkit/groups.hpp"
#include "loopkit/identity.hpp"
#include "loopkit/loop_io.hpp"
#include "loopkit/parallel.hpp"
#include "loopkit/search.hpp"
#include "loopkit/structure.hpp"
#include "loopkit/varieties.hpp"

namespace fs = std::filesystem;
using namespace loopkit;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Options {
  unsigned jobs = 1;
  bool normalize = false;
  std::string in, in_b, out, out_dir, family, variety = "gamma", as, identities_file;
  std::vector<std::size_t> params;
  bool from_group = false, from_bruck = false, from_gamma = false, via_translations = false;
  bool center = false, series = false, derived = false, subloops = false, audit = false;
  std::size_t sylow = 0, subloop_order = 0;
  std::vector<std::size_t> hall;
  std::size_t order = 0, max_solutions = 0;
  std::uint64_t budget_ms = 0, node_budget = 0;
  bool commutative = false, up_to_iso = false;
  std::string experiment;
};

Loop load(const std::string& path, const Options& o) {
  return read_loop_file(path, LoopReadOptions{o.normalize});
}

void emit_loop(const Loop& t, const Options& o) {
  if (o.out.empty() || o.out == "-") {
    std::cout << format_loop(t);
  } else {
    write_loop_file(o.out, t);
  }
}

int finish(const Report& r) {
  std::cout << r.to_text();
  return r.pass() ? kExitPass : kExitFail;
}

int cmd_construct(const Options& o) {
  GroupSpec spec{parse_group_family(o.family), o.params};
  emit_loop(build_group(spec).loop(), o);
  return kExitPass;
}

int cmd_convert(const Options& o) {
  emit_loop(load(o.in, o), o);
  return kExitPass;
}

int cmd_check(const Options& o) {
  const Loop t = load(o.in, o);
  Report r("check");
  r.add("order", t.order());
  std::stringstream names(o.variety);
  std::string name;
  while (std::getline(names, name, ',')) {
    if (name.empty()) continue;
    const auto v = check_named(t, name);
    r.merge(v.to_report(), name);
    if (!v.pass) r.fail();
  }
  if (!o.identities_file.empty()) {
    const auto ids = read_identity_file(o.identities_file);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const auto v = verify_identity(t, ids[i]);
      r.merge(v.to_report(), "identity" + std::to_string(i));
      if (!v.pass) r.fail();
    }
  }
  return finish(r);
}

void add_series(Report& r, const std::string& key, const SeriesRecord& s) {
  std::string orders;
  for (const auto& term : s.terms) {
    orders += (orders.empty() ? "" : ",") + std::to_string(term.order());
  }
  r.add(key + ".orders", orders).add(key + ".length", s.length).add(key + ".reaches_end", s.reaches_end);
}

int cmd_analyze(const Options& o) {
  const Loop t = load(o.in, o);
  Report r("analyze");
  r.add("order", t.order());
  const auto& orders = t.element_orders();
  r.add("exponent", orders.exponent).add("orders_complete", orders.complete);
  if (o.center) {
    const auto z = center(t);
    r.add("center.order", z.order()).add_elements("center.elements", z.elements);
  }
  if (o.series) {
    const auto s = upper_central_series(t);
    add_series(r, "upper_central", s);
    r.add("upper_central.nilpotent", s.reaches_end);
  }
  if (o.derived) {
    const auto s = derived_series(t);
    add_series(r, "derived", s);
    r.add("derived.solvable", s.reaches_end);
  }
  if (o.subloops) {
    const auto lattice = enumerate_subloops(t);
    r.add("subloops.count", lattice.subloops.size()).add("subloops.complete", lattice.complete);
    for (std::size_t i = 0; i < lattice.subloops.size(); ++i) {
      r.add_elements("subloops." + std::to_string(i), lattice.subloops[i].elements);
    }
  }
  if (o.sylow) {
    const auto h = sylow_subloop(t, o.sylow);
    r.add("sylow.order", h.order()).add_elements("sylow.elements", h.elements);
  }
  if (!o.hall.empty()) {
    const auto h = hall_subloop(t, o.hall);
    r.add("hall.order", h.order()).add_elements("hall.elements", h.elements);
  }
  if (o.subloop_order) {
    const auto s = find_subloop_of_order(t, o.subloop_order);
    r.add("find.attempts", s.attempts).add("find.found", s.found.has_value());
    if (s.found) r.add_elements("find.elements", s.found->elements);
    if (!s.found) r.fail();
  }
  if (o.audit) {
    const auto a = lagrange_cauchy_audit(t);
    r.merge(a, "audit");
    if (!a.pass()) r.fail();
  }
  return finish(r);
}

int cmd_search(const Options& o) {
  SearchSpec spec;
  spec.order = o.order;
  if (!o.identities_file.empty()) spec.identities = read_identity_file(o.identities_file);
  spec.commutative = o.commutative;
  spec.dedupe = o.up_to_iso ? DedupeMode::up_to_isomorphism : DedupeMode::raw;
  spec.max_solutions = o.max_solutions;
  spec.budget_ms = o.budget_ms;
  spec.node_budget = o.node_budget;
  const auto result = search_loops(spec);
  Report r("search");
  r.add("order", o.order)
      .add("solutions", result.solutions.size())
      .add("raw_solutions", result.raw_solutions)
      .add("nodes", static_cast<std::size_t>(result.nodes))
      .add("complete", result.complete);
  if (!result.complete) r.add("stop_reason", result.stop_reason);
  if (!o.out_dir.empty()) {
    fs::create_directories(o.out_dir);
    for (std::size_t i = 0; i < result.solutions.size(); ++i) {
      write_loop_file(fs::path(o.out_dir) / ("solution-" + std::to_string(i) + ".loop"),
                      result.solutions[i]);
    }
  }
  std::cout << r.to_text();
  return kExitPass;
}

int cmd_iso(const Options& o) {
  const Loop a = load(o.in, o);
  const Loop b = load(o.in_b, o);
  const auto f = is_isomorphic(a, b);
  Report r("iso", f.has_value());
  if (f) r.add_elements("map", *f);
  return finish(r);
}

int emit_construction(const ConstructionResult& c, const Options& o) {
  emit_loop(c.loop, o);
  if (!o.out.empty() && o.out != "-") std::cout << c.verification.to_text();
  return c.verification.pass() ? kExitPass : kExitFail;
}

int cmd_gamma(const Options& o) {
  const Loop t = load(o.in, o);
  if (o.from_group) return emit_construction(gamma_from_group(Group::from_loop(t)), o);
  if (o.via_translations) return emit_construction(gamma_from_bruck_via_translations(t), o);
  return emit_construction(gamma_from_bruck(t), o);
}

int cmd_bruck(const Options& o) {
  const Loop t = load(o.in, o);
  if (o.from_group) return emit_construction(bruck_from_group(Group::from_loop(t)), o);
  return emit_construction(bruck_from_gamma(t), o);
}

int cmd_roundtrip(const Options& o) {
  const Loop t = load(o.in, o);
  if (o.as != "gamma" && o.as != "bruck") throw InputError("--as must be gamma or bruck");
  return finish(round_trip_report(t, o.as == "gamma" ? LoopKind::gamma : LoopKind::bruck));
}

int cmd_experiment(const Options& o) { return finish(cli::run_experiment(o.experiment)); }

int report_error(const std::string& kind, const std::string& what) {
  std::cout << "status=error\nerror_kind=" << kind << "\nerror=" << what << '\n';
  return kExitError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite loop workbench: constructions, variety checks, structure and model search"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--jobs", o.jobs, "Worker threads for parallel scans")->check(CLI::PositiveNumber);

  auto input = [&](CLI::App* sub, bool required = true) {
    auto* opt = sub->add_option("--in", o.in, "Input loop file");
    if (required) opt->required();
    sub->add_flag("--normalize", o.normalize, "Move the identity to index 0");
  };
  auto output = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Output loop file (default stdout)"); };

  auto* construct = app.add_subcommand("construct", "Build a group table");
  construct->add_option("--family", o.family, "cyclic|abelian|semidirect|heisenberg|g375")->required();
  construct->add_option("--params", o.params, "Family parameters");
  output(construct);

  auto* convert = app.add_subcommand("convert", "Re-emit a loop file canonically");
  input(convert);
  output(convert);

  auto* check = app.add_subcommand("check", "Run variety checks");
  input(check);
  check->add_option("--variety", o.variety, "Comma-separated list of varieties");
  check->add_option("--identities", o.identities_file, "Also verify identities from a file");

  auto* analyze = app.add_subcommand("analyze", "Structure theory");
  input(analyze);
  analyze->add_flag("--center", o.center);
  analyze->add_flag("--series", o.series, "Upper central series");
  analyze->add_flag("--derived", o.derived, "Derived series");
  analyze->add_flag("--subloops", o.subloops, "Enumerate subloops");
  analyze->add_option("--sylow", o.sylow, "Sylow subloop for a prime");
  analyze->add_option("--hall", o.hall, "Hall subloop for a set of primes")->delimiter(',');
  analyze->add_option("--find-order", o.subloop_order, "Search a subloop of this order");
  analyze->add_flag("--audit", o.audit, "Lagrange and Cauchy audit");

  auto* search = app.add_subcommand("search", "Finite model search over loops");
  search->add_option("--order", o.order)->required()->check(CLI::PositiveNumber);
  search->add_option("--identities", o.identities_file, "Identity file");
  search->add_flag("--commutative", o.commutative);
  search->add_flag("--up-to-iso", o.up_to_iso);
  search->add_option("--max-solutions", o.max_solutions);
  search->add_option("--budget-ms", o.budget_ms);
  search->add_option("--node-budget", o.node_budget);
  search->add_option("--out-dir", o.out_dir, "Write each solution as solution-<i>.loop");

  auto* iso = app.add_subcommand("iso", "Isomorphism test");
  input(iso);
  iso->add_option("--other", o.in_b, "Second loop file")->required();

  auto* gamma = app.add_subcommand("gamma", "Build a Gamma-loop");
  input(gamma);
  output(gamma);
  auto* g_group = gamma->add_flag("--from-group", o.from_group);
  auto* g_bruck = gamma->add_flag("--from-bruck", o.from_bruck);
  gamma->add_flag("--via-translations", o.via_translations, "With --from-bruck: use Mlt_left");
  g_group->excludes(g_bruck);

  auto* bruck = app.add_subcommand("bruck", "Build a Bruck loop");
  input(bruck);
  output(bruck);
  auto* b_group = bruck->add_flag("--from-group", o.from_group);
  auto* b_gamma = bruck->add_flag("--from-gamma", o.from_gamma);
  b_group->excludes(b_gamma);

  auto* roundtrip = app.add_subcommand("roundtrip", "Functor round trip");
  input(roundtrip);
  roundtrip->add_option("--as", o.as, "gamma|bruck")->required();

  auto* experiment = app.add_subcommand("experiment", "Named experiment bundles");
  experiment->add_option("name", o.experiment)->required()->check(
      CLI::IsMember(cli::experiment_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    set_worker_count(o.jobs);
    if (*construct) return cmd_construct(o);
    if (*convert) return cmd_convert(o);
    if (*check) return cmd_check(o);
    if (*analyze) return cmd_analyze(o);
    if (*search) return cmd_search(o);
    if (*iso) return cmd_iso(o);
    if (*gamma) {
      if (!o.from_group && !o.from_bruck) throw InputError("give --from-group or --from-bruck");
      return cmd_gamma(o);
    }
    if (*bruck) {
      if (!o.from_group && !o.from_gamma) throw InputError("give --from-group or --from-gamma");
      return cmd_bruck(o);
    }
    if (*roundtrip) return cmd_roundtrip(o);
    if (*experiment) return cmd_experiment(o);
  } catch (const InputError& e) {
    return report_error("input", e.what());
  } catch (const PreconditionError& e) {
    return report_error("precondition:" + e.stage(), e.what());
  } catch (const IncompleteError& e) {
    return report_error("incomplete", e.what());
  } catch (const ConsistencyError& e) {
    return report_error("consistency", e.what());
  }
  return kExitError;
}
