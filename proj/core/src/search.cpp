#include "loopkit/search.hpp"

#include <algorithm>
#include <array>

#include "loopkit/constructions.hpp"
#include "loopkit/structure.hpp"

namespace loopkit {

namespace {

using Clock = std::chrono::steady_clock;

struct Instance {
  std::uint32_t identity;
  std::array<Element, kMaxIdentityVariables> values;
};

class Searcher {
 public:
  explicit Searcher(const SearchSpec& spec) : spec_(spec), n_(spec.order) {
    const std::size_t n = n_;
    table_.assign(n * n, -1);
    pos_of_.assign(n * n, -1);
    row_inv_.assign(n * n, -1);
    col_inv_.assign(n * n, -1);
    row_mask_.assign(n, 0);
    col_mask_.assign(n, 0);
    row_positions_.resize(n);
    col_positions_.resize(n);

    for (std::size_t i = 0; i < n; ++i) {
      assign_cell(0, i, i);
      if (i > 0) assign_cell(i, 0, i);
    }
    for (std::size_t x = 1; x < n; ++x) {
      for (std::size_t y = spec.commutative ? x : 1; y < n; ++y) {
        const int p = static_cast<int>(cells_.size());
        cells_.push_back({x, y});
        pos_of_[x * n + y] = p;
        row_positions_[x].push_back(p);
        col_positions_[y].push_back(p);
        if (spec.commutative && x != y) {
          pos_of_[y * n + x] = p;
          row_positions_[y].push_back(p);
          col_positions_[x].push_back(p);
        }
      }
    }
    for (auto& v : row_positions_) std::sort(v.begin(), v.end());
    for (auto& v : col_positions_) std::sort(v.begin(), v.end());
    watchers_.resize(cells_.size() + 1);
  }

  SearchResult run() {
    start_ = Clock::now();
    if (seed_instances()) dfs(0);
    result_.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_);
    return std::move(result_);
  }

 private:
  static constexpr int kConflict = -2;
  static constexpr int kSatisfied = -1;

  struct Value {
    int value;  // >= 0 when defined
    int block;  // position whose assignment may define it
  };

  void assign_cell(std::size_t x, std::size_t y, std::size_t v) {
    table_[x * n_ + y] = static_cast<int>(v);
    row_mask_[x] |= std::uint64_t{1} << v;
    col_mask_[y] |= std::uint64_t{1} << v;
    row_inv_[x * n_ + v] = static_cast<int>(y);
    col_inv_[y * n_ + v] = static_cast<int>(x);
  }

  void clear_cell(std::size_t x, std::size_t y, std::size_t v) {
    table_[x * n_ + y] = -1;
    row_mask_[x] &= ~(std::uint64_t{1} << v);
    col_mask_[y] &= ~(std::uint64_t{1} << v);
    row_inv_[x * n_ + v] = -1;
    col_inv_[y * n_ + v] = -1;
  }

  int first_open(const std::vector<int>& positions) const {
    for (int p : positions) {
      if (p >= depth_) return p;
    }
    return -1;
  }

  Value eval(const IdentityTerm& term, int node, const Instance& inst) const {
    const TermNode& nd = term.nodes[node];
    switch (nd.kind) {
      case TermKind::variable:
        return {static_cast<int>(inst.values[nd.var]), -1};
      case TermKind::identity:
        return {0, -1};
      default:
        break;
    }
    const Value a = eval(term, nd.left, inst);
    if (a.value < 0) return a;
    const Value b = eval(term, nd.right, inst);
    if (b.value < 0) return b;
    const std::size_t ia = static_cast<std::size_t>(a.value);
    const std::size_t ib = static_cast<std::size_t>(b.value);
    switch (nd.kind) {
      case TermKind::mul: {
        const int v = table_[ia * n_ + ib];
        return v >= 0 ? Value{v, -1} : Value{-1, pos_of_[ia * n_ + ib]};
      }
      case TermKind::ldiv: {
        const int z = row_inv_[ia * n_ + ib];
        return z >= 0 ? Value{z, -1} : Value{-1, first_open(row_positions_[ia])};
      }
      case TermKind::rdiv: {
        const int z = col_inv_[ib * n_ + ia];
        return z >= 0 ? Value{z, -1} : Value{-1, first_open(col_positions_[ib])};
      }
      default:
        return {-1, -1};
    }
  }

  // kSatisfied, kConflict, or the position to watch next.
  int check(const Instance& inst) const {
    const Identity& id = spec_.identities[inst.identity];
    const Value l = eval(id.lhs, id.lhs.root, inst);
    if (l.value < 0) return l.block;
    const Value r = eval(id.rhs, id.rhs.root, inst);
    if (r.value < 0) return r.block;
    return l.value == r.value ? kSatisfied : kConflict;
  }

  bool seed_instances() {
    for (std::uint32_t i = 0; i < spec_.identities.size(); ++i) {
      const std::size_t k = spec_.identities[i].variables.size();
      std::size_t total = 1;
      for (std::size_t j = 0; j < k; ++j) total *= n_;
      for (std::size_t code = 0; code < total; ++code) {
        Instance inst{i, {}};
        std::size_t c = code;
        for (std::size_t j = k; j-- > 0;) {
          inst.values[j] = static_cast<Element>(c % n_);
          c /= n_;
        }
        const int state = check(inst);
        if (state == kConflict) return false;
        if (state >= 0) {
          instances_.push_back(inst);
          watchers_[state].push_back(static_cast<int>(instances_.size() - 1));
        }
      }
    }
    return true;
  }

  bool over_budget() {
    if (spec_.node_budget && result_.nodes > spec_.node_budget) {
      stop("node_budget");
      return true;
    }
    if (spec_.budget_ms && (result_.nodes & 1023) == 0) {
      const auto ms =
          std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
      if (static_cast<std::uint64_t>(ms) > spec_.budget_ms) {
        stop("budget_ms");
        return true;
      }
    }
    return false;
  }

  void stop(const char* reason) {
    stopped_ = true;
    result_.complete = false;
    result_.stop_reason = reason;
  }

  void dfs(int p) {
    if (p == static_cast<int>(cells_.size())) {
      emit();
      return;
    }
    const auto [x, y] = cells_[p];
    const bool mirrored = spec_.commutative && x != y;
    for (std::size_t v = 0; v < n_ && !stopped_; ++v) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if ((row_mask_[x] | col_mask_[y]) & bit) continue;
      if (mirrored && ((row_mask_[y] | col_mask_[x]) & bit)) continue;
      ++result_.nodes;
      if (over_budget()) return;
      assign_cell(x, y, v);
      if (mirrored) assign_cell(y, x, v);
      depth_ = p + 1;
      const std::size_t mark = trail_.size();
      bool ok = true;
      for (int i : watchers_[p]) {
        const int state = check(instances_[i]);
        if (state == kConflict) {
          ok = false;
          break;
        }
        if (state >= 0) {
          watchers_[state].push_back(i);
          trail_.push_back(state);
        }
      }
      if (ok) dfs(p + 1);
      while (trail_.size() > mark) {
        watchers_[trail_.back()].pop_back();
        trail_.pop_back();
      }
      if (mirrored) clear_cell(y, x, v);
      clear_cell(x, y, v);
      depth_ = p;
    }
  }

  void emit() {
    std::vector<Element> cells(table_.begin(), table_.end());
    Loop loop(CayleyTable(n_, std::move(cells)));
    ++result_.raw_solutions;
    for (const auto& id : spec_.identities) {
      if (!verify_identity(loop, id).pass) {
        throw ConsistencyError("search emitted a table violating " + id.to_string());
      }
    }
    if (spec_.dedupe == DedupeMode::up_to_isomorphism) {
      for (const auto& rep : result_.solutions) {
        if (is_isomorphic(rep, loop)) return;
      }
    }
    result_.solutions.push_back(std::move(loop));
    if (spec_.max_solutions && result_.solutions.size() >= spec_.max_solutions) {
      stop("max_solutions");
    }
  }

  const SearchSpec& spec_;
  std::size_t n_;
  std::vector<int> table_, pos_of_, row_inv_, col_inv_;
  std::vector<std::uint64_t> row_mask_, col_mask_;
  std::vector<std::pair<std::size_t, std::size_t>> cells_;
  std::vector<std::vector<int>> row_positions_, col_positions_;
  std::vector<Instance> instances_;
  std::vector<std::vector<int>> watchers_;
  std::vector<int> trail_;
  int depth_ = 0;
  bool stopped_ = false;
  Clock::time_point start_;
  SearchResult result_;
};

}  // namespace

SearchResult search_loops(const SearchSpec& spec) {
  if (spec.order == 0) throw InputError("search order must be positive");
  if (spec.order > kMaxSearchOrder) {
    throw InputError("search order " + std::to_string(spec.order) + " exceeds the maximum " +
                     std::to_string(kMaxSearchOrder));
  }
  return Searcher(spec).run();
}

std::vector<Identity> gamma_identities() {
  return {
      parse_identity("(x*y)\\e = (x\\e)*(y\\e)"),
      parse_identity("(x\\e)*(x*y) = x*((x\\e)*y)"),
      parse_identity("(x\\e)\\(x*((y\\e)\\(y*((x\\e)\\(x*z))))) = "
                     "(((x\\e)\\(x*y))\\e)\\(((x\\e)\\(x*y))*z)"),
  };
}

std::vector<Identity> bruck_identities() {
  return {
      parse_identity("x*(y*(x*z)) = (x*(y*x))*z"),
      parse_identity("(x*y)\\e = (x\\e)*(y\\e)"),
  };
}

BruckSearchSummary search_bruck_odd(std::span<const std::size_t> orders,
                                    std::uint64_t budget_ms_per_order) {
  BruckSearchSummary summary{Report("bruck_search"), {}};
  Report& r = summary.report;
  for (std::size_t n : orders) {
    if (n % 2 == 0) throw InputError("order " + std::to_string(n) + " is not odd");
    SearchSpec spec;
    spec.order = n;
    spec.identities = bruck_identities();
    spec.dedupe = DedupeMode::up_to_isomorphism;
    spec.budget_ms = budget_ms_per_order;
    const auto found = search_loops(spec);
    const std::string key = "order." + std::to_string(n);
    r.add(key + ".representatives", found.solutions.size())
        .add(key + ".raw_solutions", found.raw_solutions)
        .add(key + ".complete", found.complete);

    const auto primes = prime_divisors(n);
    const bool prime_square = primes.size() == 1 && primes[0] * primes[0] == n;
    std::size_t nonassociative = 0;
    for (std::size_t i = 0; i < found.solutions.size(); ++i) {
      const Loop& q = found.solutions[i];
      const std::string sub = key + ".rep" + std::to_string(i);
      if (prime_square) {
        const auto gamma = gamma_from_bruck(q, {false, false, kDefaultClosureCap}).loop;
        const bool abelian = !find_nonassociative_triple(gamma).has_value() &&
                             check_basic(gamma, BasicProperty::commutative).pass;
        r.add(sub + ".gamma_abelian_group", abelian);
        if (!abelian) r.fail();
      }
      if (!find_nonassociative_triple(q)) continue;
      ++nonassociative;
      const auto trip = round_trip_report(q, LoopKind::bruck);
      const auto centers = center_transfer_check(q);
      r.merge(trip, sub + ".round_trip").merge(centers, sub + ".center_transfer");
      if (!trip.pass() || !centers.pass()) r.fail();
      summary.nonassociative.push_back(q);
    }
    r.add(key + ".nonassociative", nonassociative);
  }
  return summary;
}

}  // namespace loopkit
