#include "loopkit/corpus.hpp"

#include <array>

#include "loopkit/groups.hpp"

namespace loopkit {

std::vector<NamedGroup> odd_group_corpus() {
  const std::size_t c3c3[] = {3, 3};
  std::vector<NamedGroup> out;
  out.push_back({"C3", cyclic_group(3)});
  out.push_back({"C5", cyclic_group(5)});
  out.push_back({"C7", cyclic_group(7)});
  out.push_back({"C9", cyclic_group(9)});
  out.push_back({"C15", cyclic_group(15)});
  out.push_back({"C3xC3", abelian_group(c3c3)});
  out.push_back({"C7:C3", cyclic_semidirect(7, 3, 2)});
  out.push_back({"heisenberg3", heisenberg_group(3)});
  out.push_back({"heisenberg5", heisenberg_group(5)});
  out.push_back({"g375", nonmetabelian_375()});
  return out;
}

Loop nonautomorphic_gamma_6() {
  return Loop(CayleyTable::from_rows({
      {0, 1, 2, 3, 4, 5},
      {1, 0, 3, 5, 2, 4},
      {2, 3, 0, 4, 5, 1},
      {3, 5, 4, 0, 1, 2},
      {4, 2, 5, 1, 0, 3},
      {5, 4, 1, 2, 3, 0},
  }));
}

Loop commutative_moufang_81() {
  constexpr std::size_t n = 81;
  auto digits = [](std::size_t i) {
    return std::array<int, 4>{int(i / 27), int(i / 9 % 3), int(i / 3 % 3), int(i % 3)};
  };
  auto mod3 = [](int v) { return ((v % 3) + 3) % 3; };
  std::vector<Element> cells(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto x = digits(a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto y = digits(b);
      const int z1 = mod3(x[0] + y[0]);
      const int z2 = mod3(x[1] + y[1]);
      const int z3 = mod3(x[2] + y[2]);
      const int z4 = mod3(x[3] + y[3] + (x[2] - y[2]) * (x[0] * y[1] - x[1] * y[0]));
      cells[a * n + b] = static_cast<Element>(((z1 * 3 + z2) * 3 + z3) * 3 + z4);
    }
  }
  return Loop(CayleyTable(n, std::move(cells)));
}

}  // namespace loopkit
