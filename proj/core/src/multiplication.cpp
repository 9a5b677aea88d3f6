#include "loopkit/multiplication.hpp"

#include <algorithm>
#include <set>

#include "loopkit/error.hpp"

namespace loopkit {

PermGroup mlt_group(const Loop& t, MltKind which, std::size_t cap) {
  std::vector<Permutation> gens;
  for (Element x = 0; x < t.order(); ++x) gens.push_back(translation(t, x, Side::left));
  if (which == MltKind::full) {
    for (Element x = 0; x < t.order(); ++x) gens.push_back(translation(t, x, Side::right));
  }
  return closure(t.order(), gens, cap);
}

std::vector<Permutation> left_translations(const Loop& t) {
  std::vector<Permutation> out;
  out.reserve(t.order());
  for (Element x = 0; x < t.order(); ++x) out.push_back(translation(t, x, Side::left));
  return out;
}

Element apply_inner(const Loop& t, InnerKind kind, Element x, Element y, Element z) {
  switch (kind) {
    case InnerKind::left:
      return t.ldiv(t.mul(y, x), t.mul(y, t.mul(x, z)));
    case InnerKind::right:
      return t.rdiv(t.mul(t.mul(z, x), y), t.mul(x, y));
    case InnerKind::middle:
      return t.ldiv(x, t.mul(z, x));
  }
  return z;
}

std::string InnerGenerator::name() const {
  switch (kind) {
    case InnerKind::left:
      return "L(" + std::to_string(x) + "," + std::to_string(y) + ")";
    case InnerKind::right:
      return "R(" + std::to_string(x) + "," + std::to_string(y) + ")";
    case InnerKind::middle:
      return "T(" + std::to_string(x) + ")";
  }
  return {};
}

std::string InnerGenerator::term(std::string_view z_var) const {
  const std::string z(z_var);
  switch (kind) {
    case InnerKind::left:
      return "(b*a)\\(b*(a*" + z + "))";
    case InnerKind::right:
      return "((" + z + "*a)*b)/(a*b)";
    case InnerKind::middle:
      return "a\\(" + z + "*a)";
  }
  return z;
}

void for_each_inner_generator(const Loop& t,
                              const std::function<bool(const InnerGenerator&)>& visit) {
  const std::size_t n = t.order();
  InnerGenerator g;
  std::vector<Element> images(n);
  auto emit = [&](InnerKind kind, Element x, Element y) {
    for (Element z = 0; z < n; ++z) images[z] = apply_inner(t, kind, x, y, z);
    g.kind = kind;
    g.x = x;
    g.y = y;
    g.map = Permutation::from_images_unchecked(images);
    return visit(g);
  };
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!emit(InnerKind::left, x, y)) return;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (!emit(InnerKind::right, x, y)) return;
  for (Element x = 0; x < n; ++x)
    if (!emit(InnerKind::middle, x, 0)) return;
}

std::vector<InnerGenerator> inner_generators(const Loop& t) {
  std::vector<InnerGenerator> out;
  for_each_inner_generator(t, [&](const InnerGenerator& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

Report is_twisted_subset(const Group& g, std::span<const Element> subset) {
  Report report("twisted_subset");
  const std::size_t n = g.order();
  std::vector<char> member(n, 0);
  for (Element s : subset) {
    if (s >= n) throw InputError("subset element out of range");
    member[s] = 1;
  }
  std::vector<Element> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  report.add("size", sorted.size());

  if (!member[kIdentity]) {
    report.fail().add("violation", std::string("identity"));
    return report;
  }
  for (Element x : sorted) {
    if (!member[g.inverse(x)]) {
      report.fail().add("violation", std::string("inverse")).add("x", std::size_t{x});
      return report;
    }
  }
  for (Element x : sorted) {
    for (Element y : sorted) {
      if (!member[g.mul(g.mul(x, y), x)]) {
        report.fail()
            .add("violation", std::string("xyx"))
            .add("x", std::size_t{x})
            .add("y", std::size_t{y});
        return report;
      }
    }
  }
  return report;
}

Report is_twisted_subset(const PermGroup& g, std::span<const Permutation> subset) {
  Report report("twisted_subset");
  std::set<Permutation> members(subset.begin(), subset.end());
  std::vector<Permutation> sorted(members.begin(), members.end());
  report.add("size", sorted.size());
  for (const auto& p : sorted) {
    if (p.degree() != g.degree()) throw InputError("subset degree does not match group");
    if (g.complete() && !g.contains(p)) {
      throw InputError("subset element " + p.to_cycle_string() + " is not in the group");
    }
  }
  if (!members.count(Permutation::identity(g.degree()))) {
    report.fail().add("violation", std::string("identity"));
    return report;
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (!members.count(sorted[i].inverse())) {
      report.fail().add("violation", std::string("inverse")).add("x", sorted[i].to_cycle_string());
      return report;
    }
  }
  for (const auto& x : sorted) {
    for (const auto& y : sorted) {
      if (!members.count(x * y * x)) {
        report.fail()
            .add("violation", std::string("xyx"))
            .add("x", x.to_cycle_string())
            .add("y", y.to_cycle_string());
        return report;
      }
    }
  }
  return report;
}

}  // namespace loopkit
