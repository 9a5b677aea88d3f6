#include <gtest/gtest.h>

#include "loopkit/error.hpp"
#include "loopkit/multiplication.hpp"
#include "loopkit/perm.hpp"
#include "loopkit/groups.hpp"
#include "loopkit/corpus.hpp"

using namespace loopkit;

TEST(Permutation, ActsOnTheRight) {
  const auto p = Permutation::from_cycles(3, {{0, 1}});
  const auto q = Permutation::from_cycles(3, {{1, 2}});
  // Apply p first, then q: 0 -> 1 -> 2.
  EXPECT_EQ((p * q)(0), 2u);
  EXPECT_EQ((q * p)(0), 1u);
  EXPECT_EQ(compose(p, q), p * q);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation({0, 0, 1}), InputError);
  EXPECT_THROW(Permutation::from_cycles(3, {{0, 1}, {1, 2}}), InputError);
}

TEST(Permutation, OrderCycleTypeAndString) {
  const auto p = Permutation::from_cycles(6, {{0, 1, 2}, {3, 4}});
  EXPECT_EQ(p.order(), 6u);
  EXPECT_EQ(p.cycle_type(), (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(p.to_cycle_string(), "(0 1 2)(3 4)");
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
  EXPECT_TRUE(p.pow(6).is_identity());
  EXPECT_EQ(p.pow(-1), p.inverse());
}

TEST(Permutation, SqrtOnlyForOddOrder) {
  const auto p = Permutation::from_cycles(5, {{0, 1, 2, 3, 4}});
  const auto r = p.sqrt();
  ASSERT_TRUE(r);
  EXPECT_EQ(*r * *r, p);
  EXPECT_FALSE(Permutation::from_cycles(2, {{0, 1}}).sqrt());
  const auto os = perm_order_and_sqrt(p);
  EXPECT_EQ(os.order, 5u);
}

TEST(Permutation, CommutatorDefinition) {
  const auto p = Permutation::from_cycles(3, {{0, 1}});
  const auto q = Permutation::from_cycles(3, {{0, 1, 2}});
  EXPECT_EQ(commutator(p, q), p.inverse() * q.inverse() * p * q);
  EXPECT_EQ(perm_algebra(p, q, PermOp::inverse), p.inverse());
  EXPECT_THROW(perm_algebra(p, Permutation::identity(4), PermOp::compose), InputError);
}

TEST(Closure, SymmetricGroupSizes) {
  const std::vector<Permutation> gens{Permutation::from_cycles(5, {{0, 1}}),
                                      Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})};
  const auto g = closure(5, gens);
  EXPECT_EQ(g.size(), 120u);
  EXPECT_TRUE(g.complete());
  EXPECT_TRUE(g.element(0).is_identity());
  // Closed under products of elements.
  for (std::size_t i = 0; i < g.size(); i += 7)
    for (std::size_t j = 0; j < g.size(); j += 11) EXPECT_TRUE(g.contains(g.element(i) * g.element(j)));
}

TEST(Closure, CapMarksIncomplete) {
  const std::vector<Permutation> gens{Permutation::from_cycles(5, {{0, 1}}),
                                      Permutation::from_cycles(5, {{0, 1, 2, 3, 4}})};
  const auto g = closure(5, gens, 50);
  EXPECT_FALSE(g.complete());
}

TEST(Multiplication, LeftGroupOfAGroupIsRegular) {
  const Group g = cyclic_semidirect(7, 3, 2);
  const auto mlt = mlt_group(g.loop(), MltKind::left);
  EXPECT_EQ(mlt.size(), 21u);
  EXPECT_EQ(mlt_group(g.loop(), MltKind::full).size(), 441u);
}

TEST(Multiplication, InnerMapsFixIdentityAndMatchFormulas) {
  const Loop q = nonautomorphic_gamma_6();
  const auto gens = inner_generators(q);
  EXPECT_EQ(gens.size(), 2u * 36u + 6u);
  for (const auto& g : gens) EXPECT_EQ(g.map(0), 0u);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      for (Element z = 0; z < 6; ++z) {
        EXPECT_EQ(apply_inner(q, InnerKind::left, x, y, z),
                  q.ldiv(q.mul(y, x), q.mul(y, q.mul(x, z))));
        EXPECT_EQ(apply_inner(q, InnerKind::right, x, y, z),
                  q.rdiv(q.mul(q.mul(z, x), y), q.mul(x, y)));
      }
}

TEST(Multiplication, TwistedSubsets) {
  const Group g = cyclic_semidirect(7, 3, 2);
  const std::vector<Element> whole{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10,
                                   11, 12, 13, 14, 15, 16, 17, 18, 19, 20};
  EXPECT_TRUE(is_twisted_subset(g, whole).pass());
  // Missing the identity.
  const std::vector<Element> no_one{1, 2};
  EXPECT_FALSE(is_twisted_subset(g, no_one).pass());
}
