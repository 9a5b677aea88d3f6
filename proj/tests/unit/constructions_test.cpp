#include <gtest/gtest.h>

#include "loopkit/constructions.hpp"
#include "loopkit/corpus.hpp"
#include "loopkit/error.hpp"
#include "loopkit/groups.hpp"
#include "loopkit/multiplication.hpp"
#include "loopkit/varieties.hpp"
#include "oracle.hpp"

using namespace loopkit;

namespace {

std::vector<NamedGroup> small_corpus() {
  auto all = odd_group_corpus();
  std::erase_if(all, [](const NamedGroup& g) { return g.group.order() > 125; });
  return all;
}

}  // namespace

TEST(Constructions, GammaAndBruckMatchDefinitions) {
  for (const auto& [name, g] : small_corpus()) {
    const auto& cells = g.loop().table().cells();
    EXPECT_EQ(gamma_from_group(g).loop.table().cells(), oracle::gamma_of_group(cells)) << name;
    EXPECT_EQ(bruck_from_group(g).loop.table().cells(), oracle::bruck_of_group(cells)) << name;
  }
}

TEST(Constructions, OutputsLandInTheirVarieties) {
  for (const auto& [name, g] : small_corpus()) {
    const auto gamma = gamma_from_group(g);
    EXPECT_TRUE(gamma.verification.pass()) << name;
    EXPECT_TRUE(check_gamma(gamma.loop).pass) << name;
    EXPECT_EQ(gamma.kind, ConstructionKind::gamma_from_group);
    const auto bruck = bruck_from_group(g);
    EXPECT_TRUE(check_bol_bruck(bruck.loop, BolBruck::bruck).pass) << name;
  }
}

TEST(Constructions, EvenOrderIsRejected) {
  try {
    gamma_from_group(cyclic_group(6));
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.stage(), "gamma_from_group");
  }
  EXPECT_THROW(bruck_from_group(cyclic_group(4)), PreconditionError);
  EXPECT_THROW(bruck_from_gamma(nonautomorphic_gamma_6()), PreconditionError);
}

TEST(Constructions, InputVarietyIsChecked) {
  // A group that is not commutative is not a Gamma-loop.
  const Loop g21 = cyclic_semidirect(7, 3, 2).loop();
  EXPECT_THROW(bruck_from_gamma(g21), PreconditionError);
  EXPECT_NO_THROW(bruck_from_gamma(g21, {false, false, kDefaultClosureCap}));
}

TEST(Constructions, BruckOfGammaEqualsBruckOfGroup) {
  for (const auto& [name, g] : small_corpus()) {
    const Loop gamma = gamma_from_group(g).loop;
    EXPECT_TRUE(table_equality_report(bruck_from_group(g).loop, bruck_from_gamma(gamma).loop).pass())
        << name;
  }
}

TEST(Constructions, InverseFunctorAndTranslationRoute) {
  for (const auto& [name, g] : small_corpus()) {
    const Loop gamma = gamma_from_group(g).loop;
    const Loop bruck = bruck_from_group(g).loop;
    EXPECT_EQ(gamma_from_bruck(bruck).loop, gamma) << name;
    EXPECT_EQ(gamma_from_bruck_via_translations(bruck).loop, gamma) << name;
    EXPECT_TRUE(round_trip_report(gamma, LoopKind::gamma).pass()) << name;
    EXPECT_TRUE(round_trip_report(bruck, LoopKind::bruck).pass()) << name;
  }
}

TEST(Constructions, TranslationRouteHonoursCap) {
  const Loop bruck = bruck_from_group(heisenberg_group(3)).loop;
  EXPECT_THROW(gamma_from_bruck_via_translations(bruck, {true, true, 5}), IncompleteError);
}

TEST(Constructions, BaerTrickForClassTwo) {
  for (std::size_t p : {3, 5}) {
    const Group g = heisenberg_group(p);
    const Loop gamma = gamma_from_group(g).loop;
    EXPECT_TRUE(oracle::associative(gamma.table().cells()));
    EXPECT_TRUE(oracle::commutative(gamma.table().cells()));
    EXPECT_EQ(gamma, bruck_from_group(g).loop);
  }
}

TEST(Constructions, Reports) {
  const Group g = cyclic_semidirect(7, 3, 2);
  const Loop gamma = gamma_from_group(g).loop;
  const Loop bruck = bruck_from_group(g).loop;
  EXPECT_TRUE(square_operator_report(gamma).pass());
  EXPECT_TRUE(bruck_solution_uniqueness_report(bruck).pass());
  EXPECT_TRUE(gamma_left_division_report(g, gamma).pass());
  const std::vector<Loop> loops{g.loop(), gamma, bruck};
  EXPECT_TRUE(power_coincidence_report(loops, 42).pass());
  EXPECT_TRUE(moufang_coincidence_report(commutative_moufang_81()).pass());
  EXPECT_FALSE(table_equality_report(g.loop(), gamma).pass());
}

TEST(Constructions, LeftTranslationsOfBruckLoopFormTwistedSubset) {
  for (const auto& [name, g] : small_corpus()) {
    if (g.order() > 27) continue;
    const Loop bruck = bruck_from_group(g).loop;
    const auto lam = left_translations(bruck);
    const auto mlt = mlt_group(bruck, MltKind::left);
    ASSERT_TRUE(mlt.complete());
    EXPECT_EQ(mlt.size() % 2, 1u) << name;
    EXPECT_TRUE(is_twisted_subset(mlt, lam).pass()) << name;
  }
}

TEST(Constructions, SquareLawOnBruckLoops) {
  for (const auto& [name, g] : small_corpus()) {
    const Loop b = bruck_from_group(g).loop;
    const auto& t = b.table().cells();
    for (Element x = 0; x < b.order(); ++x)
      for (Element y = 0; y < b.order(); ++y) {
        const Element xy = oracle::mul(t, x, y);
        ASSERT_EQ(oracle::mul(t, xy, xy),
                  oracle::mul(t, x, oracle::mul(t, oracle::mul(t, y, y), x)))
            << name;
      }
  }
}
