#include <gtest/gtest.h>

#include <numeric>

#include "loopkit/corpus.hpp"
#include "loopkit/error.hpp"
#include "loopkit/groups.hpp"
#include "loopkit/loop_io.hpp"
#include "loopkit/table.hpp"
#include "oracle.hpp"

using namespace loopkit;

namespace {

Loop cyclic_loop(std::size_t n) { return Loop(CayleyTable(n, oracle::cyclic(n))); }

}  // namespace

TEST(CayleyTable, RejectsWrongShapeAndRange) {
  EXPECT_THROW(CayleyTable(2, {0, 1, 1}), InputError);
  EXPECT_THROW(CayleyTable(2, {0, 1, 1, 2}), InputError);
  EXPECT_THROW(CayleyTable::from_rows({{0, 1}, {1}}), InputError);
}

TEST(ValidateLoop, NamesRepeatedRowEntry) {
  const auto r = validate_loop(CayleyTable(3, {0, 1, 2, 1, 1, 0, 2, 0, 1}));
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.get("violation"), "row");
  EXPECT_EQ(r.get("row"), "1");
}

TEST(ValidateLoop, RejectsMissingIdentity) {
  // Latin square, but 0 is not an identity.
  const auto r = validate_loop(CayleyTable(2, {1, 0, 0, 1}));
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.get("violation"), "identity");
}

TEST(Loop, DivisionsInvertMultiplication) {
  const Loop q = nonautomorphic_gamma_6();
  const auto& t = q.table().cells();
  for (Element x = 0; x < 6; ++x) {
    for (Element y = 0; y < 6; ++y) {
      EXPECT_EQ(q.mul(x, q.ldiv(x, y)), y);
      EXPECT_EQ(q.mul(q.rdiv(x, y), y), x);
      EXPECT_EQ(q.ldiv(x, y), oracle::ldiv(t, x, y));
      EXPECT_EQ(q.rdiv(x, y), oracle::rdiv(t, x, y));
    }
  }
}

TEST(Loop, ElementOrdersOfCyclicGroup) {
  const Loop q = cyclic_loop(12);
  const auto& prof = q.element_orders();
  EXPECT_EQ(prof.exponent, 12u);
  for (Element x = 0; x < 12; ++x) EXPECT_EQ(prof.orders[x], 12 / std::gcd<std::size_t>(x, 12));
}

TEST(Loop, SqrtMapMatchesSquareScan) {
  const Loop q(CayleyTable(27, oracle::heisenberg(3)));
  const auto& m = q.sqrt_map();
  ASSERT_TRUE(m.bijective());
  for (Element x = 0; x < 27; ++x) {
    EXPECT_EQ(m.sqrt(x), oracle::sqrt(q.table().cells(), x));
    EXPECT_EQ(q.mul(m.sqrt(x), m.sqrt(x)), x);
  }
}

TEST(Loop, SqrtThrowsForEvenOrder) {
  const Loop q = cyclic_loop(4);
  EXPECT_FALSE(q.sqrt_map().bijective());
  EXPECT_THROW(q.sqrt_map().sqrt(1), PreconditionError);
}

TEST(Loop, PowerMatchesRepeatedProduct) {
  const Loop q = nonautomorphic_gamma_6();
  for (Element x = 0; x < 6; ++x) {
    for (long long k = -7; k <= 7; ++k) {
      EXPECT_EQ(power(q, x, k), oracle::power(q.table().cells(), x, k)) << x << "^" << k;
    }
  }
}

TEST(Loop, NonassociativeTripleIsLexFirst) {
  const Loop q = nonautomorphic_gamma_6();
  const auto hit = find_nonassociative_triple(q);
  ASSERT_TRUE(hit);
  const auto& t = q.table().cells();
  bool earlier = false;
  for (Element x = 0; x < 6 && !earlier; ++x)
    for (Element y = 0; y < 6 && !earlier; ++y)
      for (Element z = 0; z < 6 && !earlier; ++z) {
        if (std::array<Element, 3>{x, y, z} == *hit) goto done;
        earlier = oracle::mul(t, oracle::mul(t, x, y), z) != oracle::mul(t, x, oracle::mul(t, y, z));
      }
done:
  EXPECT_FALSE(earlier);
  EXPECT_FALSE(find_nonassociative_triple(cyclic_loop(9)));
}

TEST(Isomorphism, RecoversRelabeling) {
  const Loop q = nonautomorphic_gamma_6();
  const std::vector<Element> relabel{0, 4, 2, 5, 1, 3};
  const Loop r(q.table().relabeled(relabel));
  const auto f = is_isomorphic(q, r);
  ASSERT_TRUE(f);
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y) EXPECT_EQ((*f)[q.mul(x, y)], r.mul((*f)[x], (*f)[y]));
}

TEST(Isomorphism, AgreesWithBruteForceOnSmallGroups) {
  const Loop c4 = cyclic_loop(4);
  const Loop v4 = direct_product(cyclic_loop(2), cyclic_loop(2));
  EXPECT_FALSE(is_isomorphic(c4, v4));
  EXPECT_FALSE(oracle::isomorphic(c4.table().cells(), v4.table().cells()));
  const Loop c6 = cyclic_loop(6);
  const Loop c2c3 = direct_product(cyclic_loop(2), cyclic_loop(3));
  EXPECT_TRUE(is_isomorphic(c6, c2c3));
  EXPECT_TRUE(oracle::isomorphic(c6.table().cells(), c2c3.table().cells()));
}

TEST(NormalizeIdentity, MovesIdentityToZero) {
  // Z/3 written with 1 as the identity.
  const CayleyTable t(3, {2, 0, 1, 0, 1, 2, 1, 2, 0});
  EXPECT_THROW(Loop{t}, InputError);
  const Loop q(normalize_identity(t));
  EXPECT_TRUE(is_isomorphic(q, cyclic_loop(3)));
}

TEST(Subloops, GeneratedAndExtracted) {
  const Loop q = cyclic_loop(12);
  const std::vector<Element> seed{4};
  EXPECT_EQ(generated_subloop(q, seed), (std::vector<Element>{0, 4, 8}));
  const std::vector<Element> h{0, 3, 6, 9};
  EXPECT_TRUE(is_isomorphic(extract_subloop(q, h), cyclic_loop(4)));
  const std::vector<Element> bad{0, 5};
  EXPECT_THROW(extract_subloop(q, bad), InputError);
}

TEST(LoopIo, RoundTripsText) {
  const Loop q = nonautomorphic_gamma_6();
  const std::string text = format_loop(q);
  EXPECT_EQ(text.substr(0, 7), "loop 6\n");
  EXPECT_EQ(parse_loop("# note\n" + text), q);
  EXPECT_EQ(format_loop(parse_loop(text)), text);
}

TEST(LoopIo, RejectsMalformedText) {
  EXPECT_THROW(parse_loop("loop 2\n0 1\n1\n"), InputError);
  EXPECT_THROW(parse_loop("loop 2\n0 1\n1 x\n"), InputError);
  EXPECT_THROW(parse_loop("loop 2\n0 1\n1 1\n"), InputError);
  EXPECT_THROW(parse_loop("grid 2\n0 1\n1 0\n"), InputError);
}

TEST(LoopIo, NormalizesOnRequest) {
  const std::string text = "loop 3\n2 0 1\n0 1 2\n1 2 0\n";
  EXPECT_THROW(parse_loop(text), InputError);
  EXPECT_EQ(parse_loop(text, {true}).order(), 3u);
}
