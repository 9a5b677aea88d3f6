#include <gtest/gtest.h>

#include "loopkit/corpus.hpp"
#include "loopkit/groups.hpp"
#include "loopkit/identity.hpp"
#include "oracle.hpp"

using namespace loopkit;

TEST(IdentityParser, PrecedenceAndAssociativity) {
  // '*' is loosest; divisions bind tighter and associate to the left.
  const Identity id = parse_identity("x*y\\z = x / y / z");
  EXPECT_EQ(id.to_string(), "x*y\\z = x/y/z");
  const auto& l = id.lhs.nodes[id.lhs.root];
  EXPECT_EQ(l.kind, TermKind::mul);
  EXPECT_EQ(id.lhs.nodes[l.right].kind, TermKind::ldiv);
  const auto& r = id.rhs.nodes[id.rhs.root];
  EXPECT_EQ(r.kind, TermKind::rdiv);
  EXPECT_EQ(id.rhs.nodes[r.left].kind, TermKind::rdiv);
}

TEST(IdentityParser, VariablesSortedAndIdentityConstant) {
  const Identity id = parse_identity("z*(e*a) = a*z");
  EXPECT_EQ(id.variables, (std::vector<char>{'a', 'z'}));
  EXPECT_EQ(id.to_string(), "z*(e*a) = a*z");
}

namespace {

bool same_tree(const IdentityTerm& a, int i, const IdentityTerm& b, int j) {
  const auto& x = a.nodes[i];
  const auto& y = b.nodes[j];
  if (x.kind != y.kind || x.var != y.var) return false;
  if (x.kind == TermKind::variable || x.kind == TermKind::identity) return true;
  return same_tree(a, x.left, b, y.left) && same_tree(a, x.right, b, y.right);
}

}  // namespace

TEST(IdentityParser, RenderIsMinimalAndRoundTrips) {
  const std::vector<std::pair<const char*, const char*>> cases{
      {"(x\\e)\\(x*y) = x*((x\\e)\\y)", "x\\e\\(x*y) = x*x\\e\\y"},
      {"x*(y*(x*z)) = (x*(y*x))*z", "x*(y*(x*z)) = x*(y*x)*z"},
      {"x/(y\\z) = (x/y)\\z", "x/(y\\z) = x/y\\z"},
      {"(x*y)*z = x*(y*z)", "x*y*z = x*(y*z)"},
  };
  for (const auto& [text, canonical] : cases) {
    const Identity id = parse_identity(text);
    EXPECT_EQ(id.to_string(), canonical);
    const Identity again = parse_identity(id.to_string());
    EXPECT_TRUE(same_tree(id.lhs, id.lhs.root, again.lhs, again.lhs.root)) << text;
    EXPECT_TRUE(same_tree(id.rhs, id.rhs.root, again.rhs, again.rhs.root)) << text;
  }
}

TEST(IdentityParser, ErrorsCarryColumn) {
  auto column = [](const char* text) -> std::size_t {
    try {
      parse_identity(text);
    } catch (const IdentitySyntaxError& e) {
      return e.position();
    }
    return 0;
  };
  EXPECT_EQ(column("x*y = "), 7u);
  EXPECT_EQ(column("x*y) = y"), 4u);
  EXPECT_EQ(column("x + y = y"), 3u);
  EXPECT_EQ(column("xy = y"), 2u);
  EXPECT_EQ(column("x*y"), 4u);
  EXPECT_EQ(column("((x) = x"), 6u);
  EXPECT_THROW(parse_identity("a*b*c*d*f = f"), IdentitySyntaxError);
  EXPECT_NO_THROW(parse_identity("a*b*c*d = d"));
}

TEST(IdentityParser, ListWithCommentsAndLineNumbers) {
  const auto ids = parse_identity_list("# laws\n\nx*y = y*x\n  # more\n(x*y)*z = x*(y*z)\n");
  EXPECT_EQ(ids.size(), 2u);
  try {
    parse_identity_list("x = x\nx*= y\n");
    FAIL();
  } catch (const IdentitySyntaxError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(IdentityEval, MatchesTableLookups) {
  const Loop q = nonautomorphic_gamma_6();
  const auto& t = q.table().cells();
  const Identity id = parse_identity("x\\(y/z) = e");
  for (Element x = 0; x < 6; ++x)
    for (Element y = 0; y < 6; ++y)
      for (Element z = 0; z < 6; ++z) {
        const std::vector<Element> v{x, y, z};
        EXPECT_EQ(evaluate_term(q, id.lhs, v), oracle::ldiv(t, x, oracle::rdiv(t, y, z)));
      }
}

TEST(IdentityVerify, FirstViolationIsLexFirst) {
  const Loop q = nonautomorphic_gamma_6();
  const auto& t = q.table().cells();
  const Identity assoc = parse_identity("(x*y)*z = x*(y*z)");
  const auto r = verify_identity(q, assoc);
  ASSERT_FALSE(r.pass);
  std::vector<Element> first;
  for (Element x = 0; x < 6 && first.empty(); ++x)
    for (Element y = 0; y < 6 && first.empty(); ++y)
      for (Element z = 0; z < 6 && first.empty(); ++z)
        if (oracle::mul(t, oracle::mul(t, x, y), z) != oracle::mul(t, x, oracle::mul(t, y, z)))
          first = {x, y, z};
  EXPECT_EQ(r.witness, first);
  EXPECT_TRUE(verify_identity(q, parse_identity("x*y = y*x")).pass);
  EXPECT_TRUE(verify_identity(heisenberg_group(3).loop(), assoc).pass);
  EXPECT_TRUE(verify_identity(q, parse_identity("e = e")).pass);
}
