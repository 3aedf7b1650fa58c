#include <gtest/gtest.h>

#include "fpl/poly.hpp"
#include "fpl/polyid.hpp"

using fpl::MultiPoly;
using fpl::Rational;

namespace {

MultiPoly var(const MultiPoly& like, const char* name, int e = 1) { return MultiPoly::variable(like, name, e); }

}  // namespace

TEST(Poly, Arithmetic) {
  MultiPoly z({"t"});
  auto t = var(z, "t");
  auto one = MultiPoly::constant(z, 1);
  EXPECT_EQ((t + one) * (t - one), t.pow(2) - one);
  EXPECT_TRUE((t - t).is_zero());
  auto f = (one - t).pow(3) - one;
  EXPECT_EQ(f.subst("t", one - t), t.pow(3) - one);

  // Term order of construction does not matter.
  MultiPoly a({"t", "s"}), b({"t", "s"});
  a.add_term({1, 0}, 2);
  a.add_term({0, 1}, 3);
  b.add_term({0, 1}, 3);
  b.add_term({1, 0}, 2);
  EXPECT_EQ(a, b);
  EXPECT_THROW(a + MultiPoly({"u"}), std::invalid_argument);
}

TEST(Poly, OperatorI) {
  MultiPoly z({"t"});
  auto t = var(z, "t");
  auto one = MultiPoly::constant(z, 1);
  EXPECT_EQ(fpl::op_I(t.pow(3), "t"), t.pow(3) * Rational(1, 3));
  EXPECT_TRUE(fpl::op_I(MultiPoly(z), "t").is_zero());
  auto lhs = fpl::op_I((one - t).pow(2) - one, "t");
  auto rhs = ((one - t) - one) + ((one - t).pow(2) - one) * Rational(1, 2);
  EXPECT_EQ(lhs, rhs);
}

TEST(Poly, OperatorJStar) {
  MultiPoly z({"t", "s"});
  auto t = var(z, "t"), s = var(z, "s");
  auto one = MultiPoly::constant(z, 1);
  EXPECT_EQ(fpl::op_J_star(t.pow(2), "t", "s"), t * s + s.pow(2) * Rational(1, 2));
  EXPECT_TRUE(fpl::op_J_star(s.pow(3), "t", "s").is_zero());
  auto lhs = fpl::op_J_star((one - t).pow(2) - one, "t", "s");
  MultiPoly rhs(z);
  for (int j = 1; j <= 2; ++j) rhs += (one - t).pow(2 - j) * ((one - s).pow(j) - one) * Rational(1, j);
  EXPECT_EQ(lhs, rhs);
}

TEST(Poly, OperatorJN) {
  MultiPoly z({"t", "s"}, {true, false});
  auto t = var(z, "t"), s = var(z, "s");
  const int N = 4;
  // t^n, n < N -> sum_{j=n+1}^{N} s^j t^{n-j} / j
  for (int n = 0; n < N; ++n) {
    MultiPoly want(z);
    for (int j = n + 1; j <= N; ++j) want += s.pow(j) * var(z, "t", n - j) * Rational(1, j);
    EXPECT_EQ(fpl::op_J_N(t.pow(n), "t", "s", N), want) << n;
  }
  EXPECT_TRUE(fpl::op_J_N(t.pow(N), "t", "s", N).is_zero());
}

TEST(PolyIdentity, Examples) {
  fpl::PolyParams pp;
  pp.k = fpl::Index({2, 1});
  pp.N = 4;
  EXPECT_TRUE(fpl::verify_poly_identity("shuffle.binomial", pp));
  pp.k = fpl::Index({1, 1});
  pp.N = 3;
  EXPECT_TRUE(fpl::verify_poly_identity("ratio.binomial", pp));

  fpl::PolyParams e;
  e.N = 1;
  e.k = fpl::Index({1});
  EXPECT_TRUE(fpl::verify_poly_identity("euler", e));
  e.N = 3;
  auto lhs = fpl::build_side("euler", fpl::Side::lhs, e);
  EXPECT_EQ(lhs, MultiPoly::constant(lhs, Rational(11, 6)));
  EXPECT_EQ(fpl::build_side("euler", fpl::Side::rhs, e), lhs);

  fpl::PolyParams b;
  b.n = 3;
  b.j = 1;
  auto l = fpl::build_side("binomial.double", fpl::Side::lhs, b);
  auto t = var(l, "t");
  EXPECT_EQ(l, t * (MultiPoly::constant(l, 1) + t).pow(2) * Rational(3));
}

TEST(PolyIdentity, SidesDifferWhenMismatched) {
  fpl::PolyParams pp;
  pp.k = fpl::Index({2, 1});
  pp.N = 3;
  auto a = fpl::build_side("shuffle.binomial", fpl::Side::lhs, pp);
  auto b = fpl::build_side("shuffle.dual-binomial", fpl::Side::lhs, pp);
  EXPECT_NE(a, fpl::build_side("shuffle.dual-binomial", fpl::Side::rhs, pp));
  EXPECT_NE(b, fpl::build_side("shuffle.binomial", fpl::Side::rhs, pp));
}

TEST(PolyIdentity, FullGrid) {
  std::size_t checked = 0;
  for (const auto& info : fpl::poly_identities()) {
    for (const auto& pp : fpl::poly_parameter_grid(info.id, 4, 4)) {
      EXPECT_TRUE(fpl::verify_poly_identity(info.id, pp)) << info.id << " " << fpl::describe(info.id, pp);
      ++checked;
    }
  }
  EXPECT_GT(checked, 300u);
  EXPECT_EQ(fpl::poly_identities().size(), 17u);
  EXPECT_THROW(fpl::poly_identity("nope"), std::invalid_argument);
}
