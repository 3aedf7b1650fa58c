#include <gtest/gtest.h>

#include <set>

#include "fpl/fmp.hpp"
#include "fpl/registry.hpp"
#include "oracle.hpp"

using fpl::Params;
using fpl::Rational;

namespace {

const fpl::IdentityEntry& entry(const char* id) {
  const auto* e = fpl::find_entry(id);
  if (!e) throw std::runtime_error(std::string("missing ") + id);
  return *e;
}

bool all_pass(const std::vector<fpl::CheckRecord>& rs) {
  if (rs.empty()) return false;
  for (const auto& r : rs) {
    if (!r.pass) return false;
  }
  return true;
}

}  // namespace

TEST(Catalog, Shape) {
  const auto& cat = fpl::catalog();
  EXPECT_GE(cat.size(), 90u);
  std::set<std::string> ids;
  for (const auto& e : cat) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_FALSE(e.params.empty()) << e.id;
    EXPECT_FALSE(e.guard_text.empty()) << e.id;
    EXPECT_GE(e.exponent, 1);
    for (const auto& p : e.params) EXPECT_GE(e.guard(p).min_prime, 2u) << e.id;
  }
  EXPECT_EQ(fpl::find_entry("no.such.entry"), nullptr);
}

TEST(Catalog, Guards) {
  const auto& zc = entry("zeta.zhou-cai");
  EXPECT_EQ(zc.guard_text, "p > mk+2");
  auto g = zc.guard(Params::parse("k=1,m=2"));
  EXPECT_EQ(g.min_prime, 5u);
  EXPECT_FALSE(g.admits(3));
  EXPECT_TRUE(g.admits(5));

  EXPECT_EQ(entry("bernoulli.generalized.mod-p3.odd").guard(Params::parse("k=3")).min_prime, 8u);
  EXPECT_EQ(entry("zeta.hoffman-duality").guard(entry("zeta.hoffman-duality").params.front()).min_prime, 2u);

  const auto& dist = entry("ones.distribution.head");
  auto dg = dist.guard(Params::parse("m=2,n=3"));
  EXPECT_TRUE(dg.admits(7));
  EXPECT_FALSE(dg.admits(11));
}

TEST(Catalog, Params) {
  auto p = Params::parse("k=(2,1),m=3");
  ASSERT_TRUE(p.k.has_value());
  EXPECT_EQ(*p.k, fpl::Index({2, 1}));
  EXPECT_EQ(p["m"], 3);
  EXPECT_FALSE(Params::parse("k=3,m=2").k.has_value());
  EXPECT_FALSE(p.has("n"));
  EXPECT_THROW(p["n"], std::out_of_range);
  EXPECT_EQ(Params::parse(p.str()), p);
  EXPECT_EQ(Params::parse("k=(2,1,1),m=4").index(), fpl::Index({2, 1, 1}));
  EXPECT_THROW(Params::parse("m"), std::invalid_argument);
  EXPECT_THROW(Params::parse("m=x"), std::invalid_argument);
}

TEST(Catalog, SampleArguments) {
  EXPECT_EQ(fpl::sample_arguments(0).size(), 1u);
  auto one = fpl::sample_arguments(1);
  EXPECT_EQ(one.size(), 7u);
  EXPECT_EQ(one.back().front(), 1);
  EXPECT_EQ(fpl::sample_arguments(2).size(), 36u);
  // Depth three and up: 36 tuples, every coordinate takes several values.
  auto three = fpl::sample_arguments(4);
  ASSERT_EQ(three.size(), 36u);
  for (std::size_t i = 0; i < 4; ++i) {
    std::set<std::string> seen;
    for (const auto& t : three) seen.insert(t[i].get_str());
    EXPECT_GT(seen.size(), 3u) << i;
  }
}

TEST(Evaluate, ZhouCaiStar) {
  const auto& e = entry("zeta.zhou-cai.star");
  auto rs = fpl::evaluate(e, Params::parse("k=1,m=2"), 7);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_TRUE(rs[0].pass);
  // Both sides independently: the star sum mod 49 and 7*B_4/3.
  auto lhs = fpl::reduce_rational(oracle::zeta(fpl::Index({1, 1}), true, 7), 7, 2);
  auto rhs = fpl::reduce_rational(7 * fpl::bernoulli(4) / 3, 7, 2);
  EXPECT_EQ(lhs, rhs);
  EXPECT_EQ(rs[0].lhs, std::to_string(lhs.value()));
}

TEST(Evaluate, HoffmanDuality) {
  const auto& e = entry("zeta.hoffman-duality");
  EXPECT_TRUE(all_pass(fpl::evaluate(e, Params::parse("k=(2)"), 11)));
  auto a = fpl::mhs(fpl::Index({2}), 11, 1, true);
  auto b = fpl::mhs(fpl::Index({1, 1}), 11, 1, true);
  EXPECT_EQ(a, -b);
}

TEST(Evaluate, FermatQuotientValue) {
  EXPECT_TRUE(all_pass(fpl::evaluate(entry("values.weight1.half"), entry("values.weight1.half").params.front(), 5)));
}

TEST(Evaluate, FunctionalEquationSamples) {
  const auto& e = entry("fneq.shuffle");
  int skipped = 0;
  auto rs = fpl::evaluate(e, Params::parse("k=(2,1)"), 7, &skipped);
  EXPECT_EQ(rs.size() + static_cast<std::size_t>(skipped), 36u);
  EXPECT_TRUE(all_pass(rs));
  // The t = 1 point is always among the one-variable samples.
  auto hr = fpl::evaluate(entry("fneq.hoffman"), Params::parse("k=(2,1)"), 11);
  ASSERT_FALSE(hr.empty());
  EXPECT_EQ(hr.back().args, "(1)");
}

TEST(Evaluate, InadmissibleIsSkipped) {
  // 1/2 and 5/2 have no meaning at p = 2.
  int skipped = 0;
  auto rs = fpl::evaluate(entry("fneq.hoffman"), Params::parse("k=1"), 2, &skipped);
  EXPECT_GT(skipped, 0);
  EXPECT_EQ(rs.size() + static_cast<std::size_t>(skipped), 7u);
}

TEST(Evaluate, ShiftBreaksEveryCell) {
  for (const char* id : {"zeta.zhou-cai", "fneq.shuffle", "values.ones.half.mod-p2"}) {
    const auto& e = entry(id);
    const auto& params = e.params.back();
    for (std::uint32_t p : {101u, 103u}) {
      if (!e.guard(params).admits(p)) continue;
      for (const auto& r : fpl::evaluate(e, params, p, nullptr, 1)) EXPECT_FALSE(r.pass) << id;
    }
  }
}

TEST(Evaluate, DistributionUsesRootsOfUnity) {
  const auto& e = entry("ones.distribution.head");
  auto rs = fpl::evaluate(e, Params::parse("m=2,n=3"), 13);
  EXPECT_TRUE(all_pass(rs));
}
