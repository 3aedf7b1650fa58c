#include <gtest/gtest.h>

#include <random>

#include "fpl/fmp.hpp"
#include "oracle.hpp"

using fpl::Index;
using fpl::Rational;

namespace {

fpl::Residue red(const Rational& r, std::uint32_t p, int n) { return fpl::reduce_rational(r, p, n); }

}  // namespace

TEST(Mhs, Examples) {
  EXPECT_EQ(fpl::mhs(Index({2, 1}), 7, 1, false).value(), 3u);
  EXPECT_EQ(fpl::mhs(Index({1}), 7, 1, true).value(), 0u);
  EXPECT_EQ(fpl::mhs(Index({5}), 3, 1, false).value(), 0u);
  // Non-star sums are empty when p <= depth.
  EXPECT_EQ(fpl::mhs(Index({1, 1, 1}), 3, 2, false).value(), 0u);
}

TEST(Mhs, AgainstOracle) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (int w = 1; w <= 5; ++w) {
      for (const auto& k : fpl::compositions(w)) {
        for (bool star : {false, true}) {
          EXPECT_EQ(fpl::mhs(k, p, 3, star), red(oracle::zeta(k, star, p), p, 3)) << k.str() << " p=" << p;
        }
      }
    }
  }
}

TEST(Fmp, Examples) {
  EXPECT_EQ(fpl::fmp_one_var(Index({1}), Rational(1, 2), 5, 1, false, fpl::End::head).value(), 3u);
  EXPECT_EQ(fpl::fmp_one_var(Index({1}), Rational(1, 2), 5, 1, false, fpl::End::head),
            fpl::fermat_quotient(2, 5, 1));
  EXPECT_EQ(fpl::fmp_one_var(Index({1, 1}), 1, 7, 1, false, fpl::End::head).value(), 0u);
  EXPECT_EQ(fpl::fmp_one_var(Index({2, 1}), 1, 7, 1, false, fpl::End::tail).value(), 3u);
  EXPECT_EQ(fpl::fmp_one_var(Index({1}), 2, 5, 1, false, fpl::End::head).value(), 4u);
  EXPECT_THROW(fpl::fmp_one_var(Index({1}), Rational(1, 5), 5, 1, false, fpl::End::head), fpl::NonUnit);
}

TEST(Fmp, CollapseAtOne) {
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (const auto& k : fpl::compositions(4)) {
      for (bool star : {false, true}) {
        fpl::EvalRequest req;
        req.index = k;
        req.star = star;
        req.p = p;
        req.n = 2;
        const auto z = fpl::mhs(k, p, 2, star);
        for (auto f : {fpl::Flavor::harmonic, fpl::Flavor::shuffle}) {
          req.flavor = f;
          req.args.assign(static_cast<std::size_t>(k.depth()), Rational(1));
          EXPECT_EQ(fpl::evaluate(req), z);
        }
        for (auto f : {fpl::Flavor::head, fpl::Flavor::tail}) {
          req.flavor = f;
          req.args = {Rational(1)};
          EXPECT_EQ(fpl::evaluate(req), z);
        }
      }
    }
  }
}

TEST(Fmp, ShuffleWithEqualArgumentsIsHead) {
  for (std::uint32_t p : {7u, 11u}) {
    for (const auto& k : fpl::compositions(4)) {
      for (Rational t : {Rational(2), Rational(-1), Rational(1, 3)}) {
        fpl::EvalRequest req;
        req.index = k;
        req.flavor = fpl::Flavor::shuffle;
        req.args.assign(static_cast<std::size_t>(k.depth()), t);
        req.p = p;
        req.n = 2;
        EXPECT_EQ(fpl::evaluate(req), fpl::fmp_one_var(k, t, p, 2, false, fpl::End::head));
      }
    }
  }
}

TEST(Fmp, AgainstOracle) {
  const std::vector<Rational> ts = {Rational(-1), Rational(2), Rational(1, 2), Rational(3), Rational(-1, 3)};
  for (std::uint32_t p : {5u, 7u, 11u}) {
    for (int w = 1; w <= 4; ++w) {
      for (const auto& k : fpl::compositions(w)) {
        for (const auto& t : ts) {
          if (p == 3 && (t == 3 || t == Rational(-1, 3))) continue;
          for (bool star : {false, true}) {
            for (bool head : {true, false}) {
              auto got = fpl::fmp_one_var(k, t, p, 2, star, head ? fpl::End::head : fpl::End::tail);
              EXPECT_EQ(got, red(oracle::one_var(k, t, star, head, p), p, 2)) << k.str() << " t=" << t.get_str();
            }
          }
        }
        std::vector<Rational> args;
        for (int i = 0; i < k.depth(); ++i) args.push_back(ts[static_cast<std::size_t>(i) % ts.size()]);
        for (bool harmonic : {true, false}) {
          fpl::EvalRequest req;
          req.index = k;
          req.args = args;
          req.flavor = harmonic ? fpl::Flavor::harmonic : fpl::Flavor::shuffle;
          req.p = p;
          req.n = 2;
          EXPECT_EQ(fpl::evaluate(req), red(oracle::nested(k, args, false, harmonic, p), p, 2));
        }
      }
    }
  }
}

TEST(Fmp, FastMatchesNaive) {
  std::mt19937_64 rng(7);
  const std::vector<std::uint32_t> primes = fpl::primes_between(2, 31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = primes[rng() % primes.size()];
    const int n = 1 + static_cast<int>(rng() % 3);
    const auto all = fpl::compositions(1 + static_cast<int>(rng() % 5));
    const Index k = all[rng() % all.size()];
    if (k.depth() > 3) continue;
    const fpl::Ring ring(p, n);
    std::vector<std::uint64_t> args;
    for (int i = 0; i < k.depth(); ++i) args.push_back(rng() % ring.m);
    for (auto kind : {fpl::SumKind::harmonic, fpl::SumKind::shuffle}) {
      for (bool star : {false, true}) {
        EXPECT_EQ(fpl::nested_sum(ring, k, args, star, kind), fpl::nested_sum_naive(ring, k, args, star, kind));
      }
    }
  }
}

TEST(Oy, Examples) {
  EXPECT_EQ(fpl::oy_li(Index({1, 1}), 1, 7, 1).value(), 0u);
  EXPECT_EQ(fpl::oy_li(Index({1}), 1, 5, 1).value(), 0u);
  for (std::uint32_t p : {5u, 7u}) {
    for (Rational t : {Rational(2), Rational(-1)}) {
      EXPECT_EQ(fpl::oy_li(Index({3}), t, p, 2), fpl::fmp_one_var(Index({3}), t, p, 2, false, fpl::End::head));
    }
  }
}

TEST(Oy, AgainstOracleAndDecomposition) {
  for (std::uint32_t p : {5u, 7u}) {
    for (int w = 1; w <= 4; ++w) {
      for (const auto& k : fpl::compositions(w)) {
        if (k.depth() > 3) continue;
        for (Rational t : {Rational(2), Rational(-1), Rational(1, 2)}) {
          const auto exact = oracle::oy(k, t, p);
          EXPECT_EQ(fpl::oy_li(k, t, p, 2), red(exact, p, 2)) << k.str();
          // The decomposition is a mod p statement; it already fails mod p^2.
          EXPECT_EQ(fpl::oy_decompose(k, t, p, 1), red(exact, p, 1)) << k.str() << " t=" << t.get_str() << " p=" << p;
        }
      }
    }
  }
}

TEST(Oy, Surjections) {
  auto one = fpl::enumerate_phi(1);
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].beta, 1);
  auto two = fpl::enumerate_phi(2);
  ASSERT_EQ(two.size(), 2u);
  std::multiset<int> betas;
  for (const auto& f : two) betas.insert(f.beta);
  EXPECT_EQ(betas, (std::multiset<int>{1, 2}));
  for (int m = 1; m <= 5; ++m) {
    std::size_t bijections = 0, fact = 1;
    for (int i = 2; i <= m; ++i) fact *= static_cast<std::size_t>(i);
    for (const auto& f : fpl::enumerate_phi(m)) bijections += f.l == m ? 1 : 0;
    EXPECT_EQ(bijections, fact);
  }
  EXPECT_THROW(fpl::enumerate_phi(7), std::domain_error);
}

TEST(Fmp, Flavors) {
  bool star = false;
  EXPECT_EQ(fpl::parse_flavor("zeta-star", &star), fpl::Flavor::zeta);
  EXPECT_TRUE(star);
  EXPECT_EQ(fpl::parse_flavor("oy", &star), fpl::Flavor::ono_yamamoto);
  EXPECT_THROW(fpl::parse_flavor("oy-star", &star), std::invalid_argument);
  EXPECT_THROW(fpl::parse_flavor("nope", &star), std::invalid_argument);
}
