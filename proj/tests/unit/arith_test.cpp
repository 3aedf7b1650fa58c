#include <gtest/gtest.h>

#include "fpl/exact.hpp"
#include "fpl/residue.hpp"

using fpl::Rational;
using fpl::Residue;

TEST(Exact, BernoulliConvention) {
  EXPECT_EQ(fpl::bernoulli(0), 1);
  EXPECT_EQ(fpl::bernoulli(1), Rational(1, 2));
  EXPECT_EQ(fpl::bernoulli(2), Rational(1, 6));
  EXPECT_EQ(fpl::bernoulli(3), 0);
  EXPECT_EQ(fpl::bernoulli(4), Rational(-1, 30));
  EXPECT_EQ(fpl::bernoulli(12), Rational(-691, 2730));
  for (long m = 3; m < 80; m += 2) EXPECT_EQ(fpl::bernoulli(m), 0) << m;
  EXPECT_EQ(fpl::bernoulli_hat(4), Rational(-1, 120));
}

TEST(Exact, BinomialAndHarmonic) {
  EXPECT_EQ(fpl::binomial(4, 2), 6);
  EXPECT_EQ(fpl::binomial(5, 0), 1);
  EXPECT_EQ(fpl::binomial(3, 5), 0);
  EXPECT_EQ(fpl::harmonic(0), 0);
  EXPECT_EQ(fpl::harmonic(2), Rational(3, 2));
  EXPECT_EQ(fpl::harmonic(4), Rational(25, 12));
  EXPECT_EQ(fpl::pow2(-3), Rational(1, 8));
  EXPECT_EQ(fpl::parse_rational("-5/10"), Rational(-1, 2));
  EXPECT_THROW(fpl::parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(fpl::parse_rational("abc"), std::invalid_argument);
}

// Power sums over a = 1..p with B_1 = +1/2, which is the convention the
// Bernoulli numbers above follow.
TEST(Exact, Faulhaber) {
  for (long p : {2, 3, 5, 7, 11, 13}) {
    for (long m = 1; m <= 10; ++m) {
      Rational lhs = 0;
      for (long a = 1; a <= p; ++a) {
        Rational x = 1;
        for (long i = 0; i < m; ++i) x *= a;
        lhs += x;
      }
      Rational rhs = 0, pp = 1;
      for (long i = 1; i <= m + 1; ++i) {
        pp *= p;
        rhs += Rational(fpl::binomial(m + 1, i)) * fpl::bernoulli(m + 1 - i) * pp;
      }
      rhs /= m + 1;
      EXPECT_EQ(lhs, rhs) << "p=" << p << " m=" << m;
    }
  }
}

TEST(Residue, Reduce) {
  EXPECT_EQ(fpl::reduce_rational(Rational(-1, 30), 7, 1).value(), 3u);
  EXPECT_EQ(fpl::reduce_rational(0, 11, 3).value(), 0u);
  EXPECT_THROW(fpl::reduce_rational(Rational(1, 6), 3, 1), fpl::NonUnitDenominator);
  EXPECT_EQ(fpl::reduce_rational(Rational(-1, 30), 7, 1).str(), "3 (mod 7^1)");
}

TEST(Residue, InverseAndTags) {
  const fpl::Ring r(5, 2);
  EXPECT_EQ(Residue(r, 2).inv().value(), 13u);
  EXPECT_EQ(Residue(r, 1).inv().value(), 1u);
  EXPECT_THROW(Residue(r, 5).inv(), fpl::NonUnit);
  EXPECT_THROW(Residue::of(1, 5, 2) + Residue::of(1, 7, 2), std::invalid_argument);
  EXPECT_THROW(Residue::of(1, 5, 2) * Residue::of(1, 5, 1), std::invalid_argument);
  EXPECT_EQ(Residue::of(-1, 5, 2).value(), 24u);
  EXPECT_EQ(Residue::of(3, 7, 1).pow(-1).value(), 5u);
}

TEST(Residue, FermatQuotient) {
  EXPECT_EQ(fpl::fermat_quotient(2, 5, 1).value(), 3u);
  EXPECT_EQ(fpl::fermat_quotient(1, 13, 2).value(), 0u);
  EXPECT_EQ(fpl::fermat_quotient(2, 7, 1).value(), 2u);
  EXPECT_EQ(fpl::fermat_quotient_exact(2, 7), 9);
  // Reduction of the exact quotient at higher precision.
  for (std::uint32_t p : {5u, 7u, 11u, 13u}) {
    EXPECT_EQ(fpl::fermat_quotient(2, p, 3), fpl::reduce_rational(Rational(fpl::fermat_quotient_exact(2, p)), p, 3));
  }
  EXPECT_THROW(fpl::fermat_quotient(5, 5, 1), fpl::NonUnit);
}

TEST(Residue, Teichmuller) {
  EXPECT_EQ(fpl::teichmuller(2, 5, 2).value(), 7u);
  EXPECT_EQ(fpl::teichmuller(2, 5, 2).pow(4).value(), 1u);
  EXPECT_EQ(fpl::teichmuller(1, 13, 3).value(), 1u);
  EXPECT_EQ(fpl::teichmuller(3, 5, 1).value(), 3u);
  for (std::uint32_t p : {7u, 11u}) {
    for (long a = 1; a < p; ++a) {
      auto w = fpl::teichmuller(a, p, 3);
      EXPECT_EQ(w.pow(p - 1).value(), 1u);
      EXPECT_EQ(w.value() % p, static_cast<std::uint64_t>(a));
    }
  }
}

TEST(Residue, LogExp) {
  EXPECT_EQ(fpl::padic_log(Residue::of(8, 7, 2)).value(), 7u);
  EXPECT_EQ(fpl::padic_log(Residue::of(1, 7, 2)).value(), 0u);
  EXPECT_EQ(fpl::padic_exp(Residue::of(0, 7, 2)).value(), 1u);
  EXPECT_EQ(fpl::padic_exp(Residue::of(7, 7, 2)).value(), 8u);
  const std::uint32_t p = 11;
  const fpl::Ring r(p, 3);
  for (std::uint64_t u = 1; u < r.m; u += p) {
    Residue x(r, u);
    EXPECT_EQ(fpl::padic_exp(fpl::padic_log(x)), x) << u;
  }
  // log turns products into sums.
  Residue a = Residue::of(1 + 11, p, 3), b = Residue::of(1 + 3 * 11, p, 3);
  EXPECT_EQ(fpl::padic_log(a * b), fpl::padic_log(a) + fpl::padic_log(b));
}

TEST(Residue, BernoulliMod) {
  EXPECT_EQ(fpl::bernoulli_mod(4, 7, 1).value(), 3u);
  EXPECT_THROW(fpl::bernoulli_mod(6, 7, 1), std::domain_error);
  EXPECT_EQ(fpl::bhat_mod(4, 7, 1), fpl::reduce_rational(Rational(-1, 120), 7, 1));
}

TEST(Residue, GeneralizedBernoulli) {
  // mod p it is B_{p-k}/(p-k), reached here through the twisted sum.
  EXPECT_EQ(fpl::gen_bernoulli_1(3, 11, 1), fpl::reduce_rational(fpl::bernoulli(8) / 8, 11, 1));
  EXPECT_EQ(fpl::gen_bernoulli_1(5, 7, 1), fpl::reduce_rational(Rational(1, 12), 7, 1));
  // Even characters have vanishing B_1.
  for (std::uint32_t p : {11u, 13u}) {
    for (long k : {2, 4}) EXPECT_EQ(fpl::gen_bernoulli_1(k, p, 3).value(), 0u);
  }
  // Untwisted sum: (1/p) sum a = (p-1)/2.
  EXPECT_EQ(fpl::gen_bernoulli_1(10, 11, 2), fpl::reduce_rational(5, 11, 2));
}

TEST(Residue, Primes) {
  EXPECT_EQ(fpl::primes_between(2, 20), (std::vector<std::uint32_t>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(fpl::primes_between(24, 28).empty());
  EXPECT_TRUE(fpl::is_prime(199));
  EXPECT_FALSE(fpl::is_prime(1));
  for (std::uint32_t p : {13u, 31u, 101u}) {
    for (std::uint32_t d = 1; d < p; ++d) {
      if ((p - 1) % d) continue;
      const fpl::Ring r(p, 1);
      std::uint64_t z = fpl::element_of_order(p, d);
      EXPECT_EQ(r.pow(z, d), 1u);
      for (std::uint32_t e = 1; e < d; ++e) {
        if (d % e == 0) EXPECT_NE(r.pow(z, e), 1u);
      }
    }
  }
}
