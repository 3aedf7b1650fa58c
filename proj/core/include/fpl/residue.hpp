#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fpl/exact.hpp"

namespace fpl {

// Raised when an inverse mod p^n is requested for a multiple of p.
class NonUnit : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NonUnitDenominator : public NonUnit {
 public:
  using NonUnit::NonUnit;
};

// Raw arithmetic mod p^n on 64-bit words; the hot loops use this directly.
struct Ring {
  std::uint32_t p = 0;
  int n = 0;
  std::uint64_t m = 0;  // p^n

  Ring() = default;
  Ring(std::uint32_t prime, int exponent);

  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= m ? s - m : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + m - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : m - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inv(std::uint64_t a) const;  // throws NonUnit
  std::uint64_t from_int(long long v) const;
  std::uint64_t from_integer(const Integer& v) const;
  std::uint64_t from_rational(const Rational& r) const;  // throws NonUnitDenominator
  bool is_unit(std::uint64_t a) const { return a % p != 0; }

  friend bool operator==(const Ring& a, const Ring& b) { return a.p == b.p && a.n == b.n; }
};

// An element of Z/p^nZ tagged with (p, n). Mixing tags is an error.
class Residue {
 public:
  Residue() = default;
  Residue(const Ring& ring, std::uint64_t value);
  static Residue of(long long v, std::uint32_t p, int n);

  std::uint64_t value() const { return v_; }
  std::uint32_t prime() const { return ring_.p; }
  int exponent() const { return ring_.n; }
  std::uint64_t modulus() const { return ring_.m; }
  const Ring& ring() const { return ring_; }

  bool is_unit() const { return ring_.is_unit(v_); }
  Residue inv() const;
  Residue pow(long long e) const;  // negative e needs a unit

  Residue operator-() const { return {ring_, ring_.neg(v_)}; }
  Residue& operator+=(const Residue& o);
  Residue& operator-=(const Residue& o);
  Residue& operator*=(const Residue& o);
  Residue& operator/=(const Residue& o);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(Residue a, const Residue& b) { return a /= b; }
  friend bool operator==(const Residue& a, const Residue& b) { return a.ring_ == b.ring_ && a.v_ == b.v_; }

  std::string str() const;  // "3 (mod 7^1)"

 private:
  void check(const Residue& o) const;

  Ring ring_;
  std::uint64_t v_ = 0;
};

Residue reduce_rational(const Rational& r, std::uint32_t p, int n);

// (a^{p-1} - 1)/p mod p^n.
Residue fermat_quotient(const Rational& a, std::uint32_t p, int n);
// Exact (2^{p-1} - 1)/p.
Integer fermat_quotient_exact(long a, std::uint32_t p);

// omega(a) = a^{p^{n-1}} mod p^n.
Residue teichmuller(long long a, std::uint32_t p, int n);

// Truncated p-adic log and exp. log needs u = 1 mod p and p > n; exp needs
// x = 0 mod p and p > n + 1.
Residue padic_log(const Residue& u);
Residue padic_exp(const Residue& x);

// B_{1, omega^{-k}} = (1/p) sum_{a=1}^{p-1} omega(a)^{-k} a, mod p^n (n <= 4).
Residue gen_bernoulli_1(long k, std::uint32_t p, int n);

Residue bernoulli_mod(long m, std::uint32_t p, int n);
Residue bhat_mod(long m, std::uint32_t p, int n);

bool is_prime(std::uint64_t x);
std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi);

// Element of exact multiplicative order d in (Z/pZ)^*, d | p-1.
std::uint64_t element_of_order(std::uint32_t p, std::uint32_t d);

std::uint64_t ipow(std::uint64_t base, int e);

}  // namespace fpl
