#include "fpl/residue.hpp"

#include <limits>

namespace fpl {

std::uint64_t ipow(std::uint64_t base, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw std::overflow_error("integer power overflows 64 bits");
    }
    r *= base;
  }
  return r;
}

Ring::Ring(std::uint32_t prime, int exponent) : p(prime), n(exponent) {
  if (!is_prime(prime)) throw std::invalid_argument(std::to_string(prime) + " is not prime");
  if (exponent < 1) throw std::invalid_argument("exponent must be >= 1");
  m = ipow(prime, exponent);
  if (m >> 62) throw std::invalid_argument("modulus p^n too large");
}

std::uint64_t Ring::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Ring::inv(std::uint64_t a) const {
  a %= m;
  if (a % p == 0) throw NonUnit("no inverse of " + std::to_string(a) + " mod " + std::to_string(p) + "^" + std::to_string(n));
  long long t = 0, new_t = 1;
  long long r = static_cast<long long>(m), new_r = static_cast<long long>(a);
  while (new_r != 0) {
    long long q = r / new_r;
    long long tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += static_cast<long long>(m);
  return static_cast<std::uint64_t>(t);
}

std::uint64_t Ring::from_int(long long v) const {
  long long r = v % static_cast<long long>(m);
  if (r < 0) r += static_cast<long long>(m);
  return static_cast<std::uint64_t>(r);
}

std::uint64_t Ring::from_integer(const Integer& v) const {
  Integer r;
  Integer mod(static_cast<unsigned long>(m));
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), mod.get_mpz_t());
  return r.get_ui();
}

std::uint64_t Ring::from_rational(const Rational& r) const {
  std::uint64_t den = from_integer(r.get_den());
  if (den % p == 0) {
    throw NonUnitDenominator("denominator of " + r.get_str() + " is divisible by " + std::to_string(p));
  }
  return mul(from_integer(r.get_num()), inv(den));
}

Residue::Residue(const Ring& ring, std::uint64_t value) : ring_(ring), v_(value % ring.m) {}

Residue Residue::of(long long v, std::uint32_t p, int n) {
  Ring r(p, n);
  return {r, r.from_int(v)};
}

void Residue::check(const Residue& o) const {
  if (!(ring_ == o.ring_)) {
    throw std::invalid_argument("mixed moduli: " + std::to_string(ring_.p) + "^" + std::to_string(ring_.n) + " vs " +
                                std::to_string(o.ring_.p) + "^" + std::to_string(o.ring_.n));
  }
}

Residue Residue::inv() const { return {ring_, ring_.inv(v_)}; }

Residue Residue::pow(long long e) const {
  if (e >= 0) return {ring_, ring_.pow(v_, static_cast<std::uint64_t>(e))};
  return {ring_, ring_.pow(ring_.inv(v_), static_cast<std::uint64_t>(-e))};
}

Residue& Residue::operator+=(const Residue& o) {
  check(o);
  v_ = ring_.add(v_, o.v_);
  return *this;
}
Residue& Residue::operator-=(const Residue& o) {
  check(o);
  v_ = ring_.sub(v_, o.v_);
  return *this;
}
Residue& Residue::operator*=(const Residue& o) {
  check(o);
  v_ = ring_.mul(v_, o.v_);
  return *this;
}
Residue& Residue::operator/=(const Residue& o) {
  check(o);
  v_ = ring_.mul(v_, ring_.inv(o.v_));
  return *this;
}

std::string Residue::str() const {
  return std::to_string(v_) + " (mod " + std::to_string(ring_.p) + "^" + std::to_string(ring_.n) + ")";
}

Residue reduce_rational(const Rational& r, std::uint32_t p, int n) {
  Ring ring(p, n);
  return {ring, ring.from_rational(r)};
}

namespace {

void require_p_unit(const Integer& x, std::uint32_t p, const char* what) {
  if (mpz_divisible_ui_p(x.get_mpz_t(), p)) {
    throw NonUnit(std::string(what) + " is not prime to " + std::to_string(p));
  }
}

int valuation(std::uint64_t j, std::uint32_t p) {
  int e = 0;
  while (j % p == 0) {
    j /= p;
    ++e;
  }
  return e;
}

}  // namespace

Residue fermat_quotient(const Rational& a, std::uint32_t p, int n) {
  if (a == 0) throw NonUnit("fermat quotient of 0");
  require_p_unit(a.get_num(), p, "numerator");
  require_p_unit(a.get_den(), p, "denominator");
  Ring big(p, n + 1);
  std::uint64_t x = big.from_rational(a);
  std::uint64_t d = big.sub(big.pow(x, p - 1), 1);
  if (d % p != 0) throw std::logic_error("a^(p-1) - 1 not divisible by p");
  Ring ring(p, n);
  return {ring, d / p};
}

Integer fermat_quotient_exact(long a, std::uint32_t p) {
  Integer pw;
  Integer base(a);
  mpz_pow_ui(pw.get_mpz_t(), base.get_mpz_t(), p - 1);
  pw -= 1;
  if (!mpz_divisible_ui_p(pw.get_mpz_t(), p)) throw NonUnit("base not prime to p");
  Integer q;
  mpz_divexact_ui(q.get_mpz_t(), pw.get_mpz_t(), p);
  return q;
}

Residue teichmuller(long long a, std::uint32_t p, int n) {
  Ring ring(p, n);
  std::uint64_t x = ring.from_int(a);
  if (x % p == 0) throw NonUnit("teichmuller of a multiple of p");
  return {ring, ring.pow(x, ipow(p, n - 1))};
}

Residue padic_log(const Residue& u) {
  const Ring& ring = u.ring();
  const std::uint32_t p = ring.p;
  const int n = ring.n;
  if (p <= static_cast<std::uint32_t>(n)) throw std::domain_error("padic_log needs p > n");
  std::uint64_t x = ring.sub(u.value(), 1);
  if (x % p != 0) throw std::domain_error("padic_log needs u = 1 mod p");
  const std::uint64_t y = x / p;
  std::uint64_t acc = 0;
  // term_j = p^(j - v(j)) y^j / j', with j = p^v(j) j'; the exponent j - v(j)
  // is nondecreasing, so the first j where it reaches n ends the series.
  for (std::uint64_t j = 1;; ++j) {
    const int v = valuation(j, p);
    const long long shift = static_cast<long long>(j) - v;
    if (shift >= n) {
      if (v == 0) break;
      continue;
    }
    std::uint64_t jp = j / ipow(p, v);
    std::uint64_t term = ring.mul(ring.mul(ipow(p, static_cast<int>(shift)), ring.pow(y, j)), ring.inv(jp % ring.m));
    acc = (j % 2 == 1) ? ring.add(acc, term) : ring.sub(acc, term);
  }
  return {ring, acc};
}

Residue padic_exp(const Residue& x) {
  const Ring& ring = x.ring();
  const std::uint32_t p = ring.p;
  const int n = ring.n;
  if (p <= static_cast<std::uint32_t>(n) + 1) throw std::domain_error("padic_exp needs p > n + 1");
  if (x.value() % p != 0) throw std::domain_error("padic_exp needs x = 0 mod p");
  const std::uint64_t y = x.value() / p;
  std::uint64_t acc = 1 % ring.m;
  std::uint64_t unit_fact = 1;  // j! with the p-part removed, mod p^n
  int vfact = 0;                 // v_p(j!)
  // v_p(j!) <= (j-1)/(p-1), so j - v_p(j!) grows and the loop ends after O(n) terms.
  for (std::uint64_t j = 1; static_cast<long long>(j) - static_cast<long long>((j - 1) / (p - 1)) < n + 1; ++j) {
    const int v = valuation(j, p);
    vfact += v;
    unit_fact = ring.mul(unit_fact, (j / ipow(p, v)) % ring.m);
    const long long shift = static_cast<long long>(j) - vfact;
    if (shift >= n) continue;
    std::uint64_t term = ring.mul(ring.mul(ipow(p, static_cast<int>(shift)), ring.pow(y, j)), ring.inv(unit_fact));
    acc = ring.add(acc, term);
  }
  return {ring, acc};
}

Residue gen_bernoulli_1(long k, std::uint32_t p, int n) {
  if (n < 1 || n > 4) throw std::domain_error("gen_bernoulli_1 supports 1 <= n <= 4");
  Ring big(p, n + 1);
  const std::uint64_t lift = ipow(p, n);
  std::uint64_t s = 0;
  for (std::uint64_t a = 1; a < p; ++a) {
    std::uint64_t w = big.pow(a, lift);
    std::uint64_t wk = k >= 0 ? big.pow(big.inv(w), static_cast<std::uint64_t>(k))
                              : big.pow(w, static_cast<std::uint64_t>(-k));
    s = big.add(s, big.mul(wk, a));
  }
  if (s % p != 0) {
    throw std::domain_error("twisted sum not divisible by p (k = 1 mod p-1?)");
  }
  Ring ring(p, n);
  return {ring, s / p};
}

Residue bernoulli_mod(long m, std::uint32_t p, int n) { return reduce_rational(bernoulli(m), p, n); }

Residue bhat_mod(long m, std::uint32_t p, int n) { return reduce_rational(bernoulli_hat(m), p, n); }

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

// Deterministic Miller-Rabin; these bases are exact below 2^64.
bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (x % q == 0) return x == q;
  }
  std::uint64_t d = x - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t y = powmod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mulmod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint32_t> primes_between(std::uint32_t lo, std::uint32_t hi) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t x = lo; x <= hi; ++x) {
    if (is_prime(x)) out.push_back(static_cast<std::uint32_t>(x));
  }
  return out;
}

std::uint64_t element_of_order(std::uint32_t p, std::uint32_t d) {
  if (d == 0 || (p - 1) % d != 0) throw std::domain_error("order must divide p-1");
  std::vector<std::uint32_t> factors;
  std::uint32_t r = p - 1;
  for (std::uint32_t q = 2; q * q <= r; ++q) {
    if (r % q == 0) {
      factors.push_back(q);
      while (r % q == 0) r /= q;
    }
  }
  if (r > 1) factors.push_back(r);
  for (std::uint64_t g = 1; g < p; ++g) {
    bool generator = true;
    for (std::uint32_t q : factors) {
      if (powmod(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return powmod(g, (p - 1) / d, p);
  }
  throw std::logic_error("no generator found");
}

}  // namespace fpl
