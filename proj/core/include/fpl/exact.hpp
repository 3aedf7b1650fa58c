#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace fpl {

using Integer = mpz_class;
using Rational = mpq_class;

// B_m for te^t/(e^t - 1), so B_1 = +1/2. Values are cached; the reference
// stays valid for the lifetime of the process.
const Rational& bernoulli(long m);

// B_m / m, m >= 1.
Rational bernoulli_hat(long m);

// C(N, n), zero outside 0 <= n <= N.
Integer binomial(long N, long n);

// H_n with H_0 = 0.
Rational harmonic(long n);

// Exact 2^e for any integer e.
Rational pow2(long e);

// "3", "-1/2", "5/2"; throws std::invalid_argument.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

}  // namespace fpl
