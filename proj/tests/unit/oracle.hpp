#pragma once

// Reference values straight from the definitions, in exact rationals.
// Slow on purpose; keep p and depth small.

#include <functional>
#include <vector>

#include "fpl/exact.hpp"
#include "fpl/index.hpp"

namespace oracle {

using fpl::Rational;

inline Rational rpow(const Rational& x, long e) {
  Rational r = 1;
  if (e >= 0) {
    for (long i = 0; i < e; ++i) r *= x;
  } else {
    for (long i = 0; i < -e; ++i) r /= x;
  }
  return r;
}

// p > n_1 > ... > n_m > 0 (star: p-1 >= n_1 >= ... >= n_m >= 1).
// harmonic: prod t_i^{n_i}; otherwise t_1^{n_1-n_2} ... t_m^{n_m}.
inline Rational nested(const fpl::Index& k, const std::vector<Rational>& t, bool star, bool harmonic, long p) {
  const int m = k.depth();
  std::vector<long> n(static_cast<std::size_t>(m));
  Rational total = 0;
  std::function<void(int, long)> rec = [&](int i, long upper) {
    if (i == m) {
      Rational term = 1;
      for (int j = 0; j < m; ++j) {
        const auto sj = static_cast<std::size_t>(j);
        long e = harmonic || j + 1 == m ? n[sj] : n[sj] - n[sj + 1];
        term *= rpow(t[sj], e) / rpow(Rational(n[sj]), k[sj]);
      }
      total += term;
      return;
    }
    for (long v = 1; star ? v <= upper : v < upper; ++v) {
      n[static_cast<std::size_t>(i)] = v;
      rec(i + 1, v);
    }
  };
  rec(0, star ? p - 1 : p);
  return total;
}

inline Rational zeta(const fpl::Index& k, bool star, long p) {
  return nested(k, std::vector<Rational>(static_cast<std::size_t>(k.depth()), Rational(1)), star, true, p);
}

// t at n_1 (head) or at n_m (tail).
inline Rational one_var(const fpl::Index& k, const Rational& t, bool star, bool head, long p) {
  std::vector<Rational> a(static_cast<std::size_t>(k.depth()), Rational(1));
  a[head ? 0 : a.size() - 1] = t;
  return nested(k, a, star, true, p);
}

// li_k(t) = sum over 0 < l_i < p of t^{l_1+...+l_m} / prod (l_1+...+l_i)^{k_i}.
inline Rational oy(const fpl::Index& k, const Rational& t, long p) {
  const int m = k.depth();
  Rational total = 0;
  std::function<void(int, long, Rational)> rec = [&](int i, long partial, Rational denom) {
    if (i == m) {
      total += rpow(t, partial) / denom;
      return;
    }
    for (long l = 1; l < p; ++l) {
      if ((partial + l) % p == 0) continue;
      rec(i + 1, partial + l, denom * rpow(Rational(partial + l), k[static_cast<std::size_t>(i)]));
    }
  };
  rec(0, 0, Rational(1));
  return total;
}

}  // namespace oracle
