#include "fpl/exact.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <stdexcept>

namespace fpl {

namespace {

// Grows on demand under a lock. std::deque keeps references stable.
class BernoulliTable {
 public:
  const Rational& get(long m) {
    if (m < 0) throw std::domain_error("bernoulli index must be nonnegative");
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<long>(values_.size()) <= m) extend();
    return values_[static_cast<std::size_t>(m)];
  }

 private:
  // sum_{j=0}^{m} C(m+1, j) B_j = 0 with B_1 = -1/2; the sign of B_1 is
  // flipped afterwards. row_ holds C(m+1, j) for the next m.
  void extend() {
    const long m = static_cast<long>(values_.size());
    if (m == 0) {
      values_.emplace_back(1);
      row_ = {1, 2, 1};  // C(2, .)
      return;
    }
    if (m == 1) {
      values_.emplace_back(1, 2);
    } else if (m % 2 == 1) {
      values_.emplace_back(0);
    } else {
      Rational s = 0;
      s += row_[0] * values_[0];
      s -= row_[1] / Rational(2);  // C(m+1,1) * (-1/2)
      for (long j = 2; j < m; j += 2) s += row_[static_cast<std::size_t>(j)] * values_[static_cast<std::size_t>(j)];
      Rational b = -s / (m + 1);
      b.canonicalize();
      values_.push_back(std::move(b));
    }
    std::deque<Integer> next(row_.size() + 1);
    next.front() = 1;
    next.back() = 1;
    for (std::size_t j = 1; j + 1 < next.size(); ++j) next[j] = row_[j - 1] + row_[j];
    row_ = std::move(next);
  }

  std::mutex mu_;
  std::deque<Rational> values_;
  std::deque<Integer> row_;
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

const Rational& bernoulli(long m) { return table().get(m); }

Rational bernoulli_hat(long m) {
  if (m < 1) throw std::domain_error("bernoulli_hat needs m >= 1");
  Rational r = bernoulli(m) / m;
  r.canonicalize();
  return r;
}

Integer binomial(long N, long n) {
  if (N < 0 || n < 0 || n > N) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(N), static_cast<unsigned long>(n));
  return r;
}

Rational harmonic(long n) {
  if (n < 0) throw std::domain_error("harmonic needs n >= 0");
  Rational h = 0;
  for (long j = 1; j <= n; ++j) h += Rational(1, j);
  h.canonicalize();
  return h;
}

Rational pow2(long e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rational(v);
  Rational r(1, 1);
  r /= v;
  return r;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  s = s.substr(i);
  if (s.empty()) throw std::invalid_argument("empty rational");
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    bool ok = std::isdigit(static_cast<unsigned char>(c)) || c == '/' || (k == 0 && (c == '-' || c == '+'));
    if (!ok) throw std::invalid_argument("bad rational '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace fpl
