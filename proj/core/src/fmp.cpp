#include "fpl/fmp.hpp"

#include <stdexcept>

namespace fpl {

Flavor parse_flavor(std::string_view name, bool* star) {
  std::string s(name);
  bool is_star = false;
  const std::string suffix = "-star";
  if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0) {
    is_star = true;
    s.resize(s.size() - suffix.size());
  }
  if (star) *star = is_star;
  if (s == "zeta") return Flavor::zeta;
  if (s == "harmonic") return Flavor::harmonic;
  if (s == "shuffle") return Flavor::shuffle;
  if (s == "head") return Flavor::head;
  if (s == "tail") return Flavor::tail;
  if ((s == "oy" || s == "li") && !is_star) return Flavor::ono_yamamoto;
  throw std::invalid_argument("unknown flavor '" + std::string(name) + "'");
}

namespace {

// inv_pow[n] = n^{-k} for 1 <= n < p.
std::vector<std::uint64_t> inverse_powers(const Ring& ring, int k) {
  std::vector<std::uint64_t> out(ring.p, 0);
  for (std::uint64_t j = 1; j < ring.p; ++j) out[j] = ring.pow(ring.inv(j), static_cast<std::uint64_t>(k));
  return out;
}

void check_arity(const Index& k, std::span<const std::uint64_t> args) {
  if (args.size() != static_cast<std::size_t>(k.depth())) {
    throw std::invalid_argument("expected " + std::to_string(k.depth()) + " arguments, got " +
                                std::to_string(args.size()));
  }
}

}  // namespace

Residue nested_sum(const Ring& ring, const Index& k, std::span<const std::uint64_t> args, bool star, SumKind kind) {
  check_arity(k, args);
  const std::size_t P = ring.p;
  const int m = k.depth();
  // f[n] is the sum over the levels i..m-1 with n_i = n.
  std::vector<std::uint64_t> f(P, 0), next(P, 0);
  {
    auto ip = inverse_powers(ring, k[m - 1]);
    std::uint64_t tp = 1;
    for (std::size_t n = 1; n < P; ++n) {
      tp = ring.mul(tp, args[m - 1]);
      f[n] = ring.mul(ip[n], tp);
    }
  }
  for (int i = m - 2; i >= 0; --i) {
    auto ip = inverse_powers(ring, k[i]);
    const std::uint64_t t = args[i];
    if (kind == SumKind::harmonic) {
      std::uint64_t acc = 0, tp = 1;
      for (std::size_t n = 1; n < P; ++n) {
        if (star) acc = ring.add(acc, f[n]);
        tp = ring.mul(tp, t);
        next[n] = ring.mul(ring.mul(ip[n], tp), acc);
        if (!star) acc = ring.add(acc, f[n]);
      }
    } else {
      // g(n) = sum_{n' < n} t^{n-n'} f(n'), or n' <= n for star.
      std::uint64_t g = 0;
      for (std::size_t n = 1; n < P; ++n) {
        if (star) {
          g = ring.add(ring.mul(t, g), f[n]);
        } else if (n > 1) {
          g = ring.mul(t, ring.add(g, f[n - 1]));
        }
        next[n] = ring.mul(ip[n], g);
      }
    }
    std::swap(f, next);
  }
  std::uint64_t total = 0;
  for (std::size_t n = 1; n < P; ++n) total = ring.add(total, f[n]);
  return {ring, total};
}

namespace {

struct Enumerator {
  const Ring& ring;
  const Index& k;
  std::span<const std::uint64_t> args;
  bool star;
  SumKind kind;
  std::vector<std::vector<std::uint64_t>> ip;  // ip[i][n] = n^{-k_i}
  std::vector<std::vector<std::uint64_t>> tp;  // tp[i][e] = t_i^e
  std::uint64_t total = 0;

  void run() {
    const int m = k.depth();
    for (int i = 0; i < m; ++i) {
      ip.push_back(inverse_powers(ring, k[i]));
      std::vector<std::uint64_t> pw(ring.p, 0);
      pw[0] = 1 % ring.m;
      for (std::size_t e = 1; e < ring.p; ++e) pw[e] = ring.mul(pw[e - 1], args[i]);
      tp.push_back(std::move(pw));
    }
    for (std::uint64_t n1 = 1; n1 < ring.p; ++n1) {
      std::uint64_t w = ring.mul(ip[0][n1], kind == SumKind::harmonic || m == 1 ? tp[0][n1] : 1);
      descend(1, n1, w);
    }
  }

  // prev is n_{i}, prod covers levels < i (for shuffle the factor t_{i-1}^{n_{i-1}-n_i}
  // is applied when n_i is chosen).
  void descend(int i, std::uint64_t prev, std::uint64_t prod) {
    const int m = k.depth();
    if (i == m) {
      total = ring.add(total, prod);
      return;
    }
    const std::uint64_t hi = star ? prev : prev - 1;
    for (std::uint64_t n = 1; n <= hi; ++n) {
      std::uint64_t w = ring.mul(prod, ip[i][n]);
      if (kind == SumKind::harmonic) {
        w = ring.mul(w, tp[i][n]);
      } else {
        w = ring.mul(w, tp[i - 1][prev - n]);
        if (i == m - 1) w = ring.mul(w, tp[i][n]);
      }
      descend(i + 1, n, w);
    }
  }
};

}  // namespace

Residue nested_sum_naive(const Ring& ring, const Index& k, std::span<const std::uint64_t> args, bool star,
                         SumKind kind) {
  check_arity(k, args);
  Enumerator e{ring, k, args, star, kind, {}, {}, 0};
  e.run();
  return {ring, e.total};
}

Residue mhs(const Index& k, std::uint32_t p, int n, bool star) {
  Ring ring(p, n);
  std::vector<std::uint64_t> ones(static_cast<std::size_t>(k.depth()), 1 % ring.m);
  return nested_sum(ring, k, ones, star, SumKind::harmonic);
}

namespace {

std::vector<std::uint64_t> reduce_args(const Ring& ring, const std::vector<Rational>& args) {
  std::vector<std::uint64_t> out;
  out.reserve(args.size());
  for (const auto& a : args) {
    if (a != 0 && mpz_divisible_ui_p(a.get_num().get_mpz_t(), ring.p)) {
      throw NonUnit("argument " + a.get_str() + " is not a unit mod " + std::to_string(ring.p));
    }
    out.push_back(ring.from_rational(a));
  }
  return out;
}

std::vector<std::uint64_t> one_var_args(const Ring& ring, int depth, std::uint64_t t, End end) {
  std::vector<std::uint64_t> args(static_cast<std::size_t>(depth), 1 % ring.m);
  if (end == End::head) {
    args.front() = t;
  } else {
    args.back() = t;
  }
  return args;
}

}  // namespace

Residue fmp_multi(const EvalRequest& req) {
  Ring ring(req.p, req.n);
  if (req.index.depth() > 3 && req.p > 101) {
    throw std::domain_error("direct enumeration refused for depth > 3 at p > 101");
  }
  switch (req.flavor) {
    case Flavor::zeta: {
      std::vector<std::uint64_t> ones(static_cast<std::size_t>(req.index.depth()), 1 % ring.m);
      return nested_sum_naive(ring, req.index, ones, req.star, SumKind::harmonic);
    }
    case Flavor::harmonic:
    case Flavor::shuffle: {
      auto args = reduce_args(ring, req.args);
      return nested_sum_naive(ring, req.index, args, req.star,
                              req.flavor == Flavor::harmonic ? SumKind::harmonic : SumKind::shuffle);
    }
    case Flavor::head:
    case Flavor::tail:
      if (req.args.size() != 1) throw std::invalid_argument("one-variable form takes one argument");
      return fmp_one_var(req.index, req.args[0], req.p, req.n, req.star,
                         req.flavor == Flavor::head ? End::head : End::tail);
    case Flavor::ono_yamamoto: {
      if (req.args.size() != 1) throw std::invalid_argument("li takes one argument");
      auto t = reduce_args(ring, req.args);
      return oy_li_naive(ring, req.index, t[0]);
    }
  }
  throw std::logic_error("unreachable");
}

Residue fmp_one_var(const Index& k, const Rational& t, std::uint32_t p, int n, bool star, End end) {
  Ring ring(p, n);
  auto tv = reduce_args(ring, {t});
  auto args = one_var_args(ring, k.depth(), tv[0], end);
  return nested_sum_naive(ring, k, args, star, SumKind::harmonic);
}

Residue fast_nested_eval(const Index& k, const Rational& t, std::uint32_t p, int n, bool star, End end) {
  Ring ring(p, n);
  auto tv = reduce_args(ring, {t});
  auto args = one_var_args(ring, k.depth(), tv[0], end);
  return nested_sum(ring, k, args, star, SumKind::harmonic);
}

Residue evaluate(const EvalRequest& req) {
  Ring ring(req.p, req.n);
  switch (req.flavor) {
    case Flavor::zeta:
      if (!req.args.empty()) throw std::invalid_argument("zeta takes no arguments");
      return mhs(req.index, req.p, req.n, req.star);
    case Flavor::harmonic:
    case Flavor::shuffle: {
      auto args = reduce_args(ring, req.args);
      return nested_sum(ring, req.index, args, req.star,
                        req.flavor == Flavor::harmonic ? SumKind::harmonic : SumKind::shuffle);
    }
    case Flavor::head:
    case Flavor::tail:
      if (req.args.size() != 1) throw std::invalid_argument("one-variable form takes one argument");
      return fast_nested_eval(req.index, req.args[0], req.p, req.n, req.star,
                              req.flavor == Flavor::head ? End::head : End::tail);
    case Flavor::ono_yamamoto: {
      if (req.args.size() != 1) throw std::invalid_argument("li takes one argument");
      if (req.star) throw std::invalid_argument("li has no star version");
      auto t = reduce_args(ring, req.args);
      return oy_li(ring, req.index, t[0]);
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace fpl
