#include "fpl/polyid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "fpl/exact.hpp"

namespace fpl {

namespace {

constexpr int kMaxN = 6;
constexpr int kMaxWeight = 5;
constexpr int kMaxSmallN = 10;

// Calls fn(n) for N >= n_1 >= ... >= n_len >= 1, or with strict inequalities.
void for_each_chain(int N, int len, bool strict, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> n(static_cast<std::size_t>(len));
  std::function<void(int, int)> rec = [&](int i, int hi) {
    if (i == len) {
      fn(n);
      return;
    }
    for (int v = 1; v <= hi; ++v) {
      n[static_cast<std::size_t>(i)] = v;
      rec(i + 1, strict ? v - 1 : v);
    }
  };
  rec(0, N);
}

Rational inv_prod(const std::vector<int>& n, const std::vector<int>& k) {
  Integer d = 1;
  for (std::size_t i = 0; i < n.size(); ++i) {
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(n[i]), static_cast<unsigned long>(k[i]));
    d *= pw;
  }
  return Rational(Integer(1), d);
}

Rational sign_binom(int N, int n) {
  Rational r(binomial(N, n));
  return n % 2 ? Rational(-r) : r;
}

std::vector<std::string> t_names(int m) {
  std::vector<std::string> out;
  for (int i = 1; i <= m; ++i) out.push_back("t" + std::to_string(i));
  return out;
}

// Caches (1 - x)^e for each variable.
class PowerCache {
 public:
  explicit PowerCache(const MultiPoly& like) : like_(like) {}
  const MultiPoly& one_minus_pow(const std::string& x, int e) {
    auto key = std::make_pair(x, e);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    MultiPoly base = MultiPoly::constant(like_, 1) - MultiPoly::variable(like_, x);
    return cache_.emplace(key, base.pow(static_cast<unsigned>(e))).first->second;
  }

 private:
  MultiPoly like_;
  std::map<std::pair<std::string, int>, MultiPoly> cache_;
};

// sum_{N >= n_1 >= ... >= n_W >= 1} [(-1)^{n_1} C(N, n_1)]
//   prod_{i<r} (1-u_i)^{n_{L_i} - n_{L_i+1}} {(1-u_r)^{n_W} - 1} / (n_1 ... n_W)
// with L_i = kappa_1 + ... + kappa_i.
MultiPoly dual_side(const MultiPoly& like, PowerCache& pc, const std::vector<int>& kappa,
                    const std::vector<std::string>& u, bool binom, int N) {
  const int r = static_cast<int>(kappa.size());
  std::vector<int> L;
  int acc = 0;
  for (int x : kappa) L.push_back(acc += x);
  const int W = acc;
  std::map<std::vector<int>, Rational> pattern;
  std::vector<int> ones(static_cast<std::size_t>(W), 1);
  for_each_chain(N, W, false, [&](const std::vector<int>& n) {
    std::vector<int> e(static_cast<std::size_t>(r));
    for (int i = 0; i + 1 < r; ++i) e[i] = n[L[i] - 1] - n[L[i]];
    e[r - 1] = n[W - 1];
    Rational c = inv_prod(n, ones);
    if (binom) c *= sign_binom(N, n[0]);
    pattern[e] += c;
  });
  MultiPoly out(like.var_ptr());
  for (const auto& [e, c] : pattern) {
    if (c == 0) continue;
    MultiPoly term = pc.one_minus_pow(u[r - 1], e[r - 1]) - MultiPoly::constant(like, 1);
    for (int i = 0; i + 1 < r; ++i) term *= pc.one_minus_pow(u[i], e[i]);
    out += term * c;
  }
  return out;
}

// sum_{N >= n_1 >(=) ... >(=) n_len >= 1} c(n) * t^{exps(n)} / prod n_i^{k_i}
MultiPoly monomial_sum(const MultiPoly& like, const std::vector<int>& k, bool strict, int N,
                       const std::function<std::vector<int>(const std::vector<int>&)>& exps,
                       const std::function<Rational(const std::vector<int>&)>& coef) {
  MultiPoly out(like.var_ptr());
  for_each_chain(N, static_cast<int>(k.size()), strict, [&](const std::vector<int>& n) {
    out.add_term(exps(n), coef(n) * inv_prod(n, k));
  });
  return out;
}

std::vector<int> sub_parts(const Index& k, int from, int to) {  // k_from..k_to, 1-based inclusive
  return std::vector<int>(k.parts().begin() + (from - 1), k.parts().begin() + to);
}

template <class T>
std::vector<T> reversed(std::vector<T> v) {
  std::reverse(v.begin(), v.end());
  return v;
}

const Index& need_index(const PolyParams& pp) {
  if (!pp.k) throw std::invalid_argument("identity needs an index");
  if (pp.k->weight() > kMaxWeight) throw std::domain_error("weight above 5 is outside the supported range");
  return *pp.k;
}

void need_N(const PolyParams& pp) {
  if (pp.N < 1 || pp.N > kMaxN) throw std::domain_error("N must lie in 1..6");
}

MultiPoly shuffle_pair(const PolyParams& pp, Side side, bool binom_left) {
  const Index& k = need_index(pp);
  need_N(pp);
  const int m = k.depth(), N = pp.N;
  MultiPoly like(t_names(m));
  if (side == Side::lhs) {
    return monomial_sum(
        like, k.parts(), false, N,
        [m](const std::vector<int>& n) {
          std::vector<int> e(static_cast<std::size_t>(m));
          for (int i = 0; i + 1 < m; ++i) e[i] = n[i] - n[i + 1];
          e[m - 1] = n[m - 1];
          return e;
        },
        [&](const std::vector<int>& n) { return binom_left ? sign_binom(N, n[0]) : Rational(1); });
  }
  PowerCache pc(like);
  return dual_side(like, pc, k.parts(), t_names(m), !binom_left, N);
}

// exponents of (t_1/t_2)^{n_1} ... (t_j/t_{j+1})^{n_j} inside m variables
std::vector<int> ratio_exps(const std::vector<int>& n, int m) {
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (std::size_t i = 0; i < n.size(); ++i) {
    e[i] += n[i];
    if (i + 1 < static_cast<std::size_t>(m)) e[i + 1] -= n[i];
  }
  return e;
}

MultiPoly ratio_pair(const PolyParams& pp, Side side, bool binom_left) {
  const Index& k = need_index(pp);
  need_N(pp);
  const int m = k.depth(), N = pp.N;
  std::vector<bool> laurent(static_cast<std::size_t>(m), true);
  laurent[0] = false;
  MultiPoly like(t_names(m), laurent);
  if (side == Side::lhs) {
    // (t_1/t_2)^{n_1} ... (t_{m-1}/t_m)^{n_{m-1}} t_m^{n_m}
    return monomial_sum(
        like, k.parts(), true, N, [m](const std::vector<int>& n) { return ratio_exps(n, m); },
        [&](const std::vector<int>& n) { return binom_left ? sign_binom(N, n[m - 1]) : Rational(1); });
  }
  PowerCache pc(like);
  auto names = t_names(m);
  MultiPoly out = dual_side(like, pc, reversed(k.parts()), reversed(names), !binom_left, N);
  if ((m - 1) % 2) out = -out;
  for (int j = 1; j <= m - 1; ++j) {
    MultiPoly head = monomial_sum(
        like, sub_parts(k, 1, j), true, N, [m](const std::vector<int>& n) { return ratio_exps(n, m); },
        [](const std::vector<int>&) { return Rational(1); });
    std::vector<std::string> tail_vars(names.begin() + j, names.end());
    MultiPoly tail = dual_side(like, pc, reversed(sub_parts(k, j + 1, m)), reversed(tail_vars), !binom_left, N);
    MultiPoly prod = head * tail;
    if ((m - j - 1) % 2) prod = -prod;
    out += prod;
  }
  return out;
}

MultiPoly fneq(const PolyParams& pp, Side side) {
  const Index& k = need_index(pp);
  need_N(pp);
  const int m = k.depth(), N = pp.N;
  MultiPoly like(t_names(m));
  auto one = [](const std::vector<int>&) { return Rational(1); };
  // strict sum over k_1..k_j with variables t_1..t_j
  auto strict_head = [&](int j) {
    return monomial_sum(
        like, sub_parts(k, 1, j), true, N,
        [m](const std::vector<int>& n) {
          std::vector<int> e(static_cast<std::size_t>(m), 0);
          for (std::size_t i = 0; i < n.size(); ++i) e[i] = n[i];
          return e;
        },
        one);
  };
  // star sum over (k_m, ..., k_{j+1}) with variables t_m, ..., t_{j+1}
  auto star_tail = [&](int j) {
    return monomial_sum(
        like, reversed(sub_parts(k, j + 1, m)), false, N,
        [m](const std::vector<int>& n) {
          std::vector<int> e(static_cast<std::size_t>(m), 0);
          for (std::size_t i = 0; i < n.size(); ++i) e[static_cast<std::size_t>(m) - 1 - i] = n[i];
          return e;
        },
        one);
  };
  if (side == Side::lhs) {
    MultiPoly out = strict_head(m);
    return (m - 1) % 2 ? -out : out;
  }
  MultiPoly out = star_tail(0);
  for (int j = 1; j <= m - 1; ++j) {
    MultiPoly prod = strict_head(j) * star_tail(j);
    out += j % 2 ? -prod : prod;
  }
  return out;
}

MultiPoly substituted(const PolyParams& pp, Side side) {
  const Index& k = need_index(pp);
  need_N(pp);
  const int m = k.depth(), N = pp.N;
  if (m == 1 ? pp.subset != 0 : (pp.subset >> (m - 1)) != 0) {
    throw std::domain_error("subset must lie inside {1, ..., m-1}");
  }
  auto names = t_names(m);
  MultiPoly like(names);
  auto in_s = [&](int i) { return (pp.subset >> (i - 1)) & 1U; };
  if (side == Side::lhs) {
    MultiPoly out = shuffle_pair(pp, Side::lhs, true);
    for (int i = 1; i < m; ++i) {
      if (in_s(i)) out = out.subst(names[static_cast<std::size_t>(i - 1)], Rational(1));
    }
    return out;
  }
  // kappa cuts k after each i in S; k' = kappa dual
  std::vector<int> kappa;
  int run = 0;
  for (int i = 1; i <= m; ++i) {
    run += k[i - 1];
    if (i == m || in_s(i)) {
      kappa.push_back(run);
      run = 0;
    }
  }
  Index kd = hoffman_dual(Index(kappa));
  std::vector<int> l;
  int acc = 0;
  for (int x : k.parts()) l.push_back(acc += x);
  // complement j_1 < ... < j_h' inside {1..m-1}; (1 - t_{j_i}) sits at block L_i
  std::vector<std::pair<int, int>> slots;  // (L_i, j_i)
  int i = 0;
  for (int j = 1; j < m; ++j) {
    if (in_s(j)) continue;
    ++i;
    slots.push_back({l[j - 1] - j + i, j});
  }
  const int mp = kd.depth();
  std::map<std::vector<int>, Rational> pattern;
  for_each_chain(N, mp, false, [&](const std::vector<int>& n) {
    std::vector<int> e;
    for (auto [L, j] : slots) e.push_back(n[L - 1] - n[L]);
    e.push_back(n[mp - 1]);
    pattern[e] += inv_prod(n, kd.parts());
  });
  PowerCache pc(like);
  MultiPoly out(like.var_ptr());
  for (const auto& [e, c] : pattern) {
    MultiPoly term = pc.one_minus_pow(names[m - 1], e.back()) - MultiPoly::constant(like, 1);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      term *= pc.one_minus_pow(names[static_cast<std::size_t>(slots[s].second - 1)], e[s]);
    }
    out += term * c;
  }
  return out;
}

MultiPoly hoffman_one_var(const PolyParams& pp, Side side) {
  const Index& k = need_index(pp);
  need_N(pp);
  const int N = pp.N;
  MultiPoly like(std::vector<std::string>{"t"});
  if (side == Side::lhs) {
    const int m = k.depth();
    return monomial_sum(
        like, k.parts(), false, N, [m](const std::vector<int>& n) { return std::vector<int>{n[m - 1]}; },
        [N](const std::vector<int>& n) { return sign_binom(N, n[0]); });
  }
  Index kd = hoffman_dual(k);
  PowerCache pc(like);
  MultiPoly out(like.var_ptr());
  std::map<int, Rational> pattern;
  for_each_chain(N, kd.depth(), false,
                 [&](const std::vector<int>& n) { pattern[n.back()] += inv_prod(n, kd.parts()); });
  for (const auto& [e, c] : pattern) out += (pc.one_minus_pow("t", e) - MultiPoly::constant(like, 1)) * c;
  return out;
}

void need_small_n(int n) {
  if (n < 1 || n > kMaxSmallN) throw std::domain_error("n must lie in 1..10");
}

MultiPoly small_identity(const std::string& id, const PolyParams& pp, Side side) {
  const bool lhs = side == Side::lhs;
  if (id == "op-i.monomial" || id == "op-i.shifted") {
    need_small_n(pp.n);
    MultiPoly like(std::vector<std::string>{"t"});
    PowerCache pc(like);
    auto one = MultiPoly::constant(like, 1);
    if (id == "op-i.monomial") {
      MultiPoly f = MultiPoly::variable(like, "t", pp.n);
      return lhs ? op_I(f, "t") : f * Rational(1, pp.n);
    }
    if (lhs) return op_I(pc.one_minus_pow("t", pp.n) - one, "t");
    MultiPoly out(like.var_ptr());
    for (int j = 1; j <= pp.n; ++j) out += (pc.one_minus_pow("t", j) - one) * Rational(1, j);
    return out;
  }
  if (id == "op-jstar.monomial" || id == "op-jstar.shifted") {
    need_small_n(pp.n);
    MultiPoly like(std::vector<std::string>{"t", "s"});
    PowerCache pc(like);
    auto one = MultiPoly::constant(like, 1);
    if (id == "op-jstar.monomial") {
      if (lhs) return op_J_star(MultiPoly::variable(like, "t", pp.n), "t", "s");
      MultiPoly out(like.var_ptr());
      for (int j = 1; j <= pp.n; ++j) out.add_term({pp.n - j, j}, Rational(1, j));
      return out;
    }
    if (lhs) return op_J_star(pc.one_minus_pow("t", pp.n) - one, "t", "s");
    MultiPoly out(like.var_ptr());
    for (int j = 1; j <= pp.n; ++j) {
      out += pc.one_minus_pow("t", pp.n - j) * (pc.one_minus_pow("s", j) - one) * Rational(1, j);
    }
    return out;
  }
  if (id == "op-jn.monomial" || id == "op-jn.shifted") {
    need_N(pp);
    need_small_n(pp.n);
    if (id == "op-jn.shifted" && pp.n > pp.N) throw std::domain_error("op-jn.shifted needs n <= N");
    MultiPoly like(std::vector<std::string>{"t", "s"}, {true, false});
    PowerCache pc(like);
    auto one = MultiPoly::constant(like, 1);
    if (id == "op-jn.monomial") {
      if (lhs) return op_J_N(MultiPoly::variable(like, "t", pp.n), "t", "s", pp.N);
      MultiPoly out(like.var_ptr());
      for (int j = pp.n + 1; j <= pp.N; ++j) out.add_term({pp.n - j, j}, Rational(1, j));
      return out;
    }
    MultiPoly f = pc.one_minus_pow("t", pp.n) - one;
    if (lhs) return op_J_N(f, "t", "s", pp.N);
    MultiPoly out(like.var_ptr());
    for (int j = 1; j <= pp.n; ++j) {
      out -= pc.one_minus_pow("t", pp.n - j) * (pc.one_minus_pow("s", j) - one) * Rational(1, j);
    }
    MultiPoly series(like.var_ptr());
    for (int j = 1; j <= pp.N; ++j) series.add_term({-j, j}, Rational(1, j));
    out += series * f;
    return out;
  }
  if (id == "start.1" || id == "start.2") {
    need_N(pp);
    const int N = pp.N;
    MultiPoly like(std::vector<std::string>{"t"});
    PowerCache pc(like);
    auto one = MultiPoly::constant(like, 1);
    MultiPoly out(like.var_ptr());
    const bool first = id == "start.1";
    for (int n = 1; n <= N; ++n) {
      if (lhs == first) {
        Rational c = (first ? sign_binom(N, n) : Rational(1)) / n;
        out.add_term({n}, c);
      } else {
        Rational c = (first ? Rational(1) : sign_binom(N, n)) / n;
        out += (pc.one_minus_pow("t", n) - one) * c;
      }
    }
    return out;
  }
  if (id == "binomial.double") {
    if (pp.n < 0 || pp.n > kMaxSmallN || pp.j < 0 || pp.j > pp.n) {
      throw std::domain_error("binomial.double needs 0 <= j <= n <= 10");
    }
    MultiPoly like(std::vector<std::string>{"t"});
    MultiPoly out(like.var_ptr());
    if (lhs) {
      for (int k = pp.j; k <= pp.n; ++k) out.add_term({k}, Rational(binomial(pp.n, k) * binomial(k, pp.j)));
      return out;
    }
    MultiPoly onept = MultiPoly::constant(like, 1) + MultiPoly::variable(like, "t");
    return MultiPoly::variable(like, "t", pp.j) * onept.pow(static_cast<unsigned>(pp.n - pp.j)) *
           Rational(binomial(pp.n, pp.j));
  }
  throw std::invalid_argument("unknown polynomial identity '" + id + "'");
}

}  // namespace

const std::vector<PolyIdentityInfo>& poly_identities() {
  static const std::vector<PolyIdentityInfo> list = {
      {"euler", "sum_{n=1}^N (-1)^{n-1} C(N,n)/n = H_N", false, false, false, false},
      {"shuffle.binomial", "binomial-weighted shuffle sum = dual (1-t) sum", true, false, false, false},
      {"shuffle.dual-binomial", "shuffle sum = binomial-weighted dual (1-t) sum", true, false, false, false},
      {"ratio.binomial", "binomial-weighted strict ratio sum = alternating dual products", true, false, false, false},
      {"ratio.dual-binomial", "strict ratio sum = alternating binomial-weighted dual products", true, false, false, false},
      {"fneq", "(-1)^{m-1} strict sum = reversed star sum + alternating products", true, false, false, false},
      {"shuffle.substituted", "shuffle.binomial with t_i = 1 for i in S, over the dual of the merged index", true, true, false,
       false},
      {"hoffman.one-var", "one-variable Hoffman identity", true, false, false, false},
      {"op-i.monomial", "I_t(t^n) = t^n/n", false, false, true, false},
      {"op-i.shifted", "I_t((1-t)^n - 1) = sum_j ((1-t)^j - 1)/j", false, false, true, false},
      {"op-jstar.monomial", "J*_{t,s}(t^n) = sum_j t^{n-j} s^j / j", false, false, true, false},
      {"op-jstar.shifted", "J*_{t,s}((1-t)^n - 1) = sum_j (1-t)^{n-j} ((1-s)^j - 1)/j", false, false, true, false},
      {"start.1", "sum (-1)^n C(N,n) t^n/n = sum ((1-t)^n - 1)/n", false, false, false, false},
      {"start.2", "sum t^n/n = sum (-1)^n C(N,n) ((1-t)^n - 1)/n", false, false, false, false},
      {"binomial.double", "sum_k C(n,k) C(k,j) t^k = C(n,j) t^j (1+t)^{n-j}", false, false, true, true},
      {"op-jn.monomial", "J^N_{t,s}(t^n) = sum_{j=n+1}^N s^j t^{n-j} / j", false, false, true, false},
      {"op-jn.shifted", "J^N_{t,s}((1-t)^n - 1) closed form, n <= N", false, false, true, false},
  };
  return list;
}

const PolyIdentityInfo& poly_identity(const std::string& id) {
  for (const auto& info : poly_identities()) {
    if (info.id == id) return info;
  }
  throw std::invalid_argument("unknown polynomial identity '" + id + "'");
}

MultiPoly build_side(const std::string& id, Side side, const PolyParams& pp) {
  if (id == "euler") {
    need_N(pp);
    MultiPoly like(std::vector<std::string>{"t"});
    Rational c = 0;
    if (side == Side::lhs) {
      for (int n = 1; n <= pp.N; ++n) c -= sign_binom(pp.N, n) / n;
    } else {
      c = harmonic(pp.N);
    }
    return MultiPoly::constant(like, c);
  }
  if (id == "shuffle.binomial") return shuffle_pair(pp, side, true);
  if (id == "shuffle.dual-binomial") return shuffle_pair(pp, side, false);
  if (id == "ratio.binomial") return ratio_pair(pp, side, true);
  if (id == "ratio.dual-binomial") return ratio_pair(pp, side, false);
  if (id == "fneq") return fneq(pp, side);
  if (id == "shuffle.substituted") return substituted(pp, side);
  if (id == "hoffman.one-var") return hoffman_one_var(pp, side);
  return small_identity(id, pp, side);
}

bool verify_poly_identity(const std::string& id, const PolyParams& params) {
  return build_side(id, Side::lhs, params) == build_side(id, Side::rhs, params);
}

std::vector<PolyParams> poly_parameter_grid(const std::string& id, int max_weight, int max_N) {
  const PolyIdentityInfo& info = poly_identity(id);
  std::vector<PolyParams> out;
  if (info.uses_index) {
    for (int w = 1; w <= max_weight; ++w) {
      for (const Index& k : compositions(w)) {
        for (int N = 1; N <= max_N; ++N) {
          const unsigned subsets = info.uses_subset ? (1U << (k.depth() - 1)) : 1U;
          for (unsigned s = 0; s < subsets; ++s) out.push_back({N, k, s, 1, 0});
        }
      }
    }
    return out;
  }
  if (id == "binomial.double") {
    for (int n = 0; n <= max_N; ++n) {
      for (int j = 0; j <= n; ++j) out.push_back({1, std::nullopt, 0, n, j});
    }
    return out;
  }
  if (id == "op-jn.monomial" || id == "op-jn.shifted") {
    for (int N = 1; N <= max_N; ++N) {
      const int top = id == "op-jn.monomial" ? N + 1 : N;
      for (int n = 1; n <= top; ++n) out.push_back({N, std::nullopt, 0, n, 0});
    }
    return out;
  }
  if (info.uses_n) {
    for (int n = 1; n <= max_N; ++n) out.push_back({1, std::nullopt, 0, n, 0});
    return out;
  }
  for (int N = 1; N <= max_N; ++N) out.push_back({N, std::nullopt, 0, 1, 0});
  return out;
}

std::string describe(const std::string& id, const PolyParams& pp) {
  const PolyIdentityInfo& info = poly_identity(id);
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += ',';
    out += s;
  };
  if (info.uses_index && pp.k) add("k=" + pp.k->str());
  if (info.uses_subset) {
    std::string s = "{";
    bool first = true;
    for (int i = 1; i <= 31; ++i) {
      if ((pp.subset >> (i - 1)) & 1U) {
        if (!first) s += ' ';
        s += std::to_string(i);
        first = false;
      }
    }
    add("S=" + s + "}");
  }
  if (info.uses_n) add("n=" + std::to_string(pp.n));
  if (info.uses_j) add("j=" + std::to_string(pp.j));
  if (!(info.uses_n && !(id == "op-jn.monomial" || id == "op-jn.shifted"))) add("N=" + std::to_string(pp.N));
  return out;
}

}  // namespace fpl
