// Functional equations: the shuffle-type relation in t_1..t_m and its
// substitutions, Hoffman-type relations, star/non-star conversions and the
// distribution formulas for {1}^m.

#include "registry_util.hpp"

namespace fpl::registry_detail {

namespace {

using Span = std::span<const Residue>;

Index prepend_one(const Index& k) { return concat(Index{1}, k); }
Index bump_first(const Index& k) { return oplus(k, unit_index(1, k.depth())); }

// Left-hand side shared by the shuffle relation and its substitutions:
// Lsh*_k(t) + p (Lsh*_{(1,k)}(1,t) - Lsh*_{k + e_1}(t)).
Residue mt_lhs(const EvalContext& c, const Index& k, Span t) {
  Args pre(c);
  pre.put(c.one());
  for (const auto& x : t) pre.put(x);
  Residue corr = c.shuffle(prepend_one(k), pre, true) - c.shuffle(bump_first(k), t, true);
  return c.shuffle(k, t, true) + c.pp() * corr;
}

// {1}^{k_1-1}, 1-t_1, ..., {1}^{k_m-1}, 1-t_m, with the last slot optionally 1.
Residue mt_rhs(const EvalContext& c, const Index& k, Span t) {
  Args a(c), b(c);
  const int m = k.depth();
  for (int i = 0; i < m; ++i) {
    a.ones(k[static_cast<std::size_t>(i)] - 1).put(c.one() - t[static_cast<std::size_t>(i)]);
    if (i + 1 < m) {
      b.ones(k[static_cast<std::size_t>(i)] - 1).put(c.one() - t[static_cast<std::size_t>(i)]);
    } else {
      b.ones(k[static_cast<std::size_t>(i)]);
    }
  }
  Index all = ones(k.weight());
  return c.shuffle(all, a, true) - c.shuffle(all, b, true);
}

bool in_subset(const Params& p, int i) { return (p["S"] >> (i - 1)) & 1L; }

// Free variables after substituting t_i = 1 for i in S.
std::vector<int> free_slots(const Params& p) {
  std::vector<int> out;
  for (int j = 1; j <= p.index().depth(); ++j) {
    if (j == p.index().depth() || !in_subset(p, j)) out.push_back(j);
  }
  return out;
}

Residue mtb_lhs(const EvalContext& c, const Params& p, Span free) {
  const Index& k = p.index();
  std::vector<Residue> t(static_cast<std::size_t>(k.depth()), c.one());
  auto slots = free_slots(p);
  for (std::size_t s = 0; s < slots.size(); ++s) t[static_cast<std::size_t>(slots[s] - 1)] = free[s];
  return mt_lhs(c, k, t);
}

// kappa ends a block at every i in S (and at m); the right side lives on its dual
// with 1 - t_{j_i} at position (k_1 + ... + k_{j_i}) - j_i + i.
Residue mtb_rhs(const EvalContext& c, const Params& p, Span free) {
  const Index& k = p.index();
  const int m = k.depth();
  std::vector<int> kappa;
  int run = 0;
  for (int i = 1; i <= m; ++i) {
    run += k[static_cast<std::size_t>(i - 1)];
    if (i == m || in_subset(p, i)) {
      kappa.push_back(run);
      run = 0;
    }
  }
  Index kd = hoffman_dual(Index(kappa));
  const int mp = kd.depth();
  std::vector<Residue> a(static_cast<std::size_t>(mp), c.one());
  int partial = 0, i = 0;
  std::size_t f = 0;
  for (int j = 1; j < m; ++j) {
    partial += k[static_cast<std::size_t>(j - 1)];
    if (in_subset(p, j)) continue;
    ++i;
    a[static_cast<std::size_t>(partial - j + i - 1)] = c.one() - free[f++];
  }
  std::vector<Residue> b = a;
  a.back() = c.one() - free[f];
  return c.shuffle(kd, a, true) - c.shuffle(kd, b, true);
}

// Sum_{j=0}^{m} (-1)^j A(k_1..k_j) B(k_m..k_{j+1}), empty factors being 1.
template <class F, class G>
Residue antipode_sum(const EvalContext& c, const Index& k, F first, G second) {
  const int m = k.depth();
  Residue total = c.zero();
  for (int j = 0; j <= m; ++j) {
    Residue a = j == 0 ? c.one() : first(slice(k, 1, j), j);
    Residue b = j == m ? c.one() : second(reverse(slice(k, j + 1, m)), j);
    total += c.R(sgn(j)) * a * b;
  }
  return total;
}

const char* suffix(int n) { return n == 1 ? "mod-p" : n == 2 ? "mod-p2" : "mod-p3"; }

// The mod p^2 relations use p | H_{p-1}, which fails at p = 2.
Guard odd_prime(const Params&) { return above(2); }

void add_shuffle_relations(std::vector<IdentityEntry>& out) {
  auto depth = [](const Params& p) { return p.index().depth(); };
  out.push_back(functional({"fneq.shuffle", "fneq", "shuffle-type sum in t_1..t_m against {1}^w at 1 - t_i", "p > 2",
                            2, 199, index_grid(1, 4), odd_prime},
                           depth, [](auto& c, auto& p, Span t) { return mt_lhs(c, p.index(), t); },
                           [](auto& c, auto& p, Span t) { return mt_rhs(c, p.index(), t); }));

  std::vector<Params> subst;
  for (const auto& base : index_grid(2, 5)) {
    const long subsets = 1L << (base.index().depth() - 1);
    for (long s = 1; s < subsets; ++s) {
      Params q = base;
      q.values.emplace_back("S", s);
      subst.push_back(std::move(q));
    }
  }
  out.push_back(functional({"fneq.shuffle.substituted", "fneq", "shuffle-type relation with t_i = 1 for i in S",
                            "p > 2", 2, 199, subst, odd_prime},
                           [](const Params& p) { return static_cast<int>(free_slots(p).size()); }, mtb_lhs, mtb_rhs));

  auto one = [](const Params&) { return 1; };
  out.push_back(functional(
      {"fneq.hoffman.mod-p2", "fneq", "tail star form against the dual index at 1 - t", "p > 2", 2, 199,
       index_grid(1, 5), odd_prime},
      one,
      [](auto& c, auto& p, Span t) {
        const Index& k = p.index();
        Residue corr = c.tail(prepend_one(k), t[0], true) - c.tail(bump_first(k), t[0], true);
        return c.tail(k, t[0], true) + c.pp() * corr;
      },
      [](auto& c, auto& p, Span t) {
        Index kd = hoffman_dual(p.index());
        return c.tail(kd, c.one() - t[0], true) - c.zeta(kd, true);
      }));
  out.push_back(closed_form_eval(
      {"fneq.hoffman-zhao", "fneq", "zeta*_A2(k) plus a p-correction against the dual", "p > 2", 2, 199,
       index_grid(1, 6), odd_prime},
      [](auto& c, auto& p, Span) {
        const Index& k = p.index();
        return c.zeta(k, true) + c.pp() * (c.zeta(prepend_one(k), true) - c.zeta(bump_first(k), true));
      },
      [](auto& c, auto& p, Span) { return -c.zeta(hoffman_dual(p.index()), true); }));
  out.push_back(functional(
      {"fneq.hoffman", "fneq", "tail star form against the dual index at 1 - t", "all p", 1, 199, index_grid(1, 5),
       {}},
      one, [](auto& c, auto& p, Span t) { return c.tail(p.index(), t[0], true); },
      [](auto& c, auto& p, Span t) {
        Index kd = hoffman_dual(p.index());
        return c.tail(kd, c.one() - t[0], true) - c.zeta(kd, true);
      }));
}

void add_star_nonstar(std::vector<IdentityEntry>& out) {
  auto one = [](const Params&) { return 1; };
  auto depth = [](const Params& p) { return p.index().depth(); };
  for (int n : {1, 2, 3}) {
    out.push_back(functional(
        {std::string("fneq.nonstar-star.") + suffix(n), "fneq", "head form through the reversed tail star form",
         "all p", n, 199, index_grid(1, 5), {}},
        one,
        [](auto& c, auto& p, Span t) {
          const Index& k = p.index();
          return c.R(sgn(k.depth() - 1)) * c.head(k, t[0], false);
        },
        [](auto& c, auto& p, Span t) {
          const Index& k = p.index();
          const int m = k.depth();
          Residue r = c.tail(reverse(k), t[0], true);
          for (int j = 1; j < m; ++j) {
            r += c.R(sgn(j)) * c.head(slice(k, 1, j), t[0], false) * c.zeta(reverse(slice(k, j + 1, m)), true);
          }
          return r;
        }));
    out.push_back(functional(
        {std::string("fneq.nonstar-star.tail.") + suffix(n), "fneq", "tail form through the reversed head star form",
         "all p", n, 199, index_grid(1, 5), {}},
        one,
        [](auto& c, auto& p, Span t) {
          const Index& k = p.index();
          return c.R(sgn(k.depth() - 1)) * c.tail(k, t[0], false);
        },
        [](auto& c, auto& p, Span t) {
          const Index& k = p.index();
          const int m = k.depth();
          Residue r = c.head(reverse(k), t[0], true);
          for (int j = 1; j < m; ++j) {
            r += c.R(sgn(j)) * c.zeta(slice(k, 1, j), false) * c.head(reverse(slice(k, j + 1, m)), t[0], true);
          }
          return r;
        }));
    out.push_back(functional(
        {std::string("fneq.antipode.") + suffix(n), "fneq", "alternating product of harmonic sums vanishes", "all p",
         n, 199, index_grid(1, 4), {}},
        depth,
        [](auto& c, auto& p, Span t) {
          const Index& k = p.index();
          const int m = k.depth();
          return antipode_sum(
              c, k, [&](const Index& a, int j) { return c.harmonic(a, t.subspan(0, static_cast<std::size_t>(j)), false); },
              [&](const Index& b, int j) {
                std::vector<Residue> rt(t.rbegin(), t.rbegin() + (m - j));
                return c.harmonic(b, rt, true);
              });
        },
        [](auto& c, auto&, Span) { return c.zero(); }));
    out.push_back(closed_form_eval(
        {std::string("fneq.antipode.zeta.") + suffix(n), "fneq", "alternating product of zeta and zeta* vanishes",
         "all p", n, 199, index_grid(1, 6), {}},
        [](auto& c, auto& p, Span) {
          return antipode_sum(
              c, p.index(), [&](const Index& a, int) { return c.zeta(a, false); },
              [&](const Index& b, int) { return c.zeta(b, true); });
        },
        [](auto& c, auto&, Span) { return c.zero(); }));
  }

  auto tz = grid({"k", "m", "i"}, {{1, 6}, {1, 6}, {1, 6}},
                 [](const Params& p) { return p["k"] * p["m"] <= 6 && p["i"] <= p["m"]; });
  out.push_back(functional(
      {"fneq.single-variable.symmetric", "fneq", "{k}^m with one free slot against its mirror", "p > mk+1", 1, 199,
       tz, above_fn([](const Params& p) { return p["k"] * p["m"] + 1; })},
      one,
      [](auto& c, auto& p, Span t) {
        const long m = p["m"], i = p["i"];
        Index k = repeat(Index{static_cast<int>(p["k"])}, static_cast<int>(m));
        Args a(c), b(c);
        a.ones(i - 1).put(t[0]).ones(m - i);
        b.ones(m - i).put(t[0]).ones(i - 1);
        return c.harmonic(k, a, false) + c.R(sgn(m)) * c.harmonic(k, b, true);
      },
      [](auto& c, auto&, Span) { return c.zero(); }));
}

// Roots of unity for the distribution formulas.
std::vector<Residue> roots(const EvalContext& c, long n) {
  const std::uint32_t d = static_cast<std::uint32_t>(n < 0 ? -n : n);
  Residue z(c.ring(), element_of_order(c.p(), d));
  std::vector<Residue> out{c.one()};
  for (std::uint32_t k = 1; k < d; ++k) out.push_back(out.back() * z);
  return out;
}

Residue tpow(const EvalContext& c, const Residue& t, long n) { return n < 0 ? c.inv_arg(t).pow(-n) : t.pow(n); }

enum class DistKind { eg, d1, d2, d3, d4 };

Residue dist_lhs(const EvalContext& c, DistKind kind, long m, long n, const Residue& t) {
  Residue tn = tpow(c, t, n);
  switch (kind) {
    case DistKind::eg: return c.head(Index{static_cast<int>(m)}, tn, false);
    case DistKind::d1: return c.head(ones(static_cast<int>(m)), c.one() - tn, false);
    case DistKind::d2: return c.tail(ones(static_cast<int>(m)), c.inv_arg(c.one() - tn), false);
    case DistKind::d3: return c.head(ones(static_cast<int>(m)), c.inv_arg(c.one() - tn), true);
    case DistKind::d4: return c.tail(ones(static_cast<int>(m)), c.one() - tn, true);
  }
  return c.zero();
}

Residue dist_rhs(const EvalContext& c, DistKind kind, long m, long n, const Residue& t) {
  Residue tnp = tpow(c, t, n).pow(c.p());
  Residue total = c.zero();
  for (const auto& z : roots(c, n)) {
    Residue zt = z * t;
    Residue weight = (c.one() - tnp) * c.inv_arg(c.one() - zt.pow(c.p()));
    Index o = ones(static_cast<int>(m));
    switch (kind) {
      case DistKind::eg: total += weight * c.head(Index{static_cast<int>(m)}, zt, false); break;
      case DistKind::d1: total += weight * c.head(o, c.one() - zt, false); break;
      case DistKind::d2: total += c.tail(o, c.inv_arg(c.one() - zt), false); break;
      case DistKind::d3: total += c.head(o, c.inv_arg(c.one() - zt), true); break;
      case DistKind::d4: total += weight * c.tail(o, c.one() - zt, true); break;
    }
  }
  return c.R(n).pow(m - 1) * total;
}

void add_ones(std::vector<IdentityEntry>& out) {
  auto one = [](const Params&) { return 1; };
  auto mg = grid({"m"}, {{1, 6}});
  auto gt_m1 = above_fn([](const Params& p) { return p["m"] + 1; });
  out.push_back(functional(
      {"ones.tail-star", "ones", "tail star form of {1}^m through the depth-one head form", "p > m+1", 1, 199, mg,
       gt_m1},
      one, [](auto& c, auto& p, Span t) { return c.tail(ones(static_cast<int>(p["m"])), t[0], true); },
      [](auto& c, auto& p, Span t) { return c.head(Index{static_cast<int>(p["m"])}, c.one() - t[0], false); }));
  out.push_back(functional(
      {"ones.head", "ones", "head form of {1}^m through the depth-one head form", "p > m+1", 1, 199, mg, gt_m1}, one,
      [](auto& c, auto& p, Span t) { return c.head(ones(static_cast<int>(p["m"])), t[0], false); },
      [](auto& c, auto& p, Span t) {
        return c.R(sgn(p["m"] - 1)) * c.head(Index{static_cast<int>(p["m"])}, c.one() - t[0], false);
      }));
  out.push_back(functional(
      {"ones.reflection.tail", "ones", "tail form of {1}^m under t -> 1 - t", "p > m+1", 1, 199, mg, gt_m1}, one,
      [](auto& c, auto& p, Span t) { return c.tail(ones(static_cast<int>(p["m"])), t[0], false); },
      [](auto& c, auto& p, Span t) {
        return c.R(sgn(p["m"] - 1)) * c.tail(ones(static_cast<int>(p["m"])), c.one() - t[0], false);
      }));
  out.push_back(functional(
      {"ones.reflection.head-star", "ones", "head star form of {1}^m under t -> 1 - t", "p > m+1", 1, 199, mg, gt_m1},
      one, [](auto& c, auto& p, Span t) { return c.head(ones(static_cast<int>(p["m"])), t[0], true); },
      [](auto& c, auto& p, Span t) {
        return c.R(sgn(p["m"] - 1)) * c.head(ones(static_cast<int>(p["m"])), c.one() - t[0], true);
      }));

  struct D {
    const char* id;
    const char* title;
    DistKind kind;
    bool all_primes;
  };
  const D dists[] = {
      {"ones.distribution", "depth-one head form at t^n", DistKind::eg, true},
      {"ones.distribution.head", "head form of {1}^m at 1 - t^n", DistKind::d1, false},
      {"ones.distribution.tail", "tail form of {1}^m at 1/(1 - t^n)", DistKind::d2, false},
      {"ones.distribution.head-star", "head star form of {1}^m at 1/(1 - t^n)", DistKind::d3, false},
      {"ones.distribution.tail-star", "tail star form of {1}^m at 1 - t^n", DistKind::d4, false},
  };
  auto dg = grid({"m", "n"}, {{1, 5}, {-1, 4}}, [](const Params& p) { return p["n"] != 0 && p["n"] != 1; });
  for (const auto& d : dists) {
    const bool all = d.all_primes;
    out.push_back(functional(
        {d.id, "ones", d.title, all ? "p = 1 mod |n|" : "p > m+1, p = 1 mod |n|", 1, 199, dg,
         [all](const Params& p) {
           const auto mod = static_cast<std::uint32_t>(p["n"] < 0 ? -p["n"] : p["n"]);
           return above(all ? 1 : p["m"] + 1, mod);
         }},
        one, [kind = d.kind](auto& c, auto& p, Span t) { return dist_lhs(c, kind, p["m"], p["n"], t[0]); },
        [kind = d.kind](auto& c, auto& p, Span t) { return dist_rhs(c, kind, p["m"], p["n"], t[0]); }));
  }
}

}  // namespace

void add_functional_entries(std::vector<IdentityEntry>& out) {
  add_shuffle_relations(out);
  add_star_nonstar(out);
  add_ones(out);
}

}  // namespace fpl::registry_detail
