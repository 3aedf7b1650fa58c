// Ono-Yamamoto sums, generalized Bernoulli numbers B_{1,omega^{-k}}, and the
// power-sum and Kummer-type congruences they rest on.

#include "registry_util.hpp"

namespace fpl::registry_detail {

namespace {

using Span = std::span<const Residue>;

Index idx2(const Params& p) { return Index{static_cast<int>(p["k1"]), static_cast<int>(p["k2"])}; }
Index idx3(const Params& p) {
  return Index{static_cast<int>(p["k1"]), static_cast<int>(p["k2"]), static_cast<int>(p["k3"])};
}

void add_oy(std::vector<IdentityEntry>& out) {
  auto one = [](const Params&) { return 1; };
  out.push_back(functional(
      {"oy.reversal", "oy", "li_k(t) against li_k(1/t)", "all p", 1, 199, index_grid(1, 5), {}}, one,
      [](auto& c, auto& p, Span t) { return c.li(p.index(), t[0]); },
      [](auto& c, auto& p, Span t) {
        const Index& k = p.index();
        return c.R(sgn(k.weight())) * t[0].pow(k.depth()) * c.li(k, c.inv_arg(t[0]));
      }));
  out.push_back(functional(
      {"oy.decomposition", "oy", "li_k(t) as a signed sum of tail-type sums over surjections", "all p", 1, 199,
       index_grid(1, 5, [](const Index& k) { return k.depth() <= 4; }), {}},
      one, [](auto& c, auto& p, Span t) { return c.li(p.index(), t[0]); },
      [](auto& c, auto& p, Span t) { return oy_decompose(c.ring(), p.index(), t[0].value()); }));

  auto d2 = grid({"k1", "k2"}, {{1, 5}, {1, 5}}, [](const Params& p) { return p["k1"] + p["k2"] <= 6; });
  out.push_back(functional(
      {"oy.depth2", "oy", "li_{(k1,k2)} through head and tail forms", "all p", 1, 199, d2, {}}, one,
      [](auto& c, auto& p, Span t) { return c.li(idx2(p), t[0]); },
      [](auto& c, auto& p, Span t) {
        Index k = idx2(p);
        return c.head(reverse(k), t[0], false) + t[0].pow(c.p()) * c.tail(k, t[0], false);
      }));
  auto d3 = grid({"k1", "k2", "k3"}, {{1, 4}, {1, 4}, {1, 4}},
                 [](const Params& p) { return p["k1"] + p["k2"] + p["k3"] <= 6; });
  out.push_back(functional(
      {"oy.depth3", "oy", "li_{(k1,k2,k3)} through eight depth-two and depth-three sums", "all p", 1, 199, d3, {}},
      one, [](auto& c, auto& p, Span t) { return c.li(idx3(p), t[0]); },
      [](auto& c, auto& p, Span t) {
        const int k1 = static_cast<int>(p["k1"]), k2 = static_cast<int>(p["k2"]), k3 = static_cast<int>(p["k3"]);
        const Residue& x = t[0];
        Residue xp = x.pow(c.p());
        Residue mid = c.harmonic(Index{k2, k3, k1}, {c.one(), x, c.one()}, false) +
                      c.harmonic(Index{k1, k3, k2}, {c.one(), x, c.one()}, false);
        Residue r = c.head(Index{k3, k2, k1}, x, false);
        r += xp * (c.head(Index{k3, k1, k2}, x, false) + c.tail(Index{k2, k1, k3}, x, false) + mid +
                   c.head(Index{k1 + k3, k2}, x, false) + c.tail(Index{k2, k1 + k3}, x, false));
        r += xp * xp * c.tail(Index{k1, k2, k3}, x, false);
        return r;
      }));
  out.push_back(closed_form(
      {"oy.at-one", "oy", "li_k(1) vanishes", "p > wt(k)+1", 1, 199, index_grid(1, 6),
       above_fn([](const Params& p) { return p.index().weight() + 1; })},
      [](auto& c, auto& p, Span) { return c.li(p.index(), c.one()); }, [](auto&, auto&) -> Rational { return 0; }));

  struct V {
    const char* id;
    Index k;
    Rational t;
    Rational cq, cb;  // value = cq q^e + cb B_{p-3}, e = weight
  };
  const Rational h(1, 2);
  const V vals[] = {
      {"oy.value.11.minus-one", {1, 1}, -1, 2, 0},
      {"oy.value.11.two", {1, 1}, 2, 2, 0},
      {"oy.value.11.half", {1, 1}, h, h, 0},
      {"oy.value.12.minus-one", {1, 2}, -1, 0, 0},
      {"oy.value.21.minus-one", {2, 1}, -1, 0, 0},
      {"oy.value.12.two", {1, 2}, 2, Rational(2, 3), Rational(-2, 3)},
      {"oy.value.21.two", {2, 1}, 2, Rational(2, 3), Rational(4, 3)},
      {"oy.value.12.half", {1, 2}, h, Rational(-1, 6), Rational(1, 6)},
      {"oy.value.21.half", {2, 1}, h, Rational(-1, 6), Rational(-1, 3)},
      {"oy.value.111.minus-one", {1, 1, 1}, -1, Rational(-4, 3), Rational(-2, 3)},
      {"oy.value.111.two", {1, 1, 1}, 2, Rational(-4, 3), Rational(-2, 3)},
      {"oy.value.111.half", {1, 1, 1}, h, Rational(1, 6), Rational(1, 12)},
  };
  for (const auto& v : vals) {
    out.push_back(closed_form(
        {v.id, "oy", "li_k at " + to_string(v.t) + " through q_p(2) and B_{p-3}", "p > 3", 1, 199, {Params{}},
         [](const Params&) { return above(3); }},
        [k = v.k, t = v.t](auto& c, auto&, Span) { return c.li(k, c.arg(t)); },
        [k = v.k, cq = v.cq, cb = v.cb](auto& c, auto&) -> Rational {
          Rational q = c.q2(), qe = 1;
          for (int i = 0; i < k.weight(); ++i) qe *= q;
          return cq * qe + cb * c.B(c.p() - 3);
        }));
  }
}

Residue power_sum(const EvalContext& c, long e) {
  Residue s = c.zero();
  for (long a = 1; a < static_cast<long>(c.p()); ++a) s += c.R(a).pow(e);
  return s;
}

void add_bernoulli(std::vector<IdentityEntry>& out) {
  auto gb = [](auto& c, auto& p, Span) { return gen_bernoulli_1(p["k"], c.p(), c.n()); };
  auto kg = [](long lo, long hi, int parity) {
    return grid({"k"}, {{lo, hi}}, [parity](const Params& p) { return parity < 0 || p["k"] % 2 == parity; });
  };
  auto gt_k = [](long d) { return above_fn([d](const Params& p) { return p["k"] + d; }); };

  out.push_back(closed_form(
      {"bernoulli.generalized.mod-p3.odd", "bernoulli", "B_{1,omega^{-k}} mod p^3, k odd", "p > k+4", 3, 199,
       kg(3, 9, 1), gt_k(4)},
      gb, [](auto& c, auto& p) -> Rational {
        long k = p["k"], pr = c.p();
        Rational P = c.P();
        Rational b1 = c.Bh(pr - k), b2 = c.Bh(2 * pr - k - 1), b3 = c.Bh(3 * pr - k - 2);
        return Rational(k * k - k + 6, 2) * b1 - (k * k - 2 * k + 3) * b2 + Rational(k * k - 3 * k + 2, 2) * b3 +
               k * (b1 - b2) * P - k * c.Bh(pr - k - 2) * P * P;
      }));
  out.push_back(closed_form(
      {"bernoulli.generalized.mod-p3.even", "bernoulli", "B_{1,omega^{-k}} mod p^3, k even", "p > k+4", 3, 199,
       kg(2, 8, 0), gt_k(4)},
      gb, [](auto& c, auto& p) -> Rational {
        long k = p["k"], pr = c.p();
        return -3 * k * (c.Bh(pr - k - 1) - c.Bh(2 * pr - k - 2)) * c.P();
      }));
  out.push_back(closed_form(
      {"bernoulli.generalized.mod-p2", "bernoulli", "B_{1,omega^{-k}} mod p^2", "p > k+3", 2, 199, kg(2, 9, -1),
       gt_k(3)},
      gb, [](auto& c, auto& p) -> Rational {
        long k = p["k"], pr = c.p();
        return (k + 2) * c.Bh(pr - k) - (k + 1) * c.Bh(2 * pr - k - 1);
      }));
  out.push_back(closed_form(
      {"bernoulli.generalized.mod-p", "bernoulli", "B_{1,omega^{-k}} mod p", "p > k+2", 1, 199, kg(2, 9, -1),
       gt_k(2)},
      gb, [](auto& c, auto& p) -> Rational { return c.Bh(c.p() - p["k"]); }));
  out.push_back(closed_form(
      {"bernoulli.generalized.classical", "bernoulli", "B_{1,omega^{-k}} = -B_{p-k}/k mod p", "p > k+1", 1, 199,
       kg(2, 9, -1), gt_k(1)},
      gb, [](auto& c, auto& p) -> Rational { return -c.B(c.p() - p["k"]) / p["k"]; }));

  // l = m would put p into the denominator of B_{m(p-1)+l}/(m(p-1)+l).
  auto ks = grid({"m", "l"}, {{1, 3}, {2, 58}},
                 [](const Params& p) { return p["l"] % 2 == 0 && !(p["m"] == 2 && p["l"] == 2); });
  out.push_back(closed_form(
      {"bernoulli.kummer-sun", "bernoulli", "B-hat at m(p-1)+l through B-hat at p-1+l and at l", "p > l+2", 2, 61,
       ks, above_fn([](const Params& p) { return p["l"] + 2; })},
      [](auto& c, auto& p, Span) {
        long m = p["m"], l = p["l"];
        return c.R(c.Bh(m * (static_cast<long>(c.p()) - 1) + l));
      },
      [](auto& c, auto& p) -> Rational {
        long m = p["m"], l = p["l"];
        Rational pl = 1;
        for (long i = 0; i < l - 1; ++i) pl *= c.P();
        return m * c.Bh(c.p() - 1 + l) - (m - 1) * (1 - pl) * c.Bh(l);
      }));

  struct PS {
    const char* id;
    int which;  // exponent 1-k, p-k, 2p-k-1, 3p-k-2
    bool odd;
  };
  const PS sums[] = {
      {"bernoulli.power-sum.1-k.odd", 0, true},      {"bernoulli.power-sum.1-k.even", 0, false},
      {"bernoulli.power-sum.p-k.odd", 1, true},      {"bernoulli.power-sum.p-k.even", 1, false},
      {"bernoulli.power-sum.2p-k-1.odd", 2, true},   {"bernoulli.power-sum.2p-k-1.even", 2, false},
      {"bernoulli.power-sum.3p-k-2.odd", 3, true},   {"bernoulli.power-sum.3p-k-2.even", 3, false},
  };
  for (const auto& s : sums) {
    out.push_back(closed_form(
        {s.id, "bernoulli", "sum of a^e over 1 <= a < p, mod p^4", "p > k+4", 4, 61, kg(2, 7, s.odd ? 1 : 0), gt_k(4)},
        [w = s.which](auto& c, auto& p, Span) {
          long k = p["k"], pr = c.p();
          const long e[] = {1 - k, pr - k, 2 * pr - k - 1, 3 * pr - k - 2};
          return power_sum(c, e[w]);
        },
        [w = s.which, odd = s.odd](auto& c, auto& p) -> Rational {
          long k = p["k"], pr = c.p();
          Rational P = c.P(), P2 = P * P, P3 = P2 * P;
          auto Bh = [&](long m) { return c.Bh(m); };
          if (odd) {
            switch (w) {
              case 0:
                return -(k - 1) * (3 * Bh(pr - k) - 3 * Bh(2 * pr - k - 1) + Bh(3 * pr - k - 2)) * P -
                       C(k + 1, 3) * Bh(pr - k - 2) * P3;
              case 1: return -k * Bh(pr - k) * P + Bh(pr - k) * P2 - C(k + 2, 3) * Bh(pr - k - 2) * P3;
              case 2:
                return -(k + 1) * Bh(2 * pr - k - 1) * P + 2 * Bh(2 * pr - k - 1) * P2 - C(k + 3, 3) * Bh(pr - k - 2) * P3;
              default:
                return -(k + 2) * Bh(3 * pr - k - 2) * P + 3 * (2 * Bh(2 * pr - k - 1) - Bh(pr - k)) * P2 -
                       C(k + 4, 3) * Bh(pr - k - 2) * P3;
            }
          }
          switch (w) {
            case 0: return C(k, 2) * (2 * Bh(pr - k - 1) - Bh(2 * pr - k - 2)) * P2;
            case 1: return C(k + 1, 2) * Bh(pr - k - 1) * P2 - Rational(2 * k + 1, 2) * Bh(pr - k - 1) * P3;
            case 2: return C(k + 2, 2) * Bh(2 * pr - k - 2) * P2 - (2 * k + 3) * Bh(pr - k - 1) * P3;
            default:
              return C(k + 3, 2) * (2 * Bh(2 * pr - k - 2) - Bh(pr - k - 1)) * P2 -
                     Rational(3 * (2 * k + 5), 2) * Bh(pr - k - 1) * P3;
          }
        }));
  }
}

}  // namespace

void add_appendix_entries(std::vector<IdentityEntry>& out) {
  add_oy(out);
  add_bernoulli(out);
}

}  // namespace fpl::registry_detail
