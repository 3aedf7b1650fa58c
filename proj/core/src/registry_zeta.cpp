// Finite multiple zeta values: closed forms, symmetry relations and the
// reversal formulas for multi-variable finite polylogarithms.

#include <algorithm>
#include <numeric>

#include "registry_util.hpp"

namespace fpl::registry_detail {

namespace {

using Span = std::span<const Residue>;

// Sum of zeta^(star) over all m! orderings of k.
Residue symmetric_sum(const EvalContext& c, const Index& k, bool star) {
  std::vector<int> order(static_cast<std::size_t>(k.depth()));
  std::iota(order.begin(), order.end(), 0);
  Residue total = c.zero();
  do {
    std::vector<int> parts;
    for (int i : order) parts.push_back(k[static_cast<std::size_t>(i)]);
    total += c.zeta(Index(parts), star);
  } while (std::next_permutation(order.begin(), order.end()));
  return total;
}

// (t_m^{-1}, ..., t_1^{-1})
std::vector<Residue> reversed_inverses(const EvalContext& c, Span t) {
  std::vector<Residue> out;
  for (auto it = t.rbegin(); it != t.rend(); ++it) out.push_back(c.inv_arg(*it));
  return out;
}

Residue reversal_rhs(const EvalContext& c, const Index& k, Span t, bool star, bool second_order) {
  Residue prod = c.one();
  for (const auto& x : t) prod *= x;
  auto inv = reversed_inverses(c, t);
  Residue inner = c.harmonic(reverse(k), inv, star);
  if (second_order) {
    Residue corr = c.zero();
    for (int i = 1; i <= k.depth(); ++i) {
      corr += c.R(k[static_cast<std::size_t>(i - 1)]) * c.harmonic(reverse(oplus(k, unit_index(i, k.depth()))), inv, star);
    }
    inner += c.pp() * corr;
  }
  return c.R(sgn(k.weight())) * prod.pow(c.p()) * inner;
}

void add_closed_forms(std::vector<IdentityEntry>& out) {
  auto mk_grid = grid({"k", "m"}, {{1, 8}, {1, 8}}, [](const Params& p) { return p["k"] * p["m"] <= 8; });
  auto km = [](const Params& p) { return repeat(Index{static_cast<int>(p["k"])}, static_cast<int>(p["m"])); };

  out.push_back(closed_form(
      {"zeta.zhou-cai", "zeta", "zeta_A2({k}^m) as a multiple of p B_{p-mk-1}", "p > mk+2", 2, 199, mk_grid,
       above_fn([](const Params& p) { return p["k"] * p["m"] + 2; })},
      [km](auto& c, auto& p, Span) { return c.zeta(km(p), false); },
      [](auto& c, auto& p) -> Rational {
        long k = p["k"], m = p["m"];
        return sgn(m - 1) * k * c.B(c.p() - m * k - 1) / (m * k + 1) * c.P();
      }));
  out.push_back(closed_form(
      {"zeta.zhou-cai.star", "zeta", "zeta*_A2({k}^m) as a multiple of p B_{p-mk-1}", "p > mk+2", 2, 199, mk_grid,
       above_fn([](const Params& p) { return p["k"] * p["m"] + 2; })},
      [km](auto& c, auto& p, Span) { return c.zeta(km(p), true); },
      [](auto& c, auto& p) -> Rational {
        long k = p["k"], m = p["m"];
        return Rational(k) * c.B(c.p() - m * k - 1) / (m * k + 1) * c.P();
      }));
  out.push_back(closed_form(
      {"zeta.zhou-cai.star.mod-p", "zeta", "zeta*_A({k}^m) vanishes", "p > mk+1", 1, 199, mk_grid,
       above_fn([](const Params& p) { return p["k"] * p["m"] + 1; })},
      [km](auto& c, auto& p, Span) { return c.zeta(km(p), true); }, [](auto&, auto&) { return Rational(0); }));

  out.push_back(closed_form(
      {"zeta.depth1.mod-p3", "zeta", "zeta_A3(k) through Bernoulli numbers", "p > k+3", 3, 199,
       grid({"k"}, {{1, 8}}), above_fn([](const Params& p) { return p["k"] + 3; })},
      [](auto& c, auto& p, Span) { return c.zeta(Index{static_cast<int>(p["k"])}, false); },
      [](auto& c, auto& p) -> Rational {
        long k = p["k"], pr = c.p();
        if (k % 2) return C(k + 1, 2) * c.Bh(pr - k - 2) * c.P() * c.P();
        return Rational(k) * (c.Bh(2 * pr - k - 2) - 2 * c.Bh(pr - k - 1)) * c.P();
      }));
  out.push_back(closed_form(
      {"zeta.depth1.mod-p4", "zeta", "zeta_A4(k) through Bernoulli numbers", "p > k+4", 4, 199,
       grid({"k"}, {{1, 7}}), above_fn([](const Params& p) { return p["k"] + 4; })},
      [](auto& c, auto& p, Span) { return c.zeta(Index{static_cast<int>(p["k"])}, false); },
      [](auto& c, auto& p) -> Rational {
        long k = p["k"], pr = c.p();
        Rational P = c.P();
        if (k % 2) return -C(k + 1, 2) * (c.Bh(2 * pr - k - 3) - 2 * c.Bh(pr - k - 2)) * P * P;
        return -Rational(k) * (c.Bh(3 * pr - k - 3) - 3 * c.Bh(2 * pr - k - 2) + 3 * c.Bh(pr - k - 1)) * P -
               C(k + 2, 3) * c.Bh(pr - k - 3) * P * P * P;
      }));

  auto k12 = grid({"k1", "k2"}, {{1, 7}, {1, 7}}, [](const Params& p) { return p["k1"] + p["k2"] <= 8; });
  auto idx2 = [](const Params& p) { return Index{static_cast<int>(p["k1"]), static_cast<int>(p["k2"])}; };
  auto dep2 = [](auto& c, auto& p) -> Rational {
    long k1 = p["k1"], w = k1 + p["k2"];
    return sgn(k1) * C(w, k1) * c.B(c.p() - w) / w;
  };
  for (bool star : {false, true}) {
    out.push_back(closed_form({star ? "zeta.depth2.star" : "zeta.depth2", "zeta",
                               star ? "zeta*_A(k1,k2) by one Bernoulli number" : "zeta_A(k1,k2) by one Bernoulli number",
                               star ? "p > k1+k2-1" : "p > k1+k2-1, p > 2, p != k1+k2+1", 1, 199, k12,
                               [star](const Params& p) {
                                 // At p = w+1 the non-star sum picks up H_{p-1}(w) = -1 against the star one;
                                 // at p = 2 it is empty.
                                 Guard g = above(std::max(p["k1"] + p["k2"] - 1, star ? 0L : 2L));
                                 if (!star) g.excluded = static_cast<std::uint32_t>(p["k1"] + p["k2"] + 1);
                                 return g;
                               }},
                              [idx2, star](auto& c, auto& p, Span) { return c.zeta(idx2(p), star); }, dep2));
  }

  auto k12_even = grid({"k1", "k2"}, {{1, 7}, {1, 7}},
                       [](const Params& p) { return (p["k1"] + p["k2"]) % 2 == 0 && p["k1"] + p["k2"] <= 8; });
  for (bool star : {false, true}) {
    out.push_back(closed_form(
        {star ? "zeta.depth2.mod-p2.star" : "zeta.depth2.mod-p2", "zeta", "depth-two value mod p^2, even weight",
         "p > k1+k2+1", 2, 199, k12_even, above_fn([](const Params& p) { return p["k1"] + p["k2"] + 1; })},
        [idx2, star](auto& c, auto& p, Span) { return c.zeta(idx2(p), star); },
        [star](auto& c, auto& p) -> Rational {
          long k1 = p["k1"], k2 = p["k2"], w = k1 + k2;
          Rational brace = sgn(k2) * k1 * C(w + 1, k2) - sgn(k1) * k2 * C(w + 1, k1) + (star ? w : -w);
          return brace / 2 * c.B(c.p() - w - 1) / (w + 1) * c.P();
        }));
  }

  auto k123 = grid({"k1", "k2", "k3"}, {{1, 5}, {1, 5}, {1, 5}}, [](const Params& p) {
    long w = p["k1"] + p["k2"] + p["k3"];
    return w % 2 == 1 && w <= 7;
  });
  auto idx3 = [](const Params& p) {
    return Index{static_cast<int>(p["k1"]), static_cast<int>(p["k2"]), static_cast<int>(p["k3"])};
  };
  for (bool star : {false, true}) {
    out.push_back(closed_form(
        {star ? "zeta.depth3.star" : "zeta.depth3", "zeta", "depth-three value, odd weight", "p > k1+k2+k3", 1, 199,
         k123, above_fn([](const Params& p) { return p["k1"] + p["k2"] + p["k3"]; })},
        [idx3, star](auto& c, auto& p, Span) { return c.zeta(idx3(p), star); },
        [star](auto& c, auto& p) -> Rational {
          long k1 = p["k1"], k3 = p["k3"], w = k1 + p["k2"] + k3;
          Rational v = (sgn(k3) * C(w, k3) - sgn(k1) * C(w, k1)) / 2 * c.B(c.p() - w) / w;
          return star ? Rational(-v) : v;
        }));
  }

  auto comp = index_grid(1, 5);
  for (bool star : {false, true}) {
    out.push_back(closed_form(
        {star ? "zeta.symmetric-sum.star" : "zeta.symmetric-sum", "zeta", "sum over all orderings vanishes",
         "p > wt(k)+1", 1, 199, comp, above_fn([](const Params& p) { return p.index().weight() + 1; })},
        [star](auto& c, auto& p, Span) { return symmetric_sum(c, p.index(), star); },
        [](auto&, auto&) { return Rational(0); }));
    out.push_back(closed_form_eval(
        {star ? "zeta.reversal.star" : "zeta.reversal", "zeta", "reversing the index costs (-1)^wt", "all p", 1, 199,
         comp, {}},
        [star](auto& c, auto& p, Span) { return c.zeta(p.index(), star); },
        [star](auto& c, auto& p, Span) {
          return c.R(sgn(p.index().weight())) * c.zeta(reverse(p.index()), star);
        }));
  }
  out.push_back(closed_form_eval(
      {"zeta.hoffman-duality", "zeta", "zeta*(k) = -zeta*(k dual)", "all p", 1, 199, index_grid(1, 6), {}},
      [](auto& c, auto& p, Span) { return c.zeta(p.index(), true); },
      [](auto& c, auto& p, Span) { return -c.zeta(hoffman_dual(p.index()), true); }));

  auto as_grid = grid({"k1", "k2"}, {{1, 7}, {1, 7}}, [](const Params& p) { return p["k1"] + p["k2"] <= 8; });
  auto as_index = [](const Params& p) {
    std::vector<int> parts{static_cast<int>(p["k1"])};
    for (long i = 1; i < p["k2"]; ++i) parts.push_back(1);
    return Index(parts);
  };
  out.push_back(closed_form_eval(
      {"zeta.star-nonstar.tail-ones", "zeta", "zeta*(k1,{1}^{k2-1}) against the non-star value", "p > k2", 1, 199,
       as_grid, above_fn([](const Params& p) { return p["k2"]; })},
      [as_index](auto& c, auto& p, Span) { return c.zeta(as_index(p), true); },
      [as_index](auto& c, auto& p, Span) { return c.R(sgn(p["k1"])) * c.zeta(as_index(p), false); }));
  // The same fact via the antipode relation with {1}-blocks dropped.
  out.push_back(closed_form_eval(
      {"zeta.star-nonstar.antipode", "zeta", "zeta(k1,{1}^{k2-1}) + (-1)^{k2} zeta*({1}^{k2-1},k1) vanishes",
       "p > k2", 1, 199, as_grid, above_fn([](const Params& p) { return p["k2"]; })},
      [as_index](auto& c, auto& p, Span) {
        Index k = as_index(p);
        return c.zeta(k, false) + c.R(sgn(p["k2"])) * c.zeta(reverse(k), true);
      },
      [](auto& c, auto&, Span) { return c.zero(); }));

  auto nrange = grid({"n"}, {{1, 10}});
  out.push_back(closed_form(
      {"zeta.binomial-harmonic", "zeta", "(-1)^n C(p-1,n) = 1 - p H_n", "p > n", 2, 199, nrange,
       above_fn([](const Params& p) { return p["n"]; })},
      [](auto& c, auto& p, Span) { return c.R(sgn(p["n"]) * C(c.p() - 1, p["n"])); },
      [](auto& c, auto& p) -> Rational { return 1 - c.P() * harmonic(p["n"]); }));
  out.push_back(closed_form(
      {"zeta.harmonic-mirror", "zeta", "H_{p-n-1} = H_n", "p > n+1", 1, 199, nrange,
       above_fn([](const Params& p) { return p["n"] + 1; })},
      [](auto& c, auto& p, Span) { return c.R(harmonic(c.p() - p["n"] - 1)); },
      [](auto&, auto& p) -> Rational { return harmonic(p["n"]); }));
}

void add_ppt(std::vector<IdentityEntry>& out) {
  auto g = grid({"k1", "k2"}, {{1, 7}, {1, 7}},
                [](const Params& p) { return (p["k1"] + p["k2"]) % 2 == 0 && p["k1"] + p["k2"] <= 8; });
  auto idx = [](const Params& p) {
    std::vector<int> parts(static_cast<std::size_t>(p["k1"] - 1), 1);
    parts.push_back(2);
    parts.insert(parts.end(), static_cast<std::size_t>(p["k2"] - 1), 1);
    return Index(parts);
  };
  for (bool star : {false, true}) {
    out.push_back(closed_form(
        {star ? "ppt.star" : "ppt", "ppt", "zeta_A2({1}^{k1-1},2,{1}^{k2-1})", "p > k1+k2+1", 2, 199, g,
         above_fn([](const Params& p) { return p["k1"] + p["k2"] + 1; })},
        [idx, star](auto& c, auto& p, Span) { return c.zeta(idx(p), star); },
        [star](auto& c, auto& p) -> Rational {
          long k1 = p["k1"], k2 = p["k2"], W = k1 + k2 + 1;
          Rational brace = star ? 1 - sgn(k1) * C(W, k2 + 1) : 1 - sgn(k2) * C(W, k1 + 1);
          return brace / 2 * c.B(c.p() - W) / W * c.P();
        }));
  }
}

void add_reversal(std::vector<IdentityEntry>& out) {
  auto comp = index_grid(1, 4);
  auto depth = [](const Params& p) { return p.index().depth(); };
  for (bool star : {false, true}) {
    for (int n : {1, 2}) {
      std::string id = std::string("reversal.harmonic") + (star ? ".star" : "") + (n == 2 ? ".mod-p2" : "");
      out.push_back(functional(
          {id, "reversal", "harmonic sum against the reversed index at inverted arguments", "all p", n, 199, comp, {}},
          depth, [star](auto& c, auto& p, Span a) { return c.harmonic(p.index(), a, star); },
          [star, n](auto& c, auto& p, Span a) { return reversal_rhs(c, p.index(), a, star, n == 2); }));
    }
  }
  auto comp5 = index_grid(1, 5);
  auto one = [](const Params&) { return 1; };
  for (bool star : {false, true}) {
    out.push_back(functional({std::string("reversal.head") + (star ? ".star" : ""), "reversal",
                              "head form against the tail form at 1/t", "all p", 1, 199, comp5, {}},
                             one, [star](auto& c, auto& p, Span a) { return c.head(p.index(), a[0], star); },
                             [star](auto& c, auto& p, Span a) {
                               const Index& k = p.index();
                               return c.R(sgn(k.weight())) * a[0].pow(c.p()) * c.tail(reverse(k), c.inv_arg(a[0]), star);
                             }));
    out.push_back(functional({std::string("reversal.tail") + (star ? ".star" : ""), "reversal",
                              "tail form against the head form at 1/t", "all p", 1, 199, comp5, {}},
                             one, [star](auto& c, auto& p, Span a) { return c.tail(p.index(), a[0], star); },
                             [star](auto& c, auto& p, Span a) {
                               const Index& k = p.index();
                               return c.R(sgn(k.weight())) * a[0].pow(c.p()) * c.head(reverse(k), c.inv_arg(a[0]), star);
                             }));
  }
}

}  // namespace

void add_zeta_entries(std::vector<IdentityEntry>& out) {
  add_closed_forms(out);
  add_ppt(out);
  add_reversal(out);
}

}  // namespace fpl::registry_detail
