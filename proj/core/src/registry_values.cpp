// Special values at t = -1, 2, 1/2 and at mixed arguments drawn from {1, 2, 1/2, -1}.

#include "registry_util.hpp"

namespace fpl::registry_detail {

namespace {

using Span = std::span<const Residue>;
using Ev = std::function<Residue(const EvalContext&, const Params&)>;
using IndexFn = std::function<Index(const Params&)>;
using ArgsFn = std::function<std::vector<Rational>(const Params&)>;

const Rational kHalf(1, 2);

struct Seq {
  std::vector<Rational> v;
  Seq& ones(long n) {
    for (long i = 0; i < n; ++i) v.emplace_back(1);
    return *this;
  }
  Seq& put(const Rational& r) {
    v.push_back(r);
    return *this;
  }
};

IndexFn fixed(Index k) {
  return [k = std::move(k)](const Params&) { return k; };
}

Ev head_at(IndexFn k, Rational t, bool star, long scale = 1) {
  return [=](const EvalContext& c, const Params& p) { return c.R(scale) * c.head(k(p), c.arg(t), star); };
}
Ev tail_at(IndexFn k, Rational t, bool star, long scale = 1) {
  return [=](const EvalContext& c, const Params& p) { return c.R(scale) * c.tail(k(p), c.arg(t), star); };
}
Ev multi_at(IndexFn k, ArgsFn args, bool star, long scale = 1) {
  return [=](const EvalContext& c, const Params& p) {
    Args a(c);
    for (const auto& r : args(p)) a.put(r);
    return c.R(scale) * c.harmonic(k(p), a, star);
  };
}
Ev multi_at(Index k, std::vector<Rational> args, bool star, long scale = 1) {
  return multi_at(fixed(std::move(k)), [args](const Params&) { return args; }, star, scale);
}

// Evaluates form #p["form"] when more than one expression shares the value.
IdentityEntry value_entry(EntrySpec s, std::vector<Ev> forms, RationalFn rhs) {
  if (s.params.empty()) s.params.push_back(Params{});
  if (forms.size() > 1) s.params = cross(s.params, "form", 1, static_cast<long>(forms.size()));
  return closed_form(
      std::move(s),
      [forms](const EvalContext& c, const Params& p, Span) {
        return forms[forms.size() > 1 ? static_cast<std::size_t>(p["form"] - 1) : 0](c, p);
      },
      std::move(rhs));
}

GuardFn gt(long x) {
  return [x](const Params&) { return above(x); };
}

Index idx(std::initializer_list<int> parts) { return Index(parts); }
Index one_two_one(long a, long b) {  // ({1}^a, 2, {1}^b)
  std::vector<int> parts(static_cast<std::size_t>(a), 1);
  parts.push_back(2);
  parts.insert(parts.end(), static_cast<std::size_t>(b), 1);
  return Index(parts);
}
IndexFn ones_fn(std::function<long(const Params&)> m) {
  return [m = std::move(m)](const Params& p) { return ones(static_cast<int>(m(p))); };
}
IndexFn pair_fn() {
  return [](const Params& p) { return Index{static_cast<int>(p["k1"]), static_cast<int>(p["k2"])}; };
}
IndexFn triple_fn() {
  return [](const Params& p) {
    return Index{static_cast<int>(p["k1"]), static_cast<int>(p["k2"]), static_cast<int>(p["k3"])};
  };
}

long w2(const Params& p) { return p["k1"] + p["k2"]; }
long w3(const Params& p) { return p["k1"] + p["k2"] + p["k3"]; }

// (2^{e}-1)/2^{e} as used throughout: a = 1 - 2^{-e}
Rational A(long e) { return one_minus_2inv(e); }

std::vector<Params> pairs(long max_w, const std::function<bool(long, long)>& keep) {
  return grid({"k1", "k2"}, {{1, max_w}, {1, max_w}}, [&](const Params& p) {
    return w2(p) <= max_w && keep(p["k1"], p["k2"]);
  });
}
std::vector<Params> triples(long max_w, const std::function<bool(long, long, long)>& keep) {
  return grid({"k1", "k2", "k3"}, {{1, max_w}, {1, max_w}, {1, max_w}}, [&](const Params& p) {
    return w3(p) <= max_w && keep(p["k1"], p["k2"], p["k3"]);
  });
}

void add_one_variable(std::vector<IdentityEntry>& out) {
  auto mg = grid({"m"}, {{2, 8}});
  auto m_fn = [](const Params& p) { return p["m"]; };
  IndexFn depth1 = [](const Params& p) { return Index{static_cast<int>(p["m"])}; };

  out.push_back(value_entry(
      {"values.depth1.minus-one", "values", "depth-one head form at -1", "p > m+1", 1, 199, mg,
       above_fn([](const Params& p) { return p["m"] + 1; })},
      {head_at(depth1, -1, false)}, [](auto& c, auto& p) -> Rational {
        long m = p["m"];
        return (1 - pow2(m - 1)) / pow2(m - 2) * c.B(c.p() - m) / m;
      }));
  out.push_back(value_entry(
      {"values.depth1.minus-one.mod-p2", "values", "depth-one head form at -1 mod p^2 (even m with opposite sign)", "p > m+2", 2, 199, mg,
       above_fn([](const Params& p) { return p["m"] + 2; })},
      {head_at(depth1, -1, false)}, [](auto& c, auto& p) -> Rational {
        long m = p["m"], pr = c.p();
        // Even m: the sign here is the one the sums actually satisfy.
        if (m % 2 == 0) return -Rational(m) * A(m) * c.Bh(pr - m - 1) * c.P();
        return (pow2(m - 1) - 1) / pow2(m - 2) * (2 * c.Bh(pr - m) - c.Bh(2 * pr - m - 1));
      }));
  for (int n : {1, 2, 3}) {
    out.push_back(closed_form_eval(
        {std::string("values.depth1.minus-one.half-sum.") + (n == 1 ? "mod-p" : n == 2 ? "mod-p2" : "mod-p3"),
         "values", "depth-one head form at -1 through a half-range power sum", "all p (odd p once m > 1)", n, 199,
         grid({"m"}, {{1, 6}}), [](const Params& p) { return above(p["m"] > 1 ? 2 : 1); }},
        [](auto& c, auto& p, Span) { return c.head(Index{static_cast<int>(p["m"])}, c.R(-1), false); },
        [](auto& c, auto& p, Span) {
          const long m = p["m"];
          Residue s = c.zero();
          for (long k = 1; k <= (static_cast<long>(c.p()) - 1) / 2; ++k) s += c.R(k).pow(-m);
          return -c.zeta(Index{static_cast<int>(m)}, false) + c.R(pow2(1 - m)) * s;
        }));
  }

  auto odd_pairs = pairs(9, [](long a, long b) { return (a + b) % 2 == 1; });
  auto gt_w1 = above_fn([](const Params& p) { return w2(p) + 1; });
  out.push_back(value_entry(
      {"values.depth2.minus-one", "values", "depth-two head and tail forms at -1, odd weight", "p > k1+k2+1", 1, 199,
       odd_pairs, gt_w1},
      {head_at(pair_fn(), -1, false), tail_at(pair_fn(), -1, false)}, [](auto& c, auto& p) -> Rational {
        long w = w2(p);
        return A(w - 1) * c.B(c.p() - w) / w;
      }));
  out.push_back(value_entry(
      {"values.depth2.minus-one.star", "values", "depth-two star head and tail forms at -1, odd weight",
       "p > k1+k2+1", 1, 199, odd_pairs, gt_w1},
      {head_at(pair_fn(), -1, true), tail_at(pair_fn(), -1, true)}, [](auto& c, auto& p) -> Rational {
        long w = w2(p);
        return -A(w - 1) * c.B(c.p() - w) / w;
      }));

  // mod p^2 refinements; the head forms need k1 > 1 and the tail forms k2 > 1.
  auto gt_w2 = above_fn([](const Params& p) { return w2(p) + 2; });
  auto lead = [](const EvalContext& c, long w) -> Rational {
    return (1 - pow2(w - 1)) / pow2(w - 1) * (2 * c.Bh(c.p() - w) - c.Bh(2 * c.p() - w - 1));
  };
  auto head_tail = [](const EvalContext& c, long k1, long k2) -> Rational {
    return Rational(k2) * (1 - pow2(k1 - 1)) / pow2(k1 - 1) * c.Bh(c.p() - k1) * c.Bh(c.p() - k2 - 1) * c.P();
  };
  auto tail_tail = [](const EvalContext& c, long k1, long k2) -> Rational {
    return Rational(k1) * (1 - pow2(k2 - 1)) / pow2(k2 - 1) * c.Bh(c.p() - k1 - 1) * c.Bh(c.p() - k2) * c.P();
  };
  auto head_grid = pairs(9, [](long a, long b) { return (a + b) % 2 == 1 && a > 1; });
  auto tail_grid = pairs(9, [](long a, long b) { return (a + b) % 2 == 1 && b > 1; });
  for (bool star : {false, true}) {
    out.push_back(value_entry(
        {std::string("values.depth2.minus-one.head.mod-p2") + (star ? ".star" : ""), "values",
         "depth-two head form at -1 mod p^2", "p > k1+k2+2", 2, 199, head_grid, gt_w2},
        {head_at(pair_fn(), -1, star)}, [=](auto& c, auto& p) -> Rational {
          Rational l = lead(c, w2(p));
          return (star ? Rational(-l) : l) + head_tail(c, p["k1"], p["k2"]);
        }));
    out.push_back(value_entry(
        {std::string("values.depth2.minus-one.tail.mod-p2") + (star ? ".star" : ""), "values",
         "depth-two tail form at -1 mod p^2", "p > k1+k2+2", 2, 199, tail_grid, gt_w2},
        {tail_at(pair_fn(), -1, star)}, [=](auto& c, auto& p) -> Rational {
          Rational l = lead(c, w2(p));
          return (star ? Rational(-l) : l) + tail_tail(c, p["k1"], p["k2"]);
        }));
  }

  auto gt_m1 = above_fn([](const Params& p) { return p["m"] + 1; });
  out.push_back(value_entry(
      {"values.ones.two", "values", "{1}^m at 2: head form and tail star form", "p > m+1", 1, 199, mg, gt_m1},
      {head_at(ones_fn(m_fn), 2, false), tail_at(ones_fn(m_fn), 2, true)}, [](auto& c, auto& p) -> Rational {
        long m = p["m"];
        return (1 - pow2(m - 1)) / pow2(m - 2) * c.B(c.p() - m) / m;
      }));
  out.push_back(value_entry(
      {"values.ones.half", "values", "{1}^m at 1/2: tail form and head star form", "p > m+1", 1, 199, mg, gt_m1},
      {tail_at(ones_fn(m_fn), kHalf, false), head_at(ones_fn(m_fn), kHalf, true)}, [](auto& c, auto& p) -> Rational {
        long m = p["m"];
        return A(m - 1) * c.B(c.p() - m) / m;
      }));

  IndexFn K = [](const Params& p) { return one_two_one(p["k1"] - 1, p["k2"] - 1); };
  struct KForm {
    const char* id;
    const char* title;
    bool tail;
    bool star;
    Rational t;
    Rational sign_a;  // coefficient multiplying (2^{w-1}-1)/2^{w-1}
    Rational half;
  };
  const KForm kforms[] = {
      {"values.one-two.two", "({1}^{k1-1},2,{1}^{k2-1}) head form at 2", false, false, 2, 1, 1},
      {"values.one-two.two.tail-star", "({1}^{k1-1},2,{1}^{k2-1}) tail star form at 2", true, true, 2, -1, 1},
      {"values.one-two.half.tail", "({1}^{k1-1},2,{1}^{k2-1}) tail form at 1/2", true, false, kHalf, -1, kHalf},
      {"values.one-two.half.head-star", "({1}^{k1-1},2,{1}^{k2-1}) head star form at 1/2", false, true, kHalf, 1,
       kHalf},
  };
  for (const auto& f : kforms) {
    out.push_back(value_entry(
        {f.id, "values", f.title, "p > k1+k2+1", 1, 199, odd_pairs, gt_w1},
        {f.tail ? tail_at(K, f.t, f.star) : head_at(K, f.t, f.star)},
        [sa = f.sign_a, h = f.half](auto& c, auto& p) -> Rational {
          long k1 = p["k1"], w = w2(p);
          return h * (sa * A(w - 1) - sgn(k1) * C(w, k1)) * c.B(c.p() - w) / w;
        }));
  }

  auto even_m = grid({"m"}, {{2, 8}}, [](const Params& p) { return p["m"] % 2 == 0; });
  auto gt_m2 = above_fn([](const Params& p) { return p["m"] + 2; });
  out.push_back(value_entry(
      {"values.ones.two.mod-p2", "values", "{1}^m at 2 mod p^2, m even", "p > m+2", 2, 499, even_m, gt_m2},
      {head_at(ones_fn(m_fn), 2, false), tail_at(ones_fn(m_fn), 2, true, -1)}, [](auto& c, auto& p) -> Rational {
        long m = p["m"];
        return (Rational(m + 1) / pow2(m) - m - 2) * c.B(c.p() - m - 1) / (m + 1) * c.P();
      }));
  out.push_back(value_entry(
      {"values.ones.half.mod-p2", "values", "{1}^m at 1/2 mod p^2, m even", "p > m+2", 2, 499, even_m, gt_m2},
      {tail_at(ones_fn(m_fn), kHalf, false), head_at(ones_fn(m_fn), kHalf, true, -1)},
      [](auto& c, auto& p) -> Rational {
        long m = p["m"];
        return -A(m + 1) * c.B(c.p() - m - 1) / (m + 1) * c.P();
      }));
}

// Weight <= 4 values expressed through q = q_p(2) and B_{p-3}.
void add_fermat_quotient_values(std::vector<IdentityEntry>& out) {
  const Index i1{1}, i2{2}, i3{3}, i11{1, 1}, i12{1, 2}, i21{2, 1}, i111{1, 1, 1};
  auto q = [](const EvalContext& c) { return c.q2(); };
  auto B3 = [](const EvalContext& c) { return c.B(c.p() - 3); };

  struct Low {
    const char* id;
    int n;
    std::vector<Ev> forms;
    std::function<Rational(const EvalContext&)> value;
  };
  std::vector<Low> low = {
      {"values.weight1.minus-one", 3, {head_at(fixed(i1), -1, false)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c), P = c.P();
         return -2 * Q + Q * Q * P - (Rational(2, 3) * Q * Q * Q + Rational(1, 4) * B3(c)) * P * P;
       }},
      {"values.weight1.two", 3, {head_at(fixed(i1), 2, false)},
       [=](const EvalContext& c) -> Rational {
         return -2 * q(c) - Rational(7, 12) * B3(c) * c.P() * c.P();
       }},
      {"values.weight2.two", 2, {head_at(fixed(i2), 2, false)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return -Q * Q + (Rational(2, 3) * Q * Q * Q + Rational(7, 6) * B3(c)) * c.P();
       }},
      {"values.weight3.two", 1, {head_at(fixed(i3), 2, false)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return -Rational(1, 3) * Q * Q * Q - Rational(7, 24) * B3(c);
       }},
      {"values.weight1.half", 3, {head_at(fixed(i1), kHalf, false)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c), P = c.P();
         return Q - kHalf * Q * Q * P + (Rational(1, 3) * Q * Q * Q - Rational(7, 48) * B3(c)) * P * P;
       }},
      {"values.weight2.half", 2, {head_at(fixed(i2), kHalf, false)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return -kHalf * Q * Q + (kHalf * Q * Q * Q + Rational(7, 24) * B3(c)) * c.P();
       }},
      {"values.weight3.half", 1, {head_at(fixed(i3), kHalf, false)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return Rational(1, 6) * Q * Q * Q + Rational(7, 48) * B3(c);
       }},
      // depth two and three
      {"values.ones2.minus-one", 2, {head_at(fixed(i11), -1, false), tail_at(fixed(i11), -1, true, -1)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return Q * Q - (Q * Q * Q + Rational(13, 24) * B3(c)) * c.P();
       }},
      {"values.ones2.minus-one.head-star", 2, {head_at(fixed(i11), -1, true), tail_at(fixed(i11), -1, false, -1)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return Q * Q - (Q * Q * Q + Rational(1, 24) * B3(c)) * c.P();
       }},
      {"values.ones2.two", 2, {head_at(fixed(i11), 2, true), tail_at(fixed(i11), 2, false, -1)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return -Q * Q + (Rational(2, 3) * Q * Q * Q + Rational(1, 12) * B3(c)) * c.P();
       }},
      {"values.ones2.half", 2, {head_at(fixed(i11), kHalf, false), tail_at(fixed(i11), kHalf, true, -1)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return kHalf * Q * Q - kHalf * Q * Q * Q * c.P();
       }},
      {"values.weight3.depth2.two.a", 1, {head_at(fixed(i12), 2, true), tail_at(fixed(i21), 2, false, -1)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return -Rational(1, 3) * Q * Q * Q - Rational(25, 24) * B3(c);
       }},
      {"values.weight3.depth2.half.a", 1, {head_at(fixed(i12), kHalf, false), tail_at(fixed(i21), kHalf, true, -1)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return -Rational(1, 6) * Q * Q * Q - Rational(25, 48) * B3(c);
       }},
      {"values.weight3.depth2.two.b", 1, {head_at(fixed(i21), 2, true), tail_at(fixed(i12), 2, false, -1)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return -Rational(1, 3) * Q * Q * Q + Rational(23, 24) * B3(c);
       }},
      {"values.weight3.depth2.half.b", 1, {head_at(fixed(i21), kHalf, false), tail_at(fixed(i12), kHalf, true, -1)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return -Rational(1, 6) * Q * Q * Q + Rational(23, 48) * B3(c);
       }},
      {"values.ones3.minus-one-and-two", 1,
       {head_at(fixed(i111), -1, false), head_at(fixed(i111), -1, true), tail_at(fixed(i111), -1, false),
        tail_at(fixed(i111), -1, true), head_at(fixed(i111), 2, true), tail_at(fixed(i111), 2, false)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return -Rational(1, 3) * Q * Q * Q - Rational(7, 24) * B3(c);
       }},
      {"values.ones3.half", 1, {head_at(fixed(i111), kHalf, false), tail_at(fixed(i111), kHalf, true)},
       [=](const EvalContext& c) -> Rational {
         Rational Q = q(c);
         return Rational(1, 6) * Q * Q * Q + Rational(7, 48) * B3(c);
       }},
  };
  for (auto& l : low) {
    out.push_back(value_entry({l.id, "values", "weight <= 3 value through q_p(2) and B_{p-3}", "p > 3", l.n, 199, {},
                               gt(3)},
                              std::move(l.forms), [v = l.value](auto& c, auto&) -> Rational { return v(c); }));
  }

  const Index i13{1, 3}, i31{3, 1}, i211{2, 1, 1}, i112{1, 1, 2};
  out.push_back(value_entry(
      {"values.weight4.minus-one", "values", "weight-four depth-two value at -1", "p > 5", 1, 199, {}, gt(5)},
      {head_at(fixed(i13), -1, false), head_at(fixed(i13), -1, true), tail_at(fixed(i31), -1, false, -1),
       tail_at(fixed(i31), -1, true, -1)},
      [=](auto& c, auto&) -> Rational { return kHalf * q(c) * B3(c); }));
  out.push_back(value_entry(
      {"values.weight4.two", "values", "weight-four depth-three value at 2", "p > 5", 1, 199, {}, gt(5)},
      {head_at(fixed(i211), 2, false), tail_at(fixed(i112), 2, true)},
      [=](auto& c, auto&) -> Rational { return -kHalf * q(c) * B3(c); }));
  out.push_back(value_entry(
      {"values.weight4.half", "values", "weight-four depth-three value at 1/2", "p > 5", 1, 199, {}, gt(5)},
      {head_at(fixed(i211), kHalf, true), tail_at(fixed(i112), kHalf, false)},
      [=](auto& c, auto&) -> Rational { return -Rational(1, 4) * q(c) * B3(c); }));
}

// Harmonic sums with every argument in {1, -1}.
void add_alternating(std::vector<IdentityEntry>& out) {
  const Rational m1(-1), p1(1);
  auto odd_pairs = pairs(9, [](long a, long b) { return (a + b) % 2 == 1; });
  auto gt_w1 = above_fn([](const Params& p) { return w2(p) + 1; });
  const std::vector<Rational> mm{m1, m1};
  auto mmfn = [mm](const Params&) { return mm; };
  out.push_back(value_entry(
      {"values.alternating.depth2.odd", "values", "(k1,k2) at (-1,-1), odd weight", "p > k1+k2+1", 1, 199, odd_pairs,
       gt_w1},
      {multi_at(pair_fn(), mmfn, false), multi_at(pair_fn(), mmfn, true)}, [](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], w = w2(p);
        return sgn(k1) * (1 - pow2(w - 1)) / pow2(w - 1) * C(w, k1) * c.B(c.p() - w) / w;
      }));
  out.push_back(value_entry(
      {"values.alternating.depth2.even", "values", "(k1,k2) at (-1,-1), even weight, k1,k2 >= 2", "p > k1+k2+1", 1,
       199, pairs(10, [](long a, long b) { return (a + b) % 2 == 0 && a >= 2 && b >= 2; }), gt_w1},
      {multi_at(pair_fn(), mmfn, false), multi_at(pair_fn(), mmfn, true)}, [](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], k2 = p["k2"], w = w2(p);
        return (pow2(k1 - 1) - 1) * (pow2(k2 - 1) - 1) / (pow2(w - 3) * k1 * k2) * c.B(c.p() - k1) *
               c.B(c.p() - k2);
      }));
  IndexFn m1_idx = [](const Params& p) { return Index{static_cast<int>(p["m"]), 1}; };
  IndexFn one_m = [](const Params& p) { return Index{1, static_cast<int>(p["m"])}; };
  out.push_back(value_entry(
      {"values.alternating.depth2.fermat", "values", "(m,1) and (1,m) at (-1,-1), m odd", "p > m+2", 1, 199,
       grid({"m"}, {{3, 9}}, [](const Params& p) { return p["m"] % 2 == 1; }),
       above_fn([](const Params& p) { return p["m"] + 2; })},
      {multi_at(m1_idx, mmfn, false), multi_at(m1_idx, mmfn, true), multi_at(one_m, mmfn, false),
       multi_at(one_m, mmfn, true)},
      [](auto& c, auto& p) -> Rational {
        long m = p["m"];
        return (pow2(m - 1) - 1) / (pow2(m - 2) * m) * c.q2() * c.B(c.p() - m);
      }));

  auto gt_w31 = above_fn([](const Params& p) { return w3(p) + 1; });
  auto fn3 = [](std::vector<Rational> a) { return [a](const Params&) { return a; }; };
  out.push_back(value_entry(
      {"values.alternating.depth3.a", "values", "(k1,k2,k3) at (-1,-1,1)", "p > k1+k2+k3+1", 1, 199,
       triples(9, [](long a, long b, long c) { return a % 2 == 0 && (b + c) % 2 == 1; }), gt_w31},
      {multi_at(triple_fn(), fn3({m1, m1, p1}), false), multi_at(triple_fn(), fn3({m1, m1, p1}), true, -1)},
      [](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], k3 = p["k3"], w = w3(p);
        return kHalf * (sgn(k3) * C(w, k3) - (1 - pow2(w - 1)) / pow2(w - 1) * C(w, k1)) * c.B(c.p() - w) / w;
      }));
  out.push_back(value_entry(
      {"values.alternating.depth3.b", "values", "(k1,k2,k3) at (1,-1,-1)", "p > k1+k2+k3+1", 1, 199,
       triples(9, [](long a, long b, long c) { return (a + b) % 2 == 1 && c % 2 == 0; }), gt_w31},
      {multi_at(triple_fn(), fn3({p1, m1, m1}), false, -1), multi_at(triple_fn(), fn3({p1, m1, m1}), true)},
      [](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], k3 = p["k3"], w = w3(p);
        return kHalf * (sgn(k1) * C(w, k1) - (1 - pow2(w - 1)) / pow2(w - 1) * C(w, k3)) * c.B(c.p() - w) / w;
      }));
  out.push_back(value_entry(
      {"values.alternating.depth3.c", "values", "(k1,k2,k3) at (-1,1,-1)", "p > k1+k2+k3+1", 1, 199,
       triples(9, [](long a, long b, long c) { return a % 2 == 0 && b % 2 == 1 && c % 2 == 0; }), gt_w31},
      {multi_at(triple_fn(), fn3({m1, p1, m1}), false), multi_at(triple_fn(), fn3({m1, p1, m1}), true, -1)},
      [](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], k3 = p["k3"], w = w3(p);
        return (1 - pow2(w - 1)) / pow2(w) * (C(w, k3) - C(w, k1)) * c.B(c.p() - w) / w;
      }));

  const Index i111{1, 1, 1};
  auto B3 = [](const EvalContext& c) { return c.B(c.p() - 3); };
  out.push_back(value_entry(
      {"values.alternating.ones3.a", "values", "{1}^3 at (1,-1,-1) and (-1,-1,1)", "p > 3", 1, 199, {}, gt(3)},
      {multi_at(i111, {p1, m1, m1}, false), multi_at(i111, {m1, m1, p1}, false, -1)},
      [=](auto& c, auto&) -> Rational {
        Rational Q = c.q2();
        return Q * Q * Q + Rational(7, 8) * B3(c);
      }));
  out.push_back(value_entry(
      {"values.alternating.ones3.a.star", "values", "{1}^3 star at (1,-1,-1) and (-1,-1,1)", "p > 3", 1, 199, {},
       gt(3)},
      {multi_at(i111, {p1, m1, m1}, true), multi_at(i111, {m1, m1, p1}, true, -1)},
      [=](auto& c, auto&) -> Rational {
        Rational Q = c.q2();
        return Q * Q * Q - Rational(7, 8) * B3(c);
      }));
  out.push_back(value_entry(
      {"values.alternating.ones3.b", "values", "{1}^3 at (-1,1,-1) vanishes", "p > 3", 1, 199, {}, gt(3)},
      {multi_at(i111, {m1, p1, m1}, false), multi_at(i111, {m1, p1, m1}, true)},
      [](auto&, auto&) -> Rational { return 0; }));
  out.push_back(value_entry(
      {"values.alternating.ones3.c", "values", "{1}^3 at (-1,-1,-1) and (1,-1,1)", "p > 3", 1, 199, {}, gt(3)},
      {multi_at(i111, {m1, m1, m1}, false), multi_at(i111, {m1, m1, m1}, true), multi_at(i111, {p1, m1, p1}, false, -2),
       multi_at(i111, {p1, m1, p1}, true, -2)},
      [=](auto& c, auto&) -> Rational {
        Rational Q = c.q2();
        return -Rational(4, 3) * Q * Q * Q - Rational(1, 6) * B3(c);
      }));

  // mod p^2
  auto even_pairs = pairs(10, [](long a, long b) { return a % 2 == 0 && b % 2 == 0; });
  for (bool star : {false, true}) {
    out.push_back(value_entry(
        {std::string("values.alternating.depth2.even.mod-p2") + (star ? ".star" : ""), "values",
         "(k1,k2) at (-1,-1) mod p^2, k1 and k2 even", "p > k1+k2+2", 2, 199, even_pairs,
         above_fn([](const Params& p) { return w2(p) + 2; })},
        {multi_at(pair_fn(), mmfn, star)}, [star](auto& c, auto& p) -> Rational {
          long k1 = p["k1"], k2 = p["k2"], S = k1 + k2;
          Rational brace = Rational(k2 - k1) * (pow2(S) - 1) / (pow2(S + 1) * (S + 2)) * C(S + 2, k1 + 1) +
                           (star ? Rational(S, 2) : Rational(-S, 2));
          return brace * c.B(c.p() - S - 1) / (S + 1) * c.P();
        }));
  }
  const Index i11{1, 1};
  out.push_back(value_entry(
      {"values.alternating.ones2.mod-p2", "values", "(1,1) at (-1,-1) mod p^2", "p > 3", 2, 199, {}, gt(3)},
      {multi_at(i11, {m1, m1}, false)}, [=](auto& c, auto&) -> Rational {
        Rational Q = c.q2();
        return 2 * Q * Q - (2 * Q * Q * Q + Rational(1, 3) * B3(c)) * c.P();
      }));
  out.push_back(value_entry(
      {"values.alternating.ones2.mod-p2.star", "values", "(1,1) star at (-1,-1) mod p^2", "p > 3", 2, 199, {}, gt(3)},
      {multi_at(i11, {m1, m1}, true)}, [=](auto& c, auto&) -> Rational {
        Rational Q = c.q2();
        return 2 * Q * Q - (2 * Q * Q * Q - Rational(1, 3) * B3(c)) * c.P();
      }));
  for (bool star : {false, true}) {
    out.push_back(value_entry(
        {std::string("values.alternating.ones3.mod-p2") + (star ? ".star" : ""), "values",
         "{1}^3 at (-1,-1,-1) mod p^2", "p > 5", 2, 199, {}, gt(5)},
        {multi_at(i111, {m1, m1, m1}, star)}, [star](auto& c, auto&) -> Rational {
          Rational Q = c.q2();
          long pr = c.p();
          Rational b = c.Bh(pr - 3);
          Rational corr = Q * Q * Q * Q + (star ? b * Q : Rational(-b * Q));
          return -Rational(4, 3) * Q * Q * Q + b - kHalf * c.Bh(2 * pr - 4) + 2 * corr * c.P();
        }));
  }
}

// Harmonic sums of {1}^w-type indices with arguments in {1, 2, 1/2}.
void add_mixed(std::vector<IdentityEntry>& out) {
  const Rational two(2), one(1);
  auto B = [](const EvalContext& c, long w) { return c.B(c.p() - w); };
  IndexFn ones_w2 = ones_fn(w2);
  IndexFn ones_w3 = ones_fn(w3);
  auto gt_w1 = above_fn([](const Params& p) { return w2(p) + 1; });
  auto gt_w31 = above_fn([](const Params& p) { return w3(p) + 1; });
  auto gt_m1 = above_fn([](const Params& p) { return p["m"] + 1; });
  constexpr long W = 9;

  // ({1}^{k1-1}, x, y, {1}^{k2-1})
  auto around = [](Rational x, Rational y) {
    return [=](const Params& p) { return Seq().ones(p["k1"] - 1).put(x).put(y).ones(p["k2"] - 1).v; };
  };
  out.push_back(value_entry(
      {"values.mixed.half-two", "values", "{1}^w at ({1}^{k1-1},1/2,2,{1}^{k2-1}), odd weight", "p > k1+k2+1", 1, 199,
       pairs(W, [](long a, long b) { return (a + b) % 2 == 1; }), gt_w1},
      {multi_at(ones_w2, around(kHalf, two), false)}, [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], w = w2(p);
        return sgn(k1) * (1 - pow2(w - 1)) / pow2(w - 1) * C(w, k1) * B(c, w) / w;
      }));
  out.push_back(value_entry(
      {"values.mixed.two-half.star", "values", "{1}^w star at ({1}^{k1-1},2,1/2,{1}^{k2-1}), odd weight",
       "p > k1+k2+1", 1, 199, pairs(W, [](long a, long b) { return (a + b) % 2 == 1; }), gt_w1},
      {multi_at(ones_w2, around(two, kHalf), true)}, [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], w = w2(p);
        return sgn(k1) * A(w - 1) * C(w, k1) * B(c, w) / w;
      }));
  out.push_back(value_entry(
      {"values.mixed.half-two.even", "values", "{1}^w at ({1}^{k1-1},1/2,2,{1}^{k2-1}) vanishes for even weight",
       "p > k1+k2+1", 1, 199, pairs(W, [](long a, long b) { return (a + b) % 2 == 0; }), gt_w1},
      {multi_at(ones_w2, around(kHalf, two), false)}, [](auto&, auto&) -> Rational { return 0; }));
  out.push_back(value_entry(
      {"values.mixed.two-half.star.even", "values",
       "{1}^w star at ({1}^{k1-1},2,1/2,{1}^{k2-1}), even weight, k1,k2 >= 2", "p > k1+k2+1", 1, 199,
       pairs(W, [](long a, long b) { return (a + b) % 2 == 0 && a >= 2 && b >= 2; }), gt_w1},
      {multi_at(ones_w2, around(two, kHalf), true)}, [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], k2 = p["k2"], w = w2(p);
        return -(pow2(k1 - 1) - 1) * (pow2(k2 - 1) - 1) / (pow2(w - 3) * k1 * k2) * B(c, k1) * B(c, k2);
      }));

  auto odd_m = grid({"m"}, {{3, W}}, [](const Params& p) { return p["m"] % 2 == 1; });
  IndexFn ones_m = ones_fn([](const Params& p) { return p["m"]; });
  IndexFn ones_m1 = ones_fn([](const Params& p) { return p["m"] + 1; });
  out.push_back(value_entry(
      {"values.mixed.fermat.star", "values", "{1}^{m+1} star with one 2 and one 1/2 at an end, m odd", "p > m+2", 1,
       199, grid({"m"}, {{3, W - 1}}, [](const Params& p) { return p["m"] % 2 == 1; }),
       above_fn([](const Params& p) { return p["m"] + 2; })},
      {multi_at(ones_m1, [](const Params& p) { return Seq().ones(p["m"] - 1).put(2).put(kHalf).v; }, true),
       multi_at(ones_m1, [](const Params& p) { return Seq().put(2).put(kHalf).ones(p["m"] - 1).v; }, true)},
      [=](auto& c, auto& p) -> Rational {
        long m = p["m"];
        return (1 - pow2(m - 1)) / (pow2(m - 2) * m) * c.q2() * B(c, m);
      }));
  out.push_back(value_entry(
      {"values.mixed.two-half-two", "values", "{1}^w at (2,{1}^{k1-2},1/2,2,{1}^{k2-1}), k1 odd, k2 even",
       "p > k1+k2+1", 1, 199, pairs(W, [](long a, long b) { return a >= 3 && a % 2 == 1 && b % 2 == 0; }), gt_w1},
      {multi_at(ones_w2, [](const Params& p) { return Seq().put(2).ones(p["k1"] - 2).put(kHalf).put(2).ones(p["k2"] - 1).v; },
                false)},
      [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], w = w2(p);
        return A(w - 1) * (C(w, k1) - 1) * B(c, w) / w;
      }));
  out.push_back(value_entry(
      {"values.mixed.two-half-two.lead", "values", "{1}^m at (2,1/2,2,{1}^{m-3}), m odd", "p > m+1", 1, 199, odd_m,
       gt_m1},
      {multi_at(ones_m, [](const Params& p) { return Seq().put(2).put(kHalf).put(2).ones(p["m"] - 3).v; }, false)},
      [=](auto& c, auto& p) -> Rational {
        long m = p["m"];
        return (1 - pow2(m - 1)) * (m * m - m + 2) / pow2(m) * B(c, m) / m;
      }));
  out.push_back(value_entry(
      {"values.mixed.two-half-two.star", "values", "{1}^w star at ({1}^{k1-1},2,1/2,{1}^{k2-2},2), odd weight",
       "p > k1+k2+1", 1, 199, pairs(W, [](long a, long b) { return (a + b) % 2 == 1 && b >= 2; }), gt_w1},
      {multi_at(ones_w2, [](const Params& p) { return Seq().ones(p["k1"] - 1).put(2).put(kHalf).ones(p["k2"] - 2).put(2).v; },
                true)},
      [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], w = w2(p);
        return (1 - pow2(w - 1)) / pow2(w - 1) * (1 + sgn(k1 - 1) * C(w, k1)) * B(c, w) / w;
      }));
  out.push_back(value_entry(
      {"values.mixed.half-two-half", "values", "{1}^w at ({1}^{k1-1},1/2,2,{1}^{k2-2},1/2), k1 even, k2 odd",
       "p > k1+k2+1", 1, 199, pairs(W, [](long a, long b) { return a % 2 == 0 && b >= 3 && b % 2 == 1; }), gt_w1},
      {multi_at(ones_w2, [](const Params& p) { return Seq().ones(p["k1"] - 1).put(kHalf).put(2).ones(p["k2"] - 2).put(kHalf).v; },
                false)},
      [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], w = w2(p);
        return (1 - pow2(w - 1)) / pow2(w) * (C(w, k1) - 1) * B(c, w) / w;
      }));
  out.push_back(value_entry(
      {"values.mixed.half-two-half.tail", "values", "{1}^m at ({1}^{m-3},1/2,2,1/2), m odd", "p > m+1", 1, 199, odd_m,
       gt_m1},
      {multi_at(ones_m, [](const Params& p) { return Seq().ones(p["m"] - 3).put(kHalf).put(2).put(kHalf).v; }, false)},
      [=](auto& c, auto& p) -> Rational {
        long m = p["m"];
        return (pow2(m - 1) - 1) * (m * m - m + 2) / pow2(m + 1) * B(c, m) / m;
      }));
  out.push_back(value_entry(
      {"values.mixed.half-two-half.star", "values", "{1}^w star at (1/2,{1}^{k1-2},2,1/2,{1}^{k2-1}), odd weight",
       "p > k1+k2+1", 1, 199, pairs(W, [](long a, long b) { return (a + b) % 2 == 1 && a >= 2; }), gt_w1},
      {multi_at(ones_w2, [](const Params& p) { return Seq().put(kHalf).ones(p["k1"] - 2).put(2).put(kHalf).ones(p["k2"] - 1).v; },
                true)},
      [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], w = w2(p);
        return (pow2(w - 1) - 1) / pow2(w) * (1 + sgn(k1) * C(w, k1)) * B(c, w) / w;
      }));
  auto mv4 = [=](auto& c, auto& p) -> Rational {
    long m = p["m"];
    return A(m - 1) * (m - 1) * B(c, m) / m;
  };
  out.push_back(value_entry(
      {"values.mixed.one-two", "values", "{1}^m at (1,2,{1}^{m-2}) and ({1}^{m-2},1/2,1), m odd", "p > m+1", 1, 199,
       odd_m, gt_m1},
      {multi_at(ones_m, [](const Params& p) { return Seq().put(1).put(2).ones(p["m"] - 2).v; }, false),
       multi_at(ones_m, [](const Params& p) { return Seq().ones(p["m"] - 2).put(kHalf).put(1).v; }, false, -2)},
      mv4));
  out.push_back(value_entry(
      {"values.mixed.one-two.star", "values", "{1}^m star at ({1}^{m-2},2,1) and (1,1/2,{1}^{m-2}), m odd",
       "p > m+1", 1, 199, odd_m, gt_m1},
      {multi_at(ones_m, [](const Params& p) { return Seq().ones(p["m"] - 2).put(2).put(1).v; }, true),
       multi_at(ones_m, [](const Params& p) { return Seq().put(1).put(kHalf).ones(p["m"] - 2).v; }, true, -2)},
      mv4));

  // Depth w'-1 indices with a single 2.
  IndexFn idx_a = [](const Params& p) { return one_two_one(p["k1"] + p["k2"] - 1, p["k3"] - 1); };
  IndexFn idx_b = [](const Params& p) { return one_two_one(p["k1"] - 1, p["k2"] + p["k3"] - 1); };
  auto tri_a = triples(W, [](long a, long b, long c) { return a % 2 == 0 && (b + c) % 2 == 1; });
  auto tri_b = triples(W, [](long a, long b, long c) { return (a + b) % 2 == 1 && c % 2 == 0; });
  auto val_a = [=](auto& c, auto& p) -> Rational {
    long k1 = p["k1"], k3 = p["k3"], w = w3(p);
    return kHalf * (sgn(k3) * C(w, k3) - (1 - pow2(w - 1)) / pow2(w - 1) * C(w, k1)) * B(c, w) / w;
  };
  auto val_b = [=](auto& c, auto& p) -> Rational {
    long k1 = p["k1"], k3 = p["k3"], w = w3(p);
    return -kHalf * (sgn(k1) * C(w, k1) - (1 - pow2(w - 1)) / pow2(w - 1) * C(w, k3)) * B(c, w) / w;
  };
  auto args_a = [](Rational x, Rational y) {
    return [=](const Params& p) { return Seq().ones(p["k1"] - 1).put(x).put(y).ones(p["k2"] + p["k3"] - 2).v; };
  };
  auto args_b = [](Rational x, Rational y) {
    return [=](const Params& p) { return Seq().ones(p["k1"] + p["k2"] - 2).put(x).put(y).ones(p["k3"] - 1).v; };
  };
  out.push_back(value_entry({"values.mixed.depth3.a", "values", "single-2 index, k1 even, k2+k3 odd",
                             "p > k1+k2+k3+1", 1, 199, tri_a, gt_w31},
                            {multi_at(idx_a, args_a(kHalf, two), false)}, val_a));
  out.push_back(value_entry({"values.mixed.depth3.a.star", "values", "single-2 index star, k1 even, k2+k3 odd",
                             "p > k1+k2+k3+1", 1, 199, tri_a, gt_w31},
                            {multi_at(idx_a, args_a(two, kHalf), true)}, val_a));
  out.push_back(value_entry({"values.mixed.depth3.b", "values", "single-2 index, k1+k2 odd, k3 even",
                             "p > k1+k2+k3+1", 1, 199, tri_b, gt_w31},
                            {multi_at(idx_b, args_b(kHalf, two), false)}, val_b));
  out.push_back(value_entry({"values.mixed.depth3.b.star", "values", "single-2 index star, k1+k2 odd, k3 even",
                             "p > k1+k2+k3+1", 1, 199, tri_b, gt_w31},
                            {multi_at(idx_b, args_b(two, kHalf), true)}, val_b));

  auto tri_c = triples(W, [](long a, long b, long c) { return a % 2 == 0 && b % 2 == 1 && b > 1 && c % 2 == 0; });
  auto args_c = [](Rational x, Rational y) {
    return [=](const Params& p) {
      return Seq().ones(p["k1"] - 1).put(x).put(y).ones(p["k2"] - 2).put(x).put(y).ones(p["k3"] - 1).v;
    };
  };
  out.push_back(value_entry(
      {"values.mixed.depth3.c", "values", "{1}^w with two (1/2,2) pairs", "p > k1+k2+k3+1", 1, 199, tri_c, gt_w31},
      {multi_at(ones_w3, args_c(kHalf, two), false)}, [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], k3 = p["k3"], w = w3(p);
        return (1 - pow2(w - 1)) / pow2(w) * (C(w, k1) - C(w, k3)) * B(c, w) / w;
      }));
  out.push_back(value_entry(
      {"values.mixed.depth3.c.star", "values", "{1}^w star with two (2,1/2) pairs", "p > k1+k2+k3+1", 1, 199, tri_c,
       gt_w31},
      {multi_at(ones_w3, args_c(two, kHalf), true)}, [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], k3 = p["k3"], w = w3(p);
        return (1 - pow2(w - 1)) / pow2(w) * (C(w, k3) - C(w, k1)) * B(c, w) / w;
      }));

  auto even_even = pairs(W - 1, [](long a, long b) { return a % 2 == 0 && b % 2 == 0; });
  IndexFn ones_w21 = ones_fn([](const Params& p) { return w2(p) + 1; });
  auto args_d = [](Rational x, Rational y) {
    return [=](const Params& p) { return Seq().ones(p["k1"] - 1).put(x).put(1).put(y).ones(p["k2"] - 1).v; };
  };
  auto gt_w2 = above_fn([](const Params& p) { return w2(p) + 2; });
  out.push_back(value_entry(
      {"values.mixed.half-one-two", "values", "{1}^{w+1} at ({1}^{k1-1},1/2,1,2,{1}^{k2-1}), k1,k2 even",
       "p > k1+k2+2", 1, 199, even_even, gt_w2},
      {multi_at(ones_w21, args_d(kHalf, two), false)}, [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], k2 = p["k2"], w = w2(p);
        return (1 - pow2(w)) / pow2(w + 1) * (C(w + 1, k1) - C(w + 1, k2)) * B(c, w + 1) / (w + 1);
      }));
  out.push_back(value_entry(
      {"values.mixed.half-one-two.star", "values", "{1}^{w+1} star at ({1}^{k1-1},2,1,1/2,{1}^{k2-1}), k1,k2 even",
       "p > k1+k2+2", 1, 199, even_even, gt_w2},
      {multi_at(ones_w21, args_d(two, kHalf), true)}, [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], k2 = p["k2"], w = w2(p);
        return (1 - pow2(w)) / pow2(w + 1) * (C(w + 1, k2) - C(w + 1, k1)) * B(c, w + 1) / (w + 1);
      }));

  const Index i12{1, 2}, i21{2, 1}, i111{1, 1, 1}, i11{1, 1};
  auto B3 = [](const EvalContext& c) { return c.B(c.p() - 3); };
  out.push_back(value_entry(
      {"values.mixed.weight3.two-half", "values", "(1,2) and (2,1) at (2,1/2)", "p > 3", 1, 199, {}, gt(3)},
      {multi_at(i12, {two, kHalf}, false), multi_at(i12, {two, kHalf}, true), multi_at(i21, {two, kHalf}, false, -1),
       multi_at(i21, {two, kHalf}, true, -1)},
      [=](auto& c, auto&) -> Rational {
        Rational Q = c.q2();
        return Q * Q * Q - Rational(7, 8) * B3(c);
      }));
  out.push_back(value_entry(
      {"values.mixed.weight3.half-two", "values", "(1,2) and (2,1) at (1/2,2)", "p > 3", 1, 199, {}, gt(3)},
      {multi_at(i12, {kHalf, two}, false), multi_at(i12, {kHalf, two}, true), multi_at(i21, {kHalf, two}, false, -1),
       multi_at(i21, {kHalf, two}, true, -1)},
      [=](auto& c, auto&) -> Rational { return -Rational(7, 8) * B3(c); }));
  out.push_back(value_entry(
      {"values.mixed.weight3.two-one-half", "values", "{1}^3 at (2,1,1/2) vanishes", "p > 3", 1, 199, {}, gt(3)},
      {multi_at(i111, {two, one, kHalf}, false), multi_at(i111, {two, one, kHalf}, true)},
      [](auto&, auto&) -> Rational { return 0; }));
  out.push_back(value_entry(
      {"values.mixed.weight3.one-two-one", "values", "{1}^3 at (1,2,1) and (1,1/2,1)", "p > 3", 1, 199, {}, gt(3)},
      {multi_at(i111, {one, two, one}, false), multi_at(i111, {one, kHalf, one}, false, -2)},
      [=](auto& c, auto&) -> Rational { return kHalf * B3(c); }));

  // mod p^2
  auto ee = pairs(W - 1, [](long a, long b) { return a % 2 == 0 && b % 2 == 0; });
  auto gt_w21 = above_fn([](const Params& p) { return w2(p) + 2; });
  out.push_back(value_entry(
      {"values.mixed.half-two.mod-p2", "values", "{1}^{w-1} at ({1}^{k1-1},1/2,2,{1}^{k2-1}) mod p^2, k1,k2 even",
       "p > k1+k2+2", 2, 199, ee, gt_w21},
      {multi_at(ones_w2, around(kHalf, two), false)}, [=](auto& c, auto& p) -> Rational {
        long k2 = p["k2"], w = w2(p) + 1;
        return -kHalf * (1 + A(w - 1) * C(w, k2)) * B(c, w) / w * c.P();
      }));
  out.push_back(value_entry(
      {"values.mixed.two-half.star.mod-p2", "values",
       "{1}^{w-1} star at ({1}^{k1-1},2,1/2,{1}^{k2-1}) mod p^2, k1,k2 even", "p > k1+k2+2", 2, 199, ee, gt_w21},
      {multi_at(ones_w2, around(two, kHalf), true)}, [=](auto& c, auto& p) -> Rational {
        long k1 = p["k1"], w = w2(p) + 1;
        return kHalf * (1 + A(w - 1) * C(w, k1)) * B(c, w) / w * c.P();
      }));
  struct W2 {
    const char* id;
    std::vector<Rational> args;
    bool star;
    // a q^2 + (cq3 q^3 + b B_{p-3}) p
    Rational a, b;
    Rational cq3;
  };
  const W2 w2s[] = {
      {"values.mixed.ones2.two-half.mod-p2", {two, kHalf}, false, -2, Rational(-7, 8), 1},
      {"values.mixed.ones2.two-half.mod-p2.star", {two, kHalf}, true, -2, Rational(-5, 24), 1},
      {"values.mixed.ones2.half-two.mod-p2", {kHalf, two}, false, 0, Rational(5, 24), 0},
      {"values.mixed.ones2.half-two.mod-p2.star", {kHalf, two}, true, 0, Rational(7, 8), 0},
  };
  for (const auto& e : w2s) {
    out.push_back(value_entry({e.id, "values", "(1,1) at arguments 2 and 1/2 mod p^2", "p > 3", 2, 199, {}, gt(3)},
                              {multi_at(i11, e.args, e.star)},
                              [a = e.a, b = e.b, cq = e.cq3, B3](auto& c, auto&) -> Rational {
                                Rational Q = c.q2();
                                return a * Q * Q + (cq * Q * Q * Q + b * B3(c)) * c.P();
                              }));
  }
}

}  // namespace

void add_value_entries(std::vector<IdentityEntry>& out) {
  add_one_variable(out);
  add_fermat_quotient_values(out);
  add_alternating(out);
  add_mixed(out);
}

}  // namespace fpl::registry_detail
