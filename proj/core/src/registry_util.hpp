#pragma once

// Shared helpers for the catalog source files. Not installed.

#include <functional>
#include <string>
#include <vector>

#include "fpl/registry.hpp"

namespace fpl::registry_detail {

using RationalFn = std::function<Rational(const EvalContext&, const Params&)>;
using GuardFn = std::function<Guard(const Params&)>;

inline Index ones(int m) { return Index(std::vector<int>(static_cast<std::size_t>(m), 1)); }
inline Rational C(long n, long k) { return Rational(binomial(n, k)); }
inline Rational sgn(long e) { return (e % 2 == 0) ? Rational(1) : Rational(-1); }
inline Rational frac(long a, long b) { return Rational(a, b); }
// (2^{e}-1)/2^{e}
inline Rational one_minus_2inv(long e) { return 1 - pow2(-e); }

Guard above(long x, std::uint32_t modulus = 1);  // p > x
GuardFn above_fn(std::function<long(const Params&)> x);

// Cartesian product of inclusive integer ranges, optionally filtered.
std::vector<Params> grid(const std::vector<std::string>& names, const std::vector<std::pair<long, long>>& ranges,
                         const std::function<bool(const Params&)>& keep = {});
// All indices with min_w <= weight <= max_w, optionally filtered.
std::vector<Params> index_grid(int min_w, int max_w, const std::function<bool(const Index&)>& keep = {});
// Every index param crossed with the named ranges.
std::vector<Params> cross(const std::vector<Params>& base, const std::string& name, long lo, long hi,
                          const std::function<bool(const Params&)>& keep = {});

// Argument vectors such as ({1}^{a}, 1/2, 2, {1}^{b}).
class Args {
 public:
  explicit Args(const EvalContext& c) : c_(c) {}
  Args& ones(long count);
  Args& put(const Residue& r) {
    v_.push_back(r);
    return *this;
  }
  Args& put(const Rational& r) {
    v_.push_back(c_.arg(r));
    return *this;
  }
  Args& put(long v) { return put(Rational(v)); }
  const std::vector<Residue>& get() const { return v_; }
  operator std::span<const Residue>() const { return v_; }

 private:
  const EvalContext& c_;
  std::vector<Residue> v_;
};

struct EntrySpec {
  std::string id;
  std::string group;
  std::string title;
  std::string guard_text;
  int exponent = 1;
  std::uint32_t pmax = 199;
  std::vector<Params> params;
  GuardFn guard;
};

// Closed form: lhs is evaluated, rhs is an exact rational reduced mod p^n.
IdentityEntry closed_form(EntrySpec s, Evaluator lhs, RationalFn rhs);
// Same shape, both sides evaluated (for "X = -Y" companions and zero sums).
IdentityEntry closed_form_eval(EntrySpec s, Evaluator lhs, Evaluator rhs);
IdentityEntry functional(EntrySpec s, std::function<int(const Params&)> arity, Evaluator lhs, Evaluator rhs);

// Sub-index k_from..k_to, 1-based and inclusive.
Index slice(const Index& k, int from, int to);

}  // namespace fpl::registry_detail
