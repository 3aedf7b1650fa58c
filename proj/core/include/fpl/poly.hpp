#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fpl/exact.hpp"

namespace fpl {

struct VarSet {
  std::vector<std::string> names;
  std::vector<bool> laurent;  // negative exponents allowed

  int position(std::string_view name) const;  // throws if absent
  friend bool operator==(const VarSet&, const VarSet&) = default;
};

// Sparse polynomial over Q in a fixed, ordered set of variables. Terms are
// kept in a sorted map without zero coefficients, so structural equality is
// polynomial equality.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using Terms = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(std::shared_ptr<const VarSet> vars);
  MultiPoly(std::vector<std::string> names, std::vector<bool> laurent = {});

  static MultiPoly constant(const MultiPoly& like, const Rational& c);
  static MultiPoly monomial(const MultiPoly& like, const Exponents& e, const Rational& c = 1);
  static MultiPoly variable(const MultiPoly& like, std::string_view name, int power = 1);

  const VarSet& vars() const { return *vars_; }
  const std::shared_ptr<const VarSet>& var_ptr() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  MultiPoly pow(unsigned e) const;

  // Replace a variable by a constant; the variable keeps its slot with
  // exponent 0. Substituting 1 just forgets the exponent, so 0^0 = 1 holds
  // structurally.
  MultiPoly subst(std::string_view name, const Rational& value) const;
  MultiPoly subst(std::string_view name, const MultiPoly& value) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string str() const;

 private:
  void check_same(const MultiPoly& o) const;
  void check_exponents(const Exponents& e) const;

  std::shared_ptr<const VarSet> vars_;
  Terms terms_;
};

// t^n -> t^n/n; f must have no terms free of t.
MultiPoly op_I(const MultiPoly& f, std::string_view t);

// pr_t . I_{t,s}, where I_{t,s} f = integral f/(t-s) ds expanded in s/t:
// t^a s^b -> sum_{j=1}^{a} t^{a-j} s^{b+j} / (b+j).
MultiPoly op_J_star(const MultiPoly& f, std::string_view t, std::string_view s);

// tau_s^{<=N} . pr_t^- . I_{t,s}:
// t^a s^b -> sum_{j=a+1}^{N-b} t^{a-j} s^{b+j} / (b+j). t must be Laurent.
MultiPoly op_J_N(const MultiPoly& f, std::string_view t, std::string_view s, int N);

}  // namespace fpl
