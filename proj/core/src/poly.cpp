#include "fpl/poly.hpp"

#include <stdexcept>

namespace fpl {

int VarSet::position(std::string_view name) const {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  throw std::invalid_argument("unknown variable '" + std::string(name) + "'");
}

MultiPoly::MultiPoly(std::shared_ptr<const VarSet> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> names, std::vector<bool> laurent) {
  if (laurent.empty()) laurent.assign(names.size(), false);
  if (laurent.size() != names.size()) throw std::invalid_argument("laurent flags do not match variables");
  vars_ = std::make_shared<const VarSet>(VarSet{std::move(names), std::move(laurent)});
}

MultiPoly MultiPoly::constant(const MultiPoly& like, const Rational& c) {
  return monomial(like, Exponents(like.vars().names.size(), 0), c);
}

MultiPoly MultiPoly::monomial(const MultiPoly& like, const Exponents& e, const Rational& c) {
  MultiPoly r(like.vars_);
  r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::variable(const MultiPoly& like, std::string_view name, int power) {
  Exponents e(like.vars().names.size(), 0);
  e[static_cast<std::size_t>(like.vars().position(name))] = power;
  return monomial(like, e);
}

void MultiPoly::check_same(const MultiPoly& o) const {
  if (vars_ != o.vars_ && !(vars_ && o.vars_ && *vars_ == *o.vars_)) {
    throw std::invalid_argument("polynomials over different variable sets");
  }
}

void MultiPoly::check_exponents(const Exponents& e) const {
  if (e.size() != vars_->names.size()) throw std::invalid_argument("exponent length mismatch");
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 && !vars_->laurent[i]) {
      throw std::domain_error("negative exponent on non-Laurent variable " + vars_->names[i]);
    }
  }
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  check_exponents(e);
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  MultiPoly r(a.vars_);
  MultiPoly::Exponents e(a.vars_->names.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(*this);
  for (auto& [e, v] : r.terms_) v = -v;
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(*this, 1);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

MultiPoly MultiPoly::subst(std::string_view name, const Rational& value) const {
  const std::size_t pos = static_cast<std::size_t>(vars_->position(name));
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    const int k = f[pos];
    f[pos] = 0;
    if (value == 1) {
      r.add_term(f, c);
      continue;
    }
    if (value == 0) {
      if (k == 0) r.add_term(f, c);
      if (k < 0) throw std::domain_error("substituting 0 into a negative power");
      continue;
    }
    Rational v = 1;
    Rational base = k >= 0 ? value : Rational(1) / value;
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) v *= base;
    r.add_term(f, c * v);
  }
  return r;
}

MultiPoly MultiPoly::subst(std::string_view name, const MultiPoly& value) const {
  check_same(value);
  const std::size_t pos = static_cast<std::size_t>(vars_->position(name));
  std::map<int, MultiPoly> powers;
  MultiPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    const int k = e[pos];
    if (k < 0) throw std::domain_error("polynomial substitution into a negative power");
    auto it = powers.find(k);
    if (it == powers.end()) it = powers.emplace(k, value.pow(static_cast<unsigned>(k))).first;
    Exponents f = e;
    f[pos] = 0;
    r += monomial(*this, f, c) * it->second;
  }
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.check_same(b);
  return a.terms_ == b.terms_;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c >= 0 ? c : Rational(-c);
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    bool unit = mag == 1;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars_->names[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (!unit) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

MultiPoly op_I(const MultiPoly& f, std::string_view t) {
  const std::size_t pos = static_cast<std::size_t>(f.vars().position(t));
  MultiPoly r(f.var_ptr());
  for (const auto& [e, c] : f.terms()) {
    if (e[pos] <= 0) throw std::domain_error("op_I needs f in tR[t]");
    r.add_term(e, c / e[pos]);
  }
  return r;
}

MultiPoly op_J_star(const MultiPoly& f, std::string_view t, std::string_view s) {
  const std::size_t ti = static_cast<std::size_t>(f.vars().position(t));
  const std::size_t si = static_cast<std::size_t>(f.vars().position(s));
  MultiPoly r(f.var_ptr());
  for (const auto& [e, c] : f.terms()) {
    const int a = e[ti], b = e[si];
    if (a < 0 || b < 0) throw std::domain_error("op_J_star needs a polynomial in t and s");
    for (int j = 1; j <= a; ++j) {
      auto g = e;
      g[ti] = a - j;
      g[si] = b + j;
      r.add_term(g, c / (b + j));
    }
  }
  return r;
}

MultiPoly op_J_N(const MultiPoly& f, std::string_view t, std::string_view s, int N) {
  if (N < 1) throw std::domain_error("op_J_N needs N >= 1");
  const std::size_t ti = static_cast<std::size_t>(f.vars().position(t));
  const std::size_t si = static_cast<std::size_t>(f.vars().position(s));
  MultiPoly r(f.var_ptr());
  for (const auto& [e, c] : f.terms()) {
    const int a = e[ti], b = e[si];
    if (a < 0 || b < 0) throw std::domain_error("op_J_N needs a polynomial in t and s");
    for (int j = a + 1; j <= N - b; ++j) {
      auto g = e;
      g[ti] = a - j;
      g[si] = b + j;
      r.add_term(g, c / (b + j));
    }
  }
  return r;
}

}  // namespace fpl
