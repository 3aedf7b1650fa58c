#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "fpl/registry.hpp"
#include "registry_util.hpp"

namespace fpl {

long Params::operator[](std::string_view name) const {
  for (const auto& [key, v] : values) {
    if (key == name) return v;
  }
  throw std::out_of_range("missing parameter '" + std::string(name) + "'");
}

bool Params::has(std::string_view name) const {
  if (name == "k") return k.has_value();
  return std::any_of(values.begin(), values.end(), [&](const auto& kv) { return kv.first == name; });
}

const Index& Params::index() const {
  if (!k) throw std::out_of_range("missing index parameter 'k'");
  return *k;
}

std::string Params::str() const {
  std::string out;
  if (k) out = "k=" + k->str();
  for (const auto& [key, v] : values) {
    if (!out.empty()) out += ',';
    out += key + "=" + std::to_string(v);
  }
  return out;
}

Params Params::parse(std::string_view text) {
  Params out;
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(' || c == '{') ++depth;
    if (c == ')' || c == '}') --depth;
    if (c == ',' && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) items.push_back(cur);
  for (const auto& item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("expected name=value, got '" + item + "'");
    std::string name = item.substr(0, eq);
    std::string value = item.substr(eq + 1);
    // A bare integer k is an ordinary parameter; an index is written (..) or {..}.
    if (name == "k" && !value.empty() && !std::isdigit(static_cast<unsigned char>(value.front()))) {
      out.k = Index::parse(value);
    } else {
      std::size_t used = 0;
      long v = std::stol(value, &used);
      if (used != value.size()) throw std::invalid_argument("bad integer '" + value + "'");
      out.values.emplace_back(name, v);
    }
  }
  return out;
}

EvalContext::EvalContext(std::uint32_t p, int n) : ring_(p, n) {}

Residue EvalContext::R(const Rational& r) const { return Residue(ring_, ring_.from_rational(r)); }

Residue EvalContext::inv_arg(const Residue& x) const {
  if (!x.is_unit()) throw Inadmissible("non-unit at p=" + std::to_string(ring_.p));
  return x.inv();
}

Residue EvalContext::arg(const Rational& r) const {
  if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), ring_.p)) {
    throw Inadmissible(to_string(r) + " is not p-integral at p=" + std::to_string(ring_.p));
  }
  return R(r);
}

Rational EvalContext::q2() const { return Rational(fermat_quotient_exact(2, ring_.p)); }

Rational EvalContext::B(long m) { return bernoulli(m); }
Rational EvalContext::Bh(long m) { return bernoulli_hat(m); }

Residue EvalContext::zeta(const Index& k, bool star) const { return mhs(k, ring_.p, ring_.n, star); }

namespace {
std::vector<std::uint64_t> raw(const Index& k, std::span<const Residue> t) {
  if (static_cast<int>(t.size()) != k.depth()) throw std::invalid_argument("argument count does not match depth");
  std::vector<std::uint64_t> v;
  v.reserve(t.size());
  for (const auto& r : t) v.push_back(r.value());
  return v;
}
}  // namespace

Residue EvalContext::harmonic(const Index& k, std::span<const Residue> t, bool star) const {
  return nested_sum(ring_, k, raw(k, t), star, SumKind::harmonic);
}

Residue EvalContext::harmonic(const Index& k, std::initializer_list<Residue> t, bool star) const {
  return harmonic(k, std::span<const Residue>(t.begin(), t.size()), star);
}

Residue EvalContext::shuffle(const Index& k, std::span<const Residue> t, bool star) const {
  return nested_sum(ring_, k, raw(k, t), star, SumKind::shuffle);
}

Residue EvalContext::head(const Index& k, const Residue& t, bool star) const {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(k.depth()), 1 % ring_.m);
  v.front() = t.value();
  return nested_sum(ring_, k, v, star, SumKind::harmonic);
}

Residue EvalContext::tail(const Index& k, const Residue& t, bool star) const {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(k.depth()), 1 % ring_.m);
  v.back() = t.value();
  return nested_sum(ring_, k, v, star, SumKind::harmonic);
}

Residue EvalContext::li(const Index& k, const Residue& t) const { return oy_li(ring_, k, t.value()); }

std::vector<std::vector<Rational>> sample_arguments(int arity) {
  static const std::vector<Rational> base = {Rational(-1), Rational(2), Rational(1, 2),
                                             Rational(3), Rational(-1, 3), Rational(5, 2)};
  if (arity <= 0) return {{}};
  if (arity == 1) {
    std::vector<std::vector<Rational>> out;
    for (const auto& t : base) out.push_back({t});
    out.push_back({Rational(1)});
    return out;
  }
  const std::size_t b = base.size();
  std::size_t total = 1;
  for (int i = 0; i < arity; ++i) total *= b;
  std::vector<std::size_t> picks;
  if (arity == 2) {
    for (std::size_t i = 0; i < total; ++i) picks.push_back(i);
  } else {
    // 36 tuples along a stride coprime to 6, so every coordinate varies.
    constexpr std::size_t stride = 7919;
    for (std::size_t i = 0; i < 36; ++i) picks.push_back(i * stride % total);
  }
  std::vector<std::vector<Rational>> out;
  for (std::size_t code : picks) {
    std::vector<Rational> tuple;
    for (int i = 0; i < arity; ++i) {
      tuple.push_back(base[code % b]);
      code /= b;
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

std::vector<CheckRecord> evaluate(const IdentityEntry& e, const Params& params, std::uint32_t p, int* skipped,
                                  long rhs_shift) {
  std::vector<CheckRecord> out;
  EvalContext ctx(p, e.exponent);
  const int arity = e.arity ? e.arity(params) : 0;
  const std::string pstr = params.str();
  for (const auto& sample : sample_arguments(arity)) {
    CheckRecord rec;
    rec.id = e.id;
    rec.params = pstr;
    rec.p = p;
    rec.n = e.exponent;
    if (!sample.empty()) {
      rec.args = "(";
      for (std::size_t i = 0; i < sample.size(); ++i) rec.args += (i ? "," : "") + to_string(sample[i]);
      rec.args += ")";
    }
    try {
      std::vector<Residue> args;
      for (const auto& t : sample) args.push_back(ctx.arg(t));
      Residue l = e.lhs(ctx, params, args);
      Residue r = e.rhs(ctx, params, args) + ctx.R(rhs_shift);
      rec.lhs = std::to_string(l.value());
      rec.rhs = std::to_string(r.value());
      rec.pass = l == r;
    } catch (const Inadmissible&) {
      if (skipped) ++*skipped;
      continue;
    } catch (const std::exception& ex) {
      rec.error = ex.what();
      rec.pass = false;
    }
    out.push_back(std::move(rec));
  }
  return out;
}

namespace registry_detail {

Guard above(long x, std::uint32_t modulus) {
  Guard g;
  g.min_prime = static_cast<std::uint32_t>(std::max(2L, x + 1));
  g.modulus = modulus;
  return g;
}

GuardFn above_fn(std::function<long(const Params&)> x) {
  return [x = std::move(x)](const Params& p) { return above(x(p)); };
}

std::vector<Params> grid(const std::vector<std::string>& names, const std::vector<std::pair<long, long>>& ranges,
                         const std::function<bool(const Params&)>& keep) {
  std::vector<Params> out;
  Params cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == names.size()) {
      if (!keep || keep(cur)) out.push_back(cur);
      return;
    }
    for (long v = ranges[i].first; v <= ranges[i].second; ++v) {
      cur.values.emplace_back(names[i], v);
      rec(i + 1);
      cur.values.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<Params> index_grid(int min_w, int max_w, const std::function<bool(const Index&)>& keep) {
  std::vector<Params> out;
  for (int w = min_w; w <= max_w; ++w) {
    for (auto& k : compositions(w)) {
      if (keep && !keep(k)) continue;
      Params p;
      p.k = k;
      out.push_back(std::move(p));
    }
  }
  return out;
}

std::vector<Params> cross(const std::vector<Params>& base, const std::string& name, long lo, long hi,
                          const std::function<bool(const Params&)>& keep) {
  std::vector<Params> out;
  for (const auto& b : base) {
    for (long v = lo; v <= hi; ++v) {
      Params p = b;
      p.values.emplace_back(name, v);
      if (!keep || keep(p)) out.push_back(std::move(p));
    }
  }
  return out;
}

Args& Args::ones(long count) {
  for (long i = 0; i < count; ++i) v_.push_back(c_.one());
  return *this;
}

namespace {
IdentityEntry from_spec(EntrySpec s, EntryKind kind) {
  IdentityEntry e;
  e.id = std::move(s.id);
  e.group = std::move(s.group);
  e.title = std::move(s.title);
  e.guard_text = std::move(s.guard_text);
  e.kind = kind;
  e.exponent = s.exponent;
  e.pmax = s.pmax;
  e.params = std::move(s.params);
  e.guard = s.guard ? std::move(s.guard) : GuardFn([](const Params&) { return Guard{}; });
  return e;
}
}  // namespace

IdentityEntry closed_form(EntrySpec s, Evaluator lhs, RationalFn rhs) {
  IdentityEntry e = from_spec(std::move(s), EntryKind::closed_form);
  e.arity = [](const Params&) { return 0; };
  e.lhs = std::move(lhs);
  e.rhs = [rhs = std::move(rhs)](const EvalContext& c, const Params& p, std::span<const Residue>) {
    return c.R(rhs(c, p));
  };
  return e;
}

IdentityEntry closed_form_eval(EntrySpec s, Evaluator lhs, Evaluator rhs) {
  IdentityEntry e = from_spec(std::move(s), EntryKind::closed_form);
  e.arity = [](const Params&) { return 0; };
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  return e;
}

IdentityEntry functional(EntrySpec s, std::function<int(const Params&)> arity, Evaluator lhs, Evaluator rhs) {
  IdentityEntry e = from_spec(std::move(s), EntryKind::functional_eq);
  e.arity = std::move(arity);
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  return e;
}

Index slice(const Index& k, int from, int to) {
  if (from < 1 || to > k.depth() || from > to) throw std::invalid_argument("slice out of range");
  return Index(std::vector<int>(k.parts().begin() + (from - 1), k.parts().begin() + to));
}

}  // namespace registry_detail
}  // namespace fpl
