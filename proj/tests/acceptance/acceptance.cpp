// End-to-end acceptance run: one PASS/FAIL line per criterion, nonzero exit
// if any criterion fails.

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "fpl/exact.hpp"
#include "fpl/fmp.hpp"
#include "fpl/registry.hpp"
#include "fpl/polyid.hpp"
#include "fpl/verifier.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Tally {
  std::size_t checked = 0, failed = 0;
  std::string first_failure;

  void add(bool ok, const std::string& what) {
    ++checked;
    if (!ok) {
      if (failed == 0) first_failure = what;
      ++failed;
    }
  }
  Outcome outcome(const std::string& extra = {}) const {
    Outcome o;
    o.pass = checked > 0 && failed == 0;
    o.detail = std::to_string(checked - failed) + "/" + std::to_string(checked) + " checks";
    if (!extra.empty()) o.detail += ", " + extra;
    if (failed) o.detail += ", first failure " + first_failure;
    return o;
  }
};

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1f s", s);
  return buf;
}

// Runs every parameter choice of the matching entries at the primes the
// entry guard admits up to pmax.
void sweep(Tally& t, const std::vector<std::string>& globs, std::uint32_t pmin, std::uint32_t pmax,
           const std::function<bool(const fpl::Params&)>& keep) {
  for (const auto& e : fpl::catalog()) {
    if (!fpl::id_selected(e.id, globs)) continue;
    for (const auto& params : e.params) {
      if (!keep(params)) continue;
      const auto g = e.guard(params);
      for (std::uint32_t p : fpl::primes_between(pmin, pmax)) {
        if (!g.admits(p)) continue;
        for (const auto& r : fpl::evaluate(e, params, p)) {
          t.add(r.pass, r.id + " [" + r.params + "] " + r.args + " p=" + std::to_string(p));
        }
      }
    }
  }
}

long weight_of(const fpl::Params& p) {
  if (p.k) return p.k->weight();
  long w = 0;
  for (const char* name : {"k1", "k2", "k3"}) {
    if (p.has(name)) w += p[name];
  }
  return w;
}

Outcome polynomial_suite() {
  const auto t0 = Clock::now();
  Tally t;
  for (const auto& info : fpl::poly_identities()) {
    for (const auto& pp : fpl::poly_parameter_grid(info.id, 4, 5)) {
      t.add(fpl::verify_poly_identity(info.id, pp), info.id + " " + fpl::describe(info.id, pp));
    }
  }
  const double s = since(t0);
  auto o = t.outcome(std::to_string(fpl::poly_identities().size()) + " identities, " + secs(s));
  o.pass = o.pass && s < 60;
  return o;
}

Outcome zhou_cai() {
  Tally t;
  sweep(t, {"zeta.zhou-cai.star"}, 2, 199, [](const fpl::Params& p) { return p["k"] * p["m"] <= 6; });
  return t.outcome();
}

Outcome ones_at_half() {
  const auto t0 = Clock::now();
  Tally t;
  std::size_t minus = 0;
  for (int m : {2, 4}) {
    const fpl::Index k(std::vector<int>(static_cast<std::size_t>(m), 1));
    for (std::uint32_t p : fpl::primes_between(static_cast<std::uint32_t>(m + 3), 499)) {
      const auto lhs = fpl::fast_nested_eval(k, fpl::Rational(1, 2), p, 2, true, fpl::End::head);
      const fpl::Rational c = (fpl::pow2(m + 1) - 1) / fpl::pow2(m + 1) * fpl::bernoulli(p - m - 1) / (m + 1) * p;
      const auto rhs = fpl::reduce_rational(c, p, 2);
      t.add(lhs == rhs, "m=" + std::to_string(m) + " p=" + std::to_string(p));
      if (lhs == -rhs && rhs.value() != 0) ++minus;
    }
  }
  const double s = since(t0);
  auto o = t.outcome("positive sign; the negated right side holds at " + std::to_string(minus) + " primes, " + secs(s));
  o.pass = o.pass && s < 30;
  return o;
}

Outcome ppt() {
  Tally t;
  sweep(t, {"ppt", "ppt.star"}, 2, 199, [](const fpl::Params& p) { return weight_of(p) % 2 == 0 && weight_of(p) <= 6; });
  return t.outcome();
}

Outcome mixed_values() {
  Tally t;
  sweep(t, {"values.mixed.*"}, 2, 101, [](const fpl::Params& p) { return weight_of(p) <= 7; });
  return t.outcome();
}

Outcome bernoulli_appendix() {
  const auto t0 = Clock::now();
  Tally main, rest;
  sweep(main, {"bernoulli.generalized.mod-p3.*"}, 2, 61, [](const fpl::Params& p) { return p["k"] >= 2 && p["k"] <= 7; });
  sweep(rest, {"bernoulli.generalized.mod-p2", "bernoulli.generalized.mod-p", "bernoulli.generalized.classical",
               "bernoulli.kummer-sun", "bernoulli.power-sum.*"},
        2, 61, [](const fpl::Params&) { return true; });
  const double s = since(t0);
  Outcome o;
  o.pass = main.checked && rest.checked && !main.failed && !rest.failed && s < 120;
  o.detail = "mod p^3 congruence " + std::to_string(main.checked - main.failed) + "/" + std::to_string(main.checked) +
             ", mod p^2, mod p, Kummer-Sun and power sums " + std::to_string(rest.checked - rest.failed) + "/" +
             std::to_string(rest.checked) + ", " + secs(s);
  if (main.failed) o.detail += ", first failure " + main.first_failure;
  if (rest.failed) o.detail += ", first failure " + rest.first_failure;
  return o;
}

Outcome oracles() {
  Tally fast, oy, dual;
  std::mt19937_64 rng(20240917);
  const auto primes = fpl::primes_between(2, 31);
  const std::vector<fpl::Rational> ts = {fpl::Rational(-1), fpl::Rational(2), fpl::Rational(1, 2),
                                         fpl::Rational(3), fpl::Rational(-1, 3), fpl::Rational(5, 2)};
  while (fast.checked < 500) {
    const std::uint32_t p = primes[rng() % primes.size()];
    const auto comps = fpl::compositions(1 + static_cast<int>(rng() % 5));
    const fpl::Index k = comps[rng() % comps.size()];
    if (k.depth() > 3) continue;
    const fpl::Rational t = ts[rng() % ts.size()];
    if (p == 2 || (p == 3 && (t == 3 || t == fpl::Rational(-1, 3))) || (p == 5 && t == fpl::Rational(5, 2))) continue;
    const int n = 1 + static_cast<int>(rng() % 3);
    const bool star = rng() & 1;
    const fpl::End end = (rng() & 1) ? fpl::End::head : fpl::End::tail;
    fpl::EvalRequest req;
    req.index = k;
    req.args = {t};
    req.star = star;
    req.flavor = end == fpl::End::head ? fpl::Flavor::head : fpl::Flavor::tail;
    req.p = p;
    req.n = n;
    fast.add(fpl::fast_nested_eval(k, t, p, n, star, end) == fpl::fmp_multi(req),
             k.str() + " t=" + t.get_str() + " p=" + std::to_string(p));
  }
  for (std::uint32_t p : fpl::primes_between(5, 31)) {
    for (int w = 1; w <= 5; ++w) {
      for (const auto& k : fpl::compositions(w)) {
        if (k.depth() > 3) continue;
        for (const fpl::Rational& t : {fpl::Rational(-1), fpl::Rational(2), fpl::Rational(1, 2), fpl::Rational(3)}) {
          oy.add(fpl::oy_decompose(k, t, p, 1) == fpl::oy_li(k, t, p, 1),
                 k.str() + " t=" + t.get_str() + " p=" + std::to_string(p));
        }
      }
    }
  }
  for (int w = 1; w <= 12; ++w) {
    for (const auto& k : fpl::compositions(w)) dual.add(fpl::hoffman_dual(k) == fpl::hoffman_dual_powerset(k), k.str());
  }
  Outcome o;
  o.pass = !fast.failed && !oy.failed && !dual.failed;
  o.detail = "fast/naive " + std::to_string(fast.checked - fast.failed) + "/" + std::to_string(fast.checked) +
             ", decomposition " + std::to_string(oy.checked - oy.failed) + "/" + std::to_string(oy.checked) +
             ", duals " + std::to_string(dual.checked - dual.failed) + "/" + std::to_string(dual.checked);
  return o;
}

Outcome distribution() {
  Tally t;
  sweep(t, {"ones.distribution.head", "ones.distribution.tail", "ones.distribution.head-star",
            "ones.distribution.tail-star"},
        2, 101, [](const fpl::Params& p) { return p["m"] <= 3; });
  return t.outcome();
}

Outcome sentinel() {
  fpl::SuiteConfig cfg;
  cfg.level = fpl::Level::full;
  cfg.polynomial = false;
  cfg.jobs = std::max(1u, std::thread::hardware_concurrency());
  const auto t0 = Clock::now();
  const auto report = fpl::run_suite(cfg);
  Outcome o;
  std::size_t detected = 0;
  for (const auto& s : report.sentinel) {
    detected += s.ok() ? 1 : 0;
    o.detail += s.id + " " + std::to_string(s.detected) + "/" + std::to_string(s.cells) + ", ";
  }
  o.pass = detected >= 3;
  o.detail += "full sweep " + std::to_string(report.records.size() - report.failures()) + "/" +
              std::to_string(report.records.size()) + " in " + secs(since(t0));
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"polynomial identities, weight <= 4, N <= 5", polynomial_suite},
      {"star sums of {k}^m mod p^2, mk <= 6, p <= 199", zhou_cai},
      {"{1}^m star head form at 1/2 mod p^2, m in {2,4}, p <= 499", ones_at_half},
      {"PPT congruences, even weight <= 6, p <= 199", ppt},
      {"mixed-argument values, weight <= 7, p <= 101", mixed_values},
      {"generalized Bernoulli, Kummer-Sun and power sums, p <= 61", bernoulli_appendix},
      {"oracle equivalences", oracles},
      {"distribution relations, n in {-1,2,3,4}, m <= 3, p <= 101", distribution},
      {"mutation sentinel on the full sweep", sentinel},
  };
  int failed = 0;
  int i = 0;
  for (const auto& [name, run] : criteria) {
    ++i;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& ex) {
      o = {false, std::string("exception: ") + ex.what()};
    }
    failed += o.pass ? 0 : 1;
    std::printf("criterion %d %s: %s (%s)\n", i, o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}
