#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fpl/exact.hpp"
#include "fpl/fmp.hpp"
#include "fpl/index.hpp"
#include "fpl/residue.hpp"

namespace fpl {

// A sample point that makes some quantity a non-unit at this prime (an
// argument with p in its denominator, 1 - t divisible by p, ...). Such cells
// are skipped, not failed.
class Inadmissible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Named integer slots plus an optional index slot "k".
struct Params {
  std::optional<Index> k;
  std::vector<std::pair<std::string, long>> values;

  long operator[](std::string_view name) const;  // throws if absent
  bool has(std::string_view name) const;
  const Index& index() const;
  std::string str() const;  // "k=(2,1)", "k1=2,k2=1"

  // Accepts the str() format; index values may use the Index literal syntax.
  static Params parse(std::string_view text);

  friend bool operator==(const Params&, const Params&) = default;
};

// p is admissible when p >= min_prime and p = 1 (mod modulus).
struct Guard {
  std::uint32_t min_prime = 2;
  std::uint32_t modulus = 1;
  std::uint32_t excluded = 0;  // one prime where the stated bound is not enough
  bool admits(std::uint32_t p) const {
    return p >= min_prime && p != excluded && (modulus <= 1 || p % modulus == 1);
  }
};

// Everything an evaluator needs at one (p, n).
class EvalContext {
 public:
  EvalContext(std::uint32_t p, int n);

  std::uint32_t p() const { return ring_.p; }
  int n() const { return ring_.n; }
  const Ring& ring() const { return ring_; }

  Residue R(const Rational& r) const;  // throws NonUnitDenominator
  Residue R(long long v) const { return Residue(ring_, ring_.from_int(v)); }
  Residue zero() const { return R(0); }
  Residue one() const { return R(1); }
  Residue pp() const { return R(static_cast<long long>(ring_.p)); }

  // Inverse of a sample-dependent quantity; throws Inadmissible.
  Residue inv_arg(const Residue& x) const;
  // Reduces a sample argument; throws Inadmissible on a p in the denominator.
  Residue arg(const Rational& r) const;

  // Exact rationals for closed forms, reduced only at the end.
  Rational P() const { return Rational(ring_.p); }
  Rational q2() const;  // (2^{p-1} - 1)/p
  static Rational B(long m);
  static Rational Bh(long m);

  Residue zeta(const Index& k, bool star) const;
  // Harmonic and shuffle multi-variable sums.
  Residue harmonic(const Index& k, std::span<const Residue> t, bool star) const;
  Residue harmonic(const Index& k, std::initializer_list<Residue> t, bool star) const;
  Residue shuffle(const Index& k, std::span<const Residue> t, bool star) const;
  // One-variable forms: t on n_1 (head) or on n_m (tail).
  Residue head(const Index& k, const Residue& t, bool star) const;
  Residue tail(const Index& k, const Residue& t, bool star) const;
  Residue li(const Index& k, const Residue& t) const;

 private:
  Ring ring_;
};

enum class EntryKind { closed_form, functional_eq };

using Evaluator = std::function<Residue(const EvalContext&, const Params&, std::span<const Residue>)>;

struct IdentityEntry {
  std::string id;
  std::string group;
  std::string title;       // short description of the identity
  std::string guard_text;  // e.g. "p > mk+2"
  EntryKind kind = EntryKind::closed_form;
  int exponent = 1;            // checked mod p^exponent
  std::uint32_t pmax = 199;    // cost cap for the full sweep
  std::vector<Params> params;  // parameter grid used by the suite
  std::function<Guard(const Params&)> guard;
  std::function<int(const Params&)> arity;  // sampled arguments; 0 for closed forms
  Evaluator lhs;
  Evaluator rhs;
};

const std::vector<IdentityEntry>& catalog();
const IdentityEntry* find_entry(std::string_view id);

// The deterministic sample set for an equation in `arity` variables.
std::vector<std::vector<Rational>> sample_arguments(int arity);

struct CheckRecord {
  std::string id;
  std::string params;
  std::string args;  // "(-1,2)" or "" for closed forms
  std::uint32_t p = 0;
  int n = 0;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  std::string error;  // set when an evaluator threw
};

// Evaluates one (entry, params, prime) cell at every admissible sample point.
// `skipped` counts inadmissible points. rhs_shift is added to the right-hand
// side (the mutation sentinel uses 1).
std::vector<CheckRecord> evaluate(const IdentityEntry& e, const Params& params, std::uint32_t p,
                                  int* skipped = nullptr, long rhs_shift = 0);

// Registration hooks, one per source file.
namespace registry_detail {
void add_zeta_entries(std::vector<IdentityEntry>& out);
void add_functional_entries(std::vector<IdentityEntry>& out);
void add_value_entries(std::vector<IdentityEntry>& out);
void add_appendix_entries(std::vector<IdentityEntry>& out);
}  // namespace registry_detail

}  // namespace fpl
