#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fpl/exact.hpp"
#include "fpl/index.hpp"
#include "fpl/residue.hpp"

namespace fpl {

// harmonic: prod t_i^{n_i}; shuffle: t_1^{n_1-n_2} ... t_m^{n_m}.
enum class SumKind { harmonic, shuffle };

enum class End { head, tail };

enum class Flavor { zeta, harmonic, shuffle, head, tail, ono_yamamoto };

struct EvalRequest {
  Index index{1};
  std::vector<Rational> args;  // depth many for harmonic/shuffle, one for head/tail/oy, none for zeta
  bool star = false;
  Flavor flavor = Flavor::zeta;
  std::uint32_t p = 2;
  int n = 1;
};

Flavor parse_flavor(std::string_view name, bool* star);

// Sums over p > n_1 > ... > n_m > 0, or p-1 >= n_1 >= ... >= n_m >= 1 when
// star is set. Arguments are residues of ring; zero is allowed.
Residue nested_sum(const Ring& ring, const Index& k, std::span<const std::uint64_t> args, bool star, SumKind kind);
// Direct enumeration of the same sum, O(p^depth).
Residue nested_sum_naive(const Ring& ring, const Index& k, std::span<const std::uint64_t> args, bool star,
                         SumKind kind);

Residue mhs(const Index& k, std::uint32_t p, int n, bool star);

// Definition-level evaluator by direct enumeration. Depth above 3 is refused
// for p > 101.
Residue fmp_multi(const EvalRequest& req);

Residue fmp_one_var(const Index& k, const Rational& t, std::uint32_t p, int n, bool star, End end);
Residue fast_nested_eval(const Index& k, const Rational& t, std::uint32_t p, int n, bool star, End end);

// Dispatches every flavor to its fast evaluator.
Residue evaluate(const EvalRequest& req);

// li_k(t): sum over 0 < l_i < p of t^{l_1+...+l_m} / prod (l_1+...+l_i)^{k_i},
// skipping tuples with a partial sum divisible by p.
Residue oy_li(const Ring& ring, const Index& k, std::uint64_t t);
Residue oy_li(const Index& k, const Rational& t, std::uint32_t p, int n);
Residue oy_li_naive(const Ring& ring, const Index& k, std::uint64_t t);

struct PhiMap {
  std::vector<int> values;  // phi(1..m), 1-based values in [1, l]
  int l = 0;
  std::vector<int> delta;  // delta[i-1] = #{a < i : phi(a) > phi(a+1)}
  int beta = 0;            // delta(m) + 1
};

// Surjections [m] -> [l], l = 1..m, with phi(a) != phi(a+1); 1 <= m <= 6.
std::vector<PhiMap> enumerate_phi(int m);

Residue oy_decompose(const Ring& ring, const Index& k, std::uint64_t t);
Residue oy_decompose(const Index& k, const Rational& t, std::uint32_t p, int n);

}  // namespace fpl
