#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpl/index.hpp"
#include "fpl/poly.hpp"

namespace fpl {

enum class Side { lhs, rhs };

struct PolyParams {
  int N = 1;
  std::optional<Index> k;
  unsigned subset = 0;  // bit i-1 set means t_i := 1, for i in 1..m-1
  int n = 1;
  int j = 0;
};

struct PolyIdentityInfo {
  std::string id;
  std::string statement;
  bool uses_index;
  bool uses_subset;
  bool uses_n;
  bool uses_j;
};

// Ids: euler, shuffle.binomial, shuffle.dual-binomial, ratio.binomial,
// ratio.dual-binomial, fneq, shuffle.substituted, hoffman.one-var,
// op-i.monomial, op-i.shifted, op-jstar.monomial, op-jstar.shifted, start.1,
// start.2, binomial.double, op-jn.monomial, op-jn.shifted.
const std::vector<PolyIdentityInfo>& poly_identities();
const PolyIdentityInfo& poly_identity(const std::string& id);

// Literal nested-sum expansion of one side. Throws std::domain_error outside
// N <= 6, weight <= 5 (and the identity's own parameter constraints).
MultiPoly build_side(const std::string& id, Side side, const PolyParams& params);

bool verify_poly_identity(const std::string& id, const PolyParams& params);

// Every parameter choice used by the suite: indices of weight <= max_weight,
// N = 1..max_N, all subsets for shuffle.substituted, n and j ranges for the
// operator identities.
std::vector<PolyParams> poly_parameter_grid(const std::string& id, int max_weight, int max_N);

std::string describe(const std::string& id, const PolyParams& params);

}  // namespace fpl
