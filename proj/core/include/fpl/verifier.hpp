#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fpl/registry.hpp"

namespace fpl {

enum class Level { quick, full };
enum class Format { json, csv, markdown };

Level parse_level(std::string_view s);    // throws std::invalid_argument
Format parse_format(std::string_view s);  // throws std::invalid_argument

struct SuiteConfig {
  Level level = Level::quick;
  std::uint32_t pmin = 2;
  std::uint32_t pmax = 0;            // 0: per-level default, further capped per entry
  std::vector<std::string> filters;  // id globs; empty selects everything
  unsigned jobs = 1;
  bool polynomial = true;  // run the finite-N polynomial identities
  int sentinel_entries = 3;
  std::uint64_t seed = 20240917;
};

struct EntrySummary {
  std::string id;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;  // inadmissible sample points
  double seconds = 0;
};

struct PolyCheck {
  std::string id;
  std::string params;
  bool pass = false;
  std::string error;
};

struct SentinelResult {
  std::string id;
  std::string params;
  std::size_t cells = 0;
  std::size_t detected = 0;  // cells that fail after the +1 shift
  bool ok() const { return cells > 0 && detected == cells; }
};

struct Report {
  SuiteConfig config;
  std::vector<CheckRecord> records;
  std::vector<EntrySummary> entries;
  std::vector<PolyCheck> proofs;
  std::vector<SentinelResult> sentinel;
  double seconds = 0;
  double proof_seconds = 0;

  std::size_t failures() const;
  bool ok() const;
};

// Primes the suite visits for one entry at one parameter choice.
std::vector<std::uint32_t> suite_primes(const IdentityEntry& e, const Params& params, const SuiteConfig& cfg);

// Matches an id against shell-style globs ('*', '?', '[...]').
bool id_selected(const std::string& id, const std::vector<std::string>& filters);

Report run_suite(const SuiteConfig& cfg);

std::string to_json(const Report& r);
std::string to_csv(const Report& r);
std::string to_markdown(const Report& r);
std::string render(const Report& r, Format f);

// Markdown catalog of every entry: id, group, kind, modulus, guard, parameters.
std::string catalog_markdown();

// Guard table: one row per entry.
std::string guard_table(Format f);

// LHS/RHS per prime for one entry and parameter choice. Primes outside the
// guard are left out.
std::string value_table(const IdentityEntry& e, const Params& params, std::uint32_t pmin, std::uint32_t pmax,
                        Format f);

}  // namespace fpl
