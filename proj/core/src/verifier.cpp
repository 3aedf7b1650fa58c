#include "fpl/verifier.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "fpl/polyid.hpp"

namespace fpl {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

const char* level_name(Level l) { return l == Level::quick ? "quick" : "full"; }

constexpr std::uint32_t kQuickMax = 61;
constexpr std::uint32_t kFullMax = 199;
constexpr std::uint32_t kMultiDepthCap = 101;  // arity >= 3 functional entries

struct Cell {
  std::size_t entry;
  std::size_t param;
  std::uint32_t p;
};

struct CellResult {
  std::vector<CheckRecord> records;
  int skipped = 0;
  double seconds = 0;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

// Polynomial identity grid per level.
std::pair<int, int> poly_limits(Level l) { return l == Level::quick ? std::pair{4, 4} : std::pair{5, 6}; }

std::vector<PolyCheck> run_proofs(Level level) {
  std::vector<PolyCheck> out;
  auto [w, N] = poly_limits(level);
  for (const auto& info : poly_identities()) {
    for (const auto& pp : poly_parameter_grid(info.id, w, N)) {
      PolyCheck c{info.id, describe(info.id, pp), false, {}};
      try {
        c.pass = verify_poly_identity(info.id, pp);
      } catch (const std::exception& ex) {
        c.error = ex.what();
      }
      out.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

Level parse_level(std::string_view s) {
  if (s == "quick") return Level::quick;
  if (s == "full") return Level::full;
  throw std::invalid_argument("unknown level '" + std::string(s) + "' (quick|full)");
}

Format parse_format(std::string_view s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  if (s == "markdown" || s == "md") return Format::markdown;
  throw std::invalid_argument("unknown format '" + std::string(s) + "' (json|csv|markdown)");
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& r : records) n += r.pass ? 0 : 1;
  for (const auto& p : proofs) n += p.pass ? 0 : 1;
  return n;
}

bool Report::ok() const {
  return failures() == 0 && std::all_of(sentinel.begin(), sentinel.end(), [](const auto& s) { return s.ok(); });
}

bool id_selected(const std::string& id, const std::vector<std::string>& filters) {
  if (filters.empty()) return true;
  return std::any_of(filters.begin(), filters.end(),
                     [&](const std::string& g) { return fnmatch(g.c_str(), id.c_str(), 0) == 0; });
}

std::vector<std::uint32_t> suite_primes(const IdentityEntry& e, const Params& params, const SuiteConfig& cfg) {
  std::uint32_t hi = cfg.level == Level::quick ? kQuickMax : kFullMax;
  if (cfg.pmax) hi = cfg.pmax;
  if (e.pmax < kFullMax) hi = std::min(hi, e.pmax);
  if (e.pmax > kFullMax && cfg.level == Level::full && !cfg.pmax) hi = e.pmax;
  if (cfg.level == Level::full && e.kind == EntryKind::functional_eq && e.arity(params) >= 3) {
    hi = std::min(hi, kMultiDepthCap);
  }
  Guard g = e.guard(params);
  std::vector<std::uint32_t> out;
  for (std::uint32_t p : primes_between(std::max<std::uint32_t>(cfg.pmin, 2), hi)) {
    if (g.admits(p)) out.push_back(p);
  }
  return out;
}

Report run_suite(const SuiteConfig& cfg) {
  if (cfg.pmin < 2 || (cfg.pmax && cfg.pmax < cfg.pmin)) throw std::invalid_argument("need 2 <= pmin <= pmax");
  if (cfg.jobs < 1) throw std::invalid_argument("need at least one worker");
  const auto t0 = Clock::now();
  Report report;
  report.config = cfg;

  const auto& cat = catalog();
  std::vector<std::size_t> selected;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (id_selected(cat[i].id, cfg.filters)) selected.push_back(i);
  }

  std::vector<Cell> cells;
  for (std::size_t ei : selected) {
    const auto& e = cat[ei];
    for (std::size_t pi = 0; pi < e.params.size(); ++pi) {
      for (std::uint32_t p : suite_primes(e, e.params[pi], cfg)) cells.push_back({ei, pi, p});
    }
  }

  // Workers pull cells from a shared counter; results land in cell order.
  std::vector<CellResult> results(cells.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& c = cells[i];
      const auto& e = cat[c.entry];
      const auto c0 = Clock::now();
      results[i].records = evaluate(e, e.params[c.param], c.p, &results[i].skipped);
      results[i].seconds = since(c0);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < cfg.jobs; ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::map<std::size_t, EntrySummary> per_entry;
  for (std::size_t ei : selected) per_entry[ei].id = cat[ei].id;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto& s = per_entry[cells[i].entry];
    s.skipped += static_cast<std::size_t>(results[i].skipped);
    s.seconds += results[i].seconds;
    for (auto& r : results[i].records) {
      ++s.checked;
      if (!r.pass) ++s.failed;
      report.records.push_back(std::move(r));
    }
  }
  for (auto& [ei, s] : per_entry) report.entries.push_back(std::move(s));

  if (cfg.sentinel_entries > 0 && !selected.empty()) {
    // Shift the right-hand side by one on a few entries; every cell must break.
    std::mt19937_64 rng(cfg.seed);
    std::vector<std::size_t> pool_ids;
    for (std::size_t ei : selected) {
      if (!cat[ei].params.empty()) pool_ids.push_back(ei);
    }
    const int want = std::min<int>(cfg.sentinel_entries, static_cast<int>(pool_ids.size()));
    for (int i = 0; i < want; ++i) {
      std::size_t j = i + static_cast<std::size_t>(rng() % (pool_ids.size() - static_cast<std::size_t>(i)));
      std::swap(pool_ids[static_cast<std::size_t>(i)], pool_ids[j]);
      const auto& e = cat[pool_ids[static_cast<std::size_t>(i)]];
      const Params& params = e.params[static_cast<std::size_t>(rng() % e.params.size())];
      SentinelResult s{e.id, params.str(), 0, 0};
      auto primes = suite_primes(e, params, cfg);
      if (primes.size() > 12) primes.resize(12);
      for (std::uint32_t p : primes) {
        auto base = evaluate(e, params, p);
        auto shifted = evaluate(e, params, p, nullptr, 1);
        for (std::size_t k = 0; k < base.size() && k < shifted.size(); ++k) {
          if (!base[k].pass) continue;
          ++s.cells;
          if (!shifted[k].pass) ++s.detected;
        }
      }
      report.sentinel.push_back(std::move(s));
    }
  }

  if (cfg.polynomial && cfg.filters.empty()) {
    const auto p0 = Clock::now();
    report.proofs = run_proofs(cfg.level);
    report.proof_seconds = since(p0);
  }
  report.seconds = since(t0);
  return report;
}

std::string to_json(const Report& r) {
  using nlohmann::ordered_json;
  ordered_json j;
  const auto& c = r.config;
  j["config"] = {{"level", level_name(c.level)},
                 {"pmin", c.pmin},
                 {"pmax", c.pmax},
                 {"filters", c.filters},
                 {"polynomial", c.polynomial},
                 {"sentinel_entries", c.sentinel_entries},
                 {"seed", std::to_string(c.seed)}};
  ordered_json recs = ordered_json::array();
  std::size_t passed = 0;
  for (const auto& x : r.records) {
    ordered_json o = {{"id", x.id}, {"params", x.params}, {"args", x.args}, {"p", x.p}, {"n", x.n},
                      {"lhs", x.lhs}, {"rhs", x.rhs},       {"pass", x.pass}};
    if (!x.error.empty()) o["error"] = x.error;
    recs.push_back(std::move(o));
    passed += x.pass ? 1 : 0;
  }
  j["records"] = std::move(recs);

  ordered_json entries = ordered_json::array();
  std::size_t skipped = 0;
  for (const auto& e : r.entries) {
    entries.push_back({{"id", e.id}, {"checked", e.checked}, {"failed", e.failed}, {"skipped", e.skipped}});
    skipped += e.skipped;
  }
  std::size_t proofs_failed = 0;
  for (const auto& p : r.proofs) proofs_failed += p.pass ? 0 : 1;
  ordered_json sentinel = ordered_json::array();
  for (const auto& s : r.sentinel) {
    sentinel.push_back(
        {{"id", s.id}, {"params", s.params}, {"cells", s.cells}, {"detected", s.detected}, {"ok", s.ok()}});
  }
  j["summary"] = {{"records", r.records.size()},
                  {"passed", passed},
                  {"failed", r.records.size() - passed},
                  {"skipped", skipped},
                  {"proofs", r.proofs.size()},
                  {"proofs_failed", proofs_failed},
                  {"entries", std::move(entries)},
                  {"ok", r.ok()}};

  ordered_json proofs = ordered_json::array();
  for (const auto& p : r.proofs) {
    ordered_json o = {{"id", p.id}, {"params", p.params}, {"pass", p.pass}};
    if (!p.error.empty()) o["error"] = p.error;
    proofs.push_back(std::move(o));
  }
  j["proofs"] = std::move(proofs);
  j["sentinel"] = std::move(sentinel);

  ordered_json per_entry = ordered_json::object();
  for (const auto& e : r.entries) per_entry[e.id] = e.seconds;
  j["timings"] = {{"jobs", c.jobs}, {"seconds", r.seconds}, {"proof_seconds", r.proof_seconds},
                  {"entries", std::move(per_entry)}};
  return j.dump(1) + "\n";
}

std::string to_csv(const Report& r) {
  std::ostringstream out;
  out << "id,params,args,p,n,lhs,rhs,pass,error\n";
  for (const auto& x : r.records) {
    out << csv_field(x.id) << ',' << csv_field(x.params) << ',' << csv_field(x.args) << ',' << x.p << ',' << x.n
        << ',' << x.lhs << ',' << x.rhs << ',' << (x.pass ? "true" : "false") << ',' << csv_field(x.error) << '\n';
  }
  for (const auto& p : r.proofs) {
    out << csv_field(p.id) << ',' << csv_field(p.params) << ",,,,,," << (p.pass ? "true" : "false") << ','
        << csv_field(p.error) << '\n';
  }
  return out.str();
}

std::string to_markdown(const Report& r) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& x : r.records) passed += x.pass ? 1 : 0;
  out << "# Suite report (" << level_name(r.config.level) << ")\n\n";
  out << "- records: " << r.records.size() << ", passed: " << passed << ", failed: " << r.records.size() - passed
      << "\n";
  std::size_t pf = 0;
  for (const auto& p : r.proofs) pf += p.pass ? 0 : 1;
  out << "- polynomial identities: " << r.proofs.size() << ", failed: " << pf << "\n";
  for (const auto& s : r.sentinel) {
    out << "- sentinel " << s.id << " [" << s.params << "]: " << s.detected << "/" << s.cells << " cells broken\n";
  }
  out << "\n| id | checked | failed | skipped |\n|---|---:|---:|---:|\n";
  for (const auto& e : r.entries) {
    out << "| " << md_cell(e.id) << " | " << e.checked << " | " << e.failed << " | " << e.skipped << " |\n";
  }
  bool header = false;
  for (const auto& x : r.records) {
    if (x.pass) continue;
    if (!header) {
      out << "\n## Failures\n\n| id | params | args | p | n | lhs | rhs | error |\n|---|---|---|---:|---:|---:|---:|---|\n";
      header = true;
    }
    out << "| " << md_cell(x.id) << " | " << md_cell(x.params) << " | " << md_cell(x.args) << " | " << x.p << " | "
        << x.n << " | " << x.lhs << " | " << x.rhs << " | " << md_cell(x.error) << " |\n";
  }
  return out.str();
}

std::string render(const Report& r, Format f) {
  switch (f) {
    case Format::json: return to_json(r);
    case Format::csv: return to_csv(r);
    case Format::markdown: return to_markdown(r);
  }
  return {};
}

std::string catalog_markdown() {
  std::ostringstream out;
  out << "# Identity catalog\n\n";
  std::string group;
  for (const auto& e : catalog()) {
    if (e.group != group) {
      group = e.group;
      out << "\n## " << group << "\n\n| id | statement | kind | mod | guard | parameter sets |\n"
          << "|---|---|---|---|---|---:|\n";
    }
    out << "| `" << e.id << "` | " << md_cell(e.title) << " | "
        << (e.kind == EntryKind::closed_form ? "closed form" : "functional") << " | p^" << e.exponent << " | "
        << md_cell(e.guard_text) << " | " << e.params.size() << " |\n";
  }
  return out.str();
}

std::string guard_table(Format f) {
  std::ostringstream out;
  if (f == Format::csv) {
    out << "id,group,modulus,guard\n";
    for (const auto& e : catalog()) {
      out << csv_field(e.id) << ',' << csv_field(e.group) << ",p^" << e.exponent << ',' << csv_field(e.guard_text)
          << '\n';
    }
    return out.str();
  }
  if (f == Format::json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& e : catalog()) {
      j.push_back({{"id", e.id}, {"group", e.group}, {"n", e.exponent}, {"guard", e.guard_text}});
    }
    return j.dump(1) + "\n";
  }
  out << "| id | group | modulus | guard |\n|---|---|---|---|\n";
  for (const auto& e : catalog()) {
    out << "| " << md_cell(e.id) << " | " << e.group << " | p^" << e.exponent << " | " << md_cell(e.guard_text)
        << " |\n";
  }
  return out.str();
}

std::string value_table(const IdentityEntry& e, const Params& params, std::uint32_t pmin, std::uint32_t pmax,
                        Format f) {
  Guard g = e.guard(params);
  std::vector<CheckRecord> rows;
  if (pmin <= pmax) {
    for (std::uint32_t p : primes_between(std::max<std::uint32_t>(pmin, 2), pmax)) {
      if (!g.admits(p)) continue;
      for (auto& r : evaluate(e, params, p)) rows.push_back(std::move(r));
    }
  }
  std::ostringstream out;
  if (f == Format::csv) {
    out << "p,args,lhs,rhs,pass\n";
    for (const auto& r : rows) {
      out << r.p << ',' << csv_field(r.args) << ',' << r.lhs << ',' << r.rhs << ',' << (r.pass ? "true" : "false")
          << '\n';
    }
    return out.str();
  }
  if (f == Format::json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
      j.push_back({{"p", r.p}, {"args", r.args}, {"lhs", r.lhs}, {"rhs", r.rhs}, {"pass", r.pass}});
    }
    return j.dump(1) + "\n";
  }
  out << "| p | args | lhs | rhs | pass |\n|---:|---|---:|---:|---|\n";
  for (const auto& r : rows) {
    out << "| " << r.p << " | " << md_cell(r.args) << " | " << r.lhs << " | " << r.rhs << " | "
        << (r.pass ? "yes" : (r.error.empty() ? "no" : "error: " + md_cell(r.error))) << " |\n";
  }
  return out.str();
}

}  // namespace fpl
