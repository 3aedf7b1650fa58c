#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "fpl/exact.hpp"
#include "fpl/fmp.hpp"
#include "fpl/registry.hpp"
#include "fpl/polyid.hpp"
#include "fpl/verifier.hpp"

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_top(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

// Entries indexed by a composition take "k=2,1" style parameters; accept
// k1=2,k2=1 as well.
fpl::Params entry_params(const fpl::IdentityEntry& e, const std::string& text) {
  fpl::Params p = fpl::Params::parse(text);
  const bool wants_index = !e.params.empty() && e.params.front().k.has_value();
  if (!wants_index || p.k) return p;
  if (p.has("k")) {
    fpl::Params rest;
    rest.k = fpl::Index({static_cast<int>(p["k"])});
    for (const auto& nv : p.values) {
      if (nv.first != "k") rest.values.push_back(nv);
    }
    return rest;
  }
  std::map<int, long> parts;
  fpl::Params rest;
  for (const auto& [name, v] : p.values) {
    if (name.size() > 1 && name[0] == 'k' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      parts[std::stoi(name.substr(1))] = v;
    } else {
      rest.values.emplace_back(name, v);
    }
  }
  if (parts.empty()) return p;
  std::vector<int> k;
  int expect = 1;
  for (const auto& [i, v] : parts) {
    if (i != expect++) throw UsageError("index components must be k1..km without gaps");
    k.push_back(static_cast<int>(v));
  }
  rest.k = fpl::Index(k);
  return rest;
}

const fpl::IdentityEntry& need_entry(const std::string& id) {
  const auto* e = fpl::find_entry(id);
  if (!e) throw UsageError("unknown identity id '" + id + "' (see `fpl list`)");
  return *e;
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite multiple polylogarithms mod p^n: evaluation, identity checks and prime sweeps"};
  app.require_subcommand(1);

  // compute
  std::string flavor = "zeta", index_text, t_text;
  std::uint32_t prime = 0;
  int mod_power = 1;
  bool naive = false;
  auto* compute = app.add_subcommand("compute", "Evaluate one finite sum mod p^n");
  compute->add_option("--flavor", flavor,
                      "zeta, harmonic, shuffle, head, tail (each with optional -star suffix) or oy");
  compute->add_option("--index", index_text, "Index such as 2,1,1 or {1}^4")->required();
  compute->add_option("--t", t_text, "Argument(s): one rational for head/tail/oy, depth many for harmonic/shuffle");
  compute->add_option("--prime", prime, "Prime p")->required();
  compute->add_option("--mod-power", mod_power, "Exponent n")->check(CLI::Range(1, 6));
  compute->add_flag("--naive", naive, "Use direct enumeration");

  // prove
  std::string identity, dump;
  int N = 1, max_weight = 4, max_N = 4, small_n = 1, small_j = 0;
  unsigned subset = 0;
  bool prove_all = false;
  auto* prove = app.add_subcommand("prove", "Expand both sides of a polynomial identity and compare");
  prove->add_option("--identity", identity, "Identity id (euler, shuffle.binomial, ..., op-jn.shifted)");
  prove->add_option("--index", index_text, "Index k");
  prove->add_option("--N", N, "Truncation N")->check(CLI::Range(1, 6));
  prove->add_option("--subset", subset, "Bit mask of slots set to 1");
  prove->add_option("--n", small_n, "Auxiliary n");
  prove->add_option("--j", small_j, "Auxiliary j");
  prove->add_option("--dump", dump, "Write the expanded sides to this file");
  prove->add_flag("--all", prove_all, "Run the full parameter grid of every identity");
  prove->add_option("--max-weight", max_weight, "Grid weight bound for --all")->check(CLI::Range(1, 5));
  prove->add_option("--max-N", max_N, "Grid N bound for --all")->check(CLI::Range(1, 6));

  // check
  std::string id, params_text, format_text = "markdown";
  std::uint32_t pmin = 2, pmax = 0;
  auto* check = app.add_subcommand("check", "Check one identity at one parameter choice over a prime range");
  check->add_option("--id", id, "Identity id")->required();
  check->add_option("--params", params_text, "Parameters, e.g. k1=2,k2=1 or k=2,1,m=3");
  check->add_option("--pmin", pmin, "Smallest prime");
  check->add_option("--pmax", pmax, "Largest prime (default 199)");
  check->add_option("--format", format_text, "markdown, csv or json");

  // suite
  std::string level_text = "quick", out_path;
  std::vector<std::string> filters;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool no_poly = false;
  int sentinel = 3;
  std::uint64_t seed = 20240917;
  auto* suite = app.add_subcommand("suite", "Run the whole catalog over a prime range");
  suite->add_option("--level", level_text, "quick or full");
  suite->add_option("--out", out_path, "Report file (default stdout)");
  suite->add_option("--format", format_text, "json, csv or markdown");
  suite->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
  suite->add_option("--filter", filters, "Only ids matching these globs");
  suite->add_option("--pmin", pmin, "Smallest prime");
  suite->add_option("--pmax", pmax, "Override the per-level prime bound");
  suite->add_flag("--no-poly", no_poly, "Skip the polynomial identities");
  suite->add_option("--sentinel", sentinel, "Number of entries to break on purpose")->check(CLI::Range(0, 100));
  suite->add_option("--seed", seed, "Seed for sentinel selection");

  // list
  bool list_md = false;
  auto* list = app.add_subcommand("list", "List identity ids");
  list->add_flag("--markdown", list_md, "Full catalog as markdown");
  list->add_option("--filter", filters, "Only ids matching these globs");

  // table
  std::string table_kind;
  auto* table = app.add_subcommand("table", "Guard table or per-prime value table");
  table->add_option("kind", table_kind, "guards or values")->required()->check(CLI::IsMember({"guards", "values"}));
  table->add_option("--id", id, "Identity id (values)");
  table->add_option("--params", params_text, "Parameters (values)");
  table->add_option("--pmin", pmin, "Smallest prime (values)");
  table->add_option("--pmax", pmax, "Largest prime (values)");
  table->add_option("--format", format_text, "markdown, csv or json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*compute) {
      bool star = false;
      fpl::EvalRequest req;
      req.flavor = fpl::parse_flavor(flavor, &star);
      req.star = star;
      req.index = fpl::Index::parse(index_text);
      req.p = prime;
      req.n = mod_power;
      if (!fpl::is_prime(prime)) throw UsageError(std::to_string(prime) + " is not prime");
      for (const auto& a : split_top(t_text)) req.args.push_back(fpl::parse_rational(a));
      fpl::Residue r = naive ? fpl::fmp_multi(req) : fpl::evaluate(req);
      std::cout << r.str() << "\n";
      return kPass;
    }

    if (*prove) {
      if (prove_all) {
        std::size_t failed = 0, total = 0;
        for (const auto& info : fpl::poly_identities()) {
          for (const auto& pp : fpl::poly_parameter_grid(info.id, max_weight, max_N)) {
            ++total;
            if (!fpl::verify_poly_identity(info.id, pp)) {
              ++failed;
              std::cout << "FAIL " << info.id << " " << fpl::describe(info.id, pp) << "\n";
            }
          }
        }
        std::cout << total - failed << "/" << total << " polynomial identities hold\n";
        return failed ? kFail : kPass;
      }
      if (identity.empty()) throw UsageError("prove needs --identity or --all");
      const auto& info = fpl::poly_identity(identity);
      fpl::PolyParams pp;
      pp.N = N;
      pp.subset = subset;
      pp.n = small_n;
      pp.j = small_j;
      if (!index_text.empty()) pp.k = fpl::Index::parse(index_text);
      if (info.uses_index && !pp.k) throw UsageError(identity + " needs --index");
      auto lhs = fpl::build_side(identity, fpl::Side::lhs, pp);
      auto rhs = fpl::build_side(identity, fpl::Side::rhs, pp);
      const bool ok = lhs == rhs;
      if (!dump.empty()) write_out(dump, "lhs = " + lhs.str() + "\nrhs = " + rhs.str() + "\n");
      std::cout << identity << " " << fpl::describe(identity, pp) << ": " << (ok ? "pass" : "FAIL") << "\n";
      return ok ? kPass : kFail;
    }

    if (*check) {
      const auto& e = need_entry(id);
      fpl::Params params = params_text.empty() && !e.params.empty() ? e.params.front() : entry_params(e, params_text);
      if (pmax == 0) pmax = 199;
      if (pmin < 2 || pmax < pmin) throw UsageError("need 2 <= pmin <= pmax");
      const auto fmt = fpl::parse_format(format_text);
      const auto g = e.guard(params);
      std::size_t checked = 0, failed = 0, skipped = 0;
      std::vector<fpl::CheckRecord> rows;
      for (std::uint32_t p : fpl::primes_between(pmin, pmax)) {
        if (!g.admits(p)) continue;
        int s = 0;
        for (auto& r : fpl::evaluate(e, params, p, &s)) {
          ++checked;
          failed += r.pass ? 0 : 1;
          rows.push_back(std::move(r));
        }
        skipped += static_cast<std::size_t>(s);
      }
      fpl::Report rep;
      rep.config.pmin = pmin;
      rep.config.pmax = pmax;
      rep.config.filters = {id};
      rep.config.sentinel_entries = 0;
      rep.records = std::move(rows);
      rep.entries.push_back({e.id, checked, failed, skipped, 0});
      std::cout << fpl::render(rep, fmt);
      if (fmt == fpl::Format::markdown) {
        std::cout << "\n" << e.id << " [" << params.str() << "], guard " << e.guard_text << ": " << checked - failed
                  << "/" << checked << " pass\n";
      }
      return failed ? kFail : kPass;
    }

    if (*suite) {
      fpl::SuiteConfig cfg;
      cfg.level = fpl::parse_level(level_text);
      cfg.pmin = pmin;
      cfg.pmax = pmax;
      cfg.filters = filters;
      cfg.jobs = jobs;
      cfg.polynomial = !no_poly;
      cfg.sentinel_entries = sentinel;
      cfg.seed = seed;
      const auto fmt = suite->count("--format") ? fpl::parse_format(format_text) : fpl::Format::json;
      const auto report = fpl::run_suite(cfg);
      write_out(out_path, fpl::render(report, fmt));
      std::size_t failed = 0;
      for (const auto& r : report.records) failed += r.pass ? 0 : 1;
      std::size_t pf = 0;
      for (const auto& p : report.proofs) pf += p.pass ? 0 : 1;
      std::cerr << report.records.size() - failed << "/" << report.records.size() << " congruence checks pass, "
                << report.proofs.size() - pf << "/" << report.proofs.size() << " polynomial identities hold";
      for (const auto& s : report.sentinel) {
        std::cerr << ", sentinel " << s.id << " " << s.detected << "/" << s.cells;
      }
      std::cerr << " (" << report.seconds << " s)\n";
      return report.ok() ? kPass : kFail;
    }

    if (*list) {
      if (list_md) {
        std::cout << fpl::catalog_markdown();
        return kPass;
      }
      for (const auto& e : fpl::catalog()) {
        if (!fpl::id_selected(e.id, filters)) continue;
        std::cout << e.id << "\t" << e.params.size() << "\t" << e.guard_text << "\t" << e.title << "\n";
      }
      return kPass;
    }

    if (*table) {
      const auto fmt = fpl::parse_format(format_text);
      if (table_kind == "guards") {
        std::cout << fpl::guard_table(fmt);
        return kPass;
      }
      if (id.empty()) throw UsageError("table values needs --id");
      const auto& e = need_entry(id);
      fpl::Params params = params_text.empty() && !e.params.empty() ? e.params.front() : entry_params(e, params_text);
      if (pmax == 0) pmax = 199;
      std::cout << fpl::value_table(e, params, pmin, pmax, fmt);
      return kPass;
    }
  } catch (const UsageError& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const fpl::NonUnit& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kFail;
  }
  return kUsage;
}
