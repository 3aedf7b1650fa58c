#include <gtest/gtest.h>

#include <json.hpp>

#include "fpl/verifier.hpp"

namespace {

fpl::SuiteConfig filtered(std::vector<std::string> globs) {
  fpl::SuiteConfig cfg;
  cfg.filters = std::move(globs);
  cfg.pmax = 31;
  cfg.sentinel_entries = 1;
  return cfg;
}

nlohmann::json without_timings(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  j.erase("timings");
  return j;
}

}  // namespace

TEST(Verifier, Globs) {
  EXPECT_TRUE(fpl::id_selected("zeta.depth2", {}));
  EXPECT_TRUE(fpl::id_selected("zeta.depth2", {"zeta.*"}));
  EXPECT_TRUE(fpl::id_selected("zeta.depth2", {"x", "zeta.depth?"}));
  EXPECT_FALSE(fpl::id_selected("zeta.depth2", {"zeta.depth3*"}));
  EXPECT_TRUE(fpl::id_selected("zeta.depth2", {"zeta.depth[23]"}));
}

TEST(Verifier, ParseNames) {
  EXPECT_EQ(fpl::parse_level("full"), fpl::Level::full);
  EXPECT_EQ(fpl::parse_format("md"), fpl::Format::markdown);
  EXPECT_THROW(fpl::parse_level("slow"), std::invalid_argument);
  EXPECT_THROW(fpl::parse_format("xml"), std::invalid_argument);
}

TEST(Verifier, PrimeSelection) {
  const auto& e = *fpl::find_entry("zeta.zhou-cai");
  auto params = fpl::Params::parse("k=1,m=2");
  fpl::SuiteConfig cfg;
  auto quick = fpl::suite_primes(e, params, cfg);
  ASSERT_FALSE(quick.empty());
  EXPECT_EQ(quick.front(), 5u);
  EXPECT_EQ(quick.back(), 61u);
  cfg.level = fpl::Level::full;
  EXPECT_EQ(fpl::suite_primes(e, params, cfg).back(), 199u);
  cfg.pmin = 50;
  cfg.pmax = 60;
  EXPECT_EQ(fpl::suite_primes(e, params, cfg), (std::vector<std::uint32_t>{53, 59}));

  // Entries with a larger prime range reach it in the full sweep.
  const auto& t45 = *fpl::find_entry("values.ones.two.mod-p2");
  fpl::SuiteConfig full;
  full.level = fpl::Level::full;
  EXPECT_EQ(fpl::suite_primes(t45, t45.params.front(), full).back(), 499u);
}

TEST(Verifier, EmptyFilter) {
  auto r = fpl::run_suite(filtered({"does.not.exist"}));
  EXPECT_TRUE(r.records.empty());
  EXPECT_TRUE(r.proofs.empty());
  EXPECT_TRUE(r.ok());
}

TEST(Verifier, MatchesDirectEvaluation) {
  auto cfg = filtered({"zeta.zhou-cai"});
  cfg.sentinel_entries = 0;
  auto r = fpl::run_suite(cfg);
  const auto& e = *fpl::find_entry("zeta.zhou-cai");
  std::vector<fpl::CheckRecord> direct;
  for (const auto& params : e.params) {
    for (std::uint32_t p : fpl::suite_primes(e, params, cfg)) {
      for (auto& x : fpl::evaluate(e, params, p)) direct.push_back(std::move(x));
    }
  }
  ASSERT_EQ(r.records.size(), direct.size());
  for (std::size_t i = 0; i < direct.size(); ++i) {
    EXPECT_EQ(r.records[i].params, direct[i].params);
    EXPECT_EQ(r.records[i].p, direct[i].p);
    EXPECT_EQ(r.records[i].lhs, direct[i].lhs);
    EXPECT_EQ(r.records[i].rhs, direct[i].rhs);
  }
  EXPECT_TRUE(r.ok());
}

TEST(Verifier, DeterministicAcrossWorkers) {
  auto cfg = filtered({"zeta.*", "fneq.shuffle", "ones.distribution*"});
  cfg.jobs = 1;
  auto a = fpl::to_json(fpl::run_suite(cfg));
  cfg.jobs = 4;
  auto b = fpl::to_json(fpl::run_suite(cfg));
  EXPECT_EQ(without_timings(a), without_timings(b));
}

TEST(Verifier, ReportLayout) {
  auto r = fpl::run_suite(filtered({"zeta.depth3*"}));
  auto j = nlohmann::json::parse(fpl::to_json(r));
  for (const char* key : {"config", "records", "summary", "timings", "proofs", "sentinel"}) EXPECT_TRUE(j.contains(key));
  ASSERT_FALSE(j["records"].empty());
  const auto& rec = j["records"][0];
  for (const char* key : {"id", "params", "p", "n", "lhs", "rhs", "pass"}) EXPECT_TRUE(rec.contains(key));
  EXPECT_TRUE(rec["lhs"].is_string());
  ASSERT_EQ(j["sentinel"].size(), 1u);
  EXPECT_TRUE(j["sentinel"][0]["ok"].get<bool>());

  auto csv = fpl::to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "id,params,args,p,n,lhs,rhs,pass,error");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(r.records.size() + 1));
  EXPECT_NE(fpl::to_markdown(r).find("| zeta.depth3 |"), std::string::npos);
}

TEST(Verifier, Tables) {
  auto guards = fpl::guard_table(fpl::Format::markdown);
  EXPECT_NE(guards.find("| zeta.zhou-cai | zeta | p^2 | p > mk+2 |"), std::string::npos);

  const auto& e = *fpl::find_entry("values.ones.half.mod-p2");
  auto params = fpl::Params::parse("m=2,form=1");
  auto rows = fpl::value_table(e, params, 7, 31, fpl::Format::csv);
  EXPECT_EQ(std::count(rows.begin(), rows.end(), '\n'), 9);  // header + primes 7..31
  EXPECT_EQ(rows.find(",false"), std::string::npos);

  auto empty = fpl::value_table(e, params, 32, 36, fpl::Format::markdown);
  EXPECT_EQ(std::count(empty.begin(), empty.end(), '\n'), 2);

  auto cat = fpl::catalog_markdown();
  EXPECT_NE(cat.find("`zeta.zhou-cai`"), std::string::npos);
}
