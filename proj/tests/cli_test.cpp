#include <gtest/gtest.h>

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cmwild/cli.hpp"
#include "cmwild/error.hpp"

using namespace cmwild::cli;
using Json = nlohmann::json;

namespace {

const std::string kData = CMWILD_DATA_DIR;

struct Outcome {
  int status;
  std::string out, err;
};

Outcome run_job(JobConfig cfg) {
  std::ostringstream out, err;
  const int status = run(cfg, out, err);
  return {status, out.str(), err.str()};
}

JobConfig with_ring(const std::string& command, const std::string& ring) {
  JobConfig c;
  c.command = command;
  c.ring_path = kData + "/" + ring;
  return c;
}

JobConfig with_instances(const std::string& command, const std::vector<std::string>& files) {
  JobConfig c;
  c.command = command;
  for (const auto& f : files) c.instance_paths.push_back(kData + "/" + f);
  return c;
}

}  // namespace

TEST(Cli, CheckFermatQuartic) {
  auto r = run_job(with_ring("check", "fermat_quartic.json"));
  ASSERT_EQ(r.status, kOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["schema"], "cmwild/1");
  EXPECT_EQ(j["p"], 32003);
  EXPECT_EQ(j["seed"], 0);
  EXPECT_EQ(j["verdict"], "CMWild");
  EXPECT_EQ(j["c"], 4);
  EXPECT_EQ(j["dim_c"], 3);
  EXPECT_EQ(j["sequence"]["elements"], Json::array({"x^2", "y^2"}));
}

TEST(Cli, InconclusiveIsStillSuccess) {
  auto cfg = with_ring("check", "fermat_cubic.json");
  cfg.sequence = "x^2,y^2";
  auto r = run_job(cfg);
  ASSERT_EQ(r.status, kOk);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "Inconclusive");
  EXPECT_TRUE(j["c"].is_null());
  EXPECT_EQ(j["scanned"], Json::parse(R"([{"c":4,"dim":1}])"));
}

TEST(Cli, WindowAndFieldOverride) {
  auto cfg = with_ring("check", "fermat_quartic.json");
  cfg.c_window = parse_window("5..6");
  cfg.field_char = 101;
  auto r = run_job(cfg);
  ASSERT_EQ(r.status, kOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["p"], 101);
  EXPECT_EQ(j["verdict"], "Inconclusive");
  EXPECT_EQ(j["scanned"].size(), 2u);
  EXPECT_THROW(parse_window("6..5"), cmwild::InputError);
  EXPECT_THROW(parse_window("3-8"), cmwild::InputError);
  EXPECT_THROW(parse_window("a..b"), cmwild::InputError);
  EXPECT_EQ(parse_window("3..8"), std::make_pair(3, 8));
}

TEST(Cli, InhomogeneousRelationIsInputError) {
  auto r = run_job(with_ring("check", "inhomogeneous.json"));
  EXPECT_EQ(r.status, kInputError);
  EXPECT_NE(r.err.find("x^2+y"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, MissingFileAndMissingFlags) {
  EXPECT_EQ(run_job(with_ring("check", "no_such_file.json")).status, kInputError);
  JobConfig bare;
  bare.command = "check";
  EXPECT_EQ(run_job(bare).status, kInputError);
  bare.command = "frobnicate";
  EXPECT_EQ(run_job(bare).status, kInputError);
  auto bad_seq = with_ring("check", "fermat_quartic.json");
  bad_seq.sequence = "x^2,x^3";
  EXPECT_EQ(run_job(bad_seq).status, kInputError);
}

TEST(Cli, BudgetExhaustion) {
  auto cfg = with_ring("check", "two_planes.json");
  cfg.budget = 12;
  auto r = run_job(cfg);
  EXPECT_EQ(r.status, kBudgetExhausted);
  EXPECT_NE(r.err.find("budget"), std::string::npos);
}

TEST(Cli, IsoEqualMatricesGivesIdentity) {
  auto r = run_job(with_instances("iso", {"fermat_quartic_n2.json", "fermat_quartic_n2.json"}));
  ASSERT_EQ(r.status, kOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["outcome"], "Isomorphic");
  EXPECT_EQ(j["sigma"], Json::parse("[[1,0],[0,1]]"));
  auto scaled = Json::parse(run_job(with_instances("iso", {"fermat_quartic_n2.json", "fermat_quartic_n2_scaled.json"})).out);
  EXPECT_EQ(scaled["sigma"], Json::parse("[[2,0],[0,1]]"));
  EXPECT_EQ(run_job(with_instances("iso", {"fermat_quartic_n2.json"})).status, kInputError);
}

TEST(Cli, FamilyReport) {
  auto r = run_job(with_instances("family", {"fermat_quartic_n1.json"}));
  ASSERT_EQ(r.status, kOk) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_TRUE(j["mcm"]["verified"]);
  EXPECT_TRUE(j["lemma23"]["pass"]);
  EXPECT_TRUE(j["lemma25"]["pass"]);
  EXPECT_EQ(j["indecomposability"]["outcome"], "Indecomposable");
  EXPECT_EQ(j["instance"]["c"], 4);
}

TEST(Cli, ResolveAndHilbert) {
  auto res = Json::parse(run_job(with_ring("resolve", "cubic_quadric.json")).out);
  EXPECT_TRUE(res["matches_koszul"]);
  EXPECT_TRUE(res["minimal"]);
  auto cfg = with_ring("hilbert", "twisted_cubic.json");
  cfg.max_degree = 3;
  auto h = Json::parse(run_job(cfg).out);
  EXPECT_EQ(h["krull_dimension"], 2);
  EXPECT_EQ(h["values"], Json::parse(R"([{"t":0,"dim":1},{"t":1,"dim":4},{"t":2,"dim":7},{"t":3,"dim":10}])"));
}

TEST(Cli, VerifyRoundTrip) {
  auto report = run_job(with_ring("check", "fermat_quartic.json")).out;
  const auto path = ::testing::TempDir() + "cmwild_report.json";
  {
    std::ofstream(path) << report;
  }
  JobConfig v;
  v.command = "verify";
  v.report_path = path;
  auto ok = run_job(v);
  ASSERT_EQ(ok.status, kOk) << ok.err;
  EXPECT_TRUE(Json::parse(ok.out)["valid"]);

  auto tampered = Json::parse(report);
  tampered["dim_c"] = 4;
  {
    std::ofstream(path) << tampered.dump();
  }
  EXPECT_FALSE(Json::parse(run_job(v).out)["valid"]);
}

TEST(Cli, ReproducibleOutput) {
  for (const auto& ring : {"fermat_quartic.json", "cubic_quadric.json", "twisted_cubic.json"}) {
    auto cfg = with_ring("check", ring);
    cfg.seed = 17;
    EXPECT_EQ(run_job(cfg).out, run_job(cfg).out);
  }
  auto fam = with_instances("family", {"binary_quartic_n1.json"});
  fam.seed = 3;
  EXPECT_EQ(run_job(fam).out, run_job(fam).out);
}

TEST(Cli, TextFormat) {
  auto cfg = with_ring("check", "binary_quartic.json");
  cfg.format = Format::Text;
  auto r = run_job(cfg);
  ASSERT_EQ(r.status, kOk);
  EXPECT_EQ(r.out.rfind("strictly CM-infinite", 0), 0u);
  EXPECT_NE(r.out.find("verdict: StrictlyCMInfinite"), std::string::npos);
}
