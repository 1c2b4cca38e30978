#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "circuit/builtins.hpp"
#include "circuit/families.hpp"
#include "circuit/serialize.hpp"

namespace circuit {
namespace {

TEST(ReportJson, Alg2Keys) {
  auto rep = simulate(builtin("alg2"), preset(Preset::kFree));
  auto j = to_json(rep);
  EXPECT_EQ(j["feasible"], true);
  EXPECT_EQ(j["total_time"], "361/16");
  EXPECT_TRUE(j["violations"].empty());
  EXPECT_EQ(j["ledger"]["balanced"], true);
  EXPECT_EQ(j["ledger"]["discarded"], "7/8");
  EXPECT_EQ(j["marks"]["partA-end"]["elapsed"], "73/8");
  EXPECT_EQ(j["marks"]["partB-end"]["caches"]["285/4"], 1);
  EXPECT_EQ(j["circuit_covered"], true);
}

TEST(ReportJson, RationalsReparse) {
  auto rep = simulate(builtin("alg3"), preset(Preset::kDawn));
  auto j = json::parse(to_json(rep).dump());
  EXPECT_EQ(Ratio::parse(j["total_time"].get<std::string>()), Ratio(2693, 116));
  for (const auto& [k, v] : j["ledger"].items()) {
    if (v.is_string()) {
      EXPECT_NO_THROW(Ratio::parse(v.get<std::string>())) << k;
    }
  }
}

TEST(ReportJson, ViolationsListed) {
  auto rep = simulate(builtin("alg2"), preset(Preset::kDawn));
  auto j = to_json(rep);
  EXPECT_EQ(j["feasible"], false);
  ASSERT_FALSE(j["violations"].empty());
  EXPECT_EQ(j["violations"][0]["kind"], "phase-not-dawn");
}

TEST(ReportJson, DuplicateMarksKept) {
  auto rep = simulate(parse_schedule("take 1\nmark x\nmove 5\nmark x\n"), preset(Preset::kFree));
  auto j = to_json(rep);
  EXPECT_TRUE(j["marks"].contains("x"));
  EXPECT_TRUE(j["marks"].contains("x (2)"));
}

TEST(CertificateJson, RoundTrip) {
  auto v = implies(part_a_system(true), BoundLine{14, -11});
  ASSERT_TRUE(v.certificate);
  auto j = json::parse(to_json(*v.certificate, "hello").dump());
  EXPECT_EQ(j["note"], "hello");
  auto back = certificate_from_json(j);
  EXPECT_TRUE(verify_certificate(back));
  EXPECT_EQ(back.multipliers, v.certificate->multipliers);
  ASSERT_EQ(back.system.size(), v.certificate->system.size());
  for (std::size_t i = 0; i < back.system.size(); ++i) {
    EXPECT_EQ(back.system[i], v.certificate->system[i]);
    EXPECT_EQ(back.system[i].label(), v.certificate->system[i].label());
  }
}

TEST(CertificateJson, RejectsGarbage) {
  json j = {{"system", json::array()}, {"target", {{"coefficients", {{"Q", "1"}}}, {"constant", "0"}}},
            {"multipliers", json::array()}, {"slack", "0"}};
  EXPECT_THROW(certificate_from_json(j), std::invalid_argument);
  j["target"]["coefficients"] = {{"T", "0.5"}};
  EXPECT_THROW(certificate_from_json(j), std::invalid_argument);
}

// Certificates written by the CLI and checked in.
TEST(Fixtures, AllVerify) {
  namespace fs = std::filesystem;
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(CIRCUIT_FIXTURE_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    auto j = json::parse(in);
    auto cert = certificate_from_json(j.contains("certificate") ? j["certificate"] : j);
    EXPECT_TRUE(verify_certificate(cert)) << entry.path();
    ASSERT_TRUE(cert.line) << entry.path();
    ++seen;
  }
  EXPECT_GE(seen, 5);
}

TEST(Fixtures, TamperedFixtureFails) {
  std::ifstream in(std::string(CIRCUIT_FIXTURE_DIR) + "/partA_14_-11.json");
  ASSERT_TRUE(in);
  auto cert = certificate_from_json(json::parse(in));
  cert.line = BoundLine{14, Ratio(-21, 2)};
  EXPECT_FALSE(verify_certificate(cert));
}

}  // namespace
}  // namespace circuit
