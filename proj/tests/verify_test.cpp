#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "symforge/fixing.hpp"
#include "symforge/verify.hpp"

namespace symforge::verify {
namespace {

bool all_pass(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::pass; });
}

std::string jsonl(const std::vector<CheckReport>& reports) {
  std::string out;
  for (const auto& r : reports) out += to_json(r, false).dump() + "\n";
  return out;
}

TEST(VerifyTest, SmallSuitePasses) {
  auto reports = run_suite(3, {2});
  EXPECT_GE(reports.size(), 12U);
  EXPECT_TRUE(all_pass(reports)) << jsonl(reports);
}

TEST(VerifyTest, EveryClaimRunsAtLeastOnce) {
  auto reports = run_suite(4, {2, 3});
  for (const auto& c : claims()) {
    bool seen = std::any_of(reports.begin(), reports.end(), [&](const CheckReport& r) { return r.claim_id == c.id; });
    EXPECT_TRUE(seen) << c.id;
  }
}

TEST(VerifyTest, CountingTheoremAtFour) {
  auto reports = run_suite(4, {2}, {"counting-theorem", "counting-corollary"});
  ASSERT_EQ(reports.size(), 4U);
  EXPECT_TRUE(all_pass(reports)) << jsonl(reports);
}

TEST(VerifyTest, OddFieldFixedNumber) {
  auto reports = run_suite(2, {3}, {"fxd-qge3"});
  ASSERT_EQ(reports.size(), 1U);
  EXPECT_EQ(reports[0].status, Status::pass);
  EXPECT_EQ(reports[0].witnesses.back()["fixed_number"], 7);
}

TEST(VerifyTest, ResourceCapIsPerReport) {
  auto reports = run_suite(3, {3}, {"basis-image", "fxd-qge3"});
  ASSERT_EQ(reports.size(), 4U);
  EXPECT_EQ(reports[0].status, Status::pass);
  EXPECT_EQ(reports[1].status, Status::resource_cap);
  // n = 3, q = 3 has a huge group but the transposition argument needs none of it.
  EXPECT_EQ(reports[3].status, Status::pass);
  EXPECT_EQ(reports[3].witnesses.back()["fixed_number"], 25);
}

TEST(VerifyTest, UnknownClaimAndBadParams) {
  EXPECT_THROW(run_suite(3, {2}, {"nonexistent"}), std::invalid_argument);
  EXPECT_THROW(run_suite(3, {4}), std::invalid_argument);
  EXPECT_THROW(run_check("nonexistent", Json::object()), std::invalid_argument);
  EXPECT_THROW(run_check("deg-formula", Json{{"n", 3}}), std::invalid_argument);
  EXPECT_THROW(run_check("deg-formula", Json{{"n", 3}, {"q", 3}}), std::invalid_argument);
  EXPECT_THROW(graph_from_spec("cycle"), std::invalid_argument);
  EXPECT_THROW(graph_from_spec("cycle:5x"), std::invalid_argument);
  EXPECT_THROW(graph_from_spec("wheel:5"), std::invalid_argument);
}

TEST(VerifyTest, ReplayOneInstance) {
  auto r = run_check("fixngh-theorem", Json{{"n", 4}, {"q", 2}});
  EXPECT_EQ(r.status, Status::pass);
  EXPECT_EQ(r.claim_id, "fixngh-theorem");
}

TEST(VerifyTest, CorruptedCountingFormulaIsCaught) {
  auto mutant = [](int n, int ip, int i) { return detail::disjoint_fix_count(n, ip, i, 0); };
  CheckReport r = check_counting(4, false, mutant);
  ASSERT_EQ(r.status, Status::fail);
  const Json& first = r.witnesses[0];
  EXPECT_EQ(first["i_prime"], 1);
  EXPECT_EQ(first["i"], 1);
  EXPECT_EQ(first["formula"], 0);
  EXPECT_EQ(first["oracle"], 2);
  EXPECT_EQ(check_counting(4, false).status, Status::pass);
}

TEST(VerifyTest, DeterministicOutput) {
  EXPECT_EQ(jsonl(run_suite(4, {2, 3})), jsonl(run_suite(4, {2, 3})));
}

TEST(VerifyTest, GoldenReportStream) {
  std::ifstream in(SYMFORGE_TEST_DATA "/verify_n4_q2.jsonl");
  ASSERT_TRUE(in) << "missing golden file";
  std::stringstream golden;
  golden << in.rdbuf();
  EXPECT_EQ(jsonl(run_suite(4, {2})), golden.str());
}

}  // namespace
}  // namespace symforge::verify
