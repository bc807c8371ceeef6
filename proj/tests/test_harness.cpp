#include <gtest/gtest.h>

#include <set>

#include "cjlogic/reproduce.hpp"

using namespace cjlogic;

namespace {

const ReproduceReport& default_report() {
  static const ReproduceReport r = reproduce();
  return r;
}

}  // namespace

TEST(Reproduce, RegistryCoveredExactlyOnceInOrder) {
  const auto& claims = default_report().claims();
  const auto& ids = claim_registry();
  ASSERT_EQ(claims.size(), ids.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    EXPECT_EQ(claims[i].id, ids[i]);
    EXPECT_TRUE(seen.insert(claims[i].id).second) << claims[i].id;
  }
}

TEST(Reproduce, DefaultSeedStatuses) {
  const ReproduceReport& r = default_report();
  EXPECT_TRUE(r.passed()) << r.text();
  EXPECT_EQ(r.exit_code(), 0);
  for (const auto& c : r.claims()) {
    if (c.id == "witness-kripke-valid" || c.id == "cj-minus-incomplete")
      EXPECT_EQ(c.status, ClaimStatus::BoundedEvidence) << c.id;
    else if (c.id == "mpc-breaks-3-validity")
      EXPECT_EQ(c.status, ClaimStatus::ExpectedExhibit) << c.id;
    else
      EXPECT_EQ(c.status, ClaimStatus::Confirmed) << c.id;
  }
}

TEST(Reproduce, Witnesses) {
  const ReproduceReport& r = default_report();
  EXPECT_EQ(r.find("mpc-consequence-fails-3")->witness.dump(), R"({"p":"b","q":"f"})");
  EXPECT_EQ(r.find("witness-underivable-cj-minus")->witness["countervaluation"].dump(), R"({"p":"b","q":"f"})");
  const auto& negc = r.find("negc-heredity-failure")->witness;
  EXPECT_EQ(negc["model"].dump(), R"({"worlds":2,"rel":[[0,0],[0,1],[1,1]],"val":{"p":[1]}})");
  EXPECT_EQ(negc["pair"].dump(), "[0,1]");
  EXPECT_EQ(r.find("mpi-derivable-with-mpc")->witness["cj-minus"]["step"], 4);
  EXPECT_EQ(r.find("negc-weakening-invalid")->witness.size(), 2U);
}

TEST(Reproduce, ByteIdenticalAcrossRuns) {
  const ReproduceReport again = reproduce();
  EXPECT_EQ(again.text(), default_report().text());
  EXPECT_EQ(again.json().dump(), default_report().json().dump());
}

TEST(Reproduce, OtherSeedsAlsoPass) {
  ReproduceOptions opt;
  opt.seed = 12345;
  opt.fuzz_iterations = 200;
  opt.random_models = 2000;
  const ReproduceReport r = reproduce(opt);
  EXPECT_TRUE(r.passed()) << r.text();
  EXPECT_NE(r.json().dump(), default_report().json().dump());
}

TEST(Reproduce, CorruptedTableFails) {
  ReproduceOptions opt;
  opt.fuzz_iterations = 10;
  opt.random_models = 10;
  // ->i answers t on (b, f) instead of f.
  opt.evaluator = [](const Valuation3& v, const Formula& f) {
    if (f.kind() == Kind::ImpI && eval3(v, f.left()) == TruthValue3::b() && eval3(v, f.right()) == TruthValue3::f())
      return TruthValue3::t();
    return eval3(v, f);
  };
  const ReproduceReport r = reproduce(opt);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_EQ(r.find("truth-tables")->status, ClaimStatus::Failed);
  EXPECT_NE(r.text().find("FAILED: 1 of 17 claims"), std::string::npos) << r.text();
}

TEST(Reproduce, IncompletenessDependsOnItsLegs) {
  ClaimRecord ok{"x", ClaimStatus::Confirmed, "", nullptr};
  ClaimRecord bounded{"y", ClaimStatus::BoundedEvidence, "", nullptr};
  ClaimRecord failed{"z", ClaimStatus::Failed, "", nullptr};
  EXPECT_EQ(check_incompleteness(bounded, ok).status, ClaimStatus::BoundedEvidence);
  EXPECT_EQ(check_incompleteness(failed, ok).status, ClaimStatus::Failed);
  EXPECT_EQ(check_incompleteness(bounded, failed).status, ClaimStatus::Failed);
  EXPECT_EQ(check_witness_underivable(failed).status, ClaimStatus::Failed);
  EXPECT_EQ(check_witness_underivable(ok).status, ClaimStatus::Confirmed);
}

TEST(Reproduce, JsonShape) {
  const auto j = default_report().json();
  EXPECT_EQ(j["seed"], 0);
  EXPECT_EQ(j["passed"], true);
  ASSERT_TRUE(j["claims"].is_array());
  for (const auto& c : j["claims"]) {
    EXPECT_TRUE(c.contains("id"));
    EXPECT_TRUE(c.contains("status"));
    EXPECT_TRUE(c.contains("summary"));
    EXPECT_TRUE(c.contains("witness"));
  }
}
