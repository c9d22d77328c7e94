#include <gtest/gtest.h>

#include "homfly/harness.hpp"

using namespace homfly;

namespace {

int count_status(const std::vector<InvariantReport>& rs, Status s) {
  int n = 0;
  for (const auto& r : rs)
    for (const auto& c : r.checks) n += c.status == s;
  return n;
}

const Check* find_check(const InvariantReport& r, const std::string& id) {
  for (const auto& c : r.checks)
    if (c.id == id) return &c;
  return nullptr;
}

}  // namespace

TEST(Harness, ReportsPass) {
  InvariantReport ok, skipped, failed;
  ok.expect_eq("x", 1, 1);
  skipped.add("y", "a", "b", Status::Skipped);
  failed.expect_eq("z", 1, 2);
  EXPECT_TRUE(reports_pass({ok, skipped}));
  EXPECT_FALSE(reports_pass({ok, skipped}, true));
  EXPECT_FALSE(reports_pass({ok, failed}));
  InvariantReport flagged;
  flagged.add("f", "a", "b", Status::Flagged);
  EXPECT_TRUE(reports_pass({flagged}, true));
}

TEST(Harness, ComputeAddsStandardChecks) {
  Harness h(HarnessOptions{.jones = true});
  InvariantReport rep;
  auto p = h.compute(trefoil_diagram(), rep);
  ASSERT_TRUE(p);
  EXPECT_EQ(rep.max_z, 2);
  EXPECT_EQ(rep.morton, 2);
  EXPECT_EQ(rep.engine, "skein");
  for (const char* id : {"morton-bound", "parity", "jones-oracle"}) {
    auto c = find_check(rep, id);
    ASSERT_NE(c, nullptr) << id;
    EXPECT_EQ(c->status, Status::Pass) << id;
  }
  EXPECT_GT(h.skein_nodes(), 0u);
}

TEST(Harness, BudgetBecomesSkip) {
  HarnessOptions opts;
  opts.skein.node_budget = 3;
  Harness h(opts);
  InvariantReport rep;
  EXPECT_FALSE(h.compute(blackboard_double(trefoil_diagram()), rep));
  EXPECT_TRUE(rep.has(Status::Skipped));
  EXPECT_FALSE(rep.polynomial);
  EXPECT_TRUE(reports_pass({rep}));
  EXPECT_FALSE(reports_pass({rep}, true));
}

TEST(Harness, MainSuiteSmallR) {
  Harness h;
  auto rs = h.verify_theorem_main(2);
  ASSERT_EQ(rs.size(), 4u);
  EXPECT_EQ(count_status(rs, Status::Fail), 0);
  EXPECT_EQ(rs[0].max_z, 5);
  EXPECT_EQ(rs[2].max_z, 11);
  EXPECT_NE(find_check(rs[3], "mirror-identity"), nullptr);
  EXPECT_THROW(h.verify_theorem_main(0), std::invalid_argument);
  auto with3 = h.verify_theorem_main(3);
  EXPECT_EQ(with3.size(), 6u);
  EXPECT_TRUE(with3[4].has(Status::Skipped));
}

TEST(Harness, BorromeanFlagsOneCoefficient) {
  Harness h(HarnessOptions{.jones = true});
  auto rep = h.verify_example_borromean();
  EXPECT_EQ(rep.max_z, 11);
  auto c = find_check(rep, "coefficient z^1*v^-5");
  ASSERT_NE(c, nullptr);
  EXPECT_EQ(c->status, Status::Flagged);
  EXPECT_EQ(c->got, "-12");
  EXPECT_EQ(find_check(rep, "table-match")->status, Status::Pass);
  EXPECT_EQ(find_check(rep, "jones-oracle")->status, Status::Pass);
  EXPECT_EQ(rep.polynomial->coeff(-5, 1), -12);
}

TEST(Harness, CountsAndProps) {
  Harness h;
  auto counts = h.verify_counts(4);
  EXPECT_EQ(count_status(counts, Status::Fail), 0);
  EXPECT_GT(count_status(counts, Status::Pass), 20);
  auto props = h.verify_props();
  EXPECT_EQ(count_status(props, Status::Fail), 0);
}

TEST(Harness, FamilyIsWorkerIndependent) {
  HarnessOptions one, two;
  two.workers = 2;
  auto a = Harness(one).verify_whitehead_family(default_family_samples());
  auto b = Harness(two).verify_whitehead_family(default_family_samples());
  EXPECT_EQ(render_json(a), render_json(b));
  EXPECT_EQ(a.size(), 20u);
  EXPECT_EQ(count_status(a, Status::Fail), 0);
}

TEST(Harness, NonKnotSampleIsSkipped) {
  Harness h;
  auto rs = h.verify_whitehead_family({{"hopf", from_braid_closure(BraidWord(2, {1, 1}))}});
  ASSERT_FALSE(rs.empty());
  EXPECT_TRUE(rs[0].has(Status::Skipped));
  EXPECT_EQ(count_status(rs, Status::Fail), 0);
}

TEST(Harness, RunSuiteByName) {
  Harness h;
  EXPECT_THROW(h.run_suite("nonsense"), std::invalid_argument);
  EXPECT_FALSE(h.run_suite("counts").empty());
}

TEST(Harness, RenderingIsDeterministic) {
  auto a = Harness().verify_counts(3);
  auto b = Harness().verify_counts(3);
  EXPECT_EQ(render_json(a), render_json(b));
  EXPECT_EQ(render_csv(a), render_csv(b));
  EXPECT_EQ(render_text(a), render_text(b));
}

TEST(Harness, Renderers) {
  InvariantReport r;
  r.input = "a,b";
  r.engine = "skein";
  r.polynomial = LaurentPoly2::delta();
  r.max_z = -1;
  r.morton = 0;
  r.genus = HalfInt{1};
  r.add("quote", "say \"hi\"", "x", Status::Flagged, "why");
  r.expect_eq("n", 2, 2);
  auto j = nlohmann::json::parse(render_json({r}));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["input"], "a,b");
  EXPECT_EQ(j[0]["max_z"], -1);
  EXPECT_EQ(j[0]["genus"], "0.5");
  EXPECT_EQ(j[0]["ms"], 0);
  EXPECT_EQ(j[0]["checks"][0]["status"], "FLAGGED");
  EXPECT_EQ(j[0]["checks"][0]["note"], "why");
  EXPECT_FALSE(j[0]["checks"][1].contains("note"));
  EXPECT_EQ(LaurentPoly2::from_json(j[0]["polynomial"]), LaurentPoly2::delta());

  auto csv = render_csv({r});
  EXPECT_NE(csv.find("\"a,b\",skein,"), std::string::npos);
  EXPECT_NE(csv.find("\"say \"\"hi\"\"\""), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);

  auto text = render_text({r});
  EXPECT_NE(text.find("FLAGGED  quote"), std::string::npos);
  EXPECT_NE(text.find("    note: why"), std::string::npos);
  EXPECT_NE(text.find("summary: 1 passed, 0 failed, 0 skipped, 1 flagged"), std::string::npos);
  EXPECT_EQ(csv_field("plain"), "plain");
}
