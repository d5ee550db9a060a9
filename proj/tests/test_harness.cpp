#include <set>

#include "doctest.h"
#include "etf/harness.hpp"

using namespace etf;
using namespace etf::harness;

TEST_CASE("suite labels cover the inventory exactly") {
  std::set<std::string> labels;
  for (const SuiteId id : all_suites())
    for (const auto& l : suite_labels(id)) CHECK_MESSAGE(labels.insert(l).second, "duplicate label " << l);
  const std::set<std::string> inv(inventory().begin(), inventory().end());
  CHECK(inv.size() == inventory().size());
  for (const auto& l : inv) CHECK_MESSAGE(labels.count(l), "not covered: " << l);
  for (const auto& l : labels) CHECK_MESSAGE(inv.count(l), "not in inventory: " << l);
}

TEST_CASE("label order") {
  CHECK(label_less("T1.ii", "T1.x"));
  CHECK(label_less("T1.x", "T1.xxvi"));
  CHECK(label_less("T1.iv", "T1.v"));
  CHECK(!label_less("T1.v", "T1.iv"));
  CHECK(label_less("L2.vi", "L8.i"));
  CHECK(label_less("L8.i", "L11.i"));
  CHECK(label_less("T2.1to2", "T2.2to1"));
}

TEST_CASE("suite ids and faults parse") {
  for (const SuiteId id : all_suites()) CHECK(parse_suite(to_string(id)) == id);
  CHECK_THROWS_AS(parse_suite("NOPE"), std::invalid_argument);
  const Fault f = parse_fault("T1.xxvi:pred=const:0");
  CHECK(f.label == "T1.xxvi");
  CHECK(f.function == "pred");
  CHECK(f.replacement(Nat(9)) == Nat(0));
  CHECK(parse_fault("plus=identity").label.empty());
  CHECK_THROWS_AS(parse_fault("pred"), std::invalid_argument);
  CHECK_THROWS_AS(parse_fault("pred=nonsense"), std::invalid_argument);
}

TEST_CASE("QUOT passes") {
  const Report r = run_suite(SuiteId::QUOT);
  CHECK(r.passed());
  CHECK(r.claims.size() == 3);
}

TEST_CASE("T1 passes and a planted fault is caught with n=1") {
  const Report r = run_suite(SuiteId::T1);
  CHECK(r.count(Status::Pass) == 26);
  Options opt;
  opt.faults.push_back(parse_fault("T1.xxvi:pred=const:0"));
  const Report bad = run_suite(SuiteId::T1, opt);
  CHECK(bad.count(Status::Fail) == 1);
  for (const auto& c : bad.claims) {
    if (c.status != Status::Fail) continue;
    CHECK(c.label == "T1.xxvi");
    REQUIRE(c.counterexample.size() == 1);
    CHECK(c.counterexample[0] == std::pair<std::string, std::string>{"n", "1"});
  }
  CHECK(exit_code({bad}) == 1);
  CHECK(exit_code({r}) == 0);
}

TEST_CASE("only runs the selected labels") {
  Options opt;
  opt.only = {"L15.ii"};
  const Report r = run_suite(SuiteId::QUOT, opt);
  CHECK(r.count(Status::Pass) == 1);
  CHECK(r.count(Status::Skipped) == 2);
  CHECK(r.passed());
}

TEST_CASE("reports are reproducible without timing") {
  Options opt;
  opt.timing = false;
  opt.seed = 5;
  const std::string a = to_json(run_suite(SuiteId::LEQ, opt)), b = to_json(run_suite(SuiteId::LEQ, opt));
  CHECK(a == b);
  CHECK(a.find("\"elapsed_ms\":0") != std::string::npos);
  CHECK(a.find("\"seed\":5") != std::string::npos);
}

TEST_CASE("summary lists failures") {
  Options opt;
  opt.faults.push_back(parse_fault("L15.iii:q=identity"));
  const std::string s = summary(run_suite(SuiteId::QUOT, opt));
  CHECK(s.rfind("QUOT", 0) == 0);
  CHECK(s.find("FAIL L15.iii") != std::string::npos);
}
