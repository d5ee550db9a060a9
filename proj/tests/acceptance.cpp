// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "json.hpp"

#include "etf/harness.hpp"
#include "etf/model/arith.hpp"

using namespace etf;
using namespace etf::harness;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome require(bool cond, const std::string& what, Outcome o = {}) {
  if (!cond && o.ok) o = {false, what};
  return o;
}

// Runs the suite restricted to label prefixes; fails unless every selected claim passes.
Outcome suite_passes(SuiteId id, std::vector<std::string> only = {}, std::size_t expect = 0) {
  Options opt;
  opt.only = std::move(only);
  const Report r = run_suite(id, opt);
  const std::size_t run = r.claims.size() - r.count(Status::Skipped);
  if (!r.passed()) return {false, summary(r)};
  if (expect && run != expect)
    return {false, to_string(id) + " ran " + std::to_string(run) + " claims, expected " + std::to_string(expect)};
  return {true, to_string(id) + " " + std::to_string(run) + "/" + std::to_string(run)};
}

Outcome all_of(std::initializer_list<std::function<Outcome()>> parts) {
  std::string detail;
  for (const auto& p : parts) {
    Outcome o = p();
    if (!o.ok) return o;
    detail += (detail.empty() ? "" : ", ") + o.detail;
  }
  return {true, detail};
}

std::string read(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const fs::path& out) {
  const std::string cmd = std::string("\"") + ETF_CLI + "\" " + args + " > \"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

// Labels reported as failing in a JSON report file.
std::set<std::string> failing(const fs::path& json_file) {
  std::set<std::string> out;
  for (const auto& rep : nlohmann::json::parse(read(json_file)))
    for (const auto& c : rep["claims"])
      if (c["status"] == "fail") out.insert(c["label"].get<std::string>());
  return out;
}

Outcome predecessor() {
  const model::Arith a = model::make_arith(model::Basis::Wpra);
  if (a.pred(Nat(0)) != Nat(0)) return {false, "pred(0) = " + a.pred(Nat(0)).str()};
  for (std::uint64_t n = 0; n <= 14; ++n)
    if (a.pred(Nat(n + 1)) != Nat(n)) return {false, "pred(" + std::to_string(n + 1) + ") = " + a.pred(Nat(n + 1)).str()};
  return {true, "pred(0)=0 and pred(S(n))=n for n <= 14"};
}

Outcome full_run() {
  const fs::path dir = fs::temp_directory_path() / ("etf_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const auto t0 = Clock::now();
  const int code = run_cli("test --seed 0 --no-timing --json \"" + (dir / "a.json").string() + "\"", dir / "a.txt");
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  Outcome o = require(code == 0, "etf test exited " + std::to_string(code) + ":\n" + read(dir / "a.txt"));
  o = require(secs < 60, "full run took " + std::to_string(secs) + " s", o);
  if (!o.ok) return o;
  const std::size_t reports = nlohmann::json::parse(read(dir / "a.json")).size();
  o = require(reports == all_suites().size(), std::to_string(reports) + " reports", o);
  run_cli("test --seed 0 --no-timing --json \"" + (dir / "b.json").string() + "\"", dir / "b.txt");
  o = require(read(dir / "a.json") == read(dir / "b.json"), "reports differ between two runs", o);
  if (!o.ok) return o;

  // planted faults: the first over the full run, the rest within their suite
  const std::vector<std::tuple<std::string, std::string, std::string>> faults = {
      {"", "T1.xxvi", "pred=const:0"},
      {"QUOT", "L15.iii", "q=identity"},
      {"MAX", "L12.i", "max2=const:0"},
      {"PERM", "L14.iii", "g=identity"},
      {"LI", "L8.x", "pred=identity"},
      {"MIN", "T2.3to4", "g=const:0"},
  };
  int k = 0;
  for (const auto& [suite, label, fn] : faults) {
    const fs::path js = dir / ("fault" + std::to_string(k++) + ".json");
    const std::string args = "test --seed 0 --no-timing" + (suite.empty() ? "" : " --suite " + suite) +
                             " --inject " + label + ":" + fn + " --json \"" + js.string() + "\"";
    const int c = run_cli(args, dir / "fault.txt");
    const auto bad = failing(js);
    if (c != 1 || bad != std::set<std::string>{label}) {
      std::string got;
      for (const auto& b : bad) got += b + " ";
      return {false, "fault " + label + ":" + fn + " exited " + std::to_string(c) + ", failing: " + got};
    }
  }
  fs::remove_all(dir);
  return {true, "exit 0 in " + std::to_string(static_cast<int>(secs)) + " s, identical reports, " +
                    std::to_string(faults.size()) + " planted faults each flagged alone"};
}

struct Criterion {
  int number;
  std::string name;
  double limit_s;  // 0: no time limit
  std::function<Outcome()> check;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "predecessor through odd and f'", 10, predecessor},
      {2, "T1 inventory", 10, [] { return suite_passes(SuiteId::T1, {}, 26); }},
      {3, "L8, L11, L13 and L15 inventories", 10,
       [] {
         return all_of({
             [] { return suite_passes(SuiteId::LI); },
             [] { return suite_passes(SuiteId::LEQ); },
             [] { return suite_passes(SuiteId::PAIR); },
             [] { return suite_passes(SuiteId::QUOT); },
             [] { return suite_passes(SuiteId::COMPILE, {"L8."}); },
             [] { return suite_passes(SuiteId::KERNEL, {"L8.", "L11."}); },
         });
       }},
      {4, "formula compiler on 200 random formulas", 0, [] { return suite_passes(SuiteId::COMPILE, {"L8.xxvii"}, 1); }},
      {5, "internalization of 25 random terms with mutations", 0,
       [] { return suite_passes(SuiteId::KERNEL, {"L1.i"}, 1); }},
      {6, "kernel corpus and wpra/pra translations", 0,
       [] {
         return all_of({
             [] { return suite_passes(SuiteId::KERNEL, {"L3"}, 1); },
             [] { return suite_passes(SuiteId::REC, {"C1."}, 2); },
         });
       }},
      {7, "minimization pipelines end to end", 20, [] { return suite_passes(SuiteId::MIN, {}, 7); }},
      {8, "permutation extension", 0, [] { return suite_passes(SuiteId::PERM, {}, 3); }},
      {9, "full etf test run", 60, full_run},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    // the full run times itself; its wall clock includes the fault runs
    if (o.ok && c.limit_s > 0 && c.number != 9 && secs >= c.limit_s)
      o = {false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_s) + " s"};
    char t[32];
    std::snprintf(t, sizeof t, "%.2f s", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.name << "  (" << t << ")  "
              << o.detail << std::endl;
    failed += !o.ok;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed ? 1 : 0;
}
