#pragma once

// Property suites: every numbered claim is checked by exhaustive evaluation
// over a finite box, by comparison with an oracle, or by a kernel-checked
// proof. Running a suite never throws for a failing claim; failures are
// reported with a counterexample.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "etf/model/func.hpp"

namespace etf::harness {

enum class SuiteId { T1, LI, LEQ, MAX, PAIR, QUOT, PERM, MIN, REC, ITER, COMPILE, KERNEL };

const std::vector<SuiteId>& all_suites();
std::string to_string(SuiteId id);
SuiteId parse_suite(std::string_view s);  // std::invalid_argument

enum class Status { Pass, Fail, Skipped };
std::string to_string(Status s);

// Variable (or other key) to value, in the order the search box enumerates.
using Assignment = std::vector<std::pair<std::string, std::string>>;

struct ClaimResult {
  std::string label;
  Status status = Status::Pass;
  Assignment counterexample;  // non-empty exactly when failed
  std::string reason;         // what went wrong, for failures
};

// A planted fault: inside the claim labelled `label` (every claim when empty),
// the function `function` is replaced by `replacement`. A replacement of
// smaller arity ignores the extra arguments.
struct Fault {
  std::string label;
  std::string function;
  model::FuncValue replacement;
  std::string text;
};
// "[LABEL:]name=builtin", e.g. "T1.xxvi:pred=const:0". std::invalid_argument.
Fault parse_fault(std::string_view text);

struct Options {
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> bound;  // overrides the main box of each suite
  std::uint64_t fuel = model::kDefaultFuel;
  std::vector<Fault> faults;
  std::vector<std::string> only;  // labels or groups ("L8", "T1.") to run; the rest are skipped
  bool timing = true;             // false writes elapsed_ms as 0
};

struct Report {
  SuiteId suite = SuiteId::T1;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::uint64_t>> bounds;
  std::vector<ClaimResult> claims;  // sorted by label
  std::int64_t elapsed_ms = 0;

  bool passed() const;
  std::size_t count(Status s) const;
};

std::string to_json(const Report& r, int indent = -1);
std::string to_json(const std::vector<Report>& rs, int indent = -1);
// "T1       26/26 pass  (812 ms)" followed by one line per failing claim.
std::string summary(const Report& r);

Report run_suite(SuiteId id, const Options& opt = {});
std::vector<Report> run_all(const Options& opt = {});
int exit_code(const std::vector<Report>& rs);  // 0 all passed, 1 otherwise

// Labels a suite checks, without running it.
std::vector<std::string> suite_labels(SuiteId id);
// Every numbered item the suites are meant to cover.
const std::vector<std::string>& inventory();

// Item order: "T1.ii" < "T1.x" < "T1.xxvi"; the prefix compares as text.
bool label_less(const std::string& a, const std::string& b);

}  // namespace etf::harness
