#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "etf/model/builtins.hpp"
#include "etf/model/combinators.hpp"
#include "etf/tactics.hpp"
#include "suite.hpp"

namespace etf::harness {

namespace {

const std::vector<std::pair<SuiteId, const char*>> kSuiteNames = {
    {SuiteId::T1, "T1"},     {SuiteId::LI, "LI"},     {SuiteId::LEQ, "LEQ"},         {SuiteId::MAX, "MAX"},
    {SuiteId::PAIR, "PAIR"}, {SuiteId::QUOT, "QUOT"}, {SuiteId::PERM, "PERM"},       {SuiteId::MIN, "MIN"},
    {SuiteId::REC, "REC"},   {SuiteId::ITER, "ITER"}, {SuiteId::COMPILE, "COMPILE"}, {SuiteId::KERNEL, "KERNEL"},
};

detail::SuiteDef build(SuiteId id, const Options& opt) {
  switch (id) {
    case SuiteId::T1: return detail::suite_t1(opt);
    case SuiteId::LI: return detail::suite_li(opt);
    case SuiteId::LEQ: return detail::suite_leq(opt);
    case SuiteId::MAX: return detail::suite_max(opt);
    case SuiteId::PAIR: return detail::suite_pair(opt);
    case SuiteId::QUOT: return detail::suite_quot(opt);
    case SuiteId::PERM: return detail::suite_perm(opt);
    case SuiteId::MIN: return detail::suite_min(opt);
    case SuiteId::REC: return detail::suite_rec(opt);
    case SuiteId::ITER: return detail::suite_iter(opt);
    case SuiteId::COMPILE: return detail::suite_compile(opt);
    case SuiteId::KERNEL: return detail::suite_kernel(opt);
  }
  throw std::logic_error("unknown suite");
}

bool selected(const Options& opt, const std::string& label) {
  if (opt.only.empty()) return true;
  return std::any_of(opt.only.begin(), opt.only.end(),
                     [&](const std::string& p) {
                       if (label == p) return true;
                       if (label.compare(0, p.size(), p) != 0) return false;
                       return p.back() == '.' || label[p.size()] == '.';
                     });
}

std::vector<std::string> items(const std::string& prefix, int n) {
  static const char* roman[] = {"i",     "ii",    "iii",    "iv",   "v",    "vi",    "vii",    "viii",
                                "ix",    "x",     "xi",     "xii",  "xiii", "xiv",   "xv",     "xvi",
                                "xvii",  "xviii", "xix",    "xx",   "xxi",  "xxii",  "xxiii",  "xxiv",
                                "xxv",   "xxvi",  "xxvii",  "xxviii"};
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(prefix + "." + roman[i]);
  return out;
}

std::optional<int> roman_value(std::string_view s) {
  if (s.empty()) return std::nullopt;
  static const std::map<char, int> v = {{'i', 1}, {'v', 5}, {'x', 10}};
  int total = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto it = v.find(s[i]);
    if (it == v.end()) return std::nullopt;
    int here = it->second;
    int next = i + 1 < s.size() && v.count(s[i + 1]) ? v.at(s[i + 1]) : 0;
    total += here < next ? -here : here;
  }
  return total;
}

// Text compare with digit runs compared as numbers.
bool natural_less(std::string_view a, std::string_view b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t i2 = i, j2 = j;
      while (i2 < a.size() && std::isdigit(static_cast<unsigned char>(a[i2]))) ++i2;
      while (j2 < b.size() && std::isdigit(static_cast<unsigned char>(b[j2]))) ++j2;
      auto x = std::stoull(std::string(a.substr(i, i2 - i))), y = std::stoull(std::string(b.substr(j, j2 - j)));
      if (x != y) return x < y;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace

const std::vector<SuiteId>& all_suites() {
  static const std::vector<SuiteId> ids = [] {
    std::vector<SuiteId> v;
    for (const auto& [id, n] : kSuiteNames) v.push_back(id);
    return v;
  }();
  return ids;
}

std::string to_string(SuiteId id) {
  for (const auto& [i, n] : kSuiteNames)
    if (i == id) return n;
  return "?";
}

SuiteId parse_suite(std::string_view s) {
  for (const auto& [i, n] : kSuiteNames)
    if (s == n) return i;
  throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Fault parse_fault(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || eq + 1 == text.size())
    throw std::invalid_argument("fault '" + std::string(text) + "': expected [LABEL:]name=builtin");
  std::string_view lhs = text.substr(0, eq);
  Fault f;
  f.text = std::string(text);
  if (auto colon = lhs.rfind(':'); colon != std::string_view::npos) {
    f.label = std::string(lhs.substr(0, colon));
    lhs = lhs.substr(colon + 1);
  }
  f.function = std::string(lhs);
  if (f.function.empty()) throw std::invalid_argument("fault '" + f.text + "': missing function name");
  f.replacement = model::builtin(text.substr(eq + 1));
  return f;
}

bool Report::passed() const {
  return std::none_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.status == Status::Fail; });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(claims.begin(), claims.end(), [&](const ClaimResult& c) { return c.status == s; }));
}

bool label_less(const std::string& a, const std::string& b) {
  const auto da = a.rfind('.'), db = b.rfind('.');
  const std::string pa = a.substr(0, da), pb = b.substr(0, db);
  if (pa != pb) return natural_less(pa, pb);
  const std::string sa = da == std::string::npos ? "" : a.substr(da + 1);
  const std::string sb = db == std::string::npos ? "" : b.substr(db + 1);
  auto ra = roman_value(sa), rb = roman_value(sb);
  if (ra && rb && *ra != *rb) return *ra < *rb;
  return natural_less(sa, sb);
}

Report run_suite(SuiteId id, const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  detail::SuiteDef def = build(id, opt);
  Report r;
  r.suite = id;
  r.seed = opt.seed;
  r.bounds = def.bounds;
  for (const auto& c : def.claims) {
    ClaimResult res;
    if (!selected(opt, c.label)) {
      res.status = Status::Skipped;
    } else {
      detail::Context ctx(opt, c.label);
      try {
        res = c.check(ctx);
      } catch (const std::exception& e) {
        res = detail::fail({{"error", "exception"}}, e.what());
      }
      if (res.status == Status::Fail && res.counterexample.empty()) res.counterexample = {{"reason", res.reason}};
    }
    res.label = c.label;
    r.claims.push_back(std::move(res));
  }
  std::stable_sort(r.claims.begin(), r.claims.end(),
                   [](const ClaimResult& a, const ClaimResult& b) { return label_less(a.label, b.label); });
  if (opt.timing)
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                       .count();
  return r;
}

std::vector<Report> run_all(const Options& opt) {
  std::vector<Report> out;
  for (SuiteId id : all_suites()) out.push_back(run_suite(id, opt));
  return out;
}

int exit_code(const std::vector<Report>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const Report& r) { return r.passed(); }) ? 0 : 1;
}

std::vector<std::string> suite_labels(SuiteId id) {
  std::vector<std::string> out;
  for (const auto& c : build(id, Options{}).claims) out.push_back(c.label);
  std::sort(out.begin(), out.end(), label_less);
  return out;
}

const std::vector<std::string>& inventory() {
  static const std::vector<std::string> all = [] {
    std::vector<std::string> v;
    auto add = [&](const std::vector<std::string>& xs) { v.insert(v.end(), xs.begin(), xs.end()); };
    add(items("L1", 3));
    add(items("L2", 6));
    add({"L3", "ITER"});
    add(items("L5", 8));
    add(items("T1", 26));
    add({"C1.i", "C1.ii"});
    add(items("L8", 28));
    add({"L9", "L10"});
    add(items("L11", 11));
    add(items("L12", 3));
    add(items("L13", 6));
    add(items("L14", 3));
    add(items("L15", 3));
    add({"T2.1to2", "T2.2to3", "T2.3to4", "T2.4to3", "T2.3to2", "T2.2to1", "C2"});
    std::sort(v.begin(), v.end(), label_less);
    return v;
  }();
  return all;
}

namespace detail {

namespace {

// A replacement of smaller arity ignores the trailing arguments.
model::FuncValue fit(const model::FuncValue& f, int arity) {
  if (f.arity() >= arity) return f;
  const model::FuncValue three = f.arity() == 1 ? model::lift1(f) : model::lift2(f);
  return arity == 3 ? three : model::fix_r(three, Nat(0));
}

}  // namespace

model::Env Context::env(model::Env base) const {
  for (const auto& f : opt_.faults)
    if (f.label.empty() || f.label == label_) {
      auto it = base.functions.find(f.function);
      base.functions[f.function] = it == base.functions.end() ? f.replacement : fit(f.replacement, it->second.arity());
    }
  return base;
}

model::FuncValue Context::fn(const std::string& name, model::FuncValue f) const {
  for (const auto& flt : opt_.faults)
    if ((flt.label.empty() || flt.label == label_) && flt.function == name)
      return fit(flt.replacement, f ? f.arity() : flt.replacement.arity());
  return f;
}

ClaimResult pass() { return {}; }

ClaimResult fail(Assignment where, std::string reason) {
  ClaimResult r;
  r.status = Status::Fail;
  r.counterexample = std::move(where);
  r.reason = std::move(reason);
  return r;
}

ClaimResult first_failure(std::initializer_list<std::function<ClaimResult()>> checks) {
  for (const auto& c : checks) {
    ClaimResult r = c();
    if (r.status == Status::Fail) return r;
  }
  return pass();
}

std::string num(std::uint64_t v) { return std::to_string(v); }
std::string num(const Nat& v) { return v.str(); }

std::string expand_order(std::string_view text) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    const bool lt = text.compare(i, 3, "LT(") == 0, le = text.compare(i, 3, "LE(") == 0;
    const bool word_start = i == 0 || !std::isalnum(static_cast<unsigned char>(text[i - 1]));
    if (!(lt || le) || !word_start) {
      out += text[i++];
      continue;
    }
    // split the two arguments at the top-level comma
    std::size_t j = i + 3, comma = 0;
    int depth = 0;
    for (; j < text.size(); ++j) {
      if (text[j] == '(') ++depth;
      if (text[j] == ')') {
        if (depth == 0) break;
        --depth;
      }
      if (text[j] == ',' && depth == 0) comma = j;
    }
    if (j == text.size() || comma == 0) throw std::invalid_argument("malformed order shorthand in " + std::string(text));
    const std::string a = expand_order(text.substr(i + 3, comma - i - 3));
    const std::string b = expand_order(text.substr(comma + 1, j - comma - 1));
    const std::string less = "lt(" + a + "," + b + ")=S(0)";
    out += le ? "(" + less + " | " + a + "=" + b + ")" : "(" + less + ")";
    i = j + 1;
  }
  return out;
}

syntax::Formula parse_claim(const std::string& text, const model::Env& env) {
  syntax::Context ctx = model::env_context(env);
  for (const char* v : {"n", "m", "r", "k"})
    if (!ctx.contains(v)) ctx.declare(v, syntax::Sort::N);
  return syntax::parse_formula(expand_order(text), ctx);
}

ClaimResult check_compilation_proof(const syntax::Formula& phi) {
  const auto d = tactics::compilation_equivalence(phi);
  const auto r = d.check();
  if (!r.ok) return fail({{"formula", syntax::print(phi)}}, "compilation proof rejected: " + r.message);
  return pass();
}

ClaimResult check_formula(const std::string& text, const model::Env& env, std::uint64_t B) {
  const syntax::Formula phi = parse_claim(text, env);
  std::vector<std::string> vars;
  for (const auto& [name, sort] : syntax::free_vars_ordered(phi))
    if (sort == syntax::Sort::N && !env.numbers.count(name)) vars.push_back(name);
  const bool open = syntax::is_open(phi);

  model::Env e = env;
  std::vector<std::uint64_t> at(vars.size(), 0);
  auto where = [&] {
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i) a.emplace_back(vars[i], num(at[i]));
    return a;
  };
  while (true) {
    for (std::size_t i = 0; i < vars.size(); ++i) e.numbers[vars[i]] = Nat(at[i]);
    bool ok = false;
    try {
      ok = open ? model::eval_open(phi, e) : model::bounded_check(phi, e, B);
    } catch (const std::exception& ex) {
      return fail(where(), std::string("evaluation failed: ") + ex.what());
    }
    if (!ok) return fail(where(), "false: " + text);
    std::size_t i = vars.size();
    while (i > 0 && at[i - 1] == B) at[--i] = 0;
    if (i == 0) break;
    ++at[i - 1];
  }
  return pass();
}

ClaimResult check_formulas(const std::vector<Boxed>& items, const model::Env& env) {
  for (const auto& b : items) {
    ClaimResult r = check_formula(b.text, env, b.bound);
    if (r.status == Status::Fail) return r;
  }
  return pass();
}

ClaimResult agree(const model::FuncValue& f, const model::FuncValue& g, std::uint64_t B, const std::string& what,
                  const std::vector<std::string>& names) {
  static const std::vector<std::string> defaults[3] = {{"n"}, {"m", "n"}, {"m", "n", "r"}};
  const int k = f.arity();
  if (g.arity() != k) throw std::invalid_argument(what + ": arity mismatch");
  const auto& shown = names.empty() ? defaults[k - 1] : names;
  std::vector<Nat> args(static_cast<std::size_t>(k));
  std::vector<std::uint64_t> at(static_cast<std::size_t>(k), 0);
  while (true) {
    for (int i = 0; i < k; ++i) args[static_cast<std::size_t>(i)] = Nat(at[static_cast<std::size_t>(i)]);
    Assignment a;
    for (int i = 0; i < k; ++i) a.emplace_back(shown[static_cast<std::size_t>(i)], num(at[static_cast<std::size_t>(i)]));
    try {
      Nat x = f.call(args), y = g.call(args);
      if (x != y) return fail(a, what + ": " + x.str() + " but expected " + y.str());
    } catch (const std::exception& ex) {
      return fail(a, what + ": " + ex.what());
    }
    std::size_t i = at.size();
    while (i > 0 && at[i - 1] == B) at[--i] = 0;
    if (i == 0) break;
    ++at[i - 1];
  }
  return pass();
}

std::mt19937_64 rng(std::uint64_t seed, std::string_view family) {
  // FNV-1a keeps the stream independent of the standard library's hash
  std::uint64_t h = 1469598103934665603ull;
  for (char c : family) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return std::mt19937_64(h ^ (seed * 0x9E3779B97F4A7C15ull));
}

std::uint64_t main_bound(const Options& opt, std::uint64_t fallback) { return opt.bound.value_or(fallback); }

}  // namespace detail

}  // namespace etf::harness
