#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "etf/harness.hpp"

namespace etf::harness {

namespace {

using json = nlohmann::ordered_json;

// Values that fit in 64 bits become JSON numbers, anything else stays text.
json value(const std::string& v) {
  if (!v.empty() && v.size() <= 20 && v.find_first_not_of("0123456789") == std::string::npos) {
    try {
      return json(std::stoull(v));
    } catch (const std::out_of_range&) {
    }
  }
  return json(v);
}

json report_json(const Report& r) {
  json j;
  j["suite"] = to_string(r.suite);
  j["seed"] = r.seed;
  json bounds = json::object();
  for (const auto& [k, v] : r.bounds) bounds[k] = v;
  j["bounds"] = bounds;
  json claims = json::array();
  for (const auto& c : r.claims) {
    json cj;
    cj["label"] = c.label;
    cj["status"] = to_string(c.status);
    if (c.status == Status::Fail) {
      json ce = json::object();
      for (const auto& [k, v] : c.counterexample) ce[k] = value(v);
      cj["counterexample"] = ce;
      cj["reason"] = c.reason;
    }
    claims.push_back(cj);
  }
  j["claims"] = claims;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string to_json(const Report& r, int indent) { return report_json(r).dump(indent); }

std::string to_json(const std::vector<Report>& rs, int indent) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(report_json(r));
  return a.dump(indent);
}

std::string summary(const Report& r) {
  std::ostringstream os;
  const std::size_t run = r.claims.size() - r.count(Status::Skipped);
  os << std::left << std::setw(8) << to_string(r.suite) << ' ' << r.count(Status::Pass) << '/' << run << " pass";
  if (r.count(Status::Skipped)) os << ", " << r.count(Status::Skipped) << " skipped";
  os << "  (" << r.elapsed_ms << " ms)\n";
  for (const auto& c : r.claims) {
    if (c.status != Status::Fail) continue;
    os << "  FAIL " << c.label;
    for (std::size_t i = 0; i < c.counterexample.size(); ++i)
      os << (i ? ", " : " ") << c.counterexample[i].first << "=" << c.counterexample[i].second;
    if (!c.reason.empty()) os << "  -- " << c.reason;
    os << '\n';
  }
  return os.str();
}

}  // namespace etf::harness
