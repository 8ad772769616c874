#include "prelog/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json_util.hpp"
#include "prelog/errors.hpp"

#ifndef PRELOG_VERSION
#define PRELOG_VERSION "0.0.0"
#endif

namespace prelog {

using nlohmann::json;

std::string version() { return PRELOG_VERSION; }

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::info: return "info";
  }
  return "fail";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "info") return CheckStatus::info;
  throw ParseError("unknown check status '" + s + "'");
}

bool Report::passed() const { return count(CheckStatus::fail) == 0; }

std::size_t Report::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

int Report::exit_code() const { return passed() ? 0 : 1; }

std::string Report::to_json(int indent) const {
  json j;
  j["tool_version"] = tool_version;
  j["scenario_id"] = scenario_id;
  j["checks"] = json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"id", c.id},
                           {"description", c.description},
                           {"citation", c.citation},
                           {"expected", json::parse(c.expected)},
                           {"computed", json::parse(c.computed)},
                           {"status", status_name(c.status)},
                           {"criterion", c.criterion}});
  }
  json s;
  s["prelog_rank"] = summary.prelog_rank ? json(*summary.prelog_rank) : json(nullptr);
  s["invariant_factors"] = detail::vector_json(summary.invariant_factors);
  s["saturation_index"] = summary.saturation_index ? detail::int_json(*summary.saturation_index) : json(nullptr);
  s["generator_count"] = summary.generator_count ? json(*summary.generator_count) : json(nullptr);
  j["summary"] = s;
  j["passed"] = passed();
  return j.dump(indent);
}

Report Report::from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    Report r;
    r.tool_version = j.at("tool_version").get<std::string>();
    r.scenario_id = j.at("scenario_id").get<std::string>();
    for (const auto& c : j.at("checks")) {
      r.checks.push_back({c.at("id").get<std::string>(), c.value("description", ""), c.value("citation", ""),
                          c.at("expected").dump(), c.at("computed").dump(),
                          parse_status(c.at("status").get<std::string>()), c.value("criterion", 0)});
    }
    const auto& s = j.at("summary");
    if (!s.at("prelog_rank").is_null()) r.summary.prelog_rank = s.at("prelog_rank").get<std::size_t>();
    for (const auto& x : s.at("invariant_factors")) r.summary.invariant_factors.push_back(detail::integer_from(x));
    if (!s.at("saturation_index").is_null()) r.summary.saturation_index = detail::integer_from(s.at("saturation_index"));
    if (!s.at("generator_count").is_null()) r.summary.generator_count = s.at("generator_count").get<std::size_t>();
    return r;
  } catch (const json::exception& e) {
    throw ParseError(std::string("report JSON: ") + e.what());
  }
}

namespace {

std::string clip(const std::string& s, std::size_t width) {
  if (s.size() <= width) return s;
  return s.substr(0, width - 3) + "...";
}

}  // namespace

std::string Report::table() const {
  std::size_t id_width = 2;
  for (const auto& c : checks) id_width = std::max(id_width, c.id.size());
  id_width = std::min<std::size_t>(id_width, 40);

  std::ostringstream os;
  os << std::left << std::setw(5) << "AC" << std::setw(static_cast<int>(id_width) + 2) << "check" << std::setw(6)
     << "stat" << std::setw(26) << "expected"
     << "computed\n";
  for (const auto& c : checks) {
    os << std::setw(5) << (c.criterion ? std::to_string(c.criterion) : std::string("-"))
       << std::setw(static_cast<int>(id_width) + 2) << clip(c.id, id_width) << std::setw(6) << status_name(c.status)
       << std::setw(26) << clip(c.expected, 24) << clip(c.computed, 40) << '\n';
  }
  os << "\nscenario " << scenario_id << ": " << count(CheckStatus::pass) << " pass, " << count(CheckStatus::fail)
     << " fail, " << count(CheckStatus::info) << " info\n";
  if (summary.prelog_rank) os << "prelog rank (mod torsion): " << *summary.prelog_rank << '\n';
  if (!summary.invariant_factors.empty()) {
    os << "coker torsion factors:";
    for (const auto& f : summary.invariant_factors) os << ' ' << f;
    os << '\n';
  }
  if (summary.generator_count) os << "generator cycles: " << *summary.generator_count << '\n';
  if (summary.saturation_index) os << "saturation index: " << *summary.saturation_index << '\n';
  return os.str();
}

}  // namespace prelog
