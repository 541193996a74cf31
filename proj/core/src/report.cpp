#include "coxm06/report.hpp"

#include <sstream>

namespace coxm06 {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

Check& SuiteReport::add(std::string name, bool ok, std::string detail, nlohmann::json witness) {
  checks_.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail), std::move(witness)});
  return checks_.back();
}

void SuiteReport::add_skipped(std::string name, std::string detail) {
  checks_.push_back({std::move(name), Status::Skipped, std::move(detail), nullptr});
}

void SuiteReport::merge(const SuiteReport& other, const std::string& prefix) {
  for (const auto& c : other.checks_) {
    Check copy = c;
    if (!prefix.empty()) copy.name = prefix + "/" + copy.name;
    checks_.push_back(std::move(copy));
  }
  for (auto s : other.seeds)
    if (std::find(seeds.begin(), seeds.end(), s) == seeds.end()) seeds.push_back(s);
}

Counts SuiteReport::counts() const {
  Counts n;
  for (const auto& c : checks_) {
    if (c.status == Status::Pass) ++n.pass;
    if (c.status == Status::Fail) ++n.fail;
    if (c.status == Status::Skipped) ++n.skipped;
  }
  return n;
}

std::vector<const Check*> SuiteReport::failures() const {
  std::vector<const Check*> out;
  for (const auto& c : checks_)
    if (c.status == Status::Fail) out.push_back(&c);
  return out;
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    nlohmann::json j = {{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}};
    if (!c.witness.is_null()) j["witness"] = c.witness;
    checks.push_back(std::move(j));
  }
  Counts n = counts();
  return {{"schema", 1},
          {"suite", suite_},
          {"version", COXM06_VERSION},
          {"seeds", seeds},
          {"checks", std::move(checks)},
          {"counts", {{"pass", n.pass}, {"fail", n.fail}, {"skipped", n.skipped}}}};
}

std::string SuiteReport::to_text() const {
  std::ostringstream os;
  os << "suite " << suite_ << "\n";
  for (const auto& c : checks_) {
    os << "  [" << status_name(c.status) << "] " << c.name;
    if (!c.detail.empty()) os << ": " << c.detail;
    os << "\n";
  }
  Counts n = counts();
  os << "pass " << n.pass << ", fail " << n.fail << ", skipped " << n.skipped << "\n";
  return os.str();
}

}  // namespace coxm06
