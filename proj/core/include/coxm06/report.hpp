#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace coxm06 {

enum class Status { Pass, Fail, Skipped };

std::string_view status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  nlohmann::json witness;  // null when there is nothing exact to attach
};

struct Counts {
  std::size_t pass = 0, fail = 0, skipped = 0;
};

class SuiteReport {
 public:
  explicit SuiteReport(std::string suite = "") : suite_(std::move(suite)) {}

  Check& add(std::string name, bool ok, std::string detail = {}, nlohmann::json witness = nullptr);
  void add_skipped(std::string name, std::string detail);
  /// Appends every check of other, prefixing names with "<prefix>/" when prefix is non-empty.
  void merge(const SuiteReport& other, const std::string& prefix = {});

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }
  Counts counts() const;
  bool passed() const { return counts().fail == 0; }
  std::vector<const Check*> failures() const;

  std::vector<std::uint64_t> seeds;

  /// {schema, suite, version, seeds, checks: [{name, status, detail, witness?}], counts}
  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

}  // namespace coxm06
