#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace klwv {

enum class Status { Pass, Fail };

struct CheckRecord {
  std::string id;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string expected;
  std::string actual;
  Status status = Status::Pass;
};

/// Result of a verification suite: one record per check, pass iff expected == actual.
class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& records() const { return records_; }

  /// Records a check; status is derived from exact string equality.
  void check(std::string id, std::vector<std::pair<std::string, std::string>> inputs, std::string expected,
             std::string actual);
  /// Records a boolean condition ("true" expected).
  void require(std::string id, std::vector<std::pair<std::string, std::string>> inputs, bool ok,
               std::string detail = {});
  void append(const Report& other);

  std::size_t pass_count() const;
  std::size_t fail_count() const;
  bool passed() const { return fail_count() == 0; }
  std::vector<CheckRecord> failures() const;

  nlohmann::ordered_json to_json() const;
  /// Header "suite,id,inputs,expected,actual,status".
  std::string to_csv(bool header = true) const;

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
};

}  // namespace klwv
