#include "klwv/report.hpp"

#include <algorithm>

namespace klwv {

void Report::check(std::string id, std::vector<std::pair<std::string, std::string>> inputs, std::string expected,
                   std::string actual) {
  const Status status = expected == actual ? Status::Pass : Status::Fail;
  records_.push_back({std::move(id), std::move(inputs), std::move(expected), std::move(actual), status});
}

void Report::require(std::string id, std::vector<std::pair<std::string, std::string>> inputs, bool ok,
                     std::string detail) {
  std::string actual = ok ? "true" : "false";
  if (!ok && !detail.empty()) actual += " (" + detail + ")";
  check(std::move(id), std::move(inputs), "true", std::move(actual));
}

void Report::append(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t Report::pass_count() const {
  return static_cast<std::size_t>(
      std::count_if(records_.begin(), records_.end(), [](const auto& r) { return r.status == Status::Pass; }));
}

std::size_t Report::fail_count() const { return records_.size() - pass_count(); }

std::vector<CheckRecord> Report::failures() const {
  std::vector<CheckRecord> out;
  std::copy_if(records_.begin(), records_.end(), std::back_inserter(out),
               [](const auto& r) { return r.status == Status::Fail; });
  return out;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  auto recs = nlohmann::ordered_json::array();
  for (const auto& r : records_) {
    nlohmann::ordered_json rec;
    rec["id"] = r.id;
    nlohmann::ordered_json in = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.inputs) in[k] = v;
    rec["inputs"] = in;
    rec["expected"] = r.expected;
    rec["actual"] = r.actual;
    rec["status"] = r.status == Status::Pass ? "pass" : "fail";
    recs.push_back(std::move(rec));
  }
  j["records"] = std::move(recs);
  j["summary"] = {{"pass", pass_count()}, {"fail", fail_count()}, {"total", records_.size()}};
  return j;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string Report::to_csv(bool header) const {
  std::string out;
  if (header) out += "suite,id,inputs,expected,actual,status\n";
  for (const auto& r : records_) {
    std::string inputs;
    for (const auto& [k, v] : r.inputs) {
      if (!inputs.empty()) inputs += ";";
      inputs += k + "=" + v;
    }
    out += csv_field(suite_) + "," + csv_field(r.id) + "," + csv_field(inputs) + "," + csv_field(r.expected) + "," +
           csv_field(r.actual) + "," + (r.status == Status::Pass ? "pass" : "fail") + "\n";
  }
  return out;
}

}  // namespace klwv
