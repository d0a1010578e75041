#include "stabilab/report.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace stabilab {

StabilityReport::StabilityReport(std::string statement, nlohmann::json grid)
    : statement_(std::move(statement)), grid_(std::move(grid)) {}

void StabilityReport::add(nlohmann::json params, BigInt lhs, BigInt rhs) {
  const bool equal = lhs == rhs;
  instances_.push_back({std::move(params), std::move(lhs), std::move(rhs), equal, nullptr});
}

void StabilityReport::add(nlohmann::json params, BigInt lhs, BigInt rhs, bool pass,
                          nlohmann::json detail) {
  instances_.push_back({std::move(params), std::move(lhs), std::move(rhs), pass, std::move(detail)});
}

void StabilityReport::append(const StabilityReport& other) {
  instances_.insert(instances_.end(), other.instances_.begin(), other.instances_.end());
  elapsed_ms_ += other.elapsed_ms_;
}

bool StabilityReport::pass() const {
  return std::ranges::all_of(instances_, [](const ReportInstance& i) { return i.pass; });
}

std::optional<ReportInstance> StabilityReport::first_failure() const {
  for (const auto& instance : instances_) {
    if (!instance.pass) return instance;
  }
  return std::nullopt;
}

void StabilityReport::perturb(std::size_t index, long delta) {
  if (index >= instances_.size()) throw std::out_of_range("perturb: no such instance");
  auto& instance = instances_[index];
  instance.lhs += delta;
  instance.pass = instance.lhs == instance.rhs;
}

namespace {

// Integers stay JSON numbers while they fit; larger ones become strings.
nlohmann::json integer_json(const BigInt& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

std::string params_text(const nlohmann::json& params) {
  std::string out;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!out.empty()) out.push_back(';');
    out += it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return out;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

nlohmann::json StabilityReport::instances_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& instance : instances_) {
    nlohmann::json record{{"statement", statement_},
                          {"params", instance.params},
                          {"lhs", integer_json(instance.lhs)},
                          {"rhs", integer_json(instance.rhs)},
                          {"pass", instance.pass}};
    if (!instance.detail.is_null()) record["detail"] = instance.detail;
    out.push_back(std::move(record));
  }
  return out;
}

nlohmann::json StabilityReport::to_json(bool with_timing) const {
  nlohmann::json doc{{"schema", kReportSchema},
                     {"statement", statement_},
                     {"grid", grid_},
                     {"pass", pass()},
                     {"instances", instances_json()}};
  if (with_timing) doc["timing"] = {{"elapsed_ms", elapsed_ms_}};
  return doc;
}

std::string StabilityReport::csv_header() { return "statement,params,lhs,rhs,pass\n"; }

std::string StabilityReport::to_csv_rows() const {
  std::ostringstream out;
  for (const auto& instance : instances_) {
    out << csv_quote(statement_) << ',' << csv_quote(params_text(instance.params)) << ','
        << instance.lhs.get_str() << ',' << instance.rhs.get_str() << ','
        << (instance.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace stabilab
