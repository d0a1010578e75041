#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "stabilab/common.hpp"

namespace stabilab {

inline constexpr const char* kReportSchema = "1";

// One checked equality (or other exact comparison) with both sides kept.
struct ReportInstance {
  nlohmann::json params;
  BigInt lhs;
  BigInt rhs;
  bool pass = false;
  // Extra evidence, e.g. a symmetric difference; null when absent.
  nlohmann::json detail;
};

// Evidence for one statement over a parameter grid. pass() is true iff every
// instance passed; an empty report passes vacuously.
class StabilityReport {
 public:
  StabilityReport(std::string statement, nlohmann::json grid);

  const std::string& statement() const { return statement_; }
  const nlohmann::json& grid() const { return grid_; }
  const std::vector<ReportInstance>& instances() const { return instances_; }

  // Records lhs == rhs.
  void add(nlohmann::json params, BigInt lhs, BigInt rhs);
  // Records an instance whose pass flag is decided by the caller.
  void add(nlohmann::json params, BigInt lhs, BigInt rhs, bool pass, nlohmann::json detail);
  void append(const StabilityReport& other);

  bool pass() const;
  std::optional<ReportInstance> first_failure() const;

  // Shifts the left side of instance `index` and re-decides it as an
  // equality. Used by harnesses that check failure detection.
  void perturb(std::size_t index, long delta);

  double elapsed_ms() const { return elapsed_ms_; }
  void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }

  // Per-instance records {"statement","params","lhs","rhs","pass"[, "detail"]}.
  nlohmann::json instances_json() const;
  nlohmann::json to_json(bool with_timing) const;
  // CSV rows matching csv_header(), one per instance.
  std::string to_csv_rows() const;
  static std::string csv_header();

 private:
  std::string statement_;
  nlohmann::json grid_;
  std::vector<ReportInstance> instances_;
  double elapsed_ms_ = 0.0;
};

// Runs `fn` on a fresh report and records its wall time.
template <typename Fn>
StabilityReport timed_report(std::string statement, nlohmann::json grid, Fn&& fn) {
  StabilityReport report(std::move(statement), std::move(grid));
  const auto start = std::chrono::steady_clock::now();
  fn(report);
  const auto stop = std::chrono::steady_clock::now();
  report.set_elapsed_ms(std::chrono::duration<double, std::milli>(stop - start).count());
  return report;
}

}  // namespace stabilab
