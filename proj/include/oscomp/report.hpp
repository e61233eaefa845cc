#pragma once

#include <string>
#include <utility>
#include <vector>

#include "oscomp/json_io.hpp"

namespace oscomp {

// Batch property survey over a list of models.  Every check is certificate
// backed; the report closes with a consistency audit over the implication
// ladder between the comparison properties.

struct ReportParams {
  Int n_max = 3;        // comparison checks run for n = 0..n_max
  Int bound = 8;        // element enumeration cap for comparison scans
  Int q_bound = 12;     // interval pool cap for the Q / QQ checks
  Int m_max = 3;        // multiplier cap for the factorization scan
  Int k_max = 200;      // iteration cap shared by the unbounded scans
  bool weak = true;     // also run the weak comparison ladder
  bool timings = false; // include wall times in the JSON output
  std::size_t threads = 0;  // 0: use OSCOMP_THREADS when set, else 1
};

struct CheckEntry {
  std::string property;
  Verdict status;
  Json detail;
  double wall_ms = 0.0;
};

struct PropertyReport {
  std::string model_id;
  Json bounds;  // effective bounds the checks ran with
  std::vector<CheckEntry> checks;
  bool replay_ok = true;
};

struct HierarchyViolation {
  std::string model_id;
  std::string description;
};

struct ReportDocument {
  std::vector<PropertyReport> reports;
  std::vector<HierarchyViolation> violations;
  bool ok() const;
};

// Runs all checks for one model.  The model's element bound is raised to
// (n_max+1)*bound when it is smaller, so the comparison scans never trip the
// sum guard; the bound actually used is recorded in the report.
PropertyReport run_property_report(const SemigroupModel& m, const std::string& model_id,
                                   const ReportParams& p);

ReportDocument run_report(const std::vector<std::pair<std::string, SemigroupModel>>& models,
                          const ReportParams& p);

Json report_to_json(const ReportDocument& d, bool timings);

}  // namespace oscomp
