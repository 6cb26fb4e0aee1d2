#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel/verification.hpp"

namespace hankel {

/// Row of the sweep table; one per (cell, variant). Absent tau0/h_tau0
/// render as empty CSV fields; numbers use 17 significant digits.
struct SweepRow {
  double beta;
  double t;
  std::string variant;
  double delta;
  double c;
  std::string case_id;
  std::optional<double> tau0;
  double h_zero;
  double h_end;
  std::optional<double> h_tau0;
  double bound;
  double numeric_bound;
  double empirical_max;
  std::vector<std::string> flags;

  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

SweepRow make_sweep_row(const AuditReport& report, const BoundBreakdown& breakdown);

/// 17-significant-digit rendering; round-trips to the same double.
std::string format_double(double v);

std::string to_json_string(const BoundBreakdown& b);
std::string to_json_string(const AuditReport& r);
std::string to_json_string(const std::vector<SweepRow>& rows);
std::string to_json_string(const std::vector<RegionRow>& rows);

BoundBreakdown bound_breakdown_from_json(const std::string& text);
AuditReport audit_report_from_json(const std::string& text);

std::string to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> sweep_rows_from_csv(const std::string& text);

std::string to_csv(const std::vector<RegionRow>& rows);

}  // namespace hankel
