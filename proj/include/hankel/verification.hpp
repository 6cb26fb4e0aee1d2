#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hankel/hankel_bounds.hpp"

namespace hankel {

struct SquareMax {
  double value;
  double xi;
  double eta;
  bool tie;  // F constant over the square to rounding (the tau = 2 limit)
};

/// Maximize F(., .) over the closed unit square by grid scan at the given
/// per-axis resolution (>= 11) followed by coordinate-wise golden-section
/// refinement from the best cell. Deterministic.
SquareMax maximize_f_on_square(const ClassParams& params, double tau, int resolution);

struct TauMax {
  double value;
  double tau;
};

/// Maximize H(t, .) over [0, 2] by grid scan (resolution >= 101) plus
/// golden-section refinement around the best node.
TauMax maximize_h_on_tau(const ClassParams& params, int resolution);

struct EmpiricalMax {
  double value;
  RelaxationPoint witness;
};

/// Largest |a2 a4 - a3^2| over `count` sampled relaxation points, with the
/// achieving point. Deterministic in (count, seed).
EmpiricalMax empirical_functional_max(const ClassParams& params, std::int64_t count,
                                      std::uint64_t seed);

struct AuditConfig {
  std::int64_t samples = 100000;
  std::uint64_t seed = 0;
  int omega_resolution = 401;  // per-axis grid for the square maximization
  int tau_resolution = 4001;   // grid on [0, 2]
};

struct ArgmaxRecord {
  double tau;
  double xi;
  double eta;

  friend bool operator==(const ArgmaxRecord&, const ArgmaxRecord&) = default;
};

inline constexpr const char* kFlagInvariantViolation = "invariant-violation";
inline constexpr const char* kFlagPrintedDerivedMismatch = "printed-derived-mismatch";
inline constexpr const char* kFlagCorollaryMismatch = "corollary-mismatch";
inline constexpr const char* kFlagBoundaryArgmaxShift = "boundary-argmax-shift";

struct AuditReport {
  double beta = 0.0;
  double t = 0.0;
  BoundBreakdown printed;
  BoundBreakdown derived;
  double numeric_bound = 0.0;   // max over the tau grid of the square maximum
  double empirical_max = 0.0;   // max |a2 a4 - a3^2| over sampled points
  ArgmaxRecord argmax{};
  RelaxationPoint witness{};    // achieving point of empirical_max
  std::optional<double> corollary;  // printed special-case value, beta in {0, 1}
  std::vector<std::string> flags;
  std::uint64_t seed = 0;
  std::int64_t sample_count = 0;
  int grid_resolution = 0;  // omega grid, per axis
  int tau_resolution = 0;
  std::vector<std::string> errata;

  friend bool operator==(const AuditReport&, const AuditReport&) = default;
};

/// Known defects of the printed source formulas that the pipeline works
/// around; attached to every audit report.
const std::vector<std::string>& errata_notes();

/// Run both bound variants, the numeric maximization and the sampling
/// audit, and populate the discrepancy flags.
AuditReport cross_check(const ClassParams& params, const AuditConfig& config);

struct RegionRow {
  double beta;
  double t;
  double delta_printed;
  double c_printed;
  CaseId case_printed;
  double bound_printed;
  double delta_derived;
  double c_derived;
  CaseId case_derived;
  double bound_derived;
  bool agree;

  friend bool operator==(const RegionRow&, const RegionRow&) = default;
};

/// Per-cell variant comparison over a (beta, t) grid; rows in beta-major
/// order. Cells are flagged agree = false when the case ids differ or the
/// bounds differ beyond 1e-6 relative.
std::vector<RegionRow> region_map(const std::vector<double>& beta_grid,
                                  const std::vector<double>& t_grid);

/// Exit-code policy shared by the command-line front end:
/// 1 for any invariant violation, else 3 for mismatch-only findings,
/// else 0.
int exit_code_for(const std::vector<std::string>& flags);

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;
};

/// The full invariant suite: polynomial identities, series round trips,
/// sampler bounds, coefficient-system identities, the sign suite, bound
/// dominance, boundary-argmax and determinism checks. Pure and
/// deterministic; sampler_count scales the stochastic parts.
std::vector<CheckResult> run_selfcheck(std::int64_t sampler_count = 10000);

}  // namespace hankel
