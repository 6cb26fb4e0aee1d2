#pragma once

#include <optional>
#include <string>

#include "hankel/class_coefficients.hpp"

namespace hankel {

/// Coefficients of the triangle-bound surface
///   F(xi, eta) = c1 (xi+eta)^2 + c2 (xi^2+eta^2) + c3 (xi+eta) + c4
/// at fixed (beta, t, tau). On the admissible ranges c1, c3, c4 >= 0 and
/// c2 <= 0.
struct FCoefficients {
  double c1;
  double c2;
  double c3;
  double c4;
};

/// The boundary profile H(t, tau) = F(1, 1) as an even quartic in tau:
/// a0 + a2 tau^2 + a4 tau^4.
struct QuarticProfile {
  double a0;
  double a2;
  double a4;

  double value(double tau) const {
    const double s = tau * tau;
    return a0 + a2 * s + a4 * s * s;
  }
};

enum class CaseId { i, ii, iii, iv, degenerate };

enum class Variant { printed, derived };

std::string to_string(CaseId id);
std::string to_string(Variant v);

/// Everything behind one piecewise bound evaluation: the (delta, c) pair
/// for the chosen variant, the sign case, the candidate values, and the
/// resulting bound.
struct BoundBreakdown {
  Variant variant;
  double delta;
  double c_coef;
  CaseId case_id;
  std::optional<double> tau0;    // present iff delta * c_coef < 0 and tau0 in (0, 2)
  double h_zero;                 // H(t, 0+)
  double h_end;                  // H(t, 2-)
  std::optional<double> h_tau0;  // present with tau0
  double bound;

  friend bool operator==(const BoundBreakdown&, const BoundBreakdown&) = default;
};

/// The four printed surface coefficients at (params, tau), tau in [0, 2].
FCoefficients f_coefficients(const ClassParams& params, double tau);

/// F(xi, eta) for xi, eta in [0, 1].
double f_value(const ClassParams& params, double tau, double xi, double eta);
double f_value(const FCoefficients& c, double xi, double eta);

/// Second-derivative discriminant 4 c2 (2 c1 + c2) of F; negative on
/// tau in (0, 2), so F has no interior local maximum.
double hessian_discriminant(const ClassParams& params, double tau);

/// H(t, tau) = 4 c1 + 2 (c2 + c3) + c4, by direct summation. This value is
/// authoritative; the quartic and the (delta, c) closed forms are checked
/// against it, never the other way around.
double h_value(const ClassParams& params, double tau);

/// Expand h_value as an even quartic in tau. The odd terms cancel
/// identically; a residue beyond 1e-12 of the value scale throws.
QuarticProfile quartic_profile(const ClassParams& params);

/// Verbatim theorem-statement formulas for delta and c.
double delta_printed(const ClassParams& params);
double c_printed(const ClassParams& params);

/// delta and c re-derived from the quartic expansion:
/// delta = 32 K a4, c = 8 K a2 with K = (1+b)^4 (1+2b)^2 (1+3b).
double delta_derived(const ClassParams& params);
double c_derived(const ClassParams& params);

/// Sign-pattern case of the quartic profile: i (++), ii (+-), iii (--),
/// iv (-+); degenerate when either magnitude is within tol of zero.
CaseId classify_case(double delta, double c_coef, double tol);

/// The piecewise bound for the chosen (delta, c) variant. Candidate values
/// are always computed by evaluating h_value, including at the critical
/// point tau0 = sqrt(-2c/delta); when tau0 falls outside (0, 2) the bound
/// falls back to the endpoint comparison.
BoundBreakdown theorem_bound(const ClassParams& params, Variant variant);

/// Printed special-case bound: 8 t^2 for beta = 0, t^2 (1 - t^2) for
/// beta = 1. Other beta have no printed value and throw.
double corollary_bound(const ClassParams& params);

}  // namespace hankel
