#include "hankel/hankel_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hankel/chebyshev.hpp"

namespace hankel {

namespace {

struct Locals {
  double u1, u2, u3;
  double b1, b2, b3;
};

Locals locals(const ClassParams& p) {
  return {u_poly(1, p.t), u_poly(2, p.t),     u_poly(3, p.t),
          1.0 + p.beta,   1.0 + 2.0 * p.beta, 1.0 + 3.0 * p.beta};
}

double scale_factor(const Locals& k) { return std::pow(k.b1, 4) * k.b2 * k.b2 * k.b3; }

void check_tau(double tau) {
  if (!(tau >= 0.0 && tau <= 2.0)) throw std::domain_error("tau must lie in [0, 2]");
}

}  // namespace

std::string to_string(CaseId id) {
  switch (id) {
    case CaseId::i: return "i";
    case CaseId::ii: return "ii";
    case CaseId::iii: return "iii";
    case CaseId::iv: return "iv";
    case CaseId::degenerate: return "degenerate";
  }
  return "?";
}

std::string to_string(Variant v) { return v == Variant::printed ? "printed" : "derived"; }

FCoefficients f_coefficients(const ClassParams& params, double tau) {
  check_tau(tau);
  const Locals k = locals(params);
  const double s = 4.0 - tau * tau;
  FCoefficients c;
  c.c1 = k.u1 * k.u1 * s * s / (64.0 * k.b2 * k.b2);
  c.c2 = k.u1 * k.u1 * tau * (tau - 2.0) * s / (32.0 * k.b1 * k.b3);
  c.c3 = k.u1 * k.u1 * k.u1 * tau * tau * s / (64.0 * k.b1 * k.b1 * k.b2) +
         k.u1 * k.u2 * tau * tau * s / (16.0 * k.b1 * k.b3);
  c.c4 = k.u1 * std::fabs(k.b1 * k.b1 * k.b1 * k.u3 - k.b3 * k.u1 * k.u1 * k.u1) * tau * tau * tau *
             tau / (16.0 * std::pow(k.b1, 4) * k.b3) +
         k.u1 * k.u1 * tau * s / (8.0 * k.b1 * k.b3);
  return c;
}

double f_value(const FCoefficients& c, double xi, double eta) {
  return c.c1 * (xi + eta) * (xi + eta) + c.c2 * (xi * xi + eta * eta) + c.c3 * (xi + eta) + c.c4;
}

double f_value(const ClassParams& params, double tau, double xi, double eta) {
  if (!(xi >= 0.0 && xi <= 1.0 && eta >= 0.0 && eta <= 1.0))
    throw std::domain_error("xi and eta must lie in [0, 1]");
  return f_value(f_coefficients(params, tau), xi, eta);
}

double hessian_discriminant(const ClassParams& params, double tau) {
  const FCoefficients c = f_coefficients(params, tau);
  return 4.0 * c.c2 * (2.0 * c.c1 + c.c2);
}

double h_value(const ClassParams& params, double tau) {
  const FCoefficients c = f_coefficients(params, tau);
  return 4.0 * c.c1 + 2.0 * (c.c2 + c.c3) + c.c4;
}

QuarticProfile quartic_profile(const ClassParams& params) {
  const Locals k = locals(params);
  QuarticProfile q;
  q.a0 = k.u1 * k.u1 / (k.b2 * k.b2);
  q.a2 = -k.u1 * k.u1 / (2.0 * k.b2 * k.b2) + k.u1 * k.u1 / (4.0 * k.b1 * k.b3) +
         k.u1 * k.u1 * k.u1 / (8.0 * k.b1 * k.b1 * k.b2) + k.u1 * k.u2 / (2.0 * k.b1 * k.b3);
  q.a4 = k.u1 * k.u1 / (16.0 * k.b2 * k.b2) - k.u1 * k.u1 / (16.0 * k.b1 * k.b3) -
         k.u1 * k.u1 * k.u1 / (32.0 * k.b1 * k.b1 * k.b2) - k.u1 * k.u2 / (8.0 * k.b1 * k.b3) +
         k.u1 * std::fabs(k.b1 * k.b1 * k.b1 * k.u3 - k.b3 * k.u1 * k.u1 * k.u1) /
             (16.0 * std::pow(k.b1, 4) * k.b3);
  // The odd terms cancel identically, so the expansion must match the
  // summed surface on any grid.
  for (const double tau : {0.0, 0.5, 1.0, 1.5, 2.0}) {
    const double direct = h_value(params, tau);
    if (std::fabs(direct - q.value(tau)) > 1e-12 * (1.0 + std::fabs(direct)))
      throw std::logic_error("quartic_profile: expansion residue exceeds tolerance");
  }
  return q;
}

double delta_printed(const ClassParams& params) {
  const double t = params.t;
  const double beta = params.beta;
  const double b1 = 1.0 + beta, b2 = 1.0 + 2.0 * beta, b3 = 1.0 + 3.0 * beta;
  return 16.0 * t * t * std::fabs((2.0 * t * t - 1.0) * b1 * b1 * b1 - 2.0 * t * t * b3) * b2 * b2 -
         8.0 * t * (t * t - (4.0 * t * t - 1.0) * b1 * b2) * b1 * b1 * b2 * b3 -
         8.0 * t * t * b1 * b1 * b1 * beta * beta;
}

double c_printed(const ClassParams& params) {
  const double t = params.t;
  const double beta = params.beta;
  const double b1 = 1.0 + beta, b2 = 1.0 + 2.0 * beta;
  const double b3 = 1.0 + 3.0 * beta;
  return 8.0 * t * ((5.0 * t * t - 1.0) * b3 + 2.0 * (4.0 * t * t - 1.0) * beta * beta) * b1 * b1 *
             b2 -
         8.0 * t * t * (b1 * b1 + (2.0 + beta) * beta) * b1 * b1 * b1;
}

double delta_derived(const ClassParams& params) {
  return 32.0 * scale_factor(locals(params)) * quartic_profile(params).a4;
}

double c_derived(const ClassParams& params) {
  return 8.0 * scale_factor(locals(params)) * quartic_profile(params).a2;
}

CaseId classify_case(double delta, double c_coef, double tol) {
  if (std::fabs(delta) <= tol || std::fabs(c_coef) <= tol) return CaseId::degenerate;
  if (delta > 0.0 && c_coef > 0.0) return CaseId::i;
  if (delta > 0.0 && c_coef < 0.0) return CaseId::ii;
  if (delta < 0.0 && c_coef < 0.0) return CaseId::iii;
  return CaseId::iv;
}

BoundBreakdown theorem_bound(const ClassParams& params, Variant variant) {
  BoundBreakdown out;
  out.variant = variant;
  if (variant == Variant::printed) {
    out.delta = delta_printed(params);
    out.c_coef = c_printed(params);
  } else {
    out.delta = delta_derived(params);
    out.c_coef = c_derived(params);
  }
  const double tol = 1e-9 * (1.0 + std::max(std::fabs(out.delta), std::fabs(out.c_coef)));
  out.case_id = classify_case(out.delta, out.c_coef, tol);
  out.h_zero = h_value(params, 0.0);
  out.h_end = h_value(params, 2.0);

  if (out.delta * out.c_coef < 0.0 && out.delta != 0.0) {
    const double tau0sq = -2.0 * out.c_coef / out.delta;
    if (tau0sq > 0.0) {
      const double tau0 = std::sqrt(tau0sq);
      if (tau0 > 0.0 && tau0 < 2.0) {
        out.tau0 = tau0;
        out.h_tau0 = h_value(params, tau0);
      }
    }
  }

  switch (out.case_id) {
    case CaseId::i:
      out.bound = out.h_end;
      break;
    case CaseId::ii:
      // The interior critical point is a minimum; the safe completion is
      // the larger endpoint limit.
      out.bound = std::max(out.h_zero, out.h_end);
      break;
    case CaseId::iii:
      out.bound = out.h_zero;
      break;
    case CaseId::iv:
      out.bound = out.h_tau0 ? std::max(*out.h_tau0, out.h_end) : std::max(out.h_zero, out.h_end);
      break;
    case CaseId::degenerate: {
      double best = std::max(out.h_zero, out.h_end);
      if (out.h_tau0) best = std::max(best, *out.h_tau0);
      out.bound = best;
      break;
    }
  }
  return out;
}

double corollary_bound(const ClassParams& params) {
  constexpr double kBetaTol = 1e-12;
  if (std::fabs(params.beta) <= kBetaTol) return 8.0 * params.t * params.t;
  if (std::fabs(params.beta - 1.0) <= kBetaTol)
    return params.t * params.t * (1.0 - params.t * params.t);
  throw std::domain_error("corollary_bound: printed values exist only for beta = 0 or beta = 1");
}

}  // namespace hankel
