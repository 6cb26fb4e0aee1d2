#include "hankel/class_coefficients.hpp"

#include <cmath>
#include <stdexcept>

#include "hankel/chebyshev.hpp"

namespace hankel {

namespace {

constexpr double kInteriorMargin = 1e-9;

struct ClassConstants {
  double u1, u2, u3;
  double b1, b2, b3;  // 1+beta, 1+2 beta, 1+3 beta
};

ClassConstants constants(const ClassParams& p) {
  return {u_poly(1, p.t), u_poly(2, p.t),     u_poly(3, p.t),
          1.0 + p.beta,   1.0 + 2.0 * p.beta, 1.0 + 3.0 * p.beta};
}

}  // namespace

ClassParams::ClassParams(double beta_, double t_, bool allow_exterior) : beta(beta_), t(t_) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw std::domain_error("beta must lie in [0, 1]");
  if (allow_exterior) {
    if (!(std::fabs(t) <= 1.0)) throw std::domain_error("t must satisfy |t| <= 1");
    return;
  }
  if (!(t > 0.5 + kInteriorMargin && t < 1.0 - kInteriorMargin))
    throw std::domain_error("t must lie strictly inside (1/2, 1)");
}

CoefficientTriple solve_p_side(const ClassParams& params, Complex p1, Complex p2, Complex p3) {
  const auto k = constants(params);
  CoefficientTriple out;
  out.a2 = k.u1 / 2.0 * p1 / k.b1;
  out.a3 = (k.u1 / 2.0 * (p2 - p1 * p1 / 2.0) + k.u2 / 4.0 * p1 * p1) / k.b2;
  out.a4 = (k.u1 / 2.0 * (p3 - p1 * p2 + p1 * p1 * p1 / 4.0) +
            k.u2 / 2.0 * p1 * (p2 - p1 * p1 / 2.0) + k.u3 / 8.0 * p1 * p1 * p1) /
           k.b3;
  return out;
}

QTriple q_side_solve(const ClassParams& params, const CoefficientTriple& triple) {
  const auto k = constants(params);
  QTriple out;
  out.q1 = -2.0 * k.b1 * triple.a2 / k.u1;
  const Complex q1sq = out.q1 * out.q1;
  // (1+2b)(2 a2^2 - a3) = (U1/2)(q2 - q1^2/2) + (U2/4) q1^2
  out.q2 = (k.b2 * (2.0 * triple.a2 * triple.a2 - triple.a3) - k.u2 / 4.0 * q1sq) * 2.0 / k.u1 +
           q1sq / 2.0;
  // -(1+3b)(5 a2^3 - 5 a2 a3 + a4)
  //   = (U1/2)(q3 - q1 q2 + q1^3/4) + (U2/2) q1 (q2 - q1^2/2) + (U3/8) q1^3
  const Complex lhs = -k.b3 * (5.0 * triple.a2 * triple.a2 * triple.a2 -
                               5.0 * triple.a2 * triple.a3 + triple.a4);
  out.q3 = (lhs - k.u2 / 2.0 * out.q1 * (out.q2 - q1sq / 2.0) - k.u3 / 8.0 * q1sq * out.q1) * 2.0 /
               k.u1 +
           out.q1 * out.q2 - q1sq * out.q1 / 4.0;
  return out;
}

Complex a3_closed(const ClassParams& params, Complex p1, Complex p2, Complex q2) {
  const auto k = constants(params);
  const Complex a2 = k.u1 * p1 / (2.0 * k.b1);
  return a2 * a2 + k.u1 * (p2 - q2) / (4.0 * k.b2);
}

Complex a4_closed(const ClassParams& params, Complex p1, Complex p2, Complex p3, Complex q2,
                  Complex q3) {
  const auto k = constants(params);
  return 5.0 * k.u1 * k.u1 * p1 * (p2 - q2) / (16.0 * k.b1 * k.b2) +
         k.u1 * (p3 - q3) / (4.0 * k.b3) + (k.u2 - k.u1) * p1 * (p2 + q2) / (4.0 * k.b3) +
         (k.u1 - 2.0 * k.u2 + k.u3) * p1 * p1 * p1 / (8.0 * k.b3);
}

Complex a4_printed(const ClassParams& params, Complex p1, Complex p2, Complex p3, Complex q2,
                   Complex q3) {
  const auto k = constants(params);
  return 5.0 * k.u1 * k.u1 * p1 * (p2 - q2) / (6.0 * k.b1 * k.b2) +
         k.u1 * (p3 - q3) / (4.0 * k.b3) + (k.u2 - k.u1) * (p2 + q2) / (4.0 * k.b3) +
         (k.u1 - 2.0 * k.u2 + k.u3) * p1 * p1 * p1 / (8.0 * k.b3);
}

CoefficientTriple closed_form_triple(const ClassParams& params, Complex p1, Complex p2, Complex p3,
                                     Complex q2, Complex q3) {
  const auto k = constants(params);
  CoefficientTriple out;
  out.a2 = k.u1 * p1 / (2.0 * k.b1);
  out.a3 = a3_closed(params, p1, p2, q2);
  out.a4 = a4_closed(params, p1, p2, p3, q2, q3);
  return out;
}

CoefficientTriple closed_form_triple(const ClassParams& params, const RelaxationPoint& pt) {
  const InducedCoefficients ic = induced_coefficients(pt);
  return closed_form_triple(params, pt.p1, ic.p2, ic.p3, ic.q2, ic.q3);
}

Complex hankel2(const CoefficientTriple& triple) {
  return triple.a2 * triple.a4 - triple.a3 * triple.a3;
}

Complex hankel2_expansion(const ClassParams& params, Complex p1, Complex p2, Complex p3, Complex q2,
                          Complex q3) {
  const auto k = constants(params);
  const Complex dp = p2 - q2;
  const Complex sp = p2 + q2;
  const Complex p1sq = p1 * p1;
  return k.u1 * k.u1 * k.u1 * p1sq * dp / (32.0 * k.b1 * k.b1 * k.b2) +
         k.u1 * k.u1 * p1 * (p3 - q3) / (8.0 * k.b1 * k.b3) +
         (k.u2 - k.u1) * k.u1 * p1sq * sp / (8.0 * k.b1 * k.b3) -
         k.u1 * k.u1 * dp * dp / (16.0 * k.b2 * k.b2) +
         k.u1 * p1sq * p1sq *
             ((k.u1 - 2.0 * k.u2 + k.u3) * k.b1 * k.b1 * k.b1 - k.u1 * k.u1 * k.u1 * k.b3) /
             (16.0 * k.b1 * k.b1 * k.b1 * k.b1 * k.b3);
}

Complex fekete_szego_functional(const CoefficientTriple& triple, double mu) {
  return triple.a3 - mu * triple.a2 * triple.a2;
}

double fekete_szego_classical_bound(double mu) {
  if (mu <= 0.0) return 3.0 - 4.0 * mu;
  if (mu < 1.0) return 1.0 + 2.0 * std::exp(-2.0 * mu / (1.0 - mu));
  return 4.0 * mu - 3.0;
}

}  // namespace hankel
