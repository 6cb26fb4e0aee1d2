#pragma once

#include <complex>

#include "hankel/caratheodory.hpp"

namespace hankel {

/// Parameters selecting the function class: beta in [0, 1] blends the
/// f(z)/z and f'(z) conditions, t in (1/2, 1) is the generating-function
/// argument. t is validated strictly interior with a 1e-9 margin unless
/// allow_exterior is set (exploration mode, |t| <= 1).
struct ClassParams {
  double beta;
  double t;

  ClassParams(double beta_, double t_, bool allow_exterior = false);
};

struct CoefficientTriple {
  Complex a2;
  Complex a3;
  Complex a4;
};

struct QTriple {
  Complex q1;
  Complex q2;
  Complex q3;
};

/// Solve the three direct-side linear equations
///   (1+beta)   a2 = (U1/2) p1
///   (1+2 beta) a3 = (U1/2)(p2 - p1^2/2) + (U2/4) p1^2
///   (1+3 beta) a4 = (U1/2)(p3 - p1 p2 + p1^3/4) + (U2/2) p1 (p2 - p1^2/2) + (U3/8) p1^3
CoefficientTriple solve_p_side(const ClassParams& params, Complex p1, Complex p2, Complex p3);

/// Solve the inverse-side equations for (q1, q2, q3) given a coefficient
/// triple; the unique solution of the analogous system driven by
/// -a2, 2a2^2 - a3 and -(5a2^3 - 5 a2 a3 + a4).
QTriple q_side_solve(const ClassParams& params, const CoefficientTriple& triple);

/// a3 = a2^2 + U1 (p2 - q2) / (4 (1+2 beta)) with a2 = U1 p1 / (2 (1+beta)).
Complex a3_closed(const ClassParams& params, Complex p1, Complex p2, Complex q2);

/// Fourth coefficient re-derived by eliminating the inverse-side cubic
/// terms (q1 = -p1 assumed):
///   a4 = 5 U1^2 p1 (p2-q2) / (16 (1+beta)(1+2 beta))
///      + U1 (p3-q3) / (4 (1+3 beta))
///      + (U2-U1) p1 (p2+q2) / (4 (1+3 beta))
///      + (U1 - 2 U2 + U3) p1^3 / (8 (1+3 beta)).
Complex a4_closed(const ClassParams& params, Complex p1, Complex p2, Complex p3, Complex q2,
                  Complex q3);

/// Printed variant of the fourth-coefficient closed form (denominator
/// 6 (1+beta)(1+2 beta) and no p1 factor on the (U2-U1) term). Kept
/// verbatim as an audit target; it does not satisfy the determinant
/// identity that a4_closed does.
Complex a4_printed(const ClassParams& params, Complex p1, Complex p2, Complex p3, Complex q2,
                   Complex q3);

/// Triple (a2, a3, a4) from the closed forms; the relaxation-level object
/// whose determinant the bounds majorize.
CoefficientTriple closed_form_triple(const ClassParams& params, Complex p1, Complex p2, Complex p3,
                                     Complex q2, Complex q3);
CoefficientTriple closed_form_triple(const ClassParams& params, const RelaxationPoint& pt);

/// Second Hankel determinant a2 a4 - a3^2.
Complex hankel2(const CoefficientTriple& triple);

/// The printed five-term expansion of a2 a4 - a3^2 in (p1, p2, p3, q2, q3),
/// with q1 = -p1.
Complex hankel2_expansion(const ClassParams& params, Complex p1, Complex p2, Complex p3, Complex q2,
                          Complex q3);

/// a3 - mu a2^2.
Complex fekete_szego_functional(const CoefficientTriple& triple, double mu);

/// Classical three-branch bound for |a3 - mu a2^2| over normalized
/// analytic functions: 3 - 4 mu, 1 + 2 exp(-2 mu/(1-mu)), 4 mu - 3.
double fekete_szego_classical_bound(double mu);

}  // namespace hankel
