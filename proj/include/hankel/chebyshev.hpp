#pragma once

#include <vector>

namespace hankel {

/// Chebyshev polynomial of the second kind, U_n(t), by the three-term
/// recurrence U_0 = 1, U_1 = 2t, U_{n+1} = 2t U_n - U_{n-1}.
///
/// Note: one printed source states the recurrence with index n-2; that
/// form contradicts the degree-2 and degree-3 closed forms 4t^2 - 1 and
/// 8t^3 - 4t. The standard n-1 index is used here and validated against
/// sin((n+1) arccos t)/sin(arccos t).
double u_poly(int n, double t);

/// Chebyshev polynomial of the first kind, T_n(t) = cos(n arccos t).
double t_poly(int n, double t);

/// Taylor coefficients [1, U_1(t), ..., U_order(t)] of the generating
/// function 1/(1 - 2tz + z^2) at z = 0. The class parameter range
/// t in (1/2, 1) is enforced unless allow_exterior is set, in which case
/// any t in [-1, 1] is accepted.
std::vector<double> g_coefficients(double t, int order, bool allow_exterior = false);

}  // namespace hankel
