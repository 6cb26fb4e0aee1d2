#include "hankel/chebyshev.hpp"

#include <cmath>
#include <stdexcept>

namespace hankel {

namespace {

void check_arg(int n, double t, const char* who) {
  if (n < 0) throw std::domain_error(std::string(who) + ": degree must be nonnegative");
  if (!(std::fabs(t) <= 1.0)) throw std::domain_error(std::string(who) + ": |t| must be <= 1");
}

}  // namespace

double u_poly(int n, double t) {
  check_arg(n, t, "u_poly");
  double prev = 1.0;       // U_0
  double cur = 2.0 * t;    // U_1
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double t_poly(int n, double t) {
  check_arg(n, t, "t_poly");
  double prev = 1.0;  // T_0
  double cur = t;     // T_1
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * t * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<double> g_coefficients(double t, int order, bool allow_exterior) {
  if (order < 0) throw std::domain_error("g_coefficients: order must be nonnegative");
  if (!allow_exterior && !(t > 0.5 && t < 1.0))
    throw std::domain_error("g_coefficients: t must lie in (1/2, 1); pass allow_exterior to override");
  if (!(std::fabs(t) <= 1.0)) throw std::domain_error("g_coefficients: |t| must be <= 1");

  std::vector<double> coeffs(static_cast<std::size_t>(order) + 1);
  coeffs[0] = 1.0;
  if (order >= 1) coeffs[1] = 2.0 * t;
  for (int n = 2; n <= order; ++n)
    coeffs[static_cast<std::size_t>(n)] =
        2.0 * t * coeffs[static_cast<std::size_t>(n - 1)] - coeffs[static_cast<std::size_t>(n - 2)];
  return coeffs;
}

}  // namespace hankel
