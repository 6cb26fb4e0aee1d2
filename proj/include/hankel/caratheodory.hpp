#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace hankel {

using Complex = std::complex<double>;

/// Free parameters of the coefficient relaxation: all five live on closed
/// disks, |p1| <= 2 and |x|, |y|, |z|, |w| <= 1. The second and third
/// coefficients on both sides are induced from these (see
/// induced_coefficients), with q1 = -p1 by convention.
struct RelaxationPoint {
  Complex p1;
  Complex x;
  Complex y;
  Complex z;
  Complex w;

  /// Throws std::domain_error on violated modulus bounds.
  void validate() const;

  friend bool operator==(const RelaxationPoint&, const RelaxationPoint&) = default;
};

/// Second coefficient of a positive-real-part function from (p1, x):
/// (p1^2 + (4 - p1^2) x) / 2.
Complex p2_from(Complex p1, Complex x);

/// Third coefficient from (p1, x, z):
/// (p1^3 + 2(4 - p1^2) p1 x - (4 - p1^2) p1 x^2 + 2(4 - p1^2)(1 - |x|^2) z) / 4.
Complex p3_from(Complex p1, Complex x, Complex z);

struct QSideCoefficients {
  Complex q1;
  Complex q2;
  Complex q3;
};

/// Inverse-side coefficients: q1 = -p1, then the same parametrization with
/// (q1, y, w) in place of (p1, x, z).
QSideCoefficients q_side(const RelaxationPoint& pt);

struct InducedCoefficients {
  Complex p2;
  Complex p3;
  Complex q1;
  Complex q2;
  Complex q3;
};

/// Coefficients induced by a relaxation point for complex p1.
///
/// The parametrization is applied at tau = |p1| and the n-th coefficients
/// are then rotated by exp(i n arg p1) on both sides. This is the unique
/// phase-equivariant extension that keeps |p2|, |p3| <= 2 for every point
/// of the parameter box; it coincides with p2_from/p3_from/q_side whenever
/// p1 is real and nonnegative. The determinant functional built from these
/// coefficients has phase-invariant modulus.
InducedCoefficients induced_coefficients(const RelaxationPoint& pt);

/// Deterministic pseudorandom relaxation points: p1 uniform on the disk of
/// radius 2, x, y, z, w uniform on the closed unit disk. A fixed prefix of
/// forced points covers the boundary cases |p1| in {0, 2} and a real-axis
/// sweep of p1. Point i depends only on (seed, i), so any prefix and any
/// evaluation order yield identical points.
std::vector<RelaxationPoint> sample(std::int64_t count, std::uint64_t seed);

/// Single sample, keyed by (seed, index); sample(n, s)[i] == sample_at(s, i).
RelaxationPoint sample_at(std::uint64_t seed, std::int64_t index);

/// Number of forced boundary/sweep points at the head of the sample stream.
int forced_sample_count();

/// Restricted sampler for the subclass where the second coefficients are
/// additionally tied by the sum constraint
///   p2 + q2 = p1^2 [ U1 (1+2 beta) / (1+beta)^2 + 1 - U2/U1 ],
/// which pins y from (p1, x, beta, t). Points whose pinned y leaves the
/// unit disk are skipped, so fewer than count points may be returned.
std::vector<RelaxationPoint> sample_sum_constrained(std::int64_t count, std::uint64_t seed,
                                                    double beta, double t);

namespace detail {
/// Counter-based generator: k-th uniform in [0, 1) of stream (seed, index).
double unit_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t slot);
}  // namespace detail

}  // namespace hankel
