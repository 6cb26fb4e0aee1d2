#include "hankel/caratheodory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hankel {

namespace {

constexpr double kModulusSlack = 1e-12;

void check_unit(Complex v, const char* name) {
  if (std::abs(v) > 1.0 + kModulusSlack)
    throw std::domain_error(std::string("relaxation parameter ") + name + " must satisfy |.| <= 1");
}

std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

Complex disk_point(std::uint64_t seed, std::uint64_t index, std::uint64_t slot, double radius) {
  const double u = detail::unit_uniform(seed, index, slot);
  const double v = detail::unit_uniform(seed, index, slot + 1);
  const double r = radius * std::sqrt(u);
  const double phi = 2.0 * std::numbers::pi * v;
  return Complex(r * std::cos(phi), r * std::sin(phi));
}

// Forced prefix: the extreme point, two |p1| = 0 cases, then a real-axis
// sweep of p1 over [-2, 2] with x, y maximally separated to stress the
// triangle bound.
const std::vector<RelaxationPoint>& forced_points() {
  static const std::vector<RelaxationPoint> pts = [] {
    std::vector<RelaxationPoint> v;
    v.push_back({Complex(2.0), Complex(1.0), Complex(1.0), Complex(1.0), Complex(1.0)});
    v.push_back({Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0), Complex(0.0)});
    v.push_back({Complex(0.0), Complex(1.0), Complex(-1.0), Complex(0.0), Complex(0.0)});
    const int sweep = 17;
    for (int k = 0; k < sweep; ++k) {
      const double p1 = -2.0 + 4.0 * k / (sweep - 1);
      v.push_back({Complex(p1), Complex(1.0), Complex(-1.0), Complex(1.0), Complex(-1.0)});
    }
    return v;
  }();
  return pts;
}

}  // namespace

namespace detail {

double unit_uniform(std::uint64_t seed, std::uint64_t index, std::uint64_t slot) {
  const std::uint64_t key =
      mix64(mix64(seed ^ (index * 0xA24BAED4963EE407ull)) ^ (slot * 0x9FB21C651E98DF25ull));
  return static_cast<double>(key >> 11) * 0x1.0p-53;
}

}  // namespace detail

void RelaxationPoint::validate() const {
  if (std::abs(p1) > 2.0 + kModulusSlack)
    throw std::domain_error("relaxation parameter p1 must satisfy |p1| <= 2");
  check_unit(x, "x");
  check_unit(y, "y");
  check_unit(z, "z");
  check_unit(w, "w");
}

Complex p2_from(Complex p1, Complex x) {
  if (std::abs(p1) > 2.0 + kModulusSlack) throw std::domain_error("p2_from: |p1| must be <= 2");
  check_unit(x, "x");
  const Complex s = 4.0 - p1 * p1;
  return (p1 * p1 + s * x) / 2.0;
}

Complex p3_from(Complex p1, Complex x, Complex z) {
  if (std::abs(p1) > 2.0 + kModulusSlack) throw std::domain_error("p3_from: |p1| must be <= 2");
  check_unit(x, "x");
  check_unit(z, "z");
  const Complex s = 4.0 - p1 * p1;
  const double xi = std::abs(x);
  return (p1 * p1 * p1 + 2.0 * s * p1 * x - s * p1 * x * x + 2.0 * s * (1.0 - xi * xi) * z) / 4.0;
}

QSideCoefficients q_side(const RelaxationPoint& pt) {
  pt.validate();
  const Complex q1 = -pt.p1;
  return {q1, p2_from(q1, pt.y), p3_from(q1, pt.y, pt.w)};
}

InducedCoefficients induced_coefficients(const RelaxationPoint& pt) {
  pt.validate();
  const double tau = std::abs(pt.p1);
  const double theta = tau > 0.0 ? std::arg(pt.p1) : 0.0;
  const Complex r1 = std::polar(1.0, theta);
  const Complex r2 = std::polar(1.0, 2.0 * theta);
  const Complex r3 = std::polar(1.0, 3.0 * theta);
  InducedCoefficients out;
  out.p2 = r2 * p2_from(Complex(tau), pt.x);
  out.p3 = r3 * p3_from(Complex(tau), pt.x, pt.z);
  out.q1 = -(r1 * tau);
  out.q2 = r2 * p2_from(Complex(-tau), pt.y);
  out.q3 = r3 * p3_from(Complex(-tau), pt.y, pt.w);
  return out;
}

RelaxationPoint sample_at(std::uint64_t seed, std::int64_t index) {
  if (index < 0) throw std::domain_error("sample_at: index must be nonnegative");
  const auto& forced = forced_points();
  if (static_cast<std::size_t>(index) < forced.size())
    return forced[static_cast<std::size_t>(index)];
  const auto i = static_cast<std::uint64_t>(index);
  RelaxationPoint pt;
  pt.p1 = disk_point(seed, i, 0, 2.0);
  pt.x = disk_point(seed, i, 2, 1.0);
  pt.y = disk_point(seed, i, 4, 1.0);
  pt.z = disk_point(seed, i, 6, 1.0);
  pt.w = disk_point(seed, i, 8, 1.0);
  return pt;
}

int forced_sample_count() { return static_cast<int>(forced_points().size()); }

std::vector<RelaxationPoint> sample(std::int64_t count, std::uint64_t seed) {
  if (count < 1) throw std::domain_error("sample: count must be >= 1");
  std::vector<RelaxationPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back(sample_at(seed, i));
  return out;
}

std::vector<RelaxationPoint> sample_sum_constrained(std::int64_t count, std::uint64_t seed,
                                                    double beta, double t) {
  if (count < 1) throw std::domain_error("sample_sum_constrained: count must be >= 1");
  const double u1 = 2.0 * t;
  const double u2 = 4.0 * t * t - 1.0;
  const double ratio = u1 * (1.0 + 2.0 * beta) / ((1.0 + beta) * (1.0 + beta)) + 1.0 - u2 / u1;
  std::vector<RelaxationPoint> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) {
    RelaxationPoint pt = sample_at(seed, i);
    // Pin y in the rotated frame: p2 + q2 = p1^2 * ratio.
    const double tau = std::abs(pt.p1);
    const double s = 4.0 - tau * tau;
    if (s <= 0.0) continue;  // tau = 2 leaves no freedom
    const Complex p2_real = p2_from(Complex(tau), pt.x);
    const Complex q2_real = tau * tau * ratio - p2_real;
    const Complex y = (2.0 * q2_real - tau * tau) / s;
    if (std::abs(y) > 1.0) continue;
    pt.y = y;
    out.push_back(pt);
  }
  return out;
}

}  // namespace hankel
