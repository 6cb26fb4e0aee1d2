#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace hankel {

using Complex = std::complex<double>;

/// Complex power series truncated at a fixed order (inclusive).
/// Carrier for the normalized function f, its inverse, the Schwarz
/// functions and the positive-real-part functions p, q.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::vector<Complex> coefficients);
  TruncatedSeries(std::initializer_list<Complex> coefficients);

  /// Zero series of the given truncation order.
  static TruncatedSeries zero(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  Complex operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  Complex& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  TruncatedSeries truncated(int order) const;

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Cauchy product truncated to min(a.order, b.order).
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, Complex factor);

/// Multiplicative inverse of a series with nonzero constant term,
/// truncated to a.order.
TruncatedSeries reciprocal(const TruncatedSeries& a);

/// Taylor coefficients of outer(inner(z)) to the common truncation order.
/// inner must have zero constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

/// Compositional inverse of a normalized series [0, 1, c2, ...]: the g
/// with f(g(w)) = w to the truncation order, solved order by order.
TruncatedSeries revert(const TruncatedSeries& f);

/// omega = (p - 1)/(p + 1) for p with constant term 1: maps a
/// positive-real-part normalization to a Schwarz-function normalization.
TruncatedSeries schwarz_from_caratheodory(const TruncatedSeries& p);

/// p = (1 + w)/(1 - w) for w with zero constant term; inverse of
/// schwarz_from_caratheodory.
TruncatedSeries caratheodory_from_schwarz(const TruncatedSeries& w);

}  // namespace hankel
