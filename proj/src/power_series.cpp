#include "hankel/power_series.hpp"

#include <algorithm>
#include <stdexcept>

namespace hankel {

TruncatedSeries::TruncatedSeries(std::vector<Complex> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: needs at least the constant term");
}

TruncatedSeries::TruncatedSeries(std::initializer_list<Complex> coefficients)
    : TruncatedSeries(std::vector<Complex>(coefficients)) {}

TruncatedSeries TruncatedSeries::zero(int order) {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be nonnegative");
  return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1, Complex(0.0)));
}

TruncatedSeries TruncatedSeries::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("TruncatedSeries: order must be nonnegative");
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1, Complex(0.0));
  const std::size_t n = std::min(out.size(), coeffs_.size());
  std::copy_n(coeffs_.begin(), n, out.begin());
  return TruncatedSeries(std::move(out));
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out = TruncatedSeries::zero(order);
  for (int i = 0; i <= order; ++i)
    for (int j = 0; i + j <= order && j <= b.order(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out = TruncatedSeries::zero(order);
  for (int i = 0; i <= order; ++i) out[i] = a[i] + b[i];
  return out;
}

TruncatedSeries subtract(const TruncatedSeries& a, const TruncatedSeries& b) {
  const int order = std::min(a.order(), b.order());
  TruncatedSeries out = TruncatedSeries::zero(order);
  for (int i = 0; i <= order; ++i) out[i] = a[i] - b[i];
  return out;
}

TruncatedSeries scale(const TruncatedSeries& a, Complex factor) {
  TruncatedSeries out = a;
  for (int i = 0; i <= out.order(); ++i) out[i] *= factor;
  return out;
}

TruncatedSeries reciprocal(const TruncatedSeries& a) {
  if (a[0] == Complex(0.0)) throw std::invalid_argument("reciprocal: constant term must be nonzero");
  TruncatedSeries out = TruncatedSeries::zero(a.order());
  out[0] = Complex(1.0) / a[0];
  for (int n = 1; n <= a.order(); ++n) {
    Complex acc(0.0);
    for (int k = 1; k <= n; ++k) acc += a[k] * out[n - k];
    out[n] = -acc / a[0];
  }
  return out;
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
  if (inner[0] != Complex(0.0))
    throw std::invalid_argument("compose: inner series must have zero constant term");
  const int order = std::min(outer.order(), inner.order());
  const TruncatedSeries in = inner.truncated(order);
  // Horner evaluation in the truncated algebra.
  TruncatedSeries acc = TruncatedSeries::zero(order);
  acc[0] = outer[outer.order()];
  for (int k = outer.order() - 1; k >= 0; --k) {
    acc = multiply(acc, in);
    acc[0] += outer[k];
  }
  return acc;
}

TruncatedSeries revert(const TruncatedSeries& f) {
  if (f.order() < 1 || f[0] != Complex(0.0) || f[1] != Complex(1.0))
    throw std::invalid_argument("revert: series must be normalized as [0, 1, ...]");
  const int order = f.order();
  TruncatedSeries g = TruncatedSeries::zero(order);
  g[1] = Complex(1.0);
  // f(g(w)) = w term by term: the w^n coefficient is g_n plus terms in
  // g_1..g_{n-1} only, so each order is an explicit solve.
  for (int n = 2; n <= order; ++n) {
    const TruncatedSeries comp = compose(f, g);
    g[n] = -comp[n];
  }
  return g;
}

TruncatedSeries schwarz_from_caratheodory(const TruncatedSeries& p) {
  if (p[0] != Complex(1.0))
    throw std::invalid_argument("schwarz_from_caratheodory: constant term must be 1");
  TruncatedSeries num = p;
  num[0] -= Complex(1.0);
  TruncatedSeries den = p;
  den[0] += Complex(1.0);
  return multiply(num, reciprocal(den));
}

TruncatedSeries caratheodory_from_schwarz(const TruncatedSeries& w) {
  if (w[0] != Complex(0.0))
    throw std::invalid_argument("caratheodory_from_schwarz: constant term must be 0");
  TruncatedSeries num = w;
  num[0] += Complex(1.0);
  TruncatedSeries den = scale(w, Complex(-1.0));
  den[0] += Complex(1.0);
  return multiply(num, reciprocal(den));
}

}  // namespace hankel
