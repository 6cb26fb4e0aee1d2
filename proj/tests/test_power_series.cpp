#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hankel/caratheodory.hpp"
#include "hankel/chebyshev.hpp"
#include "hankel/power_series.hpp"

using namespace hankel;

namespace {

double gap(const TruncatedSeries& a, const TruncatedSeries& b) {
  REQUIRE(a.order() == b.order());
  double worst = 0.0;
  for (int k = 0; k <= a.order(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
  return worst;
}

Complex rnd(std::uint64_t i, std::uint64_t slot, double radius) {
  const double u = detail::unit_uniform(99, i, slot);
  const double v = detail::unit_uniform(99, i, slot + 1);
  return std::polar(radius * std::sqrt(u), 6.283185307179586 * v);
}

}  // namespace

TEST_CASE("multiply truncates the Cauchy product") {
  CHECK(multiply(TruncatedSeries{1, 1}, TruncatedSeries{1, 1}) == TruncatedSeries{1, 2});
  CHECK(multiply(TruncatedSeries{1, 0, 0}, TruncatedSeries{0, 1, 0}) ==
        TruncatedSeries{0, 1, 0});
  // mixed orders truncate to the shorter series
  CHECK(multiply(TruncatedSeries{1, 1, 1, 1}, TruncatedSeries{1, 1}).order() == 1);
}

TEST_CASE("compose: identity, monomial substitution, and the extreme Schwarz map") {
  const auto g = g_coefficients(0.8, 3);
  const TruncatedSeries G{g[0], g[1], g[2], g[3]};
  CHECK(gap(compose(G, TruncatedSeries{0, 1, 0, 0}), G) == 0.0);

  CHECK(compose(TruncatedSeries{1, 1, 1, 1}, TruncatedSeries{0, 0, 1, 0}) ==
        TruncatedSeries{1, 0, 1, 0});

  // p identically (1+z)/(1-z) gives omega(z) = z, so G(omega) = G
  const TruncatedSeries p{1, 2, 2, 2};
  const TruncatedSeries omega = schwarz_from_caratheodory(p);
  CHECK(gap(omega, TruncatedSeries{0, 1, 0, 0}) <= 1e-15);
  CHECK(gap(compose(G, omega), G) <= 1e-14);
}

TEST_CASE("compose rejects a nonzero inner constant term") {
  CHECK_THROWS_AS(compose(TruncatedSeries{1, 1}, TruncatedSeries{1, 1}), std::invalid_argument);
}

TEST_CASE("revert: identity, the truncated Koebe-style case, and unit coefficients") {
  CHECK(revert(TruncatedSeries{0, 1, 0, 0, 0}) == TruncatedSeries{0, 1, 0, 0, 0});
  CHECK(gap(revert(TruncatedSeries{0, 1, 2, 3, 4}), TruncatedSeries{0, 1, -2, 5, -14}) <= 1e-13);
  CHECK(gap(revert(TruncatedSeries{0, 1, 1, 1, 1}), TruncatedSeries{0, 1, -1, 1, -1}) <= 1e-13);
}

TEST_CASE("revert matches the degree-4 inverse closed forms on random triples") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const Complex a2 = rnd(i, 0, 2.0), a3 = rnd(i, 2, 2.0), a4 = rnd(i, 4, 2.0);
    const TruncatedSeries f{0, 1, a2, a3, a4};
    const TruncatedSeries g = revert(f);
    CHECK(std::abs(g[2] - (-a2)) <= 1e-13);
    CHECK(std::abs(g[3] - (2.0 * a2 * a2 - a3)) <= 1e-13);
    CHECK(std::abs(g[4] - (-(5.0 * a2 * a2 * a2 - 5.0 * a2 * a3 + a4))) <= 1e-13);

    const TruncatedSeries round = compose(f, g);
    CHECK(std::abs(round[1] - 1.0) <= 1e-12);
    for (int k : {0, 2, 3, 4}) CHECK(std::abs(round[k]) <= 1e-12);
  }
}

TEST_CASE("revert rejects series that are not normalized") {
  CHECK_THROWS_AS(revert(TruncatedSeries{1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(revert(TruncatedSeries{0, 2, 0}), std::invalid_argument);
}

TEST_CASE("schwarz_from_caratheodory closed forms") {
  CHECK(gap(schwarz_from_caratheodory(TruncatedSeries{1, 2, 2, 2}),
            TruncatedSeries{0, 1, 0, 0}) <= 1e-15);
  CHECK(gap(schwarz_from_caratheodory(TruncatedSeries{1, 0, 0, 0}),
            TruncatedSeries{0, 0, 0, 0}) == 0.0);
  CHECK(gap(schwarz_from_caratheodory(TruncatedSeries{1, 1, 1, 1}),
            TruncatedSeries{0, 0.5, 0.25, 0.125}) <= 1e-15);
  CHECK_THROWS_AS(schwarz_from_caratheodory(TruncatedSeries{0.5, 1, 1, 1}),
                  std::invalid_argument);
}

TEST_CASE("caratheodory_from_schwarz closed forms and round trip") {
  CHECK(gap(caratheodory_from_schwarz(TruncatedSeries{0, 1, 0, 0}),
            TruncatedSeries{1, 2, 2, 2}) <= 1e-15);
  CHECK(gap(caratheodory_from_schwarz(TruncatedSeries{0, 0, 0, 0}),
            TruncatedSeries{1, 0, 0, 0}) == 0.0);
  CHECK_THROWS_AS(caratheodory_from_schwarz(TruncatedSeries{1, 0, 0}), std::invalid_argument);

  for (std::uint64_t i = 0; i < 100; ++i) {
    const TruncatedSeries p{1, rnd(i, 6, 2.0), rnd(i, 8, 2.0), rnd(i, 10, 2.0)};
    const TruncatedSeries round = caratheodory_from_schwarz(schwarz_from_caratheodory(p));
    CHECK(gap(round, p) <= 1e-12);
  }
}

TEST_CASE("schwarz coefficients match the displayed quadratic and cubic terms") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const Complex p1 = rnd(i, 12, 2.0), p2 = rnd(i, 14, 2.0), p3 = rnd(i, 16, 2.0);
    const TruncatedSeries omega = schwarz_from_caratheodory(TruncatedSeries{1, p1, p2, p3});
    CHECK(std::abs(omega[1] - p1 / 2.0) <= 1e-14);
    CHECK(std::abs(omega[2] - (p2 - p1 * p1 / 2.0) / 2.0) <= 1e-13);
    CHECK(std::abs(omega[3] - (p3 - p1 * p2 + p1 * p1 * p1 / 4.0) / 2.0) <= 1e-13);
  }
}
