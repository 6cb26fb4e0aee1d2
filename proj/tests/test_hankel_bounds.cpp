#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <stdexcept>

#include "hankel/chebyshev.hpp"
#include "hankel/hankel_bounds.hpp"

using namespace hankel;

namespace {

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// Independent quartic fit through five nodes, solved by Gaussian
// elimination. Used as the oracle for quartic_profile.
std::array<double, 5> fit_quartic(const ClassParams& params) {
  const std::array<double, 5> nodes{0.1, 0.6, 1.1, 1.6, 1.9};
  double m[5][6];
  for (int r = 0; r < 5; ++r) {
    double p = 1.0;
    for (int c = 0; c < 5; ++c) {
      m[r][c] = p;
      p *= nodes[static_cast<std::size_t>(r)];
    }
    m[r][5] = h_value(params, nodes[static_cast<std::size_t>(r)]);
  }
  for (int i = 0; i < 5; ++i) {
    int piv = i;
    for (int r = i + 1; r < 5; ++r)
      if (std::fabs(m[r][i]) > std::fabs(m[piv][i])) piv = r;
    for (int c = 0; c < 6; ++c) std::swap(m[i][c], m[piv][c]);
    for (int r = 0; r < 5; ++r) {
      if (r == i) continue;
      const double f = m[r][i] / m[i][i];
      for (int c = i; c < 6; ++c) m[r][c] -= f * m[i][c];
    }
  }
  std::array<double, 5> out{};
  for (int i = 0; i < 5; ++i) out[static_cast<std::size_t>(i)] = m[i][5] / m[i][i];
  return out;
}

}  // namespace

TEST_CASE("f_coefficients at the endpoints of the tau range") {
  const ClassParams p(1.0, 0.9);
  const FCoefficients end = f_coefficients(p, 2.0);
  CHECK(end.c1 == 0.0);
  CHECK(end.c2 == 0.0);
  CHECK(end.c3 == 0.0);
  // c4(t, 2) = U1 |(1+b)^3 U3 - (1+3b) U1^3| / ((1+b)^4 (1+3b))
  CHECK(near(end.c4, 1.8 * 5.472 / 64.0, 1e-15));

  const FCoefficients zero = f_coefficients(p, 0.0);
  CHECK(zero.c2 == 0.0);
  CHECK(zero.c3 == 0.0);
  CHECK(zero.c4 == 0.0);
  CHECK(near(zero.c1, 1.8 * 1.8 / (4.0 * 9.0), 1e-15));
}

TEST_CASE("f_coefficients frozen interior values") {
  const FCoefficients c = f_coefficients(ClassParams(1.0, 0.9), 1.0);
  CHECK(near(c.c1, 0.050625, 1e-15));
  CHECK(near(c.c2, -0.03796875, 1e-15));
  CHECK(near(c.c3, 0.11728125, 1e-15));
  CHECK(near(c.c4, 0.16149375, 1e-15));
}

TEST_CASE("f_value examples and range checks") {
  CHECK(near(f_value(ClassParams(0.0, 0.75), 0.0, 1.0, 1.0), 2.25, 1e-14));
  for (double xi : {0.0, 0.37, 1.0})
    CHECK(near(f_value(ClassParams(1.0, 0.9), 2.0, xi, 1.0 - xi), 0.1539, 1e-14));
  const ClassParams p(0.5, 0.7);
  CHECK(f_value(p, 1.0, 0.0, 0.0) == f_coefficients(p, 1.0).c4);
  CHECK_THROWS_AS(f_value(p, 2.5, 0.5, 0.5), std::domain_error);
  CHECK_THROWS_AS(f_value(p, 1.0, -0.1, 0.5), std::domain_error);
  CHECK_THROWS_AS(f_coefficients(p, -0.01), std::domain_error);
}

TEST_CASE("hessian discriminant is negative inside and vanishes at tau = 0") {
  CHECK(near(hessian_discriminant(ClassParams(1.0, 0.9), 1.0), -0.0096108398437499999, 1e-15));
  CHECK(hessian_discriminant(ClassParams(0.3, 0.8), 0.0) == 0.0);
  for (double beta : {0.0, 0.5, 1.0})
    for (double t : {0.55, 0.75, 0.95})
      for (int k = 1; k < 20; ++k)
        CHECK(hessian_discriminant(ClassParams(beta, t), 2.0 * k / 20.0) < 0.0);
}

TEST_CASE("h_value endpoints and frozen interior value") {
  const ClassParams p(1.0, 0.9);
  CHECK(h_value(p, 2.0) == f_coefficients(p, 2.0).c4);
  CHECK(near(h_value(p, 0.0), 1.8 * 1.8 / 9.0, 1e-15));
  CHECK(near(h_value(p, 1.0), 0.52261875, 1e-15));
}

TEST_CASE("quartic_profile frozen coefficients and the fit oracle") {
  const QuarticProfile q = quartic_profile(ClassParams(1.0, 0.9));
  CHECK(near(q.a0, 0.36, 1e-15));
  CHECK(near(q.a2, 0.234, 1e-13));
  CHECK(near(q.a4, -0.07138125, 1e-13));

  for (const ClassParams p : {ClassParams(0.0, 0.75), ClassParams(1.0, 0.9),
                              ClassParams(0.37, 0.66), ClassParams(0.9, 0.97)}) {
    const QuarticProfile prof = quartic_profile(p);
    const auto fit = fit_quartic(p);
    CHECK(near(fit[1], 0.0, 1e-11));  // odd terms vanish
    CHECK(near(fit[3], 0.0, 1e-11));
    CHECK(near(prof.a0, fit[0], 1e-10));
    CHECK(near(prof.a2, fit[2], 1e-10));
    CHECK(near(prof.a4, fit[4], 1e-10));
    CHECK(near(prof.a0, std::pow(u_poly(1, p.t), 2) / std::pow(1 + 2 * p.beta, 2), 1e-12));
  }
}

TEST_CASE("derived delta and c at reference cells") {
  const ClassParams b0(0.0, 0.75);
  CHECK(near(delta_derived(b0), -1.875, 1e-12));
  CHECK(near(c_derived(b0), 6.375, 1e-12));
  const ClassParams b1(1.0, 0.9);
  CHECK(near(delta_derived(b1), -1315.6992, 1e-9));
  CHECK(near(c_derived(b1), 1078.272, 1e-9));
}

TEST_CASE("printed delta and c at reference cells") {
  const ClassParams b1(1.0, 0.9);
  CHECK(near(delta_printed(b1), 4490.3808, 1e-9));
  CHECK(near(c_printed(b1), 1078.272, 1e-9));
  // at beta = 0 the printed c reduces to 8t(5t^2-1) - 8t^2
  for (double t : {0.55, 0.75, 0.95})
    CHECK(near(c_printed(ClassParams(0.0, t)), 8 * t * (5 * t * t - 1) - 8 * t * t, 1e-12));
}

TEST_CASE("printed c agrees with the derived c, printed delta does not") {
  for (double beta : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    for (double t : {0.52, 0.7, 0.88, 0.97}) {
      const ClassParams p(beta, t);
      CHECK(near(c_printed(p), c_derived(p), 1e-10 * (1.0 + std::fabs(c_derived(p)))));
    }
  }
  CHECK(std::fabs(delta_printed(ClassParams(1.0, 0.9)) - delta_derived(ClassParams(1.0, 0.9))) >
        1e3);
}

TEST_CASE("classify_case sign patterns") {
  CHECK(classify_case(1.0, 1.0, 1e-9) == CaseId::i);
  CHECK(classify_case(1.0, -1.0, 1e-9) == CaseId::ii);
  CHECK(classify_case(-1.0, -1.0, 1e-9) == CaseId::iii);
  CHECK(classify_case(-1.0, 1.0, 1e-9) == CaseId::iv);
  CHECK(classify_case(1e-12, 1.0, 1e-9) == CaseId::degenerate);
  CHECK(classify_case(1.0, -1e-10, 1e-9) == CaseId::degenerate);
}

TEST_CASE("theorem_bound: endpoint fallback cell") {
  const BoundBreakdown b = theorem_bound(ClassParams(0.0, 0.75), Variant::derived);
  CHECK(b.case_id == CaseId::iv);
  CHECK(!b.tau0.has_value());  // tau0^2 = 6.8 lies outside (0, 2)
  CHECK(near(b.bound, 4.5, 1e-12));
  CHECK(near(b.h_end, 4.5, 1e-12));
  CHECK(near(b.h_zero, 2.25, 1e-12));
}

TEST_CASE("theorem_bound: printed variant reproduces the beta = 1 special values") {
  const BoundBreakdown b = theorem_bound(ClassParams(1.0, std::sqrt(0.5)), Variant::printed);
  CHECK(b.case_id == CaseId::i);
  CHECK(near(b.bound, 0.25, 1e-12));

  const BoundBreakdown c = theorem_bound(ClassParams(1.0, 0.9), Variant::printed);
  CHECK(near(c.bound, 0.1539, 1e-12));
}

TEST_CASE("theorem_bound: interior maximum cell") {
  const BoundBreakdown b = theorem_bound(ClassParams(1.0, 0.75), Variant::derived);
  CHECK(b.case_id == CaseId::iv);
  REQUIRE(b.tau0.has_value());
  CHECK(near(*b.tau0, 1.4071950894605838, 1e-12));
  REQUIRE(b.h_tau0.has_value());
  CHECK(near(b.bound, 0.3466893564356436, 1e-12));
  CHECK(b.bound > corollary_bound(ClassParams(1.0, 0.75)));

  const BoundBreakdown d = theorem_bound(ClassParams(1.0, 0.9), Variant::derived);
  CHECK(near(d.bound, 0.55177304964539009, 1e-12));
}

TEST_CASE("theorem_bound records the piecewise maximum it claims") {
  for (double beta : {0.0, 0.3, 0.7, 1.0}) {
    for (double t : {0.52, 0.68, 0.84, 0.96}) {
      for (Variant v : {Variant::printed, Variant::derived}) {
        const BoundBreakdown b = theorem_bound(ClassParams(beta, t), v);
        double expected = 0.0;
        switch (b.case_id) {
          case CaseId::i: expected = b.h_end; break;
          case CaseId::ii: expected = std::max(b.h_zero, b.h_end); break;
          case CaseId::iii: expected = b.h_zero; break;
          case CaseId::iv:
            expected = b.h_tau0 ? std::max(*b.h_tau0, b.h_end) : std::max(b.h_zero, b.h_end);
            break;
          case CaseId::degenerate:
            expected = std::max(b.h_zero, b.h_end);
            if (b.h_tau0) expected = std::max(expected, *b.h_tau0);
            break;
        }
        CHECK(b.bound == expected);
        CHECK((b.tau0.has_value() == b.h_tau0.has_value()));
        if (b.tau0) CHECK((b.delta * b.c_coef < 0.0 && *b.tau0 > 0.0 && *b.tau0 < 2.0));
      }
    }
  }
}

TEST_CASE("derived bound dominates the profile, including large t") {
  for (const ClassParams p : {ClassParams(0.0, 0.95), ClassParams(0.0, 0.9),
                              ClassParams(0.5, 0.85), ClassParams(1.0, 0.97)}) {
    const BoundBreakdown b = theorem_bound(p, Variant::derived);
    for (int i = 0; i <= 2000; ++i)
      CHECK(b.bound >= h_value(p, 2.0 * i / 2000.0) - 1e-9);
  }
}

TEST_CASE("corollary_bound printed values") {
  CHECK(near(corollary_bound(ClassParams(0.0, 0.6)), 2.88, 1e-14));
  CHECK(near(corollary_bound(ClassParams(1.0, 0.9)), 0.1539, 1e-14));
  CHECK(near(corollary_bound(ClassParams(1.0, std::sqrt(0.5))), 0.25, 1e-14));
  CHECK_THROWS_AS(corollary_bound(ClassParams(0.5, 0.8)), std::domain_error);
}

TEST_CASE("case and variant names render stably") {
  CHECK(to_string(CaseId::i) == "i");
  CHECK(to_string(CaseId::degenerate) == "degenerate");
  CHECK(to_string(Variant::printed) == "printed");
  CHECK(to_string(Variant::derived) == "derived");
}
