#include <doctest.h>

#include <cmath>
#include <limits>

#include "hallfrac/error.hpp"
#include "hallfrac/fracton.hpp"
#include "support.hpp"

using namespace hallfrac;
using doctest::Approx;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected hallfrac::Error");
  return ErrorKind::InvalidArgument;
}

// Plain bisection on the product form (Y-1)^(h-1) (Y-2)^(2-h) = xi in long
// double, independent of the log-space Newton path.
long double bisect_y(long double h, long double xi) {
  long double lo = 2.0L, hi = xi + 3.0L;
  for (int i = 0; i < 200; ++i) {
    const long double mid = 0.5L * (lo + hi);
    const long double v = std::pow(mid - 1.0L, h - 1.0L) * std::pow(mid - 2.0L, 2.0L - h);
    (v < xi ? lo : hi) = mid;
  }
  return 0.5L * (lo + hi);
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("xi from energy") {
  CHECK(xi_from_energy({2.0, 2.0, 0.7, 1.0}) == 1.0);
  CHECK(xi_from_energy({1.5, 0.5, 1.0, 1.0}) == Approx(std::exp(1.0)).epsilon(1e-15));
  CHECK(xi_from_energy({0.0, 300.0 * 1.38e-23 * std::log(2.0), 300.0, 1.38e-23}) ==
        Approx(0.5).epsilon(1e-14));
  CHECK(kind_of([] { xi_from_energy({0, 0, 0.0, 1.0}); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { xi_from_energy({0, 0, 1.0, -1.0}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("solve_y examples") {
  CHECK(rel(solve_y(1.0, 3.0), 5.0) < 1e-14);
  CHECK(rel(solve_y(2.0, 3.0), 4.0) < 1e-14);
  CHECK(rel(solve_y(1.5, 1.0), (3.0 + std::sqrt(5.0)) / 2.0) < 1e-14);
  CHECK(solve_y(1.5, 0.0) == 2.0);
  CHECK(solve_y(1.0, 0.0) == 2.0);
}

TEST_CASE("occupation examples") {
  CHECK(rel(occupation(1.0, 1.0), 0.5) < 1e-14);
  CHECK(rel(occupation(2.0, 2.0), 1.0) < 1e-14);
  CHECK(rel(occupation(1.5, 1.0), 2.0 / std::sqrt(5.0)) < 1e-14);
  CHECK(occupation(1.5, 0.0) == 2.0);
}

TEST_CASE("closed forms") {
  CHECK(closed_form_y(1.0, 4.0) == 6.0);
  CHECK(closed_form_y(2.0, 4.0) == 5.0);
  CHECK(closed_form_y(1.5, 0.0) == 2.0);
  // Constant term equals the dual label 3 - h.
  CHECK(closed_form_y(1.0, 10.0) - 10.0 == 2.0);
  CHECK(closed_form_y(2.0, 10.0) - 10.0 == 1.0);
  CHECK(closed_form_occupation(1.0, 3.0) == 1.0 / (3.0 + 1.0));
  CHECK(closed_form_occupation(2.0, 3.0) == 1.0 / (3.0 - 1.0));
  CHECK(kind_of([] { closed_form_y(4.0 / 3.0, 1.0); }) == ErrorKind::NoClosedForm);
  CHECK(kind_of([] { closed_form_occupation(1.25, 1.0); }) == ErrorKind::NoClosedForm);
}

TEST_CASE("max occupation") {
  CHECK(max_occupation(1.0) == 1.0);
  CHECK(max_occupation(1.5) == 2.0);
  CHECK(max_occupation(4.0 / 3.0) == Approx(1.5).epsilon(1e-14));
  CHECK(kind_of([] { max_occupation(2.0); }) == ErrorKind::Unbounded);
}

TEST_CASE("domain errors") {
  CHECK(kind_of([] { solve_y(2.0, 1.0); }) == ErrorKind::CondensationRegion);
  CHECK(kind_of([] { solve_y(2.0, 0.5); }) == ErrorKind::CondensationRegion);
  CHECK(kind_of([] { solve_y(2.0, 0.0); }) == ErrorKind::CondensationRegion);
  CHECK(kind_of([] { solve_y(0.9, 1.0); }) == ErrorKind::InvalidLabel);
  CHECK(kind_of([] { solve_y(2.1, 1.0); }) == ErrorKind::InvalidLabel);
  CHECK(kind_of([] { solve_y(std::nan(""), 1.0); }) == ErrorKind::InvalidLabel);
  CHECK(kind_of([] { solve_y(1.5, -1.0); }) == ErrorKind::InvalidArgument);
  CHECK(kind_of([] { occupation(1.5, std::numeric_limits<double>::infinity()); }) ==
        ErrorKind::InvalidArgument);
}

TEST_CASE("agreement with a long-double bisection on the product form") {
  for (int i = 0; i < 500; ++i) {
    const double h = test::uniform_real(1.0, 2.0);
    const double xi = test::log_uniform(h > 1.9 ? 1.5 : 1e-2, 1e3);
    const double y = solve_y(h, xi);
    REQUIRE(rel(y, static_cast<double>(bisect_y(h, xi))) < 1e-12);
  }
}

TEST_CASE("property: log residual, exclusion bound, monotone occupation") {
  for (int i = 0; i < 2000; ++i) {
    const double h = test::uniform_real(1.0, 2.0);
    const double xi = test::log_uniform(1e-8, 1e8);
    if (h == 2.0 && xi <= 1.0) continue;
    const FractonPoint p = solve_fracton(h, xi);
    REQUIRE(p.residual < 1e-12);
    REQUIRE(std::isfinite(p.n));
    REQUIRE(p.n > 0.0);
    REQUIRE(p.n <= 1.0 / (2.0 - h));
    REQUIRE(p.y >= 2.0);
  }
  for (double h : {1.0, 1.2, 4.0 / 3.0, 1.5, 5.0 / 3.0, 1.9, 2.0}) {
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 120; ++k) {
      const double xi = std::pow(10.0, -3.0 + 0.05 * k) + (h == 2.0 ? 1.0 : 0.0);
      const double n = occupation(h, xi);
      // Strict unless n has saturated at 1/(2-h) in double precision.
      if (h < 2.0 && n == 1.0 / (2.0 - h)) {
        REQUIRE(n <= prev);
      } else {
        REQUIRE(n < prev);
      }
      prev = n;
    }
  }
}

TEST_CASE("near-boundary roots stay finite") {
  const FractonPoint p = solve_fracton(1.999, 1e-6);
  CHECK(std::isfinite(p.log_excess));
  CHECK(p.log_excess < -1000.0);
  CHECK(p.y == 2.0);
  CHECK(p.n == Approx(1000.0).epsilon(1e-12));
  CHECK(p.residual < 1e-12);

  const FractonPoint q = solve_fracton(2.0, 1.0 + 1e-12);
  CHECK(q.residual < 1e-12);
  CHECK(q.n == Approx(1e12).epsilon(1e-3));
}

TEST_CASE("closed-form agreement over xi in [1e-6, 1e6]") {
  for (int k = 0; k <= 240; ++k) {
    const double xi = std::pow(10.0, -6.0 + 0.05 * k);
    REQUIRE(rel(solve_y(1.0, xi), xi + 2.0) < 1e-12);
    REQUIRE(rel(solve_y(1.5, xi), 0.5 * (3.0 + std::sqrt(1.0 + 4.0 * xi * xi))) < 1e-12);
    if (xi > 1.0) REQUIRE(rel(solve_y(2.0, xi), xi + 1.0) < 1e-12);
  }
}

TEST_CASE("asymptotic constant term equals the dual label") {
  for (double h : {1.0, 1.25, 1.5, 1.75, 2.0}) {
    const double xi = 1e8;
    CHECK(std::abs(solve_y(h, xi) - xi - (3.0 - h)) < 1e-6);
  }
}
