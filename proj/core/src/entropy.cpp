#include "hallfrac/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hallfrac/error.hpp"
#include "hallfrac/fracton.hpp"

namespace hallfrac {

namespace {

// x ln x with x = 1 + delta, taken as 0 at x = 0.
double x_log_x(double delta) {
  const double x = 1.0 + delta;
  if (x <= 0.0) return 0.0;
  return x * std::log1p(delta);
}

}  // namespace

double entropy_per_state(double h, double n, double boltzmann) {
  if (!std::isfinite(h) || h < 1.0 || h > 2.0) {
    throw Error(ErrorKind::InvalidLabel, "h = " + std::to_string(h) + " is outside [1, 2]");
  }
  if (!(boltzmann > 0.0)) throw Error(ErrorKind::InvalidArgument, "K must be > 0");
  if (!std::isfinite(n) || n <= 0.0) {
    throw Error(ErrorKind::InvalidOccupation, "occupation must be > 0");
  }
  if (h < 2.0 && n > 1.0 / (2.0 - h)) {
    throw Error(ErrorKind::ExclusionViolation,
                "n = " + std::to_string(n) + " exceeds 1/(2-h) = " + std::to_string(1.0 / (2.0 - h)));
  }
  const double s = x_log_x((h - 1.0) * n) - x_log_x((h - 2.0) * n) - n * std::log(n);
  // S >= 0 exactly; negative values here are rounding at the zeros
  // (n -> 0, n = 1/(2-h)).
  return boltzmann * std::max(0.0, s);
}

EntropyPoint entropy_point(double h, double n, double boltzmann) {
  return EntropyPoint{h, n, entropy_per_state(h, n, boltzmann), boltzmann};
}

double equilibrium_consistency(double h, double xi, double boltzmann) {
  if (!(boltzmann > 0.0)) throw Error(ErrorKind::InvalidArgument, "K must be > 0");
  const double n = occupation(h, xi);
  const double up = entropy_per_state(h, n + kEntropyStep, boltzmann);
  const double down = entropy_per_state(h, n - kEntropyStep, boltzmann);
  const double slope = (up - down) / (2.0 * kEntropyStep);
  return std::abs(slope - boltzmann * std::log(xi));
}

}  // namespace hallfrac
