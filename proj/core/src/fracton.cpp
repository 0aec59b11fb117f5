#include "hallfrac/fracton.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "hallfrac/error.hpp"

namespace hallfrac {

namespace {

constexpr double kRelTol = 1e-14;
constexpr int kMaxIterations = 400;

// ln(1 + e^u) without overflow.
double softplus(double u) {
  if (u > 0.0) return u + std::log1p(std::exp(-u));
  return std::log1p(std::exp(u));
}

// e^u / (1 + e^u)
double logistic(double u) {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

struct LogForm {
  double h;
  double target;  // ln xi

  double value(double u) const { return (h - 1.0) * softplus(u) + (2.0 - h) * u - target; }
  double slope(double u) const { return (h - 1.0) * logistic(u) + (2.0 - h); }
};

void check_label(double h) {
  if (!std::isfinite(h) || h < 1.0 || h > 2.0) {
    throw Error(ErrorKind::InvalidLabel, "h = " + std::to_string(h) + " is outside [1, 2]");
  }
}

void check_domain(double h, double xi) {
  check_label(h);
  if (!std::isfinite(xi) || xi < 0.0) {
    throw Error(ErrorKind::InvalidArgument, "xi must be finite and >= 0");
  }
  if (h == 2.0 && xi <= 1.0) {
    throw Error(ErrorKind::CondensationRegion,
                "h = 2 has no solution Y > 2 for xi = " + std::to_string(xi) + " <= 1");
  }
}

double solve_log_excess(double h, double xi) {
  const LogForm g{h, std::log(xi)};

  double hi = std::log1p(xi);  // Y = xi + 3
  // Walk the lower end down until G <= ln xi; G(u) <= (2-h) u + (h-1) e^u
  // so this terminates quickly even when the root is far below zero.
  double lo = std::min(hi, g.target) - 1.0;
  for (double step = 1.0; g.value(lo) > 0.0; step *= 2.0) {
    hi = lo;
    lo -= step;
  }
  if (g.value(hi) == 0.0) return hi;

  double u = hi;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double f = g.value(u);
    if (f == 0.0) return u;
    if (f > 0.0) {
      hi = u;
    } else {
      lo = u;
    }
    double next = u - f / g.slope(u);
    if (!std::isfinite(next) || next <= lo || next >= hi) next = 0.5 * (lo + hi);
    if (std::abs(next - u) <= kRelTol * std::max(1.0, std::abs(u))) return next;
    u = next;
  }
  return u;
}

}  // namespace

double xi_from_energy(const ThermoInput& in) {
  if (!(in.temperature > 0.0) || !(in.boltzmann > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "temperature and Boltzmann constant must be > 0");
  }
  return std::exp((in.epsilon - in.mu) / (in.boltzmann * in.temperature));
}

double log_residual(double h, double xi, double log_excess) {
  if (xi == 0.0 && log_excess == -std::numeric_limits<double>::infinity()) return 0.0;
  return std::abs(LogForm{h, std::log(xi)}.value(log_excess));
}

FractonPoint solve_fracton(double h, double xi) {
  check_domain(h, xi);
  FractonPoint pt;
  pt.h = h;
  pt.xi = xi;
  if (xi == 0.0) {
    pt.y = 2.0;
    pt.log_excess = -std::numeric_limits<double>::infinity();
    pt.n = 1.0 / (2.0 - h);
    pt.residual = 0.0;
    return pt;
  }

  double u = solve_log_excess(h, xi);
  double excess = std::exp(u);
  if (excess > 1.0) {
    for (int it = 0; it < 8; ++it) {
      const double next = xi * std::exp((1.0 - h) * std::log1p(1.0 / excess));
      if (next == excess) break;
      excess = next;
    }
    u = std::log(excess);
  }

  pt.y = 2.0 + excess;
  pt.log_excess = u;
  pt.n = 1.0 / ((2.0 - h) + excess);
  pt.residual = log_residual(h, xi, u);
  return pt;
}

double solve_y(double h, double xi) { return solve_fracton(h, xi).y; }

double occupation(double h, double xi) { return solve_fracton(h, xi).n; }

double closed_form_y(double h, double xi) {
  check_domain(h, xi);
  if (h == 1.0) return xi + 2.0;
  if (h == 2.0) return xi + 1.0;
  if (h == 1.5) return 0.5 * (3.0 + std::sqrt(1.0 + 4.0 * xi * xi));
  throw Error(ErrorKind::NoClosedForm, "no closed form for h = " + std::to_string(h));
}

double closed_form_occupation(double h, double xi) {
  check_domain(h, xi);
  if (h == 1.0) return 1.0 / (xi + 1.0);
  if (h == 2.0) return 1.0 / (xi - 1.0);
  if (h == 1.5) return 2.0 / std::sqrt(1.0 + 4.0 * xi * xi);
  throw Error(ErrorKind::NoClosedForm, "no closed form for h = " + std::to_string(h));
}

double max_occupation(double h) {
  check_label(h);
  if (h == 2.0) throw Error(ErrorKind::Unbounded, "occupation is unbounded for h = 2");
  return 1.0 / (2.0 - h);
}

}  // namespace hallfrac
