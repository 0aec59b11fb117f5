#pragma once

namespace hallfrac {

/// Thermodynamic inputs for xi = exp((epsilon - mu) / (K T)). K defaults
/// to 1, which makes energies and temperature dimensionless.
struct ThermoInput {
  double epsilon = 0.0;
  double mu = 0.0;
  double temperature = 1.0;
  double boltzmann = 1.0;
};

/// Throws Error(InvalidArgument) unless T > 0 and K > 0.
double xi_from_energy(const ThermoInput& in);

/// One solved point of the fractal distribution function.
///
/// `log_excess` is ln(Y - 2). It is carried separately because Y - 2 can
/// underflow a double (h close to 2, small xi) while its logarithm stays
/// finite; `residual` is evaluated from it. For xi == 0 it is -infinity.
struct FractonPoint {
  double h = 1.0;
  double xi = 0.0;
  double y = 2.0;
  double log_excess = 0.0;
  double n = 0.0;
  double residual = 0.0;  ///< |(h-1) ln(Y-1) + (2-h) ln(Y-2) - ln xi|
};

/// Solves xi = (Y-1)^(h-1) (Y-2)^(2-h) for the unique Y >= 2 and returns
/// n = 1/(Y - h) alongside it.
///
/// Works on u = ln(Y-2), where the log-form equation
///   G(u) = (h-1) ln(1 + e^u) + (2-h) u = ln xi
/// is convex and strictly increasing. Newton runs from the upper end of the
/// bracket [ln(delta), ln(1 + xi)], i.e. Y in [2+delta, xi+3], with bisection
/// as the fallback whenever a step leaves the bracket. Relative step
/// tolerance is 1e-14. When Y - 2 > 1 the root is polished with the
/// contraction t = xi (1 + 1/t)^(1-h), which keeps Y accurate to a few ulp
/// at large xi.
///
/// xi == 0 is resolved analytically to Y = 2.
///
/// Errors: h outside [1, 2] -> InvalidLabel; xi < 0 or non-finite ->
/// InvalidArgument; h == 2 with xi <= 1 -> CondensationRegion.
FractonPoint solve_fracton(double h, double xi);

double solve_y(double h, double xi);

/// n = 1/(Y - h).
double occupation(double h, double xi);

/// Analytic roots for h in {1, 3/2, 2}:
///   h = 1   : Y = xi + 2
///   h = 3/2 : Y = (3 + sqrt(1 + 4 xi^2)) / 2
///   h = 2   : Y = xi + 1
/// Any other h throws Error(NoClosedForm).
double closed_form_y(double h, double xi);

/// Occupation from the same three cases, written in the textbook forms:
/// Fermi-Dirac 1/(xi+1), 2/sqrt(1+4 xi^2), Bose-Einstein 1/(xi-1).
double closed_form_occupation(double h, double xi);

/// 1/(2-h), the occupation at Y = 2. Throws Error(Unbounded) for h == 2.
double max_occupation(double h);

/// |G(log_excess) - ln xi| for a candidate root.
double log_residual(double h, double xi, double log_excess);

}  // namespace hallfrac
