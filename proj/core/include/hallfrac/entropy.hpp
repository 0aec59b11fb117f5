#pragma once

namespace hallfrac {

/// Central-difference step used by equilibrium_consistency.
inline constexpr double kEntropyStep = 1e-6;

struct EntropyPoint {
  double h = 1.0;
  double n = 0.0;
  double s = 0.0;
  double boltzmann = 1.0;
};

/// Fractal von Neumann entropy per state,
///   S = K [ a ln(a/n) - b ln(b/n) ],  a = 1 + (h-1) n,  b = 1 + (h-2) n.
/// Evaluated as K [a ln a - b ln b - n ln n] (a - b = n), with b ln b taken
/// as 0 at b = 0.
///
/// Errors: h outside [1,2] -> InvalidLabel; n <= 0 -> InvalidOccupation;
/// n > 1/(2-h) for h < 2 -> ExclusionViolation; K <= 0 -> InvalidArgument.
double entropy_per_state(double h, double n, double boltzmann = 1.0);

EntropyPoint entropy_point(double h, double n, double boltzmann = 1.0);

/// |dS/dn - K ln xi| at n = occupation(h, xi), with dS/dn from a central
/// difference of step kEntropyStep. Zero for an exact equilibrium
/// distribution. Throws ExclusionViolation/InvalidOccupation if the stencil
/// leaves (0, 1/(2-h)], plus anything the solver throws.
double equilibrium_consistency(double h, double xi, double boltzmann = 1.0);

}  // namespace hallfrac
