#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace hallfrac {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Ordered planar samples of a curve. At least two points, no two
/// consecutive points equal.
struct CurvePolyline {
  std::vector<Point2> points;
  std::string generator;
  int level = 0;
};

/// Validates the polyline invariants; throws Error(InvalidArgument).
CurvePolyline make_polyline(std::vector<Point2> points, std::string generator = "custom",
                            int level = 0);

inline constexpr int kMaxKochLevel = 12;

/// Segment ratio of the generalized Koch generator: 4 r^d = 1.
double koch_ratio(double dimension);

/// Generalized Koch curve from (0,0) to (1,0). Each segment is replaced by
/// four of length r = 4^(-1/d): flat, up, down, flat, with the tent angle
/// chosen so the generator spans the original segment. d = ln4/ln3 gives
/// the classic curve. 4^level + 1 points.
///
/// Errors: level > kMaxKochLevel -> TooManyPoints; negative level or d not in
/// (1, 2) -> InvalidArgument.
CurvePolyline generate_koch(int level, double dimension);

/// Largest distance from the first point to any vertex.
double curve_extent(const CurvePolyline& curve);

struct CaliperResult {
  double length = 0.0;
  std::size_t steps = 0;
};

/// Divider walk with opening R: from the start, repeatedly jump to the
/// first point along the curve at distance R (interpolated on segments).
/// length = steps * R + distance from the last caliper point to the end.
///
/// Errors: R <= 0 -> InvalidArgument; R > curve_extent -> ResolutionTooCoarse.
CaliperResult caliper_length(const CurvePolyline& curve, double resolution);

struct LengthSample {
  double resolution = 0.0;
  double length = 0.0;
};

struct DimensionEstimate {
  double h = 1.0;
  double standard_error = 0.0;  ///< of the fitted slope
  std::vector<LengthSample> samples;
};

/// Least-squares fit of ln L against ln R; h = 1 - slope.
///
/// Needs at least three distinct resolutions spanning a decade, otherwise
/// Error(DegenerateResolutions).
DimensionEstimate estimate_dimension(const CurvePolyline& curve,
                                     std::span<const double> resolutions);

/// scale * ratio^k for k = first..last.
std::vector<double> geometric_resolutions(double ratio, int first, int last, double scale = 1.0);

}  // namespace hallfrac
