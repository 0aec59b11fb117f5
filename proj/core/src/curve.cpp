#include "hallfrac/curve.hpp"

#include <algorithm>
#include <cmath>

#include "hallfrac/error.hpp"

namespace hallfrac {

namespace {

constexpr double kCaliperTieTolerance = 1e-10;

double distance(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

}  // namespace

CurvePolyline make_polyline(std::vector<Point2> points, std::string generator, int level) {
  if (points.size() < 2) throw Error(ErrorKind::InvalidArgument, "a curve needs at least 2 points");
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (points[i] == points[i + 1]) {
      throw Error(ErrorKind::InvalidArgument,
                  "consecutive points " + std::to_string(i) + " and " + std::to_string(i + 1) +
                      " coincide");
    }
  }
  return CurvePolyline{std::move(points), std::move(generator), level};
}

double koch_ratio(double dimension) {
  if (!(dimension > 1.0 && dimension < 2.0)) {
    throw Error(ErrorKind::InvalidArgument, "Koch dimension must lie in (1, 2)");
  }
  return std::pow(4.0, -1.0 / dimension);
}

CurvePolyline generate_koch(int level, double dimension) {
  if (level < 0) throw Error(ErrorKind::InvalidArgument, "level must be >= 0");
  if (level > kMaxKochLevel) {
    throw Error(ErrorKind::TooManyPoints,
                "level " + std::to_string(level) + " exceeds " + std::to_string(kMaxKochLevel));
  }
  const double r = koch_ratio(dimension);
  const double cos_t = (1.0 - 2.0 * r) / (2.0 * r);
  const double sin_t = std::sqrt(1.0 - cos_t * cos_t);

  std::vector<Point2> pts{{0.0, 0.0}, {1.0, 0.0}};
  for (int l = 0; l < level; ++l) {
    std::vector<Point2> next;
    next.reserve(4 * (pts.size() - 1) + 1);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const Point2 a = pts[i];
      const Point2 b = pts[i + 1];
      const double dx = b.x - a.x;
      const double dy = b.y - a.y;
      const Point2 p1{a.x + r * dx, a.y + r * dy};
      const Point2 apex{p1.x + r * (cos_t * dx - sin_t * dy), p1.y + r * (sin_t * dx + cos_t * dy)};
      const Point2 p3{a.x + (1.0 - r) * dx, a.y + (1.0 - r) * dy};
      next.insert(next.end(), {a, p1, apex, p3});
    }
    next.push_back(pts.back());
    pts = std::move(next);
  }
  return CurvePolyline{std::move(pts), "koch", level};
}

double curve_extent(const CurvePolyline& curve) {
  double extent = 0.0;
  for (const auto& p : curve.points) extent = std::max(extent, distance(curve.points.front(), p));
  return extent;
}

CaliperResult caliper_length(const CurvePolyline& curve, double resolution) {
  if (!(resolution > 0.0) || !std::isfinite(resolution)) {
    throw Error(ErrorKind::InvalidArgument, "resolution must be positive");
  }
  if (resolution > curve_extent(curve)) {
    throw Error(ErrorKind::ResolutionTooCoarse,
                "R = " + std::to_string(resolution) + " exceeds the curve extent");
  }

  const auto& pts = curve.points;
  const double r2 = resolution * resolution;
  // Vertices at distance R up to rounding count as reached; self-similar
  // curves put many vertices exactly on the caliper circle.
  const double reach2 = r2 * (1.0 - kCaliperTieTolerance);
  CaliperResult out;
  Point2 centre = pts.front();
  Point2 from = centre;  // current position on segment j
  std::size_t j = 0;
  while (j + 1 < pts.size()) {
    const Point2& to = pts[j + 1];
    const double ex = to.x - centre.x;
    const double ey = to.y - centre.y;
    if (ex * ex + ey * ey < reach2) {
      from = to;
      ++j;
      continue;
    }
    // Distance to the centre is convex along the segment and below R at
    // `from`, so the exit point is the larger root.
    const double dx = to.x - from.x;
    const double dy = to.y - from.y;
    const double fx = from.x - centre.x;
    const double fy = from.y - centre.y;
    const double a = dx * dx + dy * dy;
    const double b = 2.0 * (fx * dx + fy * dy);
    const double c = fx * fx + fy * fy - r2;
    const double disc = std::max(0.0, b * b - 4.0 * a * c);
    const double s = std::clamp((-b + std::sqrt(disc)) / (2.0 * a), 0.0, 1.0);
    centre = Point2{from.x + s * dx, from.y + s * dy};
    from = centre;
    ++out.steps;
    if (s >= 1.0) ++j;
  }
  out.length = static_cast<double>(out.steps) * resolution + distance(centre, pts.back());
  return out;
}

DimensionEstimate estimate_dimension(const CurvePolyline& curve,
                                     std::span<const double> resolutions) {
  if (resolutions.size() < 3) {
    throw Error(ErrorKind::DegenerateResolutions, "need at least 3 resolutions");
  }
  std::vector<double> sorted(resolutions.begin(), resolutions.end());
  std::sort(sorted.begin(), sorted.end());
  if (!(sorted.front() > 0.0)) {
    throw Error(ErrorKind::DegenerateResolutions, "resolutions must be positive");
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorKind::DegenerateResolutions, "resolutions must be distinct");
  }
  if (sorted.back() < 10.0 * sorted.front()) {
    throw Error(ErrorKind::DegenerateResolutions, "resolutions must span at least one decade");
  }

  DimensionEstimate est;
  est.samples.reserve(resolutions.size());
  for (double r : resolutions) est.samples.push_back({r, caliper_length(curve, r).length});

  const double count = static_cast<double>(est.samples.size());
  double mx = 0.0, my = 0.0;
  for (const auto& s : est.samples) {
    mx += std::log(s.resolution);
    my += std::log(s.length);
  }
  mx /= count;
  my /= count;
  double sxx = 0.0, sxy = 0.0;
  for (const auto& s : est.samples) {
    const double dx = std::log(s.resolution) - mx;
    sxx += dx * dx;
    sxy += dx * (std::log(s.length) - my);
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double sse = 0.0;
  for (const auto& s : est.samples) {
    const double res = std::log(s.length) - (intercept + slope * std::log(s.resolution));
    sse += res * res;
  }
  est.h = 1.0 - slope;
  est.standard_error = std::sqrt(sse / (count - 2.0) / sxx);
  return est;
}

std::vector<double> geometric_resolutions(double ratio, int first, int last, double scale) {
  if (!(ratio > 0.0 && ratio < 1.0) || last < first) {
    throw Error(ErrorKind::DegenerateResolutions, "ratio must be in (0,1) and first <= last");
  }
  std::vector<double> out;
  for (int k = first; k <= last; ++k) out.push_back(scale * std::pow(ratio, k));
  return out;
}

}  // namespace hallfrac
