#pragma once

#include <array>

#include "polarstroke/errors.hpp"
#include "polarstroke/geometry.hpp"

namespace polarstroke {

enum class SegmentForm { Cubic, Quadratic, Conic, Line };

enum class SegmentEnd { Start, Stop };

/// One path segment in one of the four generator forms. Control points are
/// ordered start..end; Conic carries the homogeneous middle weight, which may
/// be zero or negative (external segments).
struct PathSegment {
  SegmentForm form = SegmentForm::Line;
  std::array<Point2, 4> points{};
  int point_count = 0;
  double conic_weight = 1.0;  // only meaningful for Conic

  static PathSegment cubic(Point2 a, Point2 b, Point2 c, Point2 d);
  static PathSegment quadratic(Point2 a, Point2 b, Point2 c);
  static PathSegment conic(Point2 a, Point2 b, Point2 c, double weight);
  static PathSegment line(Point2 a, Point2 b);

  Point2 start_point() const { return points[0]; }
  Point2 stop_point() const { return points[point_count - 1]; }

  /// True when every control point is colocated (empty stroked region).
  bool is_zero_length() const;
};

/// Position on the generator curve. Throws DegenerateEvaluation when a conic
/// denominator vanishes at t (external-segment asymptote).
Point2 eval(const PathSegment& seg, double t);

/// Analytic derivative g'(t) of the generator equation.
Vector2 gradient(const PathSegment& seg, double t);

/// Polynomial whose direction equals the direction of g'(t) everywhere the
/// gradient is defined. For the rational Conic this is the derivative's
/// numerator n'd - nd' (the denominator squared is positive, so it never flips
/// the direction); for the other forms it is g'(t) itself. Unlike gradient(),
/// this stays finite across conic asymptotes, which makes it the right tool
/// for tangent-direction work on external segments.
Vector2 gradient_direction_poly(const PathSegment& seg, double t);

/// Derivative of gradient_direction_poly with respect to t.
Vector2 gradient_direction_poly_derivative(const PathSegment& seg, double t);

/// Conic denominator (1-t)^2 + 2(1-t)t w + t^2; returns 1 for other forms.
double conic_denominator(const PathSegment& seg, double t);

/// Signed curvature with the standard plane convention
/// kappa = cross(g', g'') / |g'|^3. Throws UndefinedCurvature at zero gradient.
double curvature(const PathSegment& seg, double t);

/// Unit tangent at a segment endpoint via the control-point difference
/// fallback cascade, including the sgn(w_B) factor and the w_B = 0 special
/// case for conics. Throws ZeroLengthSegment when all control points are
/// colocated.
Vector2 endpoint_unit_gradient(const PathSegment& seg, SegmentEnd end);

}  // namespace polarstroke
