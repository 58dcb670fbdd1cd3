#include "polarstroke/path_model.hpp"

#include <cmath>

namespace polarstroke {
namespace {

constexpr double kDenominatorZero = 1e-12;

void require_finite(const PathSegment& seg) {
  for (int i = 0; i < seg.point_count; ++i) {
    if (!is_finite(seg.points[i])) {
      throw ValidationError("segment control point is not finite");
    }
  }
  if (seg.form == SegmentForm::Conic && !std::isfinite(seg.conic_weight)) {
    throw ValidationError("conic weight is not finite");
  }
}

// Conic numerator (homogeneous position) and its derivative.
Vec2 conic_numerator(const PathSegment& seg, double t) {
  double s = 1.0 - t;
  double w = seg.conic_weight;
  return s * s * seg.points[0] + 2.0 * s * t * w * seg.points[1] + t * t * seg.points[2];
}

Vec2 conic_numerator_derivative(const PathSegment& seg, double t) {
  double s = 1.0 - t;
  double w = seg.conic_weight;
  return 2.0 * (s * (w * seg.points[1] - seg.points[0]) + t * (seg.points[2] - w * seg.points[1]));
}

double conic_denominator_derivative(const PathSegment& seg, double t) {
  return 2.0 * (seg.conic_weight - 1.0) * (1.0 - 2.0 * t);
}

double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

}  // namespace

PathSegment PathSegment::cubic(Point2 a, Point2 b, Point2 c, Point2 d) {
  PathSegment seg{SegmentForm::Cubic, {a, b, c, d}, 4, 1.0};
  require_finite(seg);
  return seg;
}

PathSegment PathSegment::quadratic(Point2 a, Point2 b, Point2 c) {
  PathSegment seg{SegmentForm::Quadratic, {a, b, c, Point2{}}, 3, 1.0};
  require_finite(seg);
  return seg;
}

PathSegment PathSegment::conic(Point2 a, Point2 b, Point2 c, double weight) {
  PathSegment seg{SegmentForm::Conic, {a, b, c, Point2{}}, 3, weight};
  require_finite(seg);
  return seg;
}

PathSegment PathSegment::line(Point2 a, Point2 b) {
  PathSegment seg{SegmentForm::Line, {a, b, Point2{}, Point2{}}, 2, 1.0};
  require_finite(seg);
  return seg;
}

bool PathSegment::is_zero_length() const {
  for (int i = 1; i < point_count; ++i) {
    if (!polarstroke::is_zero_length(points[i] - points[0])) return false;
  }
  return true;
}

Point2 eval(const PathSegment& seg, double t) {
  double s = 1.0 - t;
  switch (seg.form) {
    case SegmentForm::Cubic:
      return s * s * s * seg.points[0] + 3.0 * s * s * t * seg.points[1] +
             3.0 * s * t * t * seg.points[2] + t * t * t * seg.points[3];
    case SegmentForm::Quadratic:
      return s * s * seg.points[0] + 2.0 * s * t * seg.points[1] + t * t * seg.points[2];
    case SegmentForm::Conic: {
      double d = conic_denominator(seg, t);
      if (std::abs(d) < kDenominatorZero) {
        throw DegenerateEvaluation("conic denominator vanishes at t");
      }
      return conic_numerator(seg, t) / d;
    }
    case SegmentForm::Line:
      return s * seg.points[0] + t * seg.points[1];
  }
  return {};
}

Vector2 gradient(const PathSegment& seg, double t) {
  double s = 1.0 - t;
  switch (seg.form) {
    case SegmentForm::Cubic: {
      Vec2 a = seg.points[1] - seg.points[0];
      Vec2 b = seg.points[2] - seg.points[1];
      Vec2 c = seg.points[3] - seg.points[2];
      return 3.0 * (s * s * a + 2.0 * s * t * b + t * t * c);
    }
    case SegmentForm::Quadratic: {
      Vec2 a = seg.points[1] - seg.points[0];
      Vec2 b = seg.points[2] - seg.points[1];
      return 2.0 * (s * a + t * b);
    }
    case SegmentForm::Conic: {
      double d = conic_denominator(seg, t);
      if (std::abs(d) < kDenominatorZero) {
        throw DegenerateEvaluation("conic denominator vanishes at t");
      }
      Vec2 q = conic_numerator_derivative(seg, t) * d -
               conic_numerator(seg, t) * conic_denominator_derivative(seg, t);
      return q / (d * d);
    }
    case SegmentForm::Line:
      return seg.points[1] - seg.points[0];
  }
  return {};
}

Vector2 gradient_direction_poly(const PathSegment& seg, double t) {
  if (seg.form == SegmentForm::Conic) {
    return conic_numerator_derivative(seg, t) * conic_denominator(seg, t) -
           conic_numerator(seg, t) * conic_denominator_derivative(seg, t);
  }
  return gradient(seg, t);
}

Vector2 gradient_direction_poly_derivative(const PathSegment& seg, double t) {
  switch (seg.form) {
    case SegmentForm::Cubic: {
      Vec2 a = seg.points[1] - seg.points[0];
      Vec2 b = seg.points[2] - seg.points[1];
      Vec2 c = seg.points[3] - seg.points[2];
      // Derivative of 3[(1-t)^2 a + 2(1-t)t b + t^2 c].
      return 6.0 * ((1.0 - t) * (b - a) + t * (c - b));
    }
    case SegmentForm::Quadratic: {
      Vec2 a = seg.points[1] - seg.points[0];
      Vec2 b = seg.points[2] - seg.points[1];
      return 2.0 * (b - a);
    }
    case SegmentForm::Conic: {
      // q(t) is a quadratic vector polynomial; recover q'(t) from exact
      // interpolation of q at t = 0, 1/2, 1.
      Vec2 q0 = gradient_direction_poly(seg, 0.0);
      Vec2 qm = gradient_direction_poly(seg, 0.5);
      Vec2 q1 = gradient_direction_poly(seg, 1.0);
      Vec2 a = 2.0 * q0 + 2.0 * q1 - 4.0 * qm;
      Vec2 b = 4.0 * qm - 3.0 * q0 - q1;
      return 2.0 * t * a + b;
    }
    case SegmentForm::Line:
      return {};
  }
  return {};
}

double conic_denominator(const PathSegment& seg, double t) {
  if (seg.form != SegmentForm::Conic) return 1.0;
  double s = 1.0 - t;
  return s * s + 2.0 * s * t * seg.conic_weight + t * t;
}

double curvature(const PathSegment& seg, double t) {
  if (seg.form == SegmentForm::Conic) {
    // With q = n'd - nd' the chain rule gives
    // cross(g', g'') = cross(q, q') / d^4 and |g'| = |q| / d^2, so
    // kappa = d^2 cross(q, q') / |q|^3.
    Vec2 q = gradient_direction_poly(seg, t);
    double qn = norm(q);
    if (qn * qn * qn < kZeroLengthSq) {
      throw UndefinedCurvature("zero gradient");
    }
    double d = conic_denominator(seg, t);
    return d * d * cross(q, gradient_direction_poly_derivative(seg, t)) / (qn * qn * qn);
  }
  Vec2 g1 = gradient(seg, t);
  double n = norm(g1);
  if (n * n < kZeroLengthSq) {
    throw UndefinedCurvature("zero gradient");
  }
  Vec2 g2 = gradient_direction_poly_derivative(seg, t);
  return cross(g1, g2) / (n * n * n);
}

Vector2 endpoint_unit_gradient(const PathSegment& seg, SegmentEnd end) {
  if (seg.is_zero_length()) {
    throw ZeroLengthSegment("all control points colocated");
  }
  const auto& p = seg.points;
  auto pick = [](std::initializer_list<Vec2> candidates) -> Vec2 {
    for (Vec2 v : candidates) {
      if (!is_zero_length(v)) return normalized(v);
    }
    return {};  // unreachable for nonzero-length segments
  };
  switch (seg.form) {
    case SegmentForm::Cubic:
      if (end == SegmentEnd::Start) {
        return pick({p[1] - p[0], p[2] - p[0], p[3] - p[0]});
      }
      return pick({p[3] - p[2], p[3] - p[1], p[3] - p[0]});
    case SegmentForm::Quadratic:
      if (end == SegmentEnd::Start) {
        return pick({p[1] - p[0], p[2] - p[0]});
      }
      return pick({p[2] - p[1], p[2] - p[0]});
    case SegmentForm::Conic: {
      double w = seg.conic_weight;
      if (is_zero_length(p[2] - p[0]) && w == 0.0) {
        // w_B = 0 collapses the curve onto the chord; a zero chord is a point.
        throw ZeroLengthSegment("conic with zero weight and coincident endpoints");
      }
      if (end == SegmentEnd::Start) {
        if (w != 0.0 && !is_zero_length(p[1] - p[0])) {
          return sgn(w) * normalized(p[1] - p[0]);
        }
        return pick({p[2] - p[0], p[1] - p[0]});
      }
      if (w != 0.0 && !is_zero_length(p[2] - p[1])) {
        return sgn(w) * normalized(p[2] - p[1]);
      }
      return pick({p[2] - p[0], p[2] - p[1]});
    }
    case SegmentForm::Line:
      return normalized(p[1] - p[0]);
  }
  return {};
}

}  // namespace polarstroke
