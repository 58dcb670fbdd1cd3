#include "polarstroke/polar_solver.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace polarstroke {
namespace {

constexpr double kRangeSlack = 1e-9;   // parametric slack for accepting roots
constexpr double kAngleSlack = 1e-9;   // angular slack for the interval range check

struct QuadraticPoly {
  double a = 0.0, b = 0.0, c = 0.0;
  double eval(double t) const { return (a * t + b) * t + c; }
};

// Coefficients of f(t) = D(t) . N where D is the gradient-direction
// polynomial. Quadratic for Cubic/Conic, linear for Quadratic, constant for
// Line. For the Conic the denominator is ignored: the numerator alone carries
// the gradient's direction.
QuadraticPoly direction_dot_poly(const PathSegment& seg, Vec2 n) {
  QuadraticPoly f;
  switch (seg.form) {
    case SegmentForm::Cubic: {
      Vec2 a = seg.points[1] - seg.points[0];
      Vec2 b = seg.points[2] - seg.points[1];
      Vec2 c = seg.points[3] - seg.points[2];
      f.a = dot(a - 2.0 * b + c, n);
      f.b = 2.0 * dot(b - a, n);
      f.c = dot(a, n);
      break;
    }
    case SegmentForm::Quadratic: {
      Vec2 a = seg.points[1] - seg.points[0];
      Vec2 b = seg.points[2] - seg.points[1];
      f.b = dot(b - a, n);
      f.c = dot(a, n);
      break;
    }
    case SegmentForm::Conic: {
      // q(t) is quadratic; interpolate q . n exactly from three samples.
      double f0 = dot(gradient_direction_poly(seg, 0.0), n);
      double fm = dot(gradient_direction_poly(seg, 0.5), n);
      double f1 = dot(gradient_direction_poly(seg, 1.0), n);
      f.a = 2.0 * f0 + 2.0 * f1 - 4.0 * fm;
      f.b = 4.0 * fm - 3.0 * f0 - f1;
      f.c = f0;
      break;
    }
    case SegmentForm::Line:
      f.c = dot(seg.points[1] - seg.points[0], n);
      break;
  }
  return f;
}

// Numerically stable quadratic roots: larger-magnitude root from the
// cancellation-free form, the other via the product of roots.
int solve_quadratic(const QuadraticPoly& f, double roots[2]) {
  double scale = std::max({std::abs(f.a), std::abs(f.b), std::abs(f.c)});
  if (scale == 0.0) return 0;
  if (std::abs(f.a) < 1e-14 * scale) {
    if (std::abs(f.b) < 1e-14 * scale) return 0;
    roots[0] = -f.c / f.b;
    return 1;
  }
  double disc = f.b * f.b - 4.0 * f.a * f.c;
  if (disc < 0.0) return 0;
  double sq = std::sqrt(disc);
  double q = -0.5 * (f.b + (f.b < 0.0 ? -sq : sq));
  int count = 0;
  roots[count++] = q / f.a;
  if (q != 0.0) {
    roots[count++] = f.c / q;
  } else {
    roots[count++] = 0.0;  // b == 0 and disc == 0: double root at 0
  }
  return count;
}

bool tangent_aligned(const PathSegment& seg, double t, Angle psi) {
  return dot(gradient_direction_poly(seg, t), unit_vector(psi)) > 0.0;
}

}  // namespace

std::optional<double> solve_angle_aligned(const PathSegment& seg, double t_lo, double t_hi,
                                          Angle psi) {
  QuadraticPoly f = direction_dot_poly(seg, normal_from_tangent_angle(psi));
  double roots[2];
  int n = solve_quadratic(f, roots);
  std::optional<double> best;
  std::optional<double> best_unaligned;
  for (int i = 0; i < n; ++i) {
    double t = roots[i];
    if (t < t_lo - kRangeSlack || t > t_hi + kRangeSlack) continue;
    t = std::clamp(t, t_lo, t_hi);
    if (tangent_aligned(seg, t, psi)) {
      if (!best || std::abs(t - 0.5 * (t_lo + t_hi)) < std::abs(*best - 0.5 * (t_lo + t_hi))) {
        best = t;
      }
    } else if (!best_unaligned) {
      best_unaligned = t;
    }
  }
  return best ? best : best_unaligned;
}

double t_of_psi(const IntervalRef& iv, Angle psi) {
  const PathSegment& seg = *iv.segment;

  // Range check: the offset of psi from psi_lo must land within the swept
  // turn (inclusive, with angular slack).
  double offset = angle_diff(psi, iv.psi_lo);
  if (iv.delta >= 0.0) {
    if (offset < -kAngleSlack || offset > iv.delta + kAngleSlack) {
      throw AngleOutOfInterval("angle outside interval sweep");
    }
  } else {
    if (offset > kAngleSlack || offset < iv.delta - kAngleSlack) {
      throw AngleOutOfInterval("angle outside interval sweep");
    }
  }

  Vec2 n = normal_from_tangent_angle(psi);
  QuadraticPoly f = direction_dot_poly(seg, n);
  double roots[2];
  int count = solve_quadratic(f, roots);

  std::vector<double> in_range;
  for (int i = 0; i < count; ++i) {
    double t = roots[i];
    if (t >= iv.t_lo - kRangeSlack && t <= iv.t_hi + kRangeSlack) {
      in_range.push_back(std::clamp(t, iv.t_lo, iv.t_hi));
    }
  }

  if (in_range.empty()) {
    // Endpoint fallback: pick the range extreme with the smaller residual.
    double r_lo = std::abs(f.eval(iv.t_lo));
    double r_hi = std::abs(f.eval(iv.t_hi));
    return r_lo < r_hi ? iv.t_lo : iv.t_hi;
  }
  if (in_range.size() == 1) return in_range[0];

  // Two roots in range happens only under numeric noise after splitting.
  // Prefer the root whose tangent points along psi; tie-break with a
  // linear-in-angle prediction of where psi should land.
  double frac = std::abs(iv.delta) > 0.0 ? std::clamp(offset / iv.delta, 0.0, 1.0) : 0.0;
  double predicted = iv.t_lo + frac * (iv.t_hi - iv.t_lo);
  bool a0 = tangent_aligned(seg, in_range[0], psi);
  bool a1 = tangent_aligned(seg, in_range[1], psi);
  if (a0 != a1) return a0 ? in_range[0] : in_range[1];
  return std::abs(in_range[0] - predicted) <= std::abs(in_range[1] - predicted) ? in_range[0]
                                                                                : in_range[1];
}

}  // namespace polarstroke
