#include "polarstroke/interval_builder.hpp"

#include <algorithm>
#include <cmath>

namespace polarstroke {
namespace {

constexpr double kEndpointDrop = 1e-9;   // reversal t this close to 0/1 is dropped
constexpr double kSplitThreshold = kPi - 1e-9;
constexpr double kFlatTurn = 1e-12;

double segment_extent(const PathSegment& seg) {
  double extent = 0.0;
  for (int i = 1; i < seg.point_count; ++i) {
    extent = std::max(extent, norm(seg.points[i] - seg.points[0]));
  }
  return extent;
}

bool control_points_collinear(const PathSegment& seg) {
  double extent = segment_extent(seg);
  if (extent == 0.0) return true;
  // Direction of the longest control-point difference from the first point.
  Vec2 axis{};
  double best = 0.0;
  for (int i = 1; i < seg.point_count; ++i) {
    double n = norm(seg.points[i] - seg.points[0]);
    if (n > best) {
      best = n;
      axis = (seg.points[i] - seg.points[0]) / n;
    }
  }
  for (int i = 1; i < seg.point_count; ++i) {
    if (std::abs(cross(axis, seg.points[i] - seg.points[0])) > 1e-9 * extent) {
      return false;
    }
  }
  return true;
}

// Stable quadratic roots of a*t^2 + b*t + c, ascending. Returns the root
// count; a double root (within the discriminant tolerance handed in) is
// reported once through `double_root`.
int quadratic_roots(double a, double b, double c, double roots[2]) {
  if (a == 0.0) {
    if (b == 0.0) return 0;
    roots[0] = -c / b;
    return 1;
  }
  double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return 0;
  double sq = std::sqrt(disc);
  double q = -0.5 * (b + (b < 0.0 ? -sq : sq));
  double r0 = q / a;
  double r1 = (q != 0.0) ? c / q : r0;
  roots[0] = std::min(r0, r1);
  roots[1] = std::max(r0, r1);
  return 2;
}

struct Breakpoint {
  double t;
  bool pivot;  // tangent jumps by pi at this parameter
};

// One-sided limit tangent angles at a breakpoint. For ordinary reversals the
// direction polynomial is nonzero and both sides agree; at a pivot the
// polynomial has a simple root there, so the one-sided directions are the
// +-derivative directions.
struct BreakAngles {
  Angle incoming;
  Angle outgoing;
};

BreakAngles breakpoint_angles(const PathSegment& seg, const Breakpoint& bp) {
  if (!bp.pivot) {
    Vec2 d = gradient_direction_poly(seg, bp.t);
    if (!is_zero_length(d)) {
      Angle a = angle_of(d);
      return {a, a};
    }
  }
  Vec2 dd = gradient_direction_poly_derivative(seg, bp.t);
  if (is_zero_length(dd)) {
    // Deep degeneracy: fall back to sampled one-sided directions.
    Vec2 before = gradient_direction_poly(seg, bp.t - 1e-6);
    Vec2 after = gradient_direction_poly(seg, bp.t + 1e-6);
    return {angle_of(before), angle_of(after)};
  }
  return {angle_of(-1.0 * dd), angle_of(dd)};
}

// True signed turn over a parametric interval whose endpooint tangent angles
// are psi_a and psi_b. The wrapped difference is ambiguous for turns past a
// half revolution, so the winding is recovered from a coarse unwrap of the
// direction polynomial across the interval.
double resolve_turn(const PathSegment& seg, double t_lo, double t_hi, Angle psi_a, Angle psi_b) {
  constexpr int kSamples = 32;
  double estimate = 0.0;
  Angle prev = psi_a;
  for (int i = 1; i < kSamples; ++i) {
    double t = t_lo + (t_hi - t_lo) * (static_cast<double>(i) / kSamples);
    Vec2 d = gradient_direction_poly(seg, t);
    if (is_zero_length(d)) continue;
    Angle a = angle_of(d);
    estimate += angle_diff(a, prev);
    prev = a;
  }
  estimate += angle_diff(psi_b, prev);

  double raw = angle_diff(psi_b, psi_a);
  double best = raw;
  for (int k = -1; k <= 1; k += 2) {
    double candidate = raw + k * kTwoPi;
    if (std::abs(candidate) <= kTwoPi + 1e-6 &&
        std::abs(candidate - estimate) < std::abs(best - estimate)) {
      best = candidate;
    }
  }
  if (std::abs(best) < kFlatTurn) return 0.0;
  return best;
}

struct IntervalDraft {
  double t_lo, t_hi;
  Angle psi_lo, psi_hi;
  double delta;
  IntervalKind kind;
};

// Fallback split locator: walk the unwrapped angle until it crosses half the
// turn, then interpolate linearly within the final step.
double locate_split_by_walk(const PathSegment& seg, const IntervalDraft& iv) {
  constexpr int kSteps = 256;
  double target = iv.delta * 0.5;
  double acc = 0.0;
  Angle prev = iv.psi_lo;
  double t_prev = iv.t_lo;
  for (int i = 1; i <= kSteps; ++i) {
    double t = iv.t_lo + (iv.t_hi - iv.t_lo) * (static_cast<double>(i) / kSteps);
    Vec2 d = gradient_direction_poly(seg, t);
    if (is_zero_length(d)) continue;
    Angle a = angle_of(d);
    double step = angle_diff(a, prev);
    if ((target > 0.0 && acc + step >= target) || (target < 0.0 && acc + step <= target)) {
      double f = step != 0.0 ? (target - acc) / step : 0.5;
      return t_prev + f * (t - t_prev);
    }
    acc += step;
    prev = a;
    t_prev = t;
  }
  return 0.5 * (iv.t_lo + iv.t_hi);
}

void split_wide_intervals(const PathSegment& seg, std::vector<IntervalDraft>& intervals) {
  // A turn of >= pi makes psi and psi + pi indistinguishable to the angle
  // solve; halve such intervals at the angular midpoint. Pivots keep their
  // full half-turn: they never invert angle to parameter.
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<IntervalDraft> out;
    bool changed = false;
    for (const IntervalDraft& iv : intervals) {
      if (iv.kind != IntervalKind::Curved || std::abs(iv.delta) < kSplitThreshold) {
        out.push_back(iv);
        continue;
      }
      Angle psi_mid = angle_add(iv.psi_lo, iv.delta * 0.5);
      std::optional<double> t_mid = solve_angle_aligned(seg, iv.t_lo, iv.t_hi, psi_mid);
      if (!t_mid || *t_mid <= iv.t_lo || *t_mid >= iv.t_hi) {
        t_mid = locate_split_by_walk(seg, iv);
      }
      if (*t_mid <= iv.t_lo || *t_mid >= iv.t_hi) {
        out.push_back(iv);  // could not separate; the solver's alignment check copes
        continue;
      }
      out.push_back({iv.t_lo, *t_mid, iv.psi_lo, psi_mid, iv.delta * 0.5, IntervalKind::Curved});
      out.push_back({*t_mid, iv.t_hi, psi_mid, iv.psi_hi, iv.delta * 0.5, IntervalKind::Curved});
      changed = true;
    }
    intervals = std::move(out);
    if (!changed) break;
  }
}

IntervalTable finalize(const std::vector<IntervalDraft>& intervals) {
  IntervalTable table;
  table.p.push_back(intervals.front().t_lo);
  table.psi.push_back(intervals.front().psi_lo);
  table.delta_sigma.push_back(0.0);
  for (const IntervalDraft& iv : intervals) {
    table.p.push_back(iv.t_hi);
    table.psi.push_back(iv.psi_hi);
    table.delta.push_back(iv.delta);
    table.kind.push_back(iv.kind);
    table.delta_sigma.push_back(table.delta_sigma.back() + std::abs(iv.delta));
  }
  return table;
}

IntervalTable flat_table(const PathSegment& seg) {
  Angle a = angle_of(endpoint_unit_gradient(seg, SegmentEnd::Start));
  IntervalDraft iv{0.0, 1.0, a, a, 0.0, IntervalKind::Flat};
  return finalize({iv});
}

}  // namespace

IntervalRef make_interval_ref(const PathSegment& seg, const IntervalTable& table, int k) {
  IntervalRef ref;
  ref.segment = &seg;
  ref.k = k;
  ref.t_lo = table.p[k];
  ref.t_hi = table.p[k + 1];
  ref.psi_lo = table.psi[k];
  ref.psi_hi = table.psi[k + 1];
  ref.delta = table.delta[k];
  return ref;
}

InflectionInfo inflection_params(const PathSegment& seg) {
  InflectionInfo info;
  if (control_points_collinear(seg)) {
    info.cls = CubicClass::Line;
    return info;
  }

  // Inflection polynomial cross(g', g'') is quadratic in t; recover its
  // monomial coefficients from exact interpolation at t = 0, 1/2, 1.
  auto f = [&](double t) {
    return cross(gradient_direction_poly(seg, t), gradient_direction_poly_derivative(seg, t));
  };
  double f0 = f(0.0), fm = f(0.5), f1 = f(1.0);
  double a = 2.0 * f0 + 2.0 * f1 - 4.0 * fm;
  double b = 4.0 * fm - 3.0 * f0 - f1;
  double c = f0;

  double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
  if (scale == 0.0) {
    info.cls = CubicClass::Line;
    return info;
  }

  auto push_in_range = [&](double t) {
    if (t > kEndpointDrop && t < 1.0 - kEndpointDrop) info.params.push_back(t);
  };

  if (std::abs(a) < 1e-12 * scale) {
    // Leading coefficient vanished: the cubic degenerates toward a quadratic
    // and has at most one inflection.
    info.cls = CubicClass::Serpentine;
    if (std::abs(b) >= 1e-12 * scale) push_in_range(-c / b);
    return info;
  }

  double disc = b * b - 4.0 * a * c;
  double disc_scale = scale * scale;
  if (std::abs(disc) < 1e-9 * disc_scale) {
    info.cls = CubicClass::Cusp;
    push_in_range(-b / (2.0 * a));
  } else if (disc > 0.0) {
    info.cls = CubicClass::Serpentine;
    double roots[2];
    quadratic_roots(a, b, c, roots);
    push_in_range(roots[0]);
    push_in_range(roots[1]);
  } else {
    info.cls = CubicClass::Loop;
  }
  std::sort(info.params.begin(), info.params.end());
  return info;
}

std::vector<double> conic_reversal_params(const PathSegment& seg) {
  std::vector<double> out;
  double w = seg.conic_weight;
  // Reversals sit where the rational denominator
  // 2(1-w) t^2 - 2(1-w) t + 1 vanishes: a double root at t = 1/2 when
  // w = -1 and two roots inside (0,1) when w < -1.
  if (std::abs(w + 1.0) < 1e-12) {
    out.push_back(0.5);
    return out;
  }
  double a = 2.0 * (1.0 - w);
  double roots[2];
  int n = quadratic_roots(a, -a, 1.0, roots);
  for (int i = 0; i < n; ++i) {
    if (roots[i] > kEndpointDrop && roots[i] < 1.0 - kEndpointDrop) out.push_back(roots[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntervalTable build_intervals(const PathSegment& seg) {
  if (seg.is_zero_length()) {
    throw ZeroLengthSegment("cannot build intervals for a zero-length segment");
  }

  if (seg.form == SegmentForm::Line || control_points_collinear(seg) ||
      (seg.form == SegmentForm::Conic && seg.conic_weight == 0.0)) {
    return flat_table(seg);
  }

  std::vector<Breakpoint> breakpoints;
  if (seg.form == SegmentForm::Cubic) {
    InflectionInfo info = inflection_params(seg);
    for (double t : info.params) {
      breakpoints.push_back({t, info.cls == CubicClass::Cusp});
    }
  } else if (seg.form == SegmentForm::Conic) {
    bool double_root = std::abs(seg.conic_weight + 1.0) < 1e-12;
    for (double t : conic_reversal_params(seg)) {
      breakpoints.push_back({t, double_root});
    }
  }

  Angle psi_start = angle_of(endpoint_unit_gradient(seg, SegmentEnd::Start));
  Angle psi_stop = angle_of(endpoint_unit_gradient(seg, SegmentEnd::Stop));

  // Node list: parameter plus the angle leaving it and the angle arriving at
  // it. Pivot breakpoints carry distinct one-sided angles.
  struct Node {
    double t;
    Angle in, out;
    bool pivot;
  };
  std::vector<Node> nodes;
  nodes.push_back({0.0, psi_start, psi_start, false});
  for (const Breakpoint& bp : breakpoints) {
    BreakAngles ba = breakpoint_angles(seg, bp);
    nodes.push_back({bp.t, ba.incoming, ba.outgoing, bp.pivot});
  }
  nodes.push_back({1.0, psi_stop, psi_stop, false});

  std::vector<IntervalDraft> intervals;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const Node& lo = nodes[i];
    const Node& hi = nodes[i + 1];
    double turn = resolve_turn(seg, lo.t, hi.t, lo.out, hi.in);
    intervals.push_back({lo.t, hi.t, lo.out, hi.in, turn,
                         turn == 0.0 ? IntervalKind::Flat : IntervalKind::Curved});
    if (hi.pivot) {
      // Register the cusp's half-turn between the flanking intervals, spun in
      // the turning direction of the approach.
      double sign = turn != 0.0 ? (turn > 0.0 ? 1.0 : -1.0) : 0.0;
      if (sign == 0.0 && i + 2 < nodes.size()) {
        double ahead = resolve_turn(seg, hi.t, nodes[i + 2].t, hi.out, nodes[i + 2].in);
        sign = ahead < 0.0 ? -1.0 : 1.0;
      }
      if (sign == 0.0) sign = 1.0;
      intervals.push_back({hi.t, hi.t, hi.in, hi.out, sign * kPi, IntervalKind::Pivot});
    }
  }

  split_wide_intervals(seg, intervals);
  return finalize(intervals);
}

}  // namespace polarstroke
