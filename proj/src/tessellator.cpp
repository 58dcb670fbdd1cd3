#include "polarstroke/tessellator.hpp"

#include <algorithm>
#include <cmath>

namespace polarstroke {
namespace {

constexpr double kDenominatorZero = 1e-12;
constexpr double kStepCeilGuard = 1e-9;

int interval_of_step(const StepTable& st, int j) {
  // Largest k with cumulative[k] <= j, capped to the last interval.
  int k = static_cast<int>(std::upper_bound(st.cumulative.begin(), st.cumulative.end(), j) -
                           st.cumulative.begin()) -
          1;
  return std::min(k, static_cast<int>(st.steps.size()) - 1);
}

double curvature_or_zero(const PathSegment& seg, double t) {
  try {
    return curvature(seg, t);
  } catch (const UndefinedCurvature&) {
    return 0.0;
  }
}

double orient(Point2 a, Point2 b, Point2 c) { return cross(b - a, c - a); }

}  // namespace

void TessellationParams::validate() const {
  if (!(q > 0.0) || !(q <= kPi / 2.0) || !std::isfinite(q)) {
    throw ValidationError("q must lie in (0, pi/2] radians");
  }
  if (!(width > 0.0) || !std::isfinite(width)) {
    throw ValidationError("stroke width must be positive");
  }
}

StepTable build_step_table(const IntervalTable& table, double q) {
  if (!(q > 0.0)) {
    throw ValidationError("q must be positive");
  }
  StepTable st;
  st.cumulative.push_back(0);
  for (double d : table.delta) {
    int steps = std::max(1, static_cast<int>(std::ceil(std::abs(d) / q - kStepCeilGuard)));
    st.steps.push_back(steps);
    st.cumulative.push_back(st.cumulative.back() + steps);
  }
  st.total = st.cumulative.back();
  return st;
}

double nudged_eval_t(const PathSegment& seg, double t, double toward) {
  if (seg.form != SegmentForm::Conic) return t;
  if (std::abs(conic_denominator(seg, t)) >= kDenominatorZero) return t;
  double dir = toward >= t ? 1.0 : -1.0;
  for (double h = 1e-9; h < 1.0; h *= 4.0) {
    double candidate = t + dir * h;
    if (std::abs(conic_denominator(seg, candidate)) >= kDenominatorZero) return candidate;
    candidate = t - dir * h;
    if (std::abs(conic_denominator(seg, candidate)) >= kDenominatorZero) return candidate;
  }
  return t;
}

RibParams rib_params(const PathSegment& seg, const IntervalTable& table, const StepTable& st,
                     int j) {
  RibParams out;
  int k = interval_of_step(st, j);
  if (j == st.cumulative[k]) {
    out.t = table.p[k];
    out.psi = table.psi[k];
  } else if (j == st.cumulative[k + 1]) {
    out.t = table.p[k + 1];
    out.psi = table.psi[k + 1];
  } else {
    out.psi = angle_add(table.psi[k],
                        table.delta[k] * (static_cast<double>(j - st.cumulative[k]) / st.steps[k]));
    switch (table.kind[k]) {
      case IntervalKind::Pivot:
        out.t = table.p[k];
        break;
      case IntervalKind::Flat:
        out.t = table.p[k];  // unreachable: flat intervals have a single step
        break;
      case IntervalKind::Curved: {
        IntervalRef ref = make_interval_ref(seg, table, k);
        out.t = t_of_psi(ref, out.psi);
        break;
      }
    }
  }
  out.normal = normal_from_tangent_angle(out.psi);
  return out;
}

bool segments_intersect_properly(Point2 a0, Point2 a1, Point2 b0, Point2 b1) {
  double d1 = orient(b0, b1, a0);
  double d2 = orient(b0, b1, a1);
  double d3 = orient(a0, a1, b0);
  double d4 = orient(a0, a1, b1);
  return ((d1 > 0.0) != (d2 > 0.0)) && (d1 != 0.0) && (d2 != 0.0) && ((d3 > 0.0) != (d4 > 0.0)) &&
         (d3 != 0.0) && (d4 != 0.0);
}

Tessellation tessellate_segment(const PathSegment& seg, const TessellationParams& params) {
  params.validate();
  Tessellation tess;
  if (seg.is_zero_length()) {
    return tess;  // empty stroked region
  }

  IntervalTable table = build_intervals(seg);
  StepTable st = build_step_table(table, params.q);
  int n = st.total;
  int m = table.interval_count();
  double half = params.width / 2.0;

  tess.ribs.reserve(n + 1);

  auto emit = [&](int j, double t, Angle psi, int k, bool boundary) {
    Rib rib;
    rib.j = j;
    double prev_t = tess.ribs.empty() ? t : tess.ribs.back().t;
    double toward =
        table.kind[k] == IntervalKind::Pivot ? table.p[k] - 1e-6 : 0.5 * (table.p[k] + table.p[k + 1]);
    rib.t = std::max(nudged_eval_t(seg, t, toward), prev_t);
    rib.psi = psi;
    rib.normal = normal_from_tangent_angle(psi);
    rib.position = eval(seg, rib.t);
    rib.r_n = half;
    rib.r_p = half;
    rib.kappa = table.kind[k] == IntervalKind::Pivot ? 0.0 : curvature_or_zero(seg, rib.t);
    if (boundary) rib.flags |= kRibBreakpoint;
    if (table.kind[k] == IntervalKind::Pivot) rib.flags |= kRibPivotEdge;
    tess.ribs.push_back(rib);
  };

  // Rib 0, then each interval's interior ribs and closing boundary rib.
  emit(0, table.p[0], table.psi[0], 0, true);
  if (table.kind[0] == IntervalKind::Pivot) tess.ribs[0].flags |= kRibPivotEdge;
  for (int k = 0; k < m; ++k) {
    IntervalRef ref = make_interval_ref(seg, table, k);
    for (int jj = 1; jj < st.steps[k]; ++jj) {
      int j = st.cumulative[k] + jj;
      Angle psi = angle_add(table.psi[k], table.delta[k] * (static_cast<double>(jj) / st.steps[k]));
      double t = table.p[k];
      if (table.kind[k] == IntervalKind::Curved) {
        t = t_of_psi(ref, psi);
      }
      emit(j, t, psi, k, false);
    }
    emit(st.cumulative[k + 1], table.p[k + 1], table.psi[k + 1], k, true);
    // Boundary metadata: turning flips and pivot adjacency.
    Rib& boundary = tess.ribs.back();
    if (k + 1 < m) {
      if (table.delta[k] * table.delta[k + 1] < 0.0) boundary.flags |= kRibTurnFlip;
      if (table.kind[k + 1] == IntervalKind::Pivot) boundary.flags |= kRibPivotEdge;
    }
  }

  tess.quads.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Rib& lo = tess.ribs[i];
    const Rib& hi = tess.ribs[i + 1];
    Quad quad;
    quad.rib_lo = i;
    quad.rib_hi = i + 1;
    quad.bowtie = segments_intersect_properly(lo.vertex_n(), hi.vertex_n(), lo.vertex_p(),
                                              hi.vertex_p());
    tess.quads.push_back(quad);
  }

  LinkInfo link;
  link.kind = LinkKind::Segment;
  link.first_rib = 0;
  link.rib_count = n + 1;
  link.first_quad = 0;
  link.quad_count = n;
  tess.links.push_back(link);
  return tess;
}

}  // namespace polarstroke
