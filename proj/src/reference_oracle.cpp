#include "polarstroke/reference_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polarstroke/interval_builder.hpp"

namespace polarstroke {
namespace {

Vec2 uniform_sample_normal(const PathSegment& seg, double t, Vec2 fallback) {
  Vec2 d = gradient_direction_poly(seg, t);
  if (!is_zero_length(d)) {
    return perp(normalized(d));
  }
  // Zero gradient (cusp sample): incoming one-sided limit.
  Vec2 dd = gradient_direction_poly_derivative(seg, t);
  if (!is_zero_length(dd)) {
    return perp(normalized(-1.0 * dd));
  }
  return fallback;
}

double point_segment_distance(Point2 p, Point2 a, Point2 b) {
  Vec2 ab = b - a;
  double len_sq = norm_sq(ab);
  if (len_sq < kZeroLengthSq) return distance(p, a);
  double s = std::clamp(dot(p - a, ab) / len_sq, 0.0, 1.0);
  return distance(p, a + s * ab);
}

bool point_in_triangle(Point2 p, Point2 a, Point2 b, Point2 c) {
  double d1 = cross(b - a, p - a);
  double d2 = cross(c - b, p - b);
  double d3 = cross(a - c, p - c);
  double scale = std::max({norm_sq(b - a), norm_sq(c - b), norm_sq(a - c)});
  double eps = 1e-12 * scale;
  bool has_neg = (d1 < -eps) || (d2 < -eps) || (d3 < -eps);
  bool has_pos = (d1 > eps) || (d2 > eps) || (d3 > eps);
  return !(has_neg && has_pos);
}

}  // namespace

Tessellation uniform_tessellate(const PathSegment& seg, const TessellationParams& params, int n) {
  params.validate();
  if (n < 1) throw ValidationError("uniform tessellation needs n >= 1");
  Tessellation tess;
  if (seg.is_zero_length()) return tess;

  double half = params.width / 2.0;
  Vec2 prev_normal{0.0, 1.0};
  tess.ribs.reserve(n + 1);
  for (int j = 0; j <= n; ++j) {
    double t = nudged_eval_t(seg, static_cast<double>(j) / n,
                             j < n / 2 ? 0.0 : 1.0);
    Rib rib;
    rib.j = j;
    rib.t = t;
    rib.position = eval(seg, t);
    rib.normal = uniform_sample_normal(seg, t, prev_normal);
    prev_normal = rib.normal;
    rib.psi = angle_of(Vec2{rib.normal.y, -rib.normal.x});  // tangent = normal rotated -90
    rib.r_n = half;
    rib.r_p = half;
    try {
      rib.kappa = curvature(seg, rib.t);
    } catch (const UndefinedCurvature&) {
      rib.kappa = 0.0;
    }
    tess.ribs.push_back(rib);
  }
  tess.quads.reserve(n);
  for (int i = 0; i < n; ++i) {
    Quad quad;
    quad.rib_lo = i;
    quad.rib_hi = i + 1;
    quad.bowtie =
        segments_intersect_properly(tess.ribs[i].vertex_n(), tess.ribs[i + 1].vertex_n(),
                                    tess.ribs[i].vertex_p(), tess.ribs[i + 1].vertex_p());
    tess.quads.push_back(quad);
  }
  LinkInfo link;
  link.kind = LinkKind::Segment;
  link.rib_count = n + 1;
  link.quad_count = n;
  tess.links.push_back(link);
  return tess;
}

double SampledCurve::distance_to(Point2 pt) const {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i + 1 < points.size() && !gap_after[i]) {
      best = std::min(best, point_segment_distance(pt, points[i], points[i + 1]));
    } else {
      best = std::min(best, distance(pt, points[i]));
    }
  }
  return best;
}

SampledCurve sample_curve(const PathSegment& seg, int min_samples, double max_gap) {
  SampledCurve sc;
  if (seg.is_zero_length()) {
    sc.t.push_back(0.0);
    sc.points.push_back(seg.points[0]);
    sc.gap_after.push_back(true);
    return sc;
  }

  // Base grid plus interval breakpoints (cusps and reversals must be hit).
  std::vector<double> ts;
  ts.reserve(min_samples + 8);
  for (int i = 0; i <= min_samples; ++i) {
    ts.push_back(static_cast<double>(i) / min_samples);
  }
  IntervalTable table = build_intervals(seg);
  for (double p : table.p) ts.push_back(p);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  auto position_at = [&](double t) {
    double tt = nudged_eval_t(seg, t, 0.5);
    return eval(seg, tt);
  };

  sc.t.push_back(ts.front());
  sc.points.push_back(position_at(ts.front()));
  for (std::size_t i = 1; i < ts.size(); ++i) {
    // Refine spatial gaps by parametric bisection; give up below 1e-12 in t
    // (asymptote jumps) and record the break.
    double t_prev = sc.t.back();
    double t_next = ts[i];
    Point2 p_prev = sc.points.back();
    Point2 p_next = position_at(t_next);
    struct Span {
      double t0, t1;
      Point2 p0, p1;
    };
    std::vector<Span> stack{{t_prev, t_next, p_prev, p_next}};
    while (!stack.empty()) {
      Span s = stack.back();
      stack.pop_back();
      if (distance(s.p0, s.p1) <= max_gap || (s.t1 - s.t0) <= 1e-12) {
        sc.gap_after.push_back(distance(s.p0, s.p1) > 4.0 * max_gap);
        sc.t.push_back(s.t1);
        sc.points.push_back(s.p1);
        continue;
      }
      double tm = 0.5 * (s.t0 + s.t1);
      Point2 pm = position_at(tm);
      stack.push_back({tm, s.t1, pm, s.p1});
      stack.push_back({s.t0, tm, s.p0, pm});
    }
  }
  sc.gap_after.push_back(true);  // past the final sample
  return sc;
}

bool stroked_region_contains(const PathSegment& seg, double w, Point2 pt, int samples) {
  if (samples < 1000) throw ValidationError("oracle needs at least 1000 samples");
  if (seg.is_zero_length()) return false;
  SampledCurve sc = sample_curve(seg, samples, w / 8.0);
  return sc.distance_to(pt) <= w / 2.0;
}

bool point_in_tessellation(const Tessellation& tess, Point2 pt) {
  for (const Quad& quad : tess.quads) {
    const Rib& lo = tess.ribs[quad.rib_lo];
    const Rib& hi = tess.ribs[quad.rib_hi];
    Point2 n0 = lo.vertex_n(), p0 = lo.vertex_p();
    Point2 n1 = hi.vertex_n(), p1 = hi.vertex_p();
    double min_x = std::min({n0.x, p0.x, n1.x, p1.x});
    double max_x = std::max({n0.x, p0.x, n1.x, p1.x});
    double min_y = std::min({n0.y, p0.y, n1.y, p1.y});
    double max_y = std::max({n0.y, p0.y, n1.y, p1.y});
    double pad = 1e-12 * (std::abs(max_x) + std::abs(max_y) + 1.0);
    if (pt.x < min_x - pad || pt.x > max_x + pad || pt.y < min_y - pad || pt.y > max_y + pad) {
      continue;
    }
    if (point_in_triangle(pt, n0, p0, p1) || point_in_triangle(pt, n0, p1, n1)) {
      return true;
    }
  }
  return false;
}

FacetStats facet_stats(const Tessellation& tess, double q, double w) {
  (void)q;
  FacetStats stats;
  std::vector<double> angles;

  for (const LinkInfo& link : tess.links) {
    if (link.kind != LinkKind::Segment) continue;
    double scale = 0.0;
    for (int i = 0; i < link.rib_count; ++i) {
      const Rib& rib = tess.ribs[link.first_rib + i];
      scale = std::max({scale, std::abs(rib.position.x), std::abs(rib.position.y)});
    }
    double len_eps = 1e-12 * std::max(scale, 1.0);

    for (int i = 1; i + 1 < link.rib_count; ++i) {
      const Rib& a = tess.ribs[link.first_rib + i - 1];
      const Rib& b = tess.ribs[link.first_rib + i];
      const Rib& c = tess.ribs[link.first_rib + i + 1];

      bool excluded = false;
      for (const Rib* rib : {&a, &b, &c}) {
        if (rib->flags & (kRibTurnFlip | kRibPivotEdge)) excluded = true;
      }
      // Offset-cusp adjacency: the offset tangent factor flips sign on one
      // side across the facet.
      for (double side : {+1.0, -1.0}) {
        double fa = 1.0 + side * a.kappa * w / 2.0;
        double fb = 1.0 + side * b.kappa * w / 2.0;
        double fc = 1.0 + side * c.kappa * w / 2.0;
        if (fa * fb < 0.0 || fb * fc < 0.0) excluded = true;
      }

      double facet = 0.0;
      for (bool n_side : {true, false}) {
        Point2 va = n_side ? a.vertex_n() : a.vertex_p();
        Point2 vb = n_side ? b.vertex_n() : b.vertex_p();
        Point2 vc = n_side ? c.vertex_n() : c.vertex_p();
        Vec2 e0 = vb - va;
        Vec2 e1 = vc - vb;
        if (norm(e0) < len_eps || norm(e1) < len_eps) {
          excluded = true;
          continue;
        }
        facet = std::max(facet, std::atan2(std::abs(cross(e0, e1)), dot(e0, e1)));
      }
      if (excluded) {
        ++stats.excluded;
      } else {
        angles.push_back(facet * 180.0 / kPi);
      }
    }
  }

  stats.count = static_cast<int>(angles.size());
  if (!angles.empty()) {
    double sum = 0.0;
    for (double a : angles) {
      stats.max_deg = std::max(stats.max_deg, a);
      sum += a;
    }
    stats.mean_deg = sum / angles.size();
    double var = 0.0;
    for (double a : angles) var += (a - stats.mean_deg) * (a - stats.mean_deg);
    stats.sd_deg = std::sqrt(var / angles.size());
  }
  return stats;
}

double max_coincident_pivot_sweep(const Tessellation& tess) {
  double best = 0.0;
  for (const LinkInfo& link : tess.links) {
    double scale = 1.0;
    for (int i = 0; i < link.rib_count; ++i) {
      const Rib& rib = tess.ribs[link.first_rib + i];
      scale = std::max({scale, std::abs(rib.position.x), std::abs(rib.position.y)});
    }
    double tol = 1e-9 * scale;
    int i = 0;
    while (i < link.rib_count) {
      double sweep = 0.0;
      int k = i;
      while (k + 1 < link.rib_count &&
             distance(tess.ribs[link.first_rib + k].position,
                      tess.ribs[link.first_rib + k + 1].position) <= tol) {
        sweep += std::abs(angle_diff(tess.ribs[link.first_rib + k + 1].psi,
                                     tess.ribs[link.first_rib + k].psi));
        ++k;
      }
      best = std::max(best, sweep);
      i = k + 1;
    }
  }
  return best;
}

}  // namespace polarstroke
