#include "polarstroke/joins_caps.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace polarstroke {
namespace {

constexpr double kJoinPositionTol = 1e-9;

int round_steps(double turn, double q) {
  return std::max(1, static_cast<int>(std::ceil(std::abs(turn) / q - 1e-9)));
}

int style_steps(const JoinStyle& style, double delta1, double q) {
  switch (style.kind) {
    case JoinKind::None:
      return 0;
    case JoinKind::Bevel:
      return 1;
    case JoinKind::Triangular:
      return 2;
    case JoinKind::Miter:
    case JoinKind::MiterTruncate:
    case JoinKind::MiterRevert:
      return 3;
    case JoinKind::Round:
      return round_steps(delta1, q);
  }
  return 0;
}

struct MiterGeometry {
  bool have_tip = false;
  Point2 tip{};
  double ratio = 0.0;    // miter length over width/2
  Point2 base_in{};      // outer offset boundary points at the pivot
  Point2 base_out{};
  Vec2 dir_in{}, dir_out{};
};

// Outer offset boundary lines of the two adjoining segments and their
// intersection (the miter tip).
MiterGeometry miter_geometry(const PivotLink& link, double half_width) {
  MiterGeometry g;
  double side = link.delta1 >= 0.0 ? -1.0 : 1.0;  // outer fan side: N for left turns
  Vec2 n_in = normal_from_tangent_angle(link.psi_start);
  Vec2 n_out = normal_from_tangent_angle(link.psi_stop);
  g.dir_in = unit_vector(link.psi_start);
  g.dir_out = unit_vector(link.psi_stop);
  g.base_in = link.position + side * half_width * n_in;
  g.base_out = link.position + side * half_width * n_out;

  double denom = cross(g.dir_in, g.dir_out);
  double half_turn_cos = std::cos(std::abs(link.delta1) * 0.5);
  if (std::abs(denom) > 1e-12 && half_turn_cos > 1e-12) {
    double s = cross(g.base_out - g.base_in, g.dir_out) / denom;
    g.tip = g.base_in + s * g.dir_in;
    g.have_tip = true;
    g.ratio = distance(g.tip, link.position) / half_width;
  } else if (half_turn_cos <= 1e-12) {
    g.ratio = std::numeric_limits<double>::infinity();  // U-turn: no finite tip
  } else {
    g.tip = g.base_in;  // straight-through join; tip degenerates to the rib vertex
    g.have_tip = true;
    g.ratio = 1.0;
  }
  return g;
}

// Forward intersection of the outer offset line with the miter-limit circle.
// The base vertex sits at w/2 < radius from the pivot, so exactly one exit
// point lies ahead along the line.
Point2 clip_to_limit_circle(Point2 base, Vec2 dir, Point2 pivot, double radius) {
  Vec2 rel = base - pivot;
  double b = dot(rel, dir);
  double c = norm_sq(rel) - radius * radius;
  double disc = b * b - c;
  if (disc <= 0.0) return base;
  double s = -b + std::sqrt(disc);
  return base + s * dir;
}

}  // namespace

PivotLink build_join_link(const PathSegment& incoming, const PathSegment& outgoing,
                          const JoinStyle& style, double q) {
  if (distance(incoming.stop_point(), outgoing.start_point()) > kJoinPositionTol) {
    throw DisconnectedSegments("join endpoints do not meet");
  }
  if (style.miter_limit < 1.0) {
    throw ValidationError("miter limit must be >= 1");
  }
  PivotLink link;
  link.position = incoming.stop_point();
  link.psi_start = angle_of(endpoint_unit_gradient(incoming, SegmentEnd::Stop));
  link.psi_stop = angle_of(endpoint_unit_gradient(outgoing, SegmentEnd::Start));
  link.delta1 = angle_diff(link.psi_stop, link.psi_start);
  link.join = style;
  link.is_cap = false;
  link.steps = style_steps(style, link.delta1, q);
  return link;
}

PivotLink build_cap_link(const PathSegment& seg, SegmentEnd end, const CapKind& style, double q) {
  Angle tangent = angle_of(endpoint_unit_gradient(seg, end));
  PivotLink link;
  link.is_cap = true;
  link.cap = style;
  if (end == SegmentEnd::Start) {
    // Sweep the back half-disk: the kept fan is centered on the reversed
    // tangent, pivoting counterclockwise.
    link.position = seg.start_point();
    link.psi_start = angle_add(tangent, kPi);
    link.delta1 = kPi;
  } else {
    // Stop caps sweep the forward half-disk, pivoting clockwise.
    link.position = seg.stop_point();
    link.psi_start = tangent;
    link.delta1 = -kPi;
  }
  link.psi_stop = angle_add(link.psi_start, link.delta1);
  switch (style) {
    case CapKind::None:
      link.steps = 0;
      break;
    case CapKind::Square:
      link.steps = 4;
      break;
    case CapKind::Triangular:
      link.steps = 2;
      break;
    case CapKind::Round:
      link.steps = round_steps(link.delta1, q);
      break;
  }
  return link;
}

Tessellation tessellate_link(const PivotLink& link, const TessellationParams& params) {
  params.validate();
  Tessellation tess;
  if (link.steps <= 0) return tess;

  double half = params.width / 2.0;
  int j_count = link.steps;
  // The turn's inner side collapses onto the pivot: a positive pivot keeps
  // the N-side fan, a negative one the P-side fan.
  bool keep_n = link.delta1 >= 0.0;

  tess.ribs.reserve(j_count + 1);
  for (int j = 0; j <= j_count; ++j) {
    Rib rib;
    rib.j = j;
    rib.t = j_count > 0 ? static_cast<double>(j) / j_count : 0.0;
    rib.psi = angle_add(link.psi_start, link.delta1 * (static_cast<double>(j) / j_count));
    rib.normal = normal_from_tangent_angle(rib.psi);
    rib.position = link.position;
    rib.r_n = keep_n ? half : 0.0;
    rib.r_p = keep_n ? 0.0 : half;
    rib.flags = kRibPivotEdge;
    tess.ribs.push_back(rib);
  }

  auto outer_vertex = [&](int j) { return keep_n ? tess.ribs[j].vertex_n() : tess.ribs[j].vertex_p(); };
  auto set_outer_vertex = [&](int j, Point2 v) {
    // Re-express the override as a radius/normal pair so vertex_n/vertex_p
    // reproduce it exactly.
    Rib& rib = tess.ribs[j];
    Vec2 d = v - rib.position;
    double len = norm(d);
    if (len < 1e-300) {
      (keep_n ? rib.r_n : rib.r_p) = 0.0;
      return;
    }
    rib.normal = keep_n ? -1.0 * (d / len) : (d / len);
    (keep_n ? rib.r_n : rib.r_p) = len;
  };

  if (link.is_cap && link.cap == CapKind::Square) {
    // Corner ribs push out to right angles at sqrt(2) * width/2.
    double corner = half * std::sqrt(2.0);
    (keep_n ? tess.ribs[1].r_n : tess.ribs[1].r_p) = corner;
    (keep_n ? tess.ribs[3].r_n : tess.ribs[3].r_p) = corner;
  }

  if (!link.is_cap &&
      (link.join.kind == JoinKind::Miter || link.join.kind == JoinKind::MiterTruncate ||
       link.join.kind == JoinKind::MiterRevert)) {
    MiterGeometry g = miter_geometry(link, half);
    bool exceeded = !(g.ratio <= link.join.miter_limit);
    if (!exceeded && g.have_tip) {
      set_outer_vertex(1, g.tip);
      set_outer_vertex(2, g.tip);
    } else if (link.join.kind == JoinKind::MiterTruncate) {
      // Clip the spike to the miter-limit circle; the two clipped corners
      // replace the tip. The spike runs forward along the incoming outer
      // boundary and backward along the outgoing one.
      double radius = link.join.miter_limit * half;
      Point2 c1 = clip_to_limit_circle(g.base_in, g.dir_in, link.position, radius);
      Point2 c2 = clip_to_limit_circle(g.base_out, -1.0 * g.dir_out, link.position, radius);
      set_outer_vertex(1, c1);
      set_outer_vertex(2, c2);
    } else {
      // Revert to bevel: middle ribs sit on the chord between the boundary
      // outer vertices.
      Point2 v0 = outer_vertex(0);
      Point2 v3 = outer_vertex(3);
      set_outer_vertex(1, v0 + (1.0 / 3.0) * (v3 - v0));
      set_outer_vertex(2, v0 + (2.0 / 3.0) * (v3 - v0));
    }
  }

  tess.quads.reserve(j_count);
  for (int i = 0; i < j_count; ++i) {
    Quad quad;
    quad.rib_lo = i;
    quad.rib_hi = i + 1;
    quad.bowtie = segments_intersect_properly(tess.ribs[i].vertex_n(), tess.ribs[i + 1].vertex_n(),
                                              tess.ribs[i].vertex_p(), tess.ribs[i + 1].vertex_p());
    tess.quads.push_back(quad);
  }

  LinkInfo info;
  info.kind = link.is_cap ? LinkKind::Cap : LinkKind::Join;
  info.first_rib = 0;
  info.rib_count = j_count + 1;
  info.first_quad = 0;
  info.quad_count = j_count;
  tess.links.push_back(info);
  return tess;
}

Quad watertight_stitch(int segment_rib_index, int link_rib_index) {
  Quad quad;
  quad.rib_lo = segment_rib_index;
  quad.rib_hi = link_rib_index;
  quad.stitch = true;
  quad.bowtie = false;
  return quad;
}

}  // namespace polarstroke
