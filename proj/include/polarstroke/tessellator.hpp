#pragma once

#include <cstdint>
#include <vector>

#include "polarstroke/interval_builder.hpp"
#include "polarstroke/path_model.hpp"

namespace polarstroke {

struct TessellationParams {
  double q = 4.0 * kPi / 180.0;  // max tangent-angle step, radians, (0, pi/2]
  double width = 1.0;            // stroke width, path units, > 0

  void validate() const;
};

/// Steps per interval for a quality knob q: max(1, ceil(|delta_i| / q)), so a
/// flat interval still contributes its single quad. The total N is known
/// before any rib is generated.
struct StepTable {
  std::vector<int> steps;       // M entries, all >= 1
  std::vector<int> cumulative;  // M+1 entries, cumulative[M] == total
  int total = 0;
};

StepTable build_step_table(const IntervalTable& table, double q);

// Rib metadata flags.
inline constexpr std::uint8_t kRibBreakpoint = 1;  // sits on an interval boundary
inline constexpr std::uint8_t kRibTurnFlip = 2;    // turning direction flips here
inline constexpr std::uint8_t kRibPivotEdge = 4;   // belongs to or borders a pivot

/// One tessellation cross-section. The two stroke vertices are
/// position - r_n * normal and position + r_p * normal.
struct Rib {
  Point2 position{};
  Vector2 normal{};
  double t = 0.0;
  Angle psi = 0.0;
  int j = 0;
  double cum_length = 0.0;  // filled by accumulate_arc_length
  double r_n = 0.0;
  double r_p = 0.0;
  double kappa = 0.0;  // signed curvature at t; 0 where undefined
  std::uint8_t flags = 0;

  Point2 vertex_n() const { return position - r_n * normal; }
  Point2 vertex_p() const { return position + r_p * normal; }
};

struct Quad {
  int rib_lo = 0;
  int rib_hi = 0;
  bool bowtie = false;
  bool stitch = false;  // watertight filler between adjacent links
};

enum class LinkKind { Segment, Join, Cap };

struct LinkInfo {
  LinkKind kind = LinkKind::Segment;
  int contour = 0;
  int source_index = 0;  // segment index, or the join/cap anchor segment
  int first_rib = 0;
  int rib_count = 0;
  int first_quad = 0;
  int quad_count = 0;
};

struct Tessellation {
  std::vector<Rib> ribs;
  std::vector<Quad> quads;
  std::vector<LinkInfo> links;

  bool empty() const { return ribs.empty(); }
};

struct RibParams {
  double t = 0.0;
  Angle psi = 0.0;
  Vector2 normal{};
};

/// Parameter, tangent angle, and unit normal of rib j. Interval boundaries
/// return the table's exact breakpoint values; interior ribs interpolate the
/// angle uniformly and invert it through the polar solve (pivot intervals
/// hold t fixed while the angle sweeps).
RibParams rib_params(const PathSegment& seg, const IntervalTable& table, const StepTable& steps,
                     int j);

/// Tessellates one path segment into N+1 ribs and N quads with both rib radii
/// at width/2. A zero-length segment yields an empty tessellation.
Tessellation tessellate_segment(const PathSegment& seg, const TessellationParams& params);

/// Strict crossing test between the two side edges of a quad.
bool segments_intersect_properly(Point2 a0, Point2 a1, Point2 b0, Point2 b1);

/// Evaluation that steps the parameter off a conic asymptote until the
/// rational denominator is meaningfully nonzero. `toward` gives the preferred
/// escape direction. Returns the possibly adjusted parameter.
double nudged_eval_t(const PathSegment& seg, double t, double toward);

}  // namespace polarstroke
