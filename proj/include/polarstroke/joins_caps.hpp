#pragma once

#include "polarstroke/tessellator.hpp"

namespace polarstroke {

enum class JoinKind { None, Bevel, Miter, MiterTruncate, MiterRevert, Triangular, Round };

struct JoinStyle {
  JoinKind kind = JoinKind::Miter;
  double miter_limit = 4.0;  // ratio of miter length to width/2
};

enum class CapKind { None, Square, Round, Triangular };

/// A join or cap modeled as a zero-length pivot link: the generator is a
/// single point with distinct start and stop tangent angles. Caps pivot a
/// half revolution (+pi for start caps, -pi for stop caps); joins pivot by
/// the turn between the adjoining segment tangents.
struct PivotLink {
  Point2 position{};
  Angle psi_start = 0.0;
  Angle psi_stop = 0.0;
  double delta1 = 0.0;
  int steps = 0;  // J, from the style table
  bool is_cap = false;
  JoinStyle join{};
  CapKind cap = CapKind::None;
};

/// Pivot link for the corner between two connected segments. Throws
/// DisconnectedSegments when the incoming stop point and outgoing start point
/// disagree beyond 1e-9. `q` sizes round joins; the fixed styles ignore it.
PivotLink build_join_link(const PathSegment& incoming, const PathSegment& outgoing,
                          const JoinStyle& style, double q);

/// Pivot link capping one end of a segment. Throws ZeroLengthSegment.
PivotLink build_cap_link(const PathSegment& seg, SegmentEnd end, const CapKind& style, double q);

/// Tessellates a pivot link: all rib positions equal the pivot point, the
/// normals sweep the pivot in uniform steps, and the turn's inner side
/// radius is forced to zero so only the visible fan is emitted. Miter joins
/// override the two middle outer vertices with the miter tip (truncated or
/// reverted past the miter limit); square caps push the corner ribs out to
/// radius sqrt(2) * width/2.
Tessellation tessellate_link(const PivotLink& link, const TessellationParams& params);

/// Zero-area filler quad between a segment's terminal rib and the adjacent
/// pivot-link boundary rib, closing T-junction cracks.
Quad watertight_stitch(int segment_rib_index, int link_rib_index);

}  // namespace polarstroke
