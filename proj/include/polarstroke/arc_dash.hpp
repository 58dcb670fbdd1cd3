#pragma once

#include <vector>

#include "polarstroke/tessellator.hpp"

namespace polarstroke {

struct Path;  // full definition in path.hpp

/// Alternating on/off arc lengths plus a phase offset, in path units.
/// Entries may be zero but at least one must be strictly positive. A pattern
/// with an odd entry count repeats doubled, as in SVG.
struct DashPattern {
  std::vector<double> lengths;
  double offset = 0.0;

  void validate() const;  // throws EmptyPattern / ValidationError
  double cycle_length() const;
};

/// Chordal cumulative arc length over a tessellation's ribs: nondecreasing
/// per contour, with join and cap pivots contributing zero.
struct ArcLengthTable {
  std::vector<double> cum_length;      // one entry per rib
  std::vector<double> contour_totals;  // arc length of each contour
  double total = 0.0;
};

/// Sums chord lengths between consecutive segment-link ribs and writes the
/// running value into each rib's cum_length. Steps where the parameter moves
/// backward contribute zero.
ArcLengthTable accumulate_arc_length(Tessellation& tess);

struct VertexTexCoord {
  double s = 0.0;  // cumulative arc length at the rib
  double u = 0.0;  // 0 at the N vertex, 1 at the P vertex
};

/// Per-vertex texture coordinates, two per rib in (N, P) order.
std::vector<VertexTexCoord> texture_coords(const Tessellation& tess, const ArcLengthTable& table);

struct DashPoint {
  Point2 position{};
  double t = 0.0;
  int segment_index = 0;
  int contour = 0;
};

struct DashPiece {
  std::vector<DashPoint> points;
  bool on = false;
  double length = 0.0;
  int contour = 0;
};

struct DashResult {
  std::vector<DashPiece> pieces;  // on and off pieces, in path order
  double total_length = 0.0;
};

/// Splits a path's chordal centerline (from polar-stroking ribs at the given
/// quality) into alternating on/off polyline pieces. Zero-length on-pieces
/// are kept as single-point dots only when the stroke's cap style would
/// render them (Round or Square); otherwise they are dropped.
DashResult dash_path(const Path& path, const DashPattern& pattern,
                     const TessellationParams& params);

}  // namespace polarstroke
