#pragma once

#include <string>
#include <vector>

#include "polarstroke/path.hpp"
#include "polarstroke/reference_oracle.hpp"

namespace polarstroke {

/// Parses SVG path data (M/m L/l H/h V/v C/c S/s Q/q T/t A/a Z/z with the
/// usual implicit-repetition and separator rules) extended with a conic
/// command: `K x1 y1 w x2 y2` adds a rational quadratic with control point
/// (x1,y1), weight w, and endpoint (x2,y2); `k` is its relative form.
/// Throws ParseError with the byte offset of the failure, or ValidationError
/// for non-finite numbers.
Path parse_path(const std::string& text);

/// Serializes contour geometry back to path-data text with shortest
/// round-trip number formatting (M/L/Q/C/K/Z commands only).
std::string to_path_data(const Path& path);

/// SVG endpoint-parameterized elliptical arc to conic segments. The arc is
/// split into pieces of at most a quarter turn, each an exact rational
/// quadratic with weight cos(half-angle). Zero radii degrade to a straight
/// line; coincident endpoints produce nothing.
std::vector<PathSegment> arc_to_conics(Point2 from, double rx, double ry, double x_rot_deg,
                                       bool large_arc, bool sweep, Point2 to);

enum class DocumentFormat { Json, Svg };

/// Serializable record of one stroking run: the tessellation with cumulative
/// arc length, facet statistics, and an echo of the parameters that produced
/// it.
struct TessellationDocument {
  Tessellation tess;
  ArcLengthTable arc;
  FacetStats stats;
  double q = 4.0 * kPi / 180.0;  // radians
  StrokeStyle stroke;
};

/// Assembles a document from a stroked tessellation (fills arc length and
/// facet statistics).
TessellationDocument build_document(Tessellation tess, const TessellationParams& params,
                                    const StrokeStyle& stroke);

/// JSON: schema-versioned, canonical field order, shortest round-trip
/// doubles. SVG: one polygon per quad (two triangles for bow-ties) over the
/// generator polylines, viewBox covering the tessellation plus a stroke-width
/// margin.
std::string write_tessellation(const TessellationDocument& doc, DocumentFormat format);

/// Inverse of write_tessellation for the JSON format; numeric fields round
/// trip bit-exactly.
TessellationDocument read_tessellation_json(const std::string& text);

/// Optional JSON style sidecar:
/// {"width": 1, "join": "miter", "miter_limit": 4, "cap": "round",
///  "dash": {"lengths": [1, 1], "offset": 0}}.
StrokeStyle parse_style_json(const std::string& text);

const char* join_kind_name(JoinKind kind);
const char* cap_kind_name(CapKind kind);
JoinKind join_kind_from_name(const std::string& name);  // throws ValidationError
CapKind cap_kind_from_name(const std::string& name);    // throws ValidationError

}  // namespace polarstroke
