#pragma once

#include <vector>

#include "polarstroke/path_model.hpp"
#include "polarstroke/polar_solver.hpp"

namespace polarstroke {

/// How a single interval behaves when stepped in tangent angle.
///  - Curved: t(psi) is one-to-one; interior ribs invert angle to parameter.
///  - Flat:   zero turn; the interval contributes a single straight quad.
///  - Pivot:  zero parametric extent; the tangent sweeps +-pi at a fixed
///            point (an exact cusp, or a conic asymptote with a double root).
enum class IntervalKind { Curved, Flat, Pivot };

/// The invertibility decomposition of one segment: breakpoints p, tangent
/// angles Psi, signed per-interval turns delta and their cumulative absolute
/// sum. Breakpoints are non-decreasing; consecutive equal entries occur only
/// across Pivot intervals, whose two table angles record the one-sided limit
/// tangents on each side of the cusp.
struct IntervalTable {
  std::vector<double> p;            // M+1
  std::vector<Angle> psi;           // M+1
  std::vector<double> delta;        // M, |delta[i]| <= pi
  std::vector<double> delta_sigma;  // M+1 cumulative |delta|
  std::vector<IntervalKind> kind;   // M

  int interval_count() const { return static_cast<int>(delta.size()); }
  double total_turn() const { return delta_sigma.back(); }
};

IntervalRef make_interval_ref(const PathSegment& seg, const IntervalTable& table, int k);

enum class CubicClass { Line, Serpentine, Cusp, Loop };

/// Inflection solve for cubic segments: parameters strictly inside (0,1)
/// where the curvature vanishes, plus the discriminant classification. A
/// double root (cusp) reports one parameter. Degenerate collinear cubics
/// classify as Line with no parameters.
struct InflectionInfo {
  CubicClass cls = CubicClass::Serpentine;
  std::vector<double> params;  // sorted, in (0,1)
};

InflectionInfo inflection_params(const PathSegment& seg);

/// Tangent-reversal parameters of a conic, strictly inside (0,1): the roots
/// of the rational denominator, where the curvature's sign structure flips.
/// Two values iff w_B < -1, one (the asymptote's double root) iff w_B = -1,
/// none otherwise.
std::vector<double> conic_reversal_params(const PathSegment& seg);

/// Decomposes a segment's tangent-angle domain into monotone intervals:
/// breakpoints from inflections/reversals, endpoint angles from the gradient
/// fallback cascade, pivot intervals at exact cusps, and a half-turn split of
/// any interval still turning >= pi. Throws ZeroLengthSegment.
IntervalTable build_intervals(const PathSegment& seg);

}  // namespace polarstroke
