#pragma once

#include <optional>

#include "polarstroke/path_model.hpp"

namespace polarstroke {

/// One monotone tangent-angle interval of a segment, as produced by the
/// interval builder. The swept turn `delta` is signed and bounded by pi in
/// magnitude, which keeps the angle-to-parameter inversion single-valued.
struct IntervalRef {
  const PathSegment* segment = nullptr;
  int k = 0;  // interval index within the owning table (informational)
  double t_lo = 0.0;
  double t_hi = 1.0;
  Angle psi_lo = 0.0;
  Angle psi_hi = 0.0;
  double delta = 0.0;  // signed turn from psi_lo to psi_hi
};

/// Inverts tangent angle to parameter within one interval: the t in
/// [t_lo, t_hi] where the gradient is orthogonal to the normal of psi.
/// When no numeric root lands in range, returns whichever interval endpoint
/// minimizes |g'(t) . N|. Throws AngleOutOfInterval when psi lies outside the
/// interval's swept range beyond a 1e-9 slack.
///
/// Callers stepping psi sequentially should clamp the result against the
/// previously returned t; the solve itself is stateless.
double t_of_psi(const IntervalRef& iv, Angle psi);

/// Root of g'(t) . N(psi) = 0 tightly inside [t_lo, t_hi], preferring roots
/// whose tangent actually points along psi (rather than psi + pi). Used by
/// the interval builder to locate split angles inside intervals that still
/// turn a full half-revolution or more; returns nothing when the polynomial
/// has no in-range root.
std::optional<double> solve_angle_aligned(const PathSegment& seg, double t_lo, double t_hi,
                                          Angle psi);

}  // namespace polarstroke
