#pragma once

#include <vector>

#include "polarstroke/tessellator.hpp"

namespace polarstroke {

/// Ordinary facet-angle statistics of a tessellation, in degrees. Facets that
/// touch an offset cusp (the offset factor 1 +- kappa*w/2 changes sign), a
/// turning reversal, or a pivot are counted under `excluded` and do not enter
/// the max/mean/sd. Only segment links are measured; joins and caps have
/// their own fixed geometry.
struct FacetStats {
  double max_deg = 0.0;
  double mean_deg = 0.0;
  double sd_deg = 0.0;
  int count = 0;
  int excluded = 0;
};

/// The known-deficient baseline: n quads from uniform parameter steps
/// t = j/n with normals from the normalized gradient. Cusp samples take the
/// one-sided (incoming) limit normal; no pivot geometry is generated.
Tessellation uniform_tessellate(const PathSegment& seg, const TessellationParams& params, int n);

/// Dense polyline sampling of a generator curve, refined until consecutive
/// samples are spatially close. `gaps` marks sample pairs that could not be
/// refined below the threshold (asymptote jumps); no chord exists there.
struct SampledCurve {
  std::vector<double> t;
  std::vector<Point2> points;
  std::vector<bool> gap_after;  // size points.size(); true = no chord to the next sample

  double distance_to(Point2 pt) const;
};

SampledCurve sample_curve(const PathSegment& seg, int min_samples, double max_gap);

/// Brute-force stroked-region membership: the point is inside when it lies
/// within w/2 of the densely sampled generator polyline. The disk union
/// automatically carries the cusp semicircles and matches a round-capped,
/// round-joined stroke.
bool stroked_region_contains(const PathSegment& seg, double w, Point2 pt, int samples);

/// Point-vs-quad-strip test; each quad is split into the triangle pair
/// (N_lo, P_lo, P_hi) / (N_lo, P_hi, N_hi) with inclusive boundaries. Over-
/// covers bow-tie quads by construction.
bool point_in_tessellation(const Tessellation& tess, Point2 pt);

FacetStats facet_stats(const Tessellation& tess, double q, double w);

/// Largest total tangent sweep over any run of consecutive coincident ribs
/// within one link. An exact-cusp tessellation reports ~pi; the uniform
/// baseline reports ~0.
double max_coincident_pivot_sweep(const Tessellation& tess);

}  // namespace polarstroke
