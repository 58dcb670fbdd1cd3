#pragma once

#include <optional>
#include <vector>

#include "polarstroke/arc_dash.hpp"
#include "polarstroke/joins_caps.hpp"
#include "polarstroke/path_model.hpp"

namespace polarstroke {

struct Contour {
  std::vector<PathSegment> segments;
  bool closed = false;
};

struct StrokeStyle {
  double width = 1.0;
  JoinStyle join{JoinKind::Miter, 4.0};
  CapKind cap = CapKind::None;
  std::optional<DashPattern> dash;
};

/// A sequence of contours plus the stroke parameters that apply to all of
/// them. Consecutive segments within a contour share endpoints; a closed
/// contour's last point equals its first.
struct Path {
  std::vector<Contour> contours;
  StrokeStyle stroke;

  /// Verifies the connectivity invariants (1e-9 tolerance). Throws
  /// ValidationError on a broken chain.
  void validate() const;
};

}  // namespace polarstroke
