#pragma once

#include "polarstroke/path.hpp"
#include "polarstroke/path_io.hpp"

namespace polarstroke {

/// Worker threads honored by the parallel pipeline: POLARSTROKE_THREADS when
/// set to a positive integer, otherwise the OpenMP default.
int stroke_thread_budget();

/// Tessellates a complete stroked path: one link per segment, join, and cap,
/// zero-area stitch quads between adjacent links, and cumulative arc length
/// filled in. Links are independent, so the parallel variant farms them out
/// across threads (OpenMP) and assembles results in link order; outputs are
/// bit-identical to the serial reference for any thread count.
Tessellation stroke_path(const Path& path, const TessellationParams& params);

/// Single-threaded reference implementation with identical output.
Tessellation stroke_path_serial(const Path& path, const TessellationParams& params);

/// Dashes the path with its stroke's dash pattern, then strokes every
/// on-piece as a capped polyline contour. Paths without a dash pattern
/// stroke normally.
Tessellation stroke_dashed_path(const Path& path, const TessellationParams& params);

}  // namespace polarstroke
