#include "polarstroke/stroker.hpp"

#include <cstdlib>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace polarstroke {
namespace {

struct LinkJob {
  enum class What { Segment, Join, Cap } what = What::Segment;
  int contour = 0;
  int source_index = 0;
  PathSegment segment;        // Segment jobs
  PivotLink pivot;            // Join/Cap jobs
};

std::vector<LinkJob> collect_jobs(const Path& path, const TessellationParams& params) {
  std::vector<LinkJob> jobs;
  for (std::size_t ci = 0; ci < path.contours.size(); ++ci) {
    const Contour& contour = path.contours[ci];

    std::vector<std::pair<int, PathSegment>> segs;
    for (std::size_t si = 0; si < contour.segments.size(); ++si) {
      if (!contour.segments[si].is_zero_length()) {
        segs.emplace_back(static_cast<int>(si), contour.segments[si]);
      }
    }

    if (segs.empty()) {
      // A contour that collapsed to a point renders as a dot when the cap
      // style has area there.
      if (!contour.segments.empty() &&
          (path.stroke.cap == CapKind::Round || path.stroke.cap == CapKind::Square)) {
        Point2 at = contour.segments.front().start_point();
        PathSegment fwd = PathSegment::line(at, at + Vec2{1.0, 0.0});
        PathSegment bwd = PathSegment::line(at - Vec2{1.0, 0.0}, at);
        LinkJob start{LinkJob::What::Cap, static_cast<int>(ci), 0, {}, {}};
        start.pivot = build_cap_link(fwd, SegmentEnd::Start, path.stroke.cap, params.q);
        jobs.push_back(start);
        LinkJob stop{LinkJob::What::Cap, static_cast<int>(ci), 0, {}, {}};
        stop.pivot = build_cap_link(bwd, SegmentEnd::Stop, path.stroke.cap, params.q);
        jobs.push_back(stop);
      }
      continue;
    }

    bool closed = contour.closed && segs.size() >= 1;
    if (!closed && path.stroke.cap != CapKind::None) {
      LinkJob job{LinkJob::What::Cap, static_cast<int>(ci), segs.front().first, {}, {}};
      job.pivot = build_cap_link(segs.front().second, SegmentEnd::Start, path.stroke.cap, params.q);
      jobs.push_back(job);
    }
    for (std::size_t i = 0; i < segs.size(); ++i) {
      jobs.push_back({LinkJob::What::Segment, static_cast<int>(ci), segs[i].first,
                      segs[i].second, {}});
      bool has_next = i + 1 < segs.size() || closed;
      if (has_next && path.stroke.join.kind != JoinKind::None) {
        const PathSegment& next = (i + 1 < segs.size()) ? segs[i + 1].second : segs.front().second;
        LinkJob job{LinkJob::What::Join, static_cast<int>(ci), segs[i].first, {}, {}};
        job.pivot = build_join_link(segs[i].second, next, path.stroke.join, params.q);
        jobs.push_back(job);
      }
    }
    if (!closed && path.stroke.cap != CapKind::None) {
      LinkJob job{LinkJob::What::Cap, static_cast<int>(ci), segs.back().first, {}, {}};
      job.pivot = build_cap_link(segs.back().second, SegmentEnd::Stop, path.stroke.cap, params.q);
      jobs.push_back(job);
    }
  }
  return jobs;
}

Tessellation run_job(const LinkJob& job, const TessellationParams& params) {
  if (job.what == LinkJob::What::Segment) {
    return tessellate_segment(job.segment, params);
  }
  return tessellate_link(job.pivot, params);
}

Tessellation assemble(const Path& path, const std::vector<LinkJob>& jobs,
                      std::vector<Tessellation>& parts) {
  Tessellation out;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Tessellation& part = parts[i];
    if (part.empty()) continue;
    int rib_base = static_cast<int>(out.ribs.size());
    int quad_base = static_cast<int>(out.quads.size());
    for (Rib& rib : part.ribs) out.ribs.push_back(rib);
    for (Quad quad : part.quads) {
      quad.rib_lo += rib_base;
      quad.rib_hi += rib_base;
      out.quads.push_back(quad);
    }
    LinkInfo link = part.links.front();
    link.contour = jobs[i].contour;
    link.source_index = jobs[i].source_index;
    link.first_rib = rib_base;
    link.first_quad = quad_base;
    out.links.push_back(link);
  }

  // Watertight stitches between each segment link and its adjacent pivot
  // links (and across the wrap of closed contours).
  auto stitch_pair = [&](const LinkInfo& a, const LinkInfo& b) {
    if ((a.kind == LinkKind::Segment) == (b.kind == LinkKind::Segment)) return;
    out.quads.push_back(watertight_stitch(a.first_rib + a.rib_count - 1, b.first_rib));
  };
  for (std::size_t i = 0; i + 1 < out.links.size(); ++i) {
    if (out.links[i].contour != out.links[i + 1].contour) continue;
    stitch_pair(out.links[i], out.links[i + 1]);
  }
  // Closed contours: stitch the trailing join back to the contour's first link.
  for (std::size_t ci = 0; ci < path.contours.size(); ++ci) {
    if (!path.contours[ci].closed) continue;
    const LinkInfo* first = nullptr;
    const LinkInfo* last = nullptr;
    for (const LinkInfo& link : out.links) {
      if (static_cast<std::size_t>(link.contour) != ci) continue;
      if (!first) first = &link;
      last = &link;
    }
    if (first && last && first != last) stitch_pair(*last, *first);
  }

  accumulate_arc_length(out);
  return out;
}

Tessellation stroke_impl(const Path& path, const TessellationParams& params, bool parallel) {
  params.validate();
  path.validate();
  TessellationParams effective = params;
  effective.width = path.stroke.width > 0.0 ? path.stroke.width : params.width;

  std::vector<LinkJob> jobs = collect_jobs(path, effective);
  std::vector<Tessellation> parts(jobs.size());

#ifdef _OPENMP
  if (parallel && jobs.size() > 1) {
    int threads = stroke_thread_budget();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (long i = 0; i < static_cast<long>(jobs.size()); ++i) {
      parts[i] = run_job(jobs[i], effective);
    }
  } else {
    for (std::size_t i = 0; i < jobs.size(); ++i) parts[i] = run_job(jobs[i], effective);
  }
#else
  (void)parallel;
  for (std::size_t i = 0; i < jobs.size(); ++i) parts[i] = run_job(jobs[i], effective);
#endif

  return assemble(path, jobs, parts);
}

}  // namespace

int stroke_thread_budget() {
  if (const char* env = std::getenv("POLARSTROKE_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

Tessellation stroke_path(const Path& path, const TessellationParams& params) {
  return stroke_impl(path, params, true);
}

Tessellation stroke_path_serial(const Path& path, const TessellationParams& params) {
  return stroke_impl(path, params, false);
}

Tessellation stroke_dashed_path(const Path& path, const TessellationParams& params) {
  if (!path.stroke.dash) {
    return stroke_path(path, params);
  }
  DashResult dashed = dash_path(path, *path.stroke.dash, params);

  Path pieces_path;
  pieces_path.stroke = path.stroke;
  pieces_path.stroke.dash.reset();
  for (const DashPiece& piece : dashed.pieces) {
    if (!piece.on) continue;
    Contour contour;
    if (piece.points.size() < 2) {
      // Dots keep their cap geometry; realize them as a zero-length contour.
      if (!piece.points.empty()) {
        contour.segments.push_back(
            PathSegment::line(piece.points.front().position, piece.points.front().position));
      }
    } else {
      for (std::size_t i = 1; i < piece.points.size(); ++i) {
        if (distance(piece.points[i - 1].position, piece.points[i].position) < 1e-15) continue;
        contour.segments.push_back(
            PathSegment::line(piece.points[i - 1].position, piece.points[i].position));
      }
    }
    if (!contour.segments.empty()) pieces_path.contours.push_back(contour);
  }
  return stroke_path(pieces_path, params);
}

}  // namespace polarstroke
