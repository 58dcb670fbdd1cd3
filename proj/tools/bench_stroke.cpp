// Times the serial reference stroker against the OpenMP pipeline on a large
// synthetic path and verifies they produce identical output.

#include <chrono>
#include <cstdio>
#include <random>

#include "polarstroke/stroker.hpp"

namespace ps = polarstroke;

namespace {

ps::Path make_benchmark_path(int segments) {
  std::mt19937_64 rng(12345);
  std::uniform_real_distribution<double> jitter(-1.2, 1.2);

  ps::Path path;
  path.stroke.width = 0.4;
  path.stroke.join.kind = ps::JoinKind::Round;
  path.stroke.cap = ps::CapKind::Round;

  ps::Contour contour;
  ps::Point2 at{0.0, 0.0};
  for (int i = 0; i < segments; ++i) {
    ps::Point2 to{at.x + 2.0 + jitter(rng) * 0.3, at.y + jitter(rng)};
    switch (i % 4) {
      case 0: {
        ps::Point2 c1{at.x + 0.7, at.y + jitter(rng)};
        ps::Point2 c2{to.x - 0.7, to.y + jitter(rng)};
        contour.segments.push_back(ps::PathSegment::cubic(at, c1, c2, to));
        break;
      }
      case 1: {
        ps::Point2 c{0.5 * (at.x + to.x), at.y + jitter(rng)};
        contour.segments.push_back(ps::PathSegment::quadratic(at, c, to));
        break;
      }
      case 2: {
        ps::Point2 c{0.5 * (at.x + to.x), at.y + 1.0 + 0.2 * jitter(rng)};
        contour.segments.push_back(ps::PathSegment::conic(at, c, to, 0.7 + 0.2 * jitter(rng)));
        break;
      }
      case 3:
        contour.segments.push_back(ps::PathSegment::line(at, to));
        break;
    }
    at = to;
  }
  path.contours.push_back(contour);
  return path;
}

bool identical(const ps::Tessellation& a, const ps::Tessellation& b) {
  if (a.ribs.size() != b.ribs.size() || a.quads.size() != b.quads.size()) return false;
  for (std::size_t i = 0; i < a.ribs.size(); ++i) {
    if (a.ribs[i].position.x != b.ribs[i].position.x ||
        a.ribs[i].position.y != b.ribs[i].position.y || a.ribs[i].psi != b.ribs[i].psi ||
        a.ribs[i].cum_length != b.ribs[i].cum_length) {
      return false;
    }
  }
  return true;
}

template <typename F>
double best_of(F&& fn, int reps) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int segments = argc > 1 ? std::atoi(argv[1]) : 4000;
  int reps = argc > 2 ? std::atoi(argv[2]) : 5;

  ps::Path path = make_benchmark_path(segments);
  ps::TessellationParams params;
  params.q = 1.0 * ps::kPi / 180.0;
  params.width = path.stroke.width;

  ps::Tessellation serial_out = ps::stroke_path_serial(path, params);
  ps::Tessellation parallel_out = ps::stroke_path(path, params);
  if (!identical(serial_out, parallel_out)) {
    std::fprintf(stderr, "FAIL: serial and parallel outputs differ\n");
    return 1;
  }

  double t_serial = best_of([&] { ps::stroke_path_serial(path, params); }, reps);
  double t_parallel = best_of([&] { ps::stroke_path(path, params); }, reps);

  std::printf("segments:        %d\n", segments);
  std::printf("ribs:            %zu\n", serial_out.ribs.size());
  std::printf("quads:           %zu\n", serial_out.quads.size());
  std::printf("threads:         %d\n", ps::stroke_thread_budget());
  std::printf("serial:          %8.2f ms\n", t_serial);
  std::printf("parallel:        %8.2f ms\n", t_parallel);
  std::printf("speedup:         %8.2fx\n", t_serial / t_parallel);
  std::printf("outputs match:   yes\n");
  return 0;
}
