#include <doctest.h>

#include <cmath>

#include "polarstroke/arc_dash.hpp"
#include "polarstroke/path.hpp"
#include "polarstroke/stroker.hpp"
#include "test_support.hpp"

using namespace polarstroke;
using pstest::near;

namespace {

TessellationParams params_deg(double q_deg, double width) {
  TessellationParams p;
  p.q = q_deg * kPi / 180.0;
  p.width = width;
  return p;
}

Path single_segment_path(const PathSegment& seg, CapKind cap = CapKind::None) {
  Path path;
  Contour contour;
  contour.segments.push_back(seg);
  path.contours.push_back(contour);
  path.stroke.cap = cap;
  return path;
}

double quarter_circle_length(double q_deg) {
  Path path = single_segment_path(pstest::quarter_circle_conic());
  Tessellation tess = stroke_path_serial(path, params_deg(q_deg, 0.1));
  ArcLengthTable table = accumulate_arc_length(tess);
  return table.total;
}

}  // namespace

TEST_CASE("line arc length is exact") {
  Path path = single_segment_path(PathSegment::line({0, 0}, {10, 0}));
  Tessellation tess = stroke_path_serial(path, params_deg(4, 1));
  ArcLengthTable table = accumulate_arc_length(tess);
  CHECK(near(table.total, 10.0, 1e-12));
}

TEST_CASE("quarter circle length underestimates and converges") {
  double quarter = kPi / 2.0;
  double len4 = quarter_circle_length(4.0);
  double len1 = quarter_circle_length(1.0);

  CHECK(len4 < quarter);
  CHECK(len1 < quarter);
  CHECK((quarter - len4) / quarter <= 2.6e-4);
  CHECK((quarter - len1) / quarter <= 1.7e-5);
  CHECK(len1 >= quarter * (1.0 - 2e-5));

  // Halving q from 4 to 2 degrees shrinks the deficit by at least 3.5x.
  double len2 = quarter_circle_length(2.0);
  CHECK((quarter - len4) / (quarter - len2) >= 3.5);
}

TEST_CASE("cusp pivot ribs add no length") {
  PathSegment cusp = PathSegment::cubic({0, 0}, {2, 2}, {0, 2}, {2, 0});
  Path path = single_segment_path(cusp);
  Tessellation tess = stroke_path_serial(path, params_deg(4, 0.5));
  ArcLengthTable table = accumulate_arc_length(tess);
  // Coincident pivot ribs: cumulative length is flat across the run.
  int flat_runs = 0;
  for (std::size_t i = 1; i < tess.ribs.size(); ++i) {
    if (distance(tess.ribs[i].position, tess.ribs[i - 1].position) < 1e-12 &&
        tess.ribs[i].cum_length == tess.ribs[i - 1].cum_length) {
      ++flat_runs;
    }
  }
  CHECK(flat_runs >= 45);
  CHECK(table.total > 0.0);
}

TEST_CASE("texture coordinates pair arc length with side") {
  Path path = single_segment_path(PathSegment::line({0, 0}, {10, 0}));
  Tessellation tess = stroke_path_serial(path, params_deg(4, 1));
  ArcLengthTable table = accumulate_arc_length(tess);
  auto coords = texture_coords(tess, table);
  REQUIRE(coords.size() == tess.ribs.size() * 2);
  CHECK(coords[0].s == 0.0);
  CHECK(coords[0].u == 0.0);
  CHECK(coords[1].u == 1.0);
  CHECK(coords[coords.size() - 1].s == 10.0);
  // Both vertices of a rib share s; s is nondecreasing in rib order.
  for (std::size_t i = 0; i < tess.ribs.size(); ++i) {
    CHECK(coords[2 * i].s == coords[2 * i + 1].s);
    if (i > 0) CHECK(coords[2 * i].s >= coords[2 * (i - 1)].s);
  }
}

TEST_CASE("dash pattern validation") {
  DashPattern empty;
  CHECK_THROWS_AS(empty.validate(), EmptyPattern);
  DashPattern zeros{{0.0, 0.0}, 0.0};
  CHECK_THROWS_AS(zeros.validate(), EmptyPattern);
  DashPattern negative{{1.0, -1.0}, 0.0};
  CHECK_THROWS_AS(negative.validate(), ValidationError);
  DashPattern ok{{1.0, 1.0}, 0.0};
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("line dashed [1,1] yields five unit on-pieces") {
  Path path = single_segment_path(PathSegment::line({0, 0}, {10, 0}));
  DashResult result = dash_path(path, {{1.0, 1.0}, 0.0}, params_deg(4, 1));

  std::vector<const DashPiece*> on;
  for (const DashPiece& piece : result.pieces) {
    if (piece.on && piece.length > 0.0) on.push_back(&piece);
  }
  REQUIRE(on.size() == 5);
  for (std::size_t i = 0; i < on.size(); ++i) {
    CHECK(near(on[i]->length, 1.0, 1e-12));
    CHECK(near(on[i]->points.front().position.x, 2.0 * i, 1e-12));
    CHECK(near(on[i]->points.back().position.x, 2.0 * i + 1.0, 1e-12));
  }
  CHECK(near(result.total_length, 10.0, 1e-12));
}

TEST_CASE("pattern [6,2] on a length-16 line") {
  Path path = single_segment_path(PathSegment::line({0, 0}, {16, 0}));
  DashResult result = dash_path(path, {{6.0, 2.0}, 0.0}, params_deg(4, 1));
  std::vector<std::pair<double, double>> on;
  for (const DashPiece& piece : result.pieces) {
    if (piece.on && piece.length > 0.0) {
      on.push_back({piece.points.front().position.x, piece.points.back().position.x});
    }
  }
  REQUIRE(on.size() == 2);
  CHECK(near(on[0].first, 0.0, 1e-12));
  CHECK(near(on[0].second, 6.0, 1e-12));
  CHECK(near(on[1].first, 8.0, 1e-12));
  CHECK(near(on[1].second, 14.0, 1e-12));
}

TEST_CASE("quarter circle splits at the 45 degree point") {
  Path path = single_segment_path(pstest::quarter_circle_conic());
  DashResult result = dash_path(path, {{kPi / 4.0}, 0.0}, params_deg(0.5, 1));
  // Odd pattern doubles: on pi/4, off pi/4 -> exactly one on and one off.
  std::vector<const DashPiece*> pieces;
  for (const DashPiece& piece : result.pieces) pieces.push_back(&piece);
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0]->on);
  CHECK(!pieces[1]->on);
  Point2 split = pieces[0]->points.back().position;
  Point2 expect{std::sqrt(0.5), std::sqrt(0.5)};
  CHECK(distance(split, expect) <= 1e-4);  // O(q^2) chordal split error
}

TEST_CASE("dash conservation and phase equivariance over randomized paths") {
  pstest::SuiteRng r(909);
  TessellationParams params = params_deg(4, 0.5);
  for (int trial = 0; trial < 100; ++trial) {
    Path path;
    Contour contour;
    Point2 at = r.point(3);
    int segs = 1 + static_cast<int>(r.rng() % 3);
    for (int i = 0; i < segs; ++i) {
      Point2 to = at + Vec2{r.uniform(0.5, 2.0), r.uniform(-1.0, 1.0)};
      switch (r.rng() % 3) {
        case 0:
          contour.segments.push_back(PathSegment::line(at, to));
          break;
        case 1:
          contour.segments.push_back(
              PathSegment::quadratic(at, at + Vec2{r.uniform(0, 1), r.uniform(-1, 1)}, to));
          break;
        default:
          contour.segments.push_back(PathSegment::cubic(
              at, at + Vec2{r.uniform(0, 1), r.uniform(-1, 1)},
              to - Vec2{r.uniform(0, 1), r.uniform(-1, 1)}, to));
          break;
      }
      at = to;
    }
    path.contours.push_back(contour);

    DashPattern pattern;
    int entries = 1 + static_cast<int>(r.rng() % 4);
    for (int i = 0; i < entries; ++i) pattern.lengths.push_back(r.uniform(0.05, 1.2));
    pattern.offset = r.uniform(-3.0, 3.0);

    DashResult dashed = dash_path(path, pattern, params);
    double pieces_total = 0.0;
    for (const DashPiece& piece : dashed.pieces) pieces_total += piece.length;
    CHECK(near(pieces_total, dashed.total_length, 1e-9 * std::max(1.0, dashed.total_length)));

    // Shifting the offset by a full cycle reproduces the pieces.
    DashPattern shifted = pattern;
    shifted.offset += pattern.cycle_length();
    DashResult dashed2 = dash_path(path, shifted, params);
    REQUIRE(dashed.pieces.size() == dashed2.pieces.size());
    for (std::size_t i = 0; i < dashed.pieces.size(); ++i) {
      CHECK(dashed.pieces[i].on == dashed2.pieces[i].on);
      CHECK(near(dashed.pieces[i].length, dashed2.pieces[i].length, 1e-9));
    }
  }
}

TEST_CASE("zero-length on-pieces become dots only with area-bearing caps") {
  Path path = single_segment_path(PathSegment::line({0, 0}, {4, 0}), CapKind::Round);
  // Boundary exactly at s=2 with a zero-length on entry there.
  DashResult with_dots = dash_path(path, {{2.0, 0.0, 0.0, 2.0}, 0.0}, params_deg(4, 1));
  int dots = 0;
  for (const DashPiece& piece : with_dots.pieces) {
    if (piece.on && piece.points.size() == 1) ++dots;
  }
  CHECK(dots == 1);

  path.stroke.cap = CapKind::None;
  DashResult without = dash_path(path, {{2.0, 0.0, 0.0, 2.0}, 0.0}, params_deg(4, 1));
  for (const DashPiece& piece : without.pieces) {
    CHECK(piece.points.size() >= 2);
  }
}
