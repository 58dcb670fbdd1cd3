#include <doctest.h>

#include <cmath>

#include "polarstroke/path_model.hpp"
#include "test_support.hpp"

using namespace polarstroke;
using pstest::near;

TEST_CASE("line evaluation interpolates endpoints") {
  PathSegment seg = PathSegment::line({0, 0}, {10, 0});
  CHECK(near(eval(seg, 0.5), {5, 0}, 1e-15));
  CHECK(near(eval(seg, 0.0), {0, 0}, 0.0));
  CHECK(near(eval(seg, 1.0), {10, 0}, 0.0));
  CHECK(near(gradient(seg, 0.3), {10, 0}, 0.0));
}

TEST_CASE("unit quarter-circle conic evaluates onto the circle") {
  PathSegment seg = pstest::quarter_circle_conic();
  Point2 mid = eval(seg, 0.5);
  CHECK(near(mid, {std::sqrt(0.5), std::sqrt(0.5)}, 1e-12));
  for (double t : {0.1, 0.25, 0.6, 0.9}) {
    CHECK(near(norm(eval(seg, t)), 1.0, 1e-12));
  }
}

TEST_CASE("conic with unit weight equals the quadratic on the same points") {
  Point2 a{0.5, -1}, b{2, 3}, c{4, 0.5};
  PathSegment conic = PathSegment::conic(a, b, c, 1.0);
  PathSegment quad = PathSegment::quadratic(a, b, c);
  for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    CHECK(near(eval(conic, t), eval(quad, t), 1e-12));
    CHECK(near(gradient(conic, t), gradient(quad, t), 1e-12));
  }
}

TEST_CASE("quadratic gradient is the analytic derivative") {
  PathSegment seg = PathSegment::quadratic({0, 0}, {1, 0}, {2, 1});
  CHECK(near(gradient(seg, 0.5), {2, 1}, 1e-15));
}

TEST_CASE("gradient vanishes at an exact cusp") {
  PathSegment seg = PathSegment::cubic({0, 0}, {2, 2}, {0, 2}, {2, 0});
  CHECK(norm(gradient(seg, 0.5)) < 1e-12);
}

TEST_CASE("conic evaluation at an asymptote is an error") {
  PathSegment seg = PathSegment::conic({0, 0}, {1, 0}, {2, 2}, -1.0);
  CHECK_THROWS_AS(eval(seg, 0.5), DegenerateEvaluation);
  CHECK_THROWS_AS(gradient(seg, 0.5), DegenerateEvaluation);
}

TEST_CASE("endpoint gradient fallback cascade") {
  SUBCASE("cubic with colocated leading points falls back to P_C - P_A") {
    PathSegment seg = PathSegment::cubic({0, 0}, {0, 0}, {3, 4}, {5, 5});
    CHECK(near(endpoint_unit_gradient(seg, SegmentEnd::Start), {0.6, 0.8}, 1e-15));
  }
  SUBCASE("negative-weight conic reverses the start tangent") {
    PathSegment seg = PathSegment::conic({0, 0}, {1, 0}, {2, 2}, -1.0);
    CHECK(near(endpoint_unit_gradient(seg, SegmentEnd::Start), {-1, 0}, 1e-15));
  }
  SUBCASE("line start and stop agree") {
    PathSegment seg = PathSegment::line({0, 0}, {10, 0});
    CHECK(near(endpoint_unit_gradient(seg, SegmentEnd::Start), {1, 0}, 1e-15));
    CHECK(near(endpoint_unit_gradient(seg, SegmentEnd::Stop), {1, 0}, 1e-15));
  }
  SUBCASE("zero-weight conic uses the chord") {
    PathSegment seg = PathSegment::conic({0, 0}, {9, 9}, {4, 0}, 0.0);
    CHECK(near(endpoint_unit_gradient(seg, SegmentEnd::Start), {1, 0}, 1e-15));
  }
  SUBCASE("all points colocated is a zero-length segment") {
    PathSegment seg = PathSegment::cubic({1, 1}, {1, 1}, {1, 1}, {1, 1});
    CHECK_THROWS_AS(endpoint_unit_gradient(seg, SegmentEnd::Start), ZeroLengthSegment);
  }
}

TEST_CASE("curvature") {
  SUBCASE("line curvature is zero") {
    PathSegment seg = PathSegment::line({0, 0}, {10, 3});
    CHECK(curvature(seg, 0.3) == 0.0);
  }
  SUBCASE("unit circle has curvature magnitude one") {
    PathSegment seg = pstest::quarter_circle_conic();
    for (double t : {0.1, 0.5, 0.9}) {
      CHECK(near(std::abs(curvature(seg, t)), 1.0, 1e-9));
    }
  }
  SUBCASE("undefined at a cusp") {
    PathSegment seg = PathSegment::cubic({0, 0}, {2, 2}, {0, 2}, {2, 0});
    CHECK_THROWS_AS(curvature(seg, 0.5), UndefinedCurvature);
  }
  SUBCASE("sign flips across a serpentine inflection") {
    PathSegment seg = PathSegment::cubic({-2, 2}, {4, 0}, {2, 1}, {2, -1});
    auto flips = pstest::curvature_sign_flips(seg);
    REQUIRE(flips.size() == 2);
    for (double t : flips) {
      CHECK(curvature(seg, t - 1e-3) * curvature(seg, t + 1e-3) < 0.0);
    }
  }
}

TEST_CASE("gradient agrees with central finite differences") {
  pstest::SuiteRng r(101);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    PathSegment seg;
    switch (trial % 4) {
      case 0: seg = PathSegment::cubic(r.point(4), r.point(4), r.point(4), r.point(4)); break;
      case 1: seg = PathSegment::quadratic(r.point(4), r.point(4), r.point(4)); break;
      case 2: seg = PathSegment::conic(r.point(4), r.point(4), r.point(4), r.uniform(0.3, 2.5)); break;
      case 3: seg = PathSegment::line(r.point(4), r.point(4)); break;
    }
    if (seg.is_zero_length()) continue;
    for (double h : {1e-4, 1e-5}) {
      double t = r.uniform(0.05, 0.95);
      Vec2 g = gradient(seg, t);
      Vec2 fd = (eval(seg, t + h) - eval(seg, t - h)) / (2.0 * h);
      // Second-order accuracy: error <= C h^2 with a generous C for the
      // segment scale.
      CHECK(norm(g - fd) <= 200.0 * h * h + 1e-12);
      ++checked;
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("affine invariance of evaluation") {
  pstest::SuiteRng r(202);
  for (int trial = 0; trial < 50; ++trial) {
    double m00 = r.uniform(-2, 2), m01 = r.uniform(-2, 2);
    double m10 = r.uniform(-2, 2), m11 = r.uniform(-2, 2);
    Vec2 shift = r.point(3);
    if (std::abs(m00 * m11 - m01 * m10) < 0.1) continue;
    auto xf = [&](Point2 p) {
      return Point2{m00 * p.x + m01 * p.y + shift.x, m10 * p.x + m11 * p.y + shift.y};
    };

    Point2 a = r.point(4), b = r.point(4), c = r.point(4);
    double w = r.uniform(-1.5, 2.0);
    PathSegment seg = PathSegment::conic(a, b, c, w);
    PathSegment mapped = PathSegment::conic(xf(a), xf(b), xf(c), w);
    for (double t : {0.2, 0.5, 0.8}) {
      try {
        Point2 direct = xf(eval(seg, t));
        Point2 via = eval(mapped, t);
        CHECK(near(direct, via, 1e-9 * (1.0 + norm(direct))));
      } catch (const DegenerateEvaluation&) {
        // asymptote sample; both sides diverge together
      }
    }

    PathSegment cub = PathSegment::cubic(a, b, c, r.point(4));
    PathSegment cub_mapped = PathSegment::cubic(xf(cub.points[0]), xf(cub.points[1]),
                                                xf(cub.points[2]), xf(cub.points[3]));
    for (double t : {0.25, 0.75}) {
      CHECK(near(xf(eval(cub, t)), eval(cub_mapped, t), 1e-10));
    }
  }
}

TEST_CASE("endpoint gradients are unit length across the suite") {
  for (const PathSegment& seg : pstest::make_suite(303, 200)) {
    if (seg.is_zero_length()) continue;
    for (SegmentEnd end : {SegmentEnd::Start, SegmentEnd::Stop}) {
      try {
        CHECK(near(norm(endpoint_unit_gradient(seg, end)), 1.0, 1e-12));
      } catch (const ZeroLengthSegment&) {
        CHECK(false);  // filtered above
      }
    }
  }
}

TEST_CASE("non-finite control points are rejected at construction") {
  double inf = std::numeric_limits<double>::infinity();
  double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(PathSegment::line({0, 0}, {inf, 0}), ValidationError);
  CHECK_THROWS_AS(PathSegment::cubic({0, nan}, {1, 1}, {2, 2}, {3, 3}), ValidationError);
  CHECK_THROWS_AS(PathSegment::conic({0, 0}, {1, 1}, {2, 2}, nan), ValidationError);
}
