#pragma once

#include <cmath>

namespace polarstroke {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

// Squared norms below this count as zero length. Guards the endpoint-gradient
// fallback cascade and every normalization in the library.
inline constexpr double kZeroLengthSq = 1e-24;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

using Point2 = Vec2;
using Vector2 = Vec2;

// Tangent/normal angles are plain radians kept in (-pi, pi] by wrap_angle.
using Angle = double;

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {s * a.x, s * a.y}; }
inline Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
inline Vec2& operator+=(Vec2& a, Vec2 b) { a = a + b; return a; }
inline Vec2& operator-=(Vec2& a, Vec2 b) { a = a - b; return a; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm_sq(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(norm_sq(a)); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }

inline bool is_zero_length(Vec2 a) { return norm_sq(a) < kZeroLengthSq; }

inline Vec2 normalized(Vec2 a) {
  double n = norm(a);
  return {a.x / n, a.y / n};
}

/// 90 degree counterclockwise rotation.
inline Vec2 perp(Vec2 a) { return {-a.y, a.x}; }

inline bool is_finite(Vec2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Unit vector pointing at angle `a`.
inline Vec2 unit_vector(Angle a) { return {std::cos(a), std::sin(a)}; }

inline Angle angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

/// Normalizes an angle into (-pi, pi].
inline Angle wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a <= -kPi) {
    a += kTwoPi;
  } else if (a > kPi) {
    a -= kTwoPi;
  }
  return a;
}

/// Shortest signed angular difference a - b, in [-pi, pi].
inline double angle_diff(Angle a, Angle b) { return wrap_angle(a - b); }

/// Wrapped angle addition.
inline Angle angle_add(Angle a, double delta) { return wrap_angle(a + delta); }

/// Stroke-rib unit normal for tangent angle psi: the tangent rotated +90 degrees.
inline Vec2 normal_from_tangent_angle(Angle psi) { return {-std::sin(psi), std::cos(psi)}; }

}  // namespace polarstroke
