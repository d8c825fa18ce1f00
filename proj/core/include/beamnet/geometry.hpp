#ifndef BEAMNET_GEOMETRY_HPP
#define BEAMNET_GEOMETRY_HPP

#include <cmath>
#include <numbers>
#include <vector>

namespace beamnet {

inline constexpr double kTau = 2.0 * std::numbers::pi_v<double>;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend Vec2 operator/(Vec2 a, double s) { return {a.x / s, a.y / s}; }
  friend bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double squared_distance(Vec2 a, Vec2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

inline double distance(Vec2 a, Vec2 b) { return std::sqrt(squared_distance(a, b)); }

/// Angle of the ray from `from` to `to`, normalized to [0, tau).
inline double azimuth_of(Vec2 from, Vec2 to) {
  double a = std::atan2(to.y - from.y, to.x - from.x);
  if (a < 0.0) a += kTau;
  return a;
}

/// Magnitude of the circular difference between two angles, in [0, pi].
inline double angular_distance(double a, double b) {
  double d = std::fmod(a - b, kTau);
  if (d < 0.0) d += kTau;
  return d > kTau / 2.0 ? kTau - d : d;
}

/// Closed-sector membership test: within range of the origin and within
/// width/2 of the beam azimuth. A width of tau covers every direction.
inline bool sector_contains(Vec2 origin, double azimuth, double width, double range, Vec2 p) {
  if (squared_distance(origin, p) > range * range) return false;
  if (width >= kTau) return true;
  if (p == origin) return true;
  return angular_distance(azimuth_of(origin, p), azimuth) <= width / 2.0;
}

/// Convex hull (monotone chain), counter-clockwise, no duplicate endpoint.
/// Collinear boundary points are dropped. Degenerate inputs (<3 distinct
/// points) return what is left after deduplication.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

/// True when p lies inside or on the hull of `points`, with `slack` of
/// tolerance on the boundary orientation tests.
bool point_in_convex_hull(Vec2 p, const std::vector<Vec2>& points, double slack = 1e-12);

}  // namespace beamnet

#endif  // BEAMNET_GEOMETRY_HPP
