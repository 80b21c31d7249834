#include "navdop/geometry.hpp"

#include <cmath>

namespace navdop::geometry {

void SceneConfig::validate() const {
  if (a_earth <= 0.0 || r_earth < 0.0) throw ValidationError("SceneConfig: bad Earth geometry");
  if (a_earth <= r_earth) throw ValidationError("SceneConfig: a_earth must exceed r_earth");
  if (asteroid_mean_dist <= 0.0) throw ValidationError("SceneConfig: asteroid_mean_dist must be > 0");
}

Vec2 earth_position(const SceneConfig& scene, double t) {
  const double xi = scene.n_earth * t + scene.xi0;
  return scene.a_earth * Vec2(std::cos(xi), std::sin(xi));
}

Vec2 station_position(const SceneConfig& scene, std::size_t i, double t) {
  if (i >= scene.station_phases.size())
    throw ValidationError("station_position: station index out of range");
  const double phi = scene.omega_earth * t + scene.station_phases[i];
  return scene.r_earth * Vec2(std::cos(phi), std::sin(phi)) + earth_position(scene, t);
}

PointingAngle pointing_angle(const Vec2& spacecraft_r, const Vec2& asteroid_r) {
  const Vec2 d = asteroid_r - spacecraft_r;
  const double dn = d.norm();
  if (dn <= 1e-15 * (spacecraft_r.norm() + asteroid_r.norm() + 1e-300))
    throw ValidationError("pointing_angle: coincident spacecraft and asteroid");
  return PointingAngle{std::atan2(d(1), d(0))};
}

double slant_range(const Vec2& spacecraft_r, const Vec2& station_r) {
  return (spacecraft_r - station_r).norm();
}

double station_rise_phase(const SceneConfig& scene, double a, double xi0) {
  const double ae = scene.a_earth;
  const double d2 = ae * ae + a * a - 2.0 * ae * a * std::cos(xi0);
  if (d2 <= 1e-24) throw ValidationError("station_rise_phase: degenerate Earth-spacecraft triangle");
  const double d = std::sqrt(d2);
  const double sin_phi = -(a - ae * std::cos(xi0)) / d;
  const double cos_phi = -(ae * std::sin(xi0)) / d;
  return std::atan2(sin_phi, cos_phi);
}

double rise_angle_correction(const SceneConfig& scene, double a, double xi) {
  const double ae = scene.a_earth;
  const double d2 = ae * ae + a * a - 2.0 * ae * a * std::cos(xi);
  if (d2 <= 1e-24) throw ValidationError("rise_angle_correction: degenerate geometry");
  return scene.r_earth / std::sqrt(d2);
}

std::vector<StationInterval> range_timeline(int p, double T) {
  if (p < 1) throw ValidationError("range_timeline: p must be >= 1");
  std::vector<StationInterval> out;
  out.reserve(2 * static_cast<std::size_t>(p));
  for (int j = 1; j <= p; ++j) {
    const double base = (j - 1) * T;
    out.push_back({0, base, base + 0.5 * T});
    out.push_back({1, base + 0.5 * T, base + T});
  }
  return out;
}

}  // namespace navdop::geometry
