#pragma once

#include <utility>
#include <vector>

#include "navdop/types.hpp"

namespace navdop::geometry {

// Earth, tracking-station, and beacon geometry shared by the scenarios.
struct SceneConfig {
  double a_earth = 1.0;                                      // [AU]
  double n_earth = constants::kEarthMeanMotionRadDay;        // [rad/day]
  double xi0 = 0.0;                                          // initial Earth angle [rad]
  double r_earth = constants::kEarthRadiusKm / constants::kAuKm;  // Earth radius [AU]
  double omega_earth = constants::kEarthRotationRadDay;      // [rad/day]
  std::vector<double> station_phases;                        // phi_{i,0} [rad]
  double asteroid_mean_dist = 2.7;                           // <a_A> [AU]
  bool sun_keepout = false;                                  // off in all baseline scenarios

  void validate() const;
};

struct PointingAngle {
  double gamma = 0.0;  // camera boresight vs inertial x-axis [rad]
};

Vec2 earth_position(const SceneConfig& scene, double t);

// Station i on the (zero-latitude) Earth rim; throws on a bad index.
Vec2 station_position(const SceneConfig& scene, std::size_t i, double t);

// Boresight angle of the spacecraft->asteroid line of sight.
PointingAngle pointing_angle(const Vec2& spacecraft_r, const Vec2& asteroid_r);

double slant_range(const Vec2& spacecraft_r, const Vec2& station_r);

// First station angle at rise for Earth angle xi0 (zeroth-order rise/set
// geometry; the pass central angle is pi).
double station_rise_phase(const SceneConfig& scene, double a_spacecraft, double xi0);

// O(epsilon) correction to the rise central angle gamma_R = pi/2 - corr.
// Computed for diagnostics; pass boundaries use the zeroth order.
double rise_angle_correction(const SceneConfig& scene, double a_spacecraft, double xi);

struct StationInterval {
  std::size_t station;
  double start;  // [day]
  double end;    // [day]
};

// Alternating 12-hour pass timeline: station 0 on [(j-1), (j-1)+1/2]*T,
// station 1 on [(j-1)+1/2, j]*T, j = 1..p. Boundary samples belong to the
// later station.
std::vector<StationInterval> range_timeline(int p, double T = 1.0);

}  // namespace navdop::geometry
