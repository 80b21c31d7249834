#pragma once

#include <optional>
#include <string>
#include <vector>

#include "navdop/types.hpp"

namespace navdop::catalog {

// One pulsar row. Absent columns stay absent; operations that need them
// fail loudly instead of defaulting to zero.
struct PulsarEntry {
  std::string name;
  double ra_deg = 0.0;   // J2000 ecliptic right ascension
  double dec_deg = 0.0;  // J2000 ecliptic declination
  std::optional<double> s_tau;       // stability figure [km cm sqrt(hr)]
  std::optional<double> sigma_beta;  // location uncertainty [mas]
  bool sextant = false;
};

struct CameraSpec {
  std::string name;
  double fov_deg = 0.0;
  double theta_urad = 0.0;     // IFOV of one pixel [urad]
  double m_max = 0.0;          // limiting apparent magnitude
  double alpha_min_deg = 0.0;  // Sun keep-out
  double sigma_s = 0.0;        // sample uncertainty [pixel]
};

// Built-in 15-row pulsar catalog.
const std::vector<PulsarEntry>& builtin_pulsars();

// Camera tiers: low-end, mid-level, high-end.
const std::vector<CameraSpec>& builtin_cameras();

const CameraSpec& camera_by_name(const std::string& name);

struct SelectionStats {
  double mean_s_tau = 0.0;       // [km cm sqrt(hr)]
  double mean_sigma_beta = 0.0;  // [mas]
  std::size_t count = 0;
};

// Arithmetic means over a selection; throws if any entry lacks a field.
SelectionStats selection_stats(const std::vector<PulsarEntry>& selection);

// Named selections used throughout: all SEXTANT rows, and the four-quadrant
// "best 4" set {J0437-4715, B0833-45, B1821-24, B1937+21}.
std::vector<PulsarEntry> sextant_selection();
std::vector<PulsarEntry> best4_selection();

// Distance-only apparent magnitude: M = H + 5 log10(r_helio * delta_obs),
// distances in AU. No phase-angle correction.
double apparent_magnitude(double absolute_magnitude, double r_helio_au, double delta_obs_au);

// Linear absolute-magnitude fit H(a_A) for outer-solar-system beacons.
// The default coefficients are calibrated (not from any published fit) so
// that a spacecraft at 30 AU sees M < 26 exactly for a_A > 43 AU at the
// far-side observation distance.
struct KboMagnitudeFit {
  double slope = -0.15;          // [mag/AU]
  double intercept = 14.96579;   // [mag]
  double h(double a_asteroid_au) const { return intercept + slope * a_asteroid_au; }
};

// Screening predicate: worst-case (far side) apparent magnitude under the
// fit is below the detection limit.
bool kbo_detectable(const KboMagnitudeFit& fit, double a_spacecraft_au, double a_asteroid_au,
                    double limit_magnitude);

// Catalog override file: one CSV record per line,
//   name,ra_deg,dec_deg,s_tau,sigma_beta_mas,sextant
// with s_tau / sigma_beta_mas allowed empty. '#' starts a comment line.
std::vector<PulsarEntry> parse_pulsar_csv(const std::string& text);
std::string serialize_pulsar_csv(const std::vector<PulsarEntry>& entries);

// Camera override: name,fov_deg,theta_urad,m_max,alpha_min_deg,sigma_s
std::vector<CameraSpec> parse_camera_csv(const std::string& text);
std::string serialize_camera_csv(const std::vector<CameraSpec>& cameras);

// Pulsar catalog honoring the NAVDOP_CATALOG override path when set.
std::vector<PulsarEntry> load_pulsars_with_env_override();

}  // namespace navdop::catalog
