#pragma once

#include "navdop/catalog.hpp"
#include "navdop/geometry.hpp"
#include "navdop/kinematics.hpp"
#include "navdop/types.hpp"

namespace navdop::meas {

enum class MeasKind { optical, pulsar, range };
enum class StmMode { exact, jet };

// Sensitivity of one scalar measurement to the initial rescaled state.
struct MeasGradient {
  Vec4 h = Vec4::Zero();
  MeasKind kind = MeasKind::optical;
  double t = 0.0;  // epoch [day]
};

// Continuous scan schedules: one full revolution per canonical period.
inline double alpha_at(double alpha0, double t, double T = 1.0) {
  return alpha0 + constants::kTwoPi * t / T;
}
inline double beta_at(double beta0, double t, double T = 1.0) {
  return beta0 + constants::kTwoPi * t / T;
}

// Pointing-angle gradient h_gamma = (1/dr_A) [-sin g, cos g] [Phi_rr : Phi_rdr].
// Exact mode evaluates the geometry on the propagated orbit with the exact
// STM; jet mode returns the zeroth-plus-first-order expansion.
MeasGradient optical_gradient(const kinematics::OrbitConfig& orbit,
                              const geometry::SceneConfig& scene, double alpha, double t,
                              StmMode mode);

struct OpticalNoise {
  double sigma_s_bar = 0.0;         // combined sample uncertainty [pixel]
  double ephemeris_term_rad = 0.0;  // angular contribution of the beacon location error
  double distance_factor_km = 0.0;  // Theta * sigma_s_bar * a [km]
};

// Folds the beacon location error sigma_A [km] into the pixel noise.
OpticalNoise optical_noise(const catalog::CameraSpec& camera, double a_au, double a_asteroid_au,
                           double sigma_asteroid_km);

// Aggregate optical uncertainty over p*n_gamma images [km].
double optical_aggregate_sigma(double theta_urad, double sigma_s_bar, double a_au, int p,
                               int n_gamma);

// TOA gradient: jet mode is h = [cos b, sin b, (t/T) cos b, (t/T) sin b].
MeasGradient pulsar_gradient(const kinematics::OrbitConfig& orbit, double beta, double t,
                             StmMode mode);

// Empirical per-TOA uncertainty s_tau / sqrt(A h), result [km].
double pulsar_sigma(double s_tau, double area_cm2, double h_tau_hr);

// Effective uncertainty over a period T_hr including considered location
// errors: sqrt(s^2/(A T) + (a sigma_beta)^2 / n_tau^2), result [km].
double pulsar_effective_sigma(double s_tau_mean, double area_cm2, double T_hr, double a_km,
                              double sigma_beta_rad, int n_tau);

// Bound on the TOA error from a source location error: a * sigma_beta [km].
double pulsar_location_error_bound(double a_km, double sigma_beta_rad);

// Slant-range gradient using the second-order STM blocks.
MeasGradient range_gradient(const kinematics::OrbitConfig& orbit,
                            const geometry::SceneConfig& scene, std::size_t station_i, double t);

// Range noise s_rho * rho0 / sqrt(h) with rho0 [km], h [hr], result [km].
double range_sigma(double rho0_km, double h_rho_hr);

}  // namespace navdop::meas
