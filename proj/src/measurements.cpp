#include "navdop/measurements.hpp"

#include <cmath>

namespace navdop::meas {

using kinematics::OrbitConfig;
using geometry::SceneConfig;

MeasGradient optical_gradient(const OrbitConfig& orbit, const SceneConfig& scene, double alpha,
                              double t, StmMode mode) {
  MeasGradient g;
  g.kind = MeasKind::optical;
  g.t = t;

  const double a = orbit.a;
  const double aA = scene.asteroid_mean_dist;
  const Vec2 asteroid = aA * Vec2(std::cos(alpha), std::sin(alpha));

  if (mode == StmMode::exact) {
    const auto st = kinematics::circular_state(orbit, t);
    const Vec2 d = asteroid - st.r;
    const double dn = d.norm();
    if (dn <= 1e-12 * (a + aA))
      throw ValidationError("optical_gradient: asteroid coincident with spacecraft");
    const double gamma = std::atan2(d(1), d(0));
    const Eigen::RowVector2d w(-std::sin(gamma) / dn, std::cos(gamma) / dn);
    const auto phi = kinematics::stm_exact(orbit, t);
    g.h.head<2>() = (w * phi.rr()).transpose();
    g.h.tail<2>() = (w * phi.rdr()).transpose();
    return g;
  }

  // Zeroth- plus first-order expansion about theta = 0.
  const double sa = std::sin(alpha), ca = std::cos(alpha);
  const double dr0_sq = a * a + aA * aA - 2.0 * a * aA * ca;
  if (dr0_sq <= 1e-24) throw ValidationError("optical_gradient: degenerate geometry");
  const double tT = t / orbit.T;

  Vec4 h0;
  h0 << -aA * sa, aA * ca - a, -tT * aA * sa, tT * (aA * ca - a);
  h0 /= dr0_sq;

  const double quad = a * a - 2.0 * a * aA * ca + aA * aA * std::cos(2.0 * alpha);
  Vec4 h1;
  h1 << orbit.n * t * quad, 2.0 * aA * orbit.n * t * (aA * ca - a) * sa,
      orbit.n * t * t / orbit.T * quad, 2.0 * aA * orbit.n * (t * t / orbit.T) * (aA * ca - a) * sa;
  h1 *= a / (dr0_sq * dr0_sq);

  g.h = h0 + h1;
  return g;
}

OpticalNoise optical_noise(const catalog::CameraSpec& camera, double a_au, double a_asteroid_au,
                           double sigma_asteroid_km) {
  if (a_asteroid_au == a_au)
    throw ValidationError("optical_noise: a_asteroid == a gives singular amplification");
  if (sigma_asteroid_km < 0.0) throw ValidationError("optical_noise: sigma_asteroid < 0");
  const double theta_rad = camera.theta_urad * 1e-6;
  const double sigma_alpha = sigma_asteroid_km / (a_asteroid_au * constants::kAuKm);
  const double amplification = std::abs(a_asteroid_au / (a_asteroid_au - a_au));
  OpticalNoise n;
  n.ephemeris_term_rad = amplification * sigma_alpha;
  n.sigma_s_bar = std::sqrt(camera.sigma_s * camera.sigma_s +
                            (n.ephemeris_term_rad / theta_rad) * (n.ephemeris_term_rad / theta_rad));
  n.distance_factor_km = theta_rad * n.sigma_s_bar * a_au * constants::kAuKm;
  return n;
}

double optical_aggregate_sigma(double theta_urad, double sigma_s_bar, double a_au, int p,
                               int n_gamma) {
  if (p < 1 || n_gamma < 1) throw ValidationError("optical_aggregate_sigma: p*n_gamma must be >= 1");
  return theta_urad * 1e-6 * sigma_s_bar * a_au * constants::kAuKm /
         std::sqrt(static_cast<double>(p) * n_gamma);
}

MeasGradient pulsar_gradient(const OrbitConfig& orbit, double beta, double t, StmMode mode) {
  MeasGradient g;
  g.kind = MeasKind::pulsar;
  g.t = t;
  const Eigen::RowVector2d n_hat(std::cos(beta), std::sin(beta));
  if (mode == StmMode::jet) {
    const double tT = t / orbit.T;
    g.h << n_hat(0), n_hat(1), tT * n_hat(0), tT * n_hat(1);
    return g;
  }
  const auto phi = kinematics::stm_exact(orbit, t);
  g.h.head<2>() = (n_hat * phi.rr()).transpose();
  g.h.tail<2>() = (n_hat * phi.rdr()).transpose();
  return g;
}

double pulsar_sigma(double s_tau, double area_cm2, double h_tau_hr) {
  if (area_cm2 <= 0.0 || h_tau_hr <= 0.0)
    throw ValidationError("pulsar_sigma: area and integration time must be > 0");
  return s_tau / std::sqrt(area_cm2 * h_tau_hr);
}

double pulsar_effective_sigma(double s_tau_mean, double area_cm2, double T_hr, double a_km,
                              double sigma_beta_rad, int n_tau) {
  if (n_tau < 1) throw ValidationError("pulsar_effective_sigma: n_tau must be >= 1");
  const double noise_var = s_tau_mean * s_tau_mean / (area_cm2 * T_hr);
  const double loc = a_km * sigma_beta_rad / n_tau;
  return std::sqrt(noise_var + loc * loc);
}

double pulsar_location_error_bound(double a_km, double sigma_beta_rad) {
  return a_km * sigma_beta_rad;
}

MeasGradient range_gradient(const OrbitConfig& orbit, const SceneConfig& scene,
                            std::size_t station_i, double t) {
  const auto st = kinematics::circular_state(orbit, t);
  const Vec2 station = geometry::station_position(scene, station_i, t);
  const Vec2 d = st.r - station;
  const double rho = d.norm();
  if (rho <= 1e-12 * (orbit.a + scene.a_earth))
    throw ValidationError("range_gradient: spacecraft coincident with station");
  const Vec2 u = d / rho;

  const double n = orbit.n, T = orbit.T;
  const double n2t2 = n * n * t * t;
  MeasGradient g;
  g.kind = MeasKind::range;
  g.t = t;
  g.h << u(0) * (1.0 + n2t2), u(1) * (1.0 - 0.5 * n2t2), u(0) * (t / T + n2t2 * t / (3.0 * T)),
      u(1) * (t / T - n2t2 * t / (6.0 * T));
  return g;
}

double range_sigma(double rho0_km, double h_rho_hr) {
  if (h_rho_hr <= 0.0) throw ValidationError("range_sigma: integration time must be > 0");
  return constants::kRangeNoiseSqrtHr * rho0_km / std::sqrt(h_rho_hr);
}

}  // namespace navdop::meas
