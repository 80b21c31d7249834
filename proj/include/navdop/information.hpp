#pragma once

#include <array>
#include <vector>

#include "navdop/geometry.hpp"
#include "navdop/kinematics.hpp"
#include "navdop/measurements.hpp"
#include "navdop/types.hpp"

namespace navdop::info {

// Symmetric 4x4 aggregate Fisher information, units 1/km^2 after the
// measurement sigmas have been folded in.
struct InfoMatrix4 {
  Mat4 m = Mat4::Zero();

  Mat2 rr() const { return m.block<2, 2>(0, 0); }
  Mat2 rdr() const { return m.block<2, 2>(0, 2); }
  Mat2 drdr() const { return m.block<2, 2>(2, 2); }

  void symmetrize() { m = 0.5 * (m + m.transpose()).eval(); }
};

struct DilutionResult {
  Mat2 g_rr = Mat2::Zero();  // average position dilution matrix [dimensionless]
  double pdop = 0.0;
  double sigma_xx_km = 0.0;
  double sigma_yy_km = 0.0;
  double rho_xy = 0.0;
  double sigma_agg_km = 0.0;
};

struct Spectrum {
  std::array<double, 4> eigenvalues{};  // ascending
  double condition_number = 0.0;        // lambda_max / lambda_min, signed
};

// Sum of h (x) h / sigma^2 over a discrete schedule, symmetrized.
InfoMatrix4 accumulate_discrete(const std::vector<meas::MeasGradient>& gradients,
                                const std::vector<double>& sigmas_km);

// Continuous full-scan optical information over p days, aggregate noise
// sigma_agg [km]. Quadrature tolerance 1e-9.
InfoMatrix4 integrate_optical_info(const kinematics::OrbitConfig& orbit,
                                   const geometry::SceneConfig& scene, double alpha0, int p,
                                   double sigma_agg_km);

// Closed-form position block of the full-scan optical information; both
// distance branches. a_bar = <a_A>/a.
Mat2 optical_info_rr_closed_form(double a_au, double a_asteroid_au, int p, double sigma_agg_km);

// Closed-form pulsar full-scan information blocks for integer p.
InfoMatrix4 pulsar_info_closed_form(int p, double beta0, double sigma_km);

// Quadrature counterpart of the pulsar closed form (oracle route).
InfoMatrix4 integrate_pulsar_info(const kinematics::OrbitConfig& orbit, double beta0, int p,
                                  double sigma_km);

// Two-station range information over the alternating-pass timeline,
// sigma_pT [km]. Quadrature tolerance 1e-7.
InfoMatrix4 integrate_range_info(const kinematics::OrbitConfig& orbit,
                                 const geometry::SceneConfig& scene, double xi0, int p,
                                 double sigma_pT_km);

// Initial-position covariance by inverting the Schur complement of the
// velocity block. 2x2 inversions use Cramer's rule. Optional report gets
// the Schur condition number.
Mat2 position_covariance(const InfoMatrix4& info, double* schur_condition = nullptr);

DilutionResult dilution(const Mat2& p_rr, double sigma_agg_km);

// Consider-augmented position covariance (pulsar location errors):
// P + (a sigma_beta / n_tau)^2 * G.
Mat2 consider_pulsar_covariance(const Mat2& p_rr, const Mat2& g_rr, double a_km,
                                double sigma_beta_rad, int n_tau);

Spectrum info_spectrum(const InfoMatrix4& info);

// Partial sum through order k of the Taylor expansion of the range
// information in the ordering parameter that scales {n, n_earth, R_earth},
// extracted by a degree-6 polynomial fit over 9 Chebyshev-spaced samples
// of epsilon in [0, 1]. Unit measurement sigma.
InfoMatrix4 range_info_epsilon_jet(const kinematics::OrbitConfig& orbit,
                                   const geometry::SceneConfig& scene, double xi0, int order);

}  // namespace navdop::info
