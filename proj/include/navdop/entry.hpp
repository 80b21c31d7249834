#pragma once

#include <vector>

#include "navdop/information.hpp"
#include "navdop/types.hpp"

namespace navdop::entry {

// Planar hyperbolic approach, Mars-centered, x-axis along the eccentricity
// vector. Units: km, s, km/s.
struct HyperbolicApproach {
  double mu = 42828.37;                  // [km^3/s^2]
  double entry_radius_km = 3522.2;       // Mars mean equatorial radius + 125 km
  double entry_true_anomaly_deg = -19.0; // inbound
  double v_inf_km_s = 3.0;

  // Derived conic elements.
  double a_km = 0.0;   // < 0
  double ecc = 0.0;    // > 1
  double p_km = 0.0;   // semi-latus rectum

  HyperbolicApproach() { finalize(); }
  static HyperbolicApproach from_v_inf(double mu, double entry_radius_km,
                                       double entry_true_anomaly_deg, double v_inf_km_s);
  static HyperbolicApproach from_elements(double mu, double a_km, double ecc,
                                          double entry_true_anomaly_deg);

  void finalize();  // solve e from (mu, v_inf, entry radius, entry anomaly)
  Vec4 state_at_true_anomaly(double theta_rad) const;  // [r; v]
  Vec4 entry_state() const;
};

enum class EntryMeasKind { cpf, pulsar };

struct EntryMeasurement {
  double t_min_before_entry = 0.0;  // in [0, 120]
  EntryMeasKind kind = EntryMeasKind::pulsar;
  double pointing_angle_deg = 0.0;  // angle of u_hat vs the x-axis
  double sigma_km = 1.0;
};

using EntrySchedule = std::vector<EntryMeasurement>;

// Table-8 schedules. The CPF Earth angle xi defaults to 0 deg and enters
// only through the fixed pointing angle xi - 81 deg.
EntrySchedule default_pulsar_schedule();
EntrySchedule default_cpf_schedule(double xi_deg = 0.0);

// Phi(t, t_E): maps entry-state deviations to the earlier time t. Times in
// seconds relative to entry (t <= 0 within the two-hour window). Fixed-step
// RK4 on the planar two-body variational equations.
Mat4 hyperbolic_stm(const HyperbolicApproach& approach, double t_sec, double t_entry_sec = 0.0);

// One backward pass collecting Phi(t_i, t_E) at several epochs [s before entry].
std::vector<Mat4> hyperbolic_stm_batch(const HyperbolicApproach& approach,
                                       const std::vector<double>& sec_before_entry);

// u_hat^T [Phi_rr : Phi_rv] for one measurement.
Vec4 entry_gradient(double pointing_angle_deg, const Mat4& stm);

// Aggregate measurement information at entry, Eq.-135 form.
info::InfoMatrix4 entry_information(const EntrySchedule& schedule,
                                    const HyperbolicApproach& approach);

// A priori information mapped to entry: [Phi(tE,t0) P0 Phi^T]^{-1}.
info::InfoMatrix4 apriori_entry_info(const Mat4& p0, const HyperbolicApproach& approach,
                                     double window_sec = 7200.0);

struct EntryCovarianceReport {
  Mat2 p_rr = Mat2::Zero();
  double sigma_xx_km = 0.0;
  double sigma_yy_km = 0.0;
  double info_total_fro = 0.0;
};

// Position block of (I0 + Imeas)^{-1} via the Schur path.
EntryCovarianceReport entry_covariance(const info::InfoMatrix4& apriori,
                                       const info::InfoMatrix4& measurements);

}  // namespace navdop::entry
