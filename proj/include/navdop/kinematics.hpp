#pragma once

#include "navdop/types.hpp"

namespace navdop::kinematics {

// Heliocentric circular reference orbit. Canonical units: AU and day.
struct OrbitConfig {
  double a = 1.5;       // semi-major axis [AU]
  double n = 0.009;     // mean motion [rad/day]
  double theta0 = 0.0;  // initial central angle [rad]
  double T = 1.0;       // canonical observation period [day]

  OrbitConfig() = default;
  OrbitConfig(double a_au, double n_rad_day, double theta0_rad = 0.0, double period_day = 1.0);

  // n = sqrt(mu / a^3), mu in AU^3/day^2.
  static OrbitConfig from_mu(double mu_au3_day2, double a_au, double theta0_rad = 0.0,
                             double period_day = 1.0);

  double mu() const { return n * n * a * a * a; }
};

// Rescaled state: position r and linear displacement dr = T*v, both [AU].
struct State4 {
  Vec2 r;
  Vec2 dr;

  Vec4 vec() const {
    Vec4 x;
    x << r(0), r(1), dr(0), dr(1);
    return x;
  }
};

enum class StmOrder { exact, jet0, jet1, jet2 };

// 4x4 state transition matrix in rescaled (r, T*v) coordinates.
struct Stm4 {
  Mat4 m = Mat4::Identity();
  StmOrder order = StmOrder::exact;

  Mat2 rr() const { return m.block<2, 2>(0, 0); }
  Mat2 rdr() const { return m.block<2, 2>(0, 2); }
  Mat2 drr() const { return m.block<2, 2>(2, 0); }
  Mat2 drdr() const { return m.block<2, 2>(2, 2); }
};

// Nominal circular-orbit state at elapsed time t [day].
State4 circular_state(const OrbitConfig& orbit, double t);

// Closed-form STM of the circular two-body orbit, already rescaled by
// S = diag(I, T*I). Valid for any t >= 0.
Stm4 stm_exact(const OrbitConfig& orbit, double t);

// Asymptotic k-jet of the STM. Orders 0 and 1 coincide (the first-order
// term vanishes); order 2 adds the epsilon^2 block with epsilon = 1.
Stm4 stm_jet(const OrbitConfig& orbit, double t, int order);

// Relative Frobenius error of the order-k jet against the exact STM:
// e = ||Phi^(k) - Phi||_F / ||Phi||_F, approx_order in {1, 2}.
double stm_error_norm(const OrbitConfig& orbit, double t, int approx_order);

}  // namespace navdop::kinematics
