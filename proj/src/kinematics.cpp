#include "navdop/kinematics.hpp"

#include <cmath>

namespace navdop::kinematics {

OrbitConfig::OrbitConfig(double a_au, double n_rad_day, double theta0_rad, double period_day)
    : a(a_au), n(n_rad_day), theta0(theta0_rad), T(period_day) {
  if (a <= 0.0) throw ValidationError("OrbitConfig: a must be > 0");
  if (n <= 0.0) throw ValidationError("OrbitConfig: n must be > 0");
  if (T <= 0.0) throw ValidationError("OrbitConfig: T must be > 0");
}

OrbitConfig OrbitConfig::from_mu(double mu_au3_day2, double a_au, double theta0_rad,
                                 double period_day) {
  if (mu_au3_day2 <= 0.0) throw ValidationError("OrbitConfig: mu must be > 0");
  return OrbitConfig(a_au, std::sqrt(mu_au3_day2 / (a_au * a_au * a_au)), theta0_rad, period_day);
}

State4 circular_state(const OrbitConfig& orbit, double t) {
  const double th = orbit.n * t + orbit.theta0;
  State4 s;
  s.r = orbit.a * Vec2(std::cos(th), std::sin(th));
  s.dr = orbit.T * orbit.a * orbit.n * Vec2(-std::sin(th), std::cos(th));
  return s;
}

namespace {

// Blocks of the rescaled circular-orbit STM for theta0 = 0.
void stm_exact_blocks(double n, double T, double t, Mat2& rr, Mat2& rdr, Mat2& drr, Mat2& drdr) {
  const double x = n * t;
  const double s = std::sin(x), c = std::cos(x);
  const double s2 = std::sin(2 * x), c2 = std::cos(2 * x);
  const double s3 = std::sin(3 * x), c3 = std::cos(3 * x);

  rr << 0.5 * (-3 + 4 * c + c2 + 6 * x * s), (1 - c) * s,
        0.5 * (4 * s + s2 - 6 * x * c), 1 - (1 - c) * c;

  rdr << (2 - c) * s, -3 + 2 * c + c2 + 3 * x * s,
         (1 - c) * (1 - c), 2 * s + s2 - 3 * x * c;
  rdr *= 1.0 / (n * T);

  drr << s + 2 * s2 - 3 * s3 + 6 * x + 6 * x * c2, c - 4 * c2 + 3 * c3 + 6 * x * s2,
         6 - 7 * c - 2 * c2 + 3 * c3 + 6 * x * s2, -2 * s * (1 + 4 * c - 3 * c2 - 6 * x * s);
  drr *= n * T / 4.0;

  drdr << 2 * c - c2, s - 2 * s2 + 3 * x * c,
          2 * (1 - c) * s, -c + 2 * c2 + 3 * x * s;
}

Mat4 assemble(const Mat2& rr, const Mat2& rdr, const Mat2& drr, const Mat2& drdr) {
  Mat4 m;
  m.block<2, 2>(0, 0) = rr;
  m.block<2, 2>(0, 2) = rdr;
  m.block<2, 2>(2, 0) = drr;
  m.block<2, 2>(2, 2) = drdr;
  return m;
}

// A nonzero initial angle is a frame rotation: conjugate every block.
Mat4 rotate_blocks(const Mat4& m, double theta0) {
  if (theta0 == 0.0) return m;
  const Mat2 r = rotation2(theta0);
  const Mat2 rt = r.transpose();
  Mat4 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = r * m.block<2, 2>(2 * i, 2 * j) * rt;
  return out;
}

}  // namespace

Stm4 stm_exact(const OrbitConfig& orbit, double t) {
  Stm4 phi;
  phi.order = StmOrder::exact;
  if (t == 0.0) return phi;
  Mat2 rr, rdr, drr, drdr;
  stm_exact_blocks(orbit.n, orbit.T, t, rr, rdr, drr, drdr);
  phi.m = rotate_blocks(assemble(rr, rdr, drr, drdr), orbit.theta0);
  return phi;
}

Stm4 stm_jet(const OrbitConfig& orbit, double t, int order) {
  if (order < 0 || order > 2) throw ValidationError("stm_jet: order must be in {0,1,2}");
  const double n = orbit.n, T = orbit.T;
  Mat4 m = Mat4::Identity();
  m(0, 2) = t / T;
  m(1, 3) = t / T;
  if (order == 2) {
    const double n2t2 = n * n * t * t;
    Mat4 p2 = Mat4::Zero();
    p2(0, 0) = n2t2;
    p2(1, 1) = -0.5 * n2t2;
    p2(0, 2) = n2t2 * t / (3.0 * T);
    p2(1, 3) = -n2t2 * t / (6.0 * T);
    p2(2, 0) = 2.0 * n * n * t * T;
    p2(3, 1) = -n * n * t * T;
    p2(2, 2) = n2t2;
    p2(3, 3) = -0.5 * n2t2;
    m += p2;
  }
  Stm4 phi;
  phi.m = rotate_blocks(m, orbit.theta0);
  phi.order = (order == 2) ? StmOrder::jet2 : (order == 1 ? StmOrder::jet1 : StmOrder::jet0);
  return phi;
}

double stm_error_norm(const OrbitConfig& orbit, double t, int approx_order) {
  if (approx_order != 1 && approx_order != 2)
    throw ValidationError("stm_error_norm: approx_order must be 1 or 2");
  if (t < 0.0) throw ValidationError("stm_error_norm: t must be >= 0");
  const Mat4 exact = stm_exact(orbit, t).m;
  const Mat4 jet = stm_jet(orbit, t, approx_order).m;
  return (jet - exact).norm() / exact.norm();
}

}  // namespace navdop::kinematics
