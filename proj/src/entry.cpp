#include "navdop/entry.hpp"

#include <algorithm>
#include <cmath>

namespace navdop::entry {

void HyperbolicApproach::finalize() {
  if (mu <= 0.0) throw ValidationError("HyperbolicApproach: mu must be > 0");
  if (entry_radius_km <= 0.0) throw ValidationError("HyperbolicApproach: entry radius must be > 0");
  if (entry_true_anomaly_deg >= 0.0)
    throw ValidationError("HyperbolicApproach: entry true anomaly must be negative (inbound)");
  if (v_inf_km_s <= 0.0) throw ValidationError("HyperbolicApproach: v_inf must be > 0");
  a_km = -mu / (v_inf_km_s * v_inf_km_s);
  // a(1 - e^2) = r_E (1 + e cos thE)  =>  a e^2 + (r_E cos thE) e + (r_E - a) = 0
  const double ct = std::cos(entry_true_anomaly_deg * constants::kDegToRad);
  const double qa = a_km, qb = entry_radius_km * ct, qc = entry_radius_km - a_km;
  const double disc = qb * qb - 4.0 * qa * qc;
  if (disc <= 0.0) throw ValidationError("HyperbolicApproach: no conic through the entry point");
  const double r1 = (-qb + std::sqrt(disc)) / (2.0 * qa);
  const double r2 = (-qb - std::sqrt(disc)) / (2.0 * qa);
  ecc = std::max(r1, r2);
  if (ecc <= 1.0) throw ValidationError("HyperbolicApproach: solution is not hyperbolic");
  p_km = a_km * (1.0 - ecc * ecc);
}

HyperbolicApproach HyperbolicApproach::from_v_inf(double mu, double entry_radius_km,
                                                  double entry_true_anomaly_deg,
                                                  double v_inf_km_s) {
  HyperbolicApproach h;
  h.mu = mu;
  h.entry_radius_km = entry_radius_km;
  h.entry_true_anomaly_deg = entry_true_anomaly_deg;
  h.v_inf_km_s = v_inf_km_s;
  h.finalize();
  return h;
}

HyperbolicApproach HyperbolicApproach::from_elements(double mu, double a_km_in, double ecc_in,
                                                     double entry_true_anomaly_deg) {
  if (ecc_in <= 1.0) throw ValidationError("HyperbolicApproach: e must exceed 1");
  if (a_km_in >= 0.0) throw ValidationError("HyperbolicApproach: hyperbolic a must be negative");
  HyperbolicApproach h;
  h.mu = mu;
  h.a_km = a_km_in;
  h.ecc = ecc_in;
  h.entry_true_anomaly_deg = entry_true_anomaly_deg;
  h.p_km = a_km_in * (1.0 - ecc_in * ecc_in);
  h.v_inf_km_s = std::sqrt(mu / -a_km_in);
  const double th = entry_true_anomaly_deg * constants::kDegToRad;
  h.entry_radius_km = h.p_km / (1.0 + h.ecc * std::cos(th));
  if (h.entry_radius_km <= 0.0)
    throw ValidationError("HyperbolicApproach: entry anomaly outside the hyperbola branch");
  return h;
}

Vec4 HyperbolicApproach::state_at_true_anomaly(double theta) const {
  const double r = p_km / (1.0 + ecc * std::cos(theta));
  const Vec2 pos = r * Vec2(std::cos(theta), std::sin(theta));
  const double vr = std::sqrt(mu / p_km) * ecc * std::sin(theta);
  const double vt = std::sqrt(mu / p_km) * (1.0 + ecc * std::cos(theta));
  const Vec2 rhat = pos / r;
  const Vec2 that(-rhat(1), rhat(0));
  const Vec2 vel = vr * rhat + vt * that;
  Vec4 s;
  s << pos(0), pos(1), vel(0), vel(1);
  return s;
}

Vec4 HyperbolicApproach::entry_state() const {
  return state_at_true_anomaly(entry_true_anomaly_deg * constants::kDegToRad);
}

EntrySchedule default_pulsar_schedule() {
  // {B0833-45, B1821-24, B1937+21, J0437-4715}: sigma = s_tau/sqrt(129 cm^2 * 0.5 hr)
  return {
      {90.0, EntryMeasKind::pulsar, 162.0, 97.0},
      {60.0, EntryMeasKind::pulsar, 283.0, 5.0},
      {30.0, EntryMeasKind::pulsar, 42.0, 8.0},
      {0.0, EntryMeasKind::pulsar, 46.0, 87.0},
  };
}

EntrySchedule default_cpf_schedule(double xi_deg) {
  EntrySchedule s;
  s.reserve(120);
  for (int i = 1; i <= 120; ++i)
    s.push_back({120.0 - i, EntryMeasKind::cpf, xi_deg - 81.0, 0.5e-3});
  return s;
}

namespace {

using State20 = Eigen::Matrix<double, 20, 1>;  // [r v Phi(row-major)]

State20 pack(const Vec4& x, const Mat4& phi) {
  State20 s;
  s.head<4>() = x;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) s(4 + 4 * r + c) = phi(r, c);
  return s;
}

Mat4 unpack_phi(const State20& s) {
  Mat4 phi;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) phi(r, c) = s(4 + 4 * r + c);
  return phi;
}

State20 deriv(double mu, const State20& s) {
  const Vec2 r = s.head<2>();
  const Vec2 v = s.segment<2>(2);
  const double rn = r.norm();
  const double rn3 = rn * rn * rn;
  const Vec2 acc = -mu / rn3 * r;
  const Mat2 grav = mu / rn3 * (3.0 * (r / rn) * (r / rn).transpose() - Mat2::Identity());
  Mat4 amat = Mat4::Zero();
  amat.block<2, 2>(0, 2) = Mat2::Identity();
  amat.block<2, 2>(2, 0) = grav;
  const Mat4 dphi = amat * unpack_phi(s);
  State20 ds;
  ds.head<2>() = v;
  ds.segment<2>(2) = acc;
  for (int rr = 0; rr < 4; ++rr)
    for (int cc = 0; cc < 4; ++cc) ds(4 + 4 * rr + cc) = dphi(rr, cc);
  return ds;
}

State20 rk4_step(double mu, const State20& s, double h) {
  const State20 k1 = deriv(mu, s);
  const State20 k2 = deriv(mu, s + 0.5 * h * k1);
  const State20 k3 = deriv(mu, s + 0.5 * h * k2);
  const State20 k4 = deriv(mu, s + h * k3);
  return s + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

constexpr double kStepSec = 0.25;

}  // namespace

Mat4 hyperbolic_stm(const HyperbolicApproach& approach, double t_sec, double t_entry_sec) {
  const double span = t_sec - t_entry_sec;
  if (std::abs(span) > 7200.0 + 1e-9)
    throw ValidationError("hyperbolic_stm: epoch outside the two-hour window");
  State20 s = pack(approach.entry_state(), Mat4::Identity());
  double t = 0.0;
  const double dir = (span < 0.0) ? -1.0 : 1.0;
  while (std::abs(t - span) > 1e-12) {
    const double h = dir * std::min(kStepSec, std::abs(span - t));
    s = rk4_step(approach.mu, s, h);
    t += h;
  }
  return unpack_phi(s);
}

std::vector<Mat4> hyperbolic_stm_batch(const HyperbolicApproach& approach,
                                       const std::vector<double>& sec_before_entry) {
  std::vector<std::size_t> order(sec_before_entry.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sec_before_entry[a] < sec_before_entry[b];
  });

  std::vector<Mat4> out(sec_before_entry.size());
  State20 s = pack(approach.entry_state(), Mat4::Identity());
  double t = 0.0;  // seconds before entry, increasing as we integrate backward
  for (std::size_t idx : order) {
    const double tgt = sec_before_entry[idx];
    if (tgt < -1e-12 || tgt > 7200.0 + 1e-9)
      throw ValidationError("hyperbolic_stm_batch: epoch outside the two-hour window");
    while (tgt - t > 1e-12) {
      const double h = std::min(kStepSec, tgt - t);
      s = rk4_step(approach.mu, s, -h);
      t += h;
    }
    out[idx] = unpack_phi(s);
  }
  return out;
}

Vec4 entry_gradient(double pointing_angle_deg, const Mat4& stm) {
  const double ang = pointing_angle_deg * constants::kDegToRad;
  const Eigen::RowVector2d u(std::cos(ang), std::sin(ang));
  Vec4 h;
  h.head<2>() = (u * stm.block<2, 2>(0, 0)).transpose();
  h.tail<2>() = (u * stm.block<2, 2>(0, 2)).transpose();
  return h;
}

info::InfoMatrix4 entry_information(const EntrySchedule& schedule,
                                    const HyperbolicApproach& approach) {
  if (schedule.empty()) throw ValidationError("entry_information: empty schedule");
  std::vector<double> secs;
  secs.reserve(schedule.size());
  for (const auto& m : schedule) {
    if (m.t_min_before_entry < 0.0 || m.t_min_before_entry > 120.0)
      throw ValidationError("entry_information: measurement outside [-120, 0] min");
    if (m.sigma_km <= 0.0) throw ValidationError("entry_information: sigma must be > 0");
    secs.push_back(m.t_min_before_entry * 60.0);
  }
  const auto stms = hyperbolic_stm_batch(approach, secs);
  info::InfoMatrix4 info;
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    const Vec4 h = entry_gradient(schedule[i].pointing_angle_deg, stms[i]);
    info.m += (h * h.transpose()) / (schedule[i].sigma_km * schedule[i].sigma_km);
  }
  info.symmetrize();
  return info;
}

info::InfoMatrix4 apriori_entry_info(const Mat4& p0, const HyperbolicApproach& approach,
                                     double window_sec) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (p0 + p0.transpose()));
  if (es.eigenvalues()(0) <= 0.0)
    throw ValidationError("apriori_entry_info: P0 must be positive definite");
  const Mat4 phi_back = hyperbolic_stm(approach, -window_sec);
  // Phi(tE, t0) = Phi(t0, tE)^{-1}
  const Mat4 phi_fwd = phi_back.inverse();
  const Mat4 pe = phi_fwd * p0 * phi_fwd.transpose();
  Eigen::FullPivLU<Mat4> lu(pe);
  if (!lu.isInvertible())
    throw RankDeficiencyError("apriori_entry_info: singular propagated covariance", 0.0);
  info::InfoMatrix4 info;
  info.m = lu.inverse();
  info.symmetrize();
  return info;
}

EntryCovarianceReport entry_covariance(const info::InfoMatrix4& apriori,
                                       const info::InfoMatrix4& measurements) {
  info::InfoMatrix4 total;
  total.m = apriori.m + measurements.m;
  total.symmetrize();
  EntryCovarianceReport rep;
  rep.info_total_fro = total.m.norm();
  rep.p_rr = info::position_covariance(total);
  rep.sigma_xx_km = std::sqrt(rep.p_rr(0, 0));
  rep.sigma_yy_km = std::sqrt(rep.p_rr(1, 1));
  return rep;
}

}  // namespace navdop::entry
