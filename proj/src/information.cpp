#include "navdop/information.hpp"

#include <cmath>

#include "navdop/quadrature.hpp"

namespace navdop::info {

using kinematics::OrbitConfig;
using geometry::SceneConfig;

InfoMatrix4 accumulate_discrete(const std::vector<meas::MeasGradient>& gradients,
                                const std::vector<double>& sigmas_km) {
  if (gradients.size() != sigmas_km.size())
    throw ValidationError("accumulate_discrete: gradient/sigma length mismatch");
  InfoMatrix4 info;
  for (std::size_t i = 0; i < gradients.size(); ++i) {
    if (sigmas_km[i] <= 0.0) throw ValidationError("accumulate_discrete: sigma must be > 0");
    const Vec4& h = gradients[i].h;
    info.m += (h * h.transpose()) / (sigmas_km[i] * sigmas_km[i]);
  }
  info.symmetrize();
  return info;
}

namespace {

// Information integrand h(t) (x) h(t) for the zeroth-order optical
// full-scan gradient, normalized geometry (a factored out).
Mat4 optical_integrand(double a_bar, double alpha0, double t_bar) {
  const double alpha = alpha0 + constants::kTwoPi * t_bar;
  const double d = 1.0 + a_bar * a_bar - 2.0 * a_bar * std::cos(alpha);
  Vec2 u(-a_bar * std::sin(alpha), a_bar * std::cos(alpha) - 1.0);
  u /= d;
  Vec4 h;
  h << u(0), u(1), t_bar * u(0), t_bar * u(1);
  return h * h.transpose();
}

Mat4 pulsar_integrand(double beta0, double t_bar) {
  const double beta = beta0 + constants::kTwoPi * t_bar;
  Vec4 h;
  h << std::cos(beta), std::sin(beta), t_bar * std::cos(beta), t_bar * std::sin(beta);
  return h * h.transpose();
}

std::vector<std::pair<double, double>> day_panels(int p) {
  std::vector<std::pair<double, double>> panels;
  panels.reserve(static_cast<std::size_t>(p));
  for (int j = 0; j < p; ++j) panels.emplace_back(j, j + 1.0);
  return panels;
}

}  // namespace

InfoMatrix4 integrate_optical_info(const OrbitConfig& orbit, const SceneConfig& scene,
                                   double alpha0, int p, double sigma_agg_km) {
  if (p < 1) throw ValidationError("integrate_optical_info: p must be >= 1");
  if (sigma_agg_km <= 0.0) throw ValidationError("integrate_optical_info: sigma_agg must be > 0");
  const double a_bar = scene.asteroid_mean_dist / orbit.a;
  if (std::abs(a_bar - 1.0) < 1e-9)
    throw ValidationError("integrate_optical_info: asteroid ring coincides with the orbit");
  const auto res = quad::integrate_matrix(
      [&](double t_bar) { return optical_integrand(a_bar, alpha0, t_bar); }, day_panels(p), 1e-9,
      "integrate_optical_info");
  InfoMatrix4 info;
  info.m = res.value / (static_cast<double>(p) * sigma_agg_km * sigma_agg_km);
  info.symmetrize();
  return info;
}

Mat2 optical_info_rr_closed_form(double a_au, double a_asteroid_au, int p, double sigma_agg_km) {
  if (p < 1) throw ValidationError("optical_info_rr_closed_form: p must be >= 1");
  const double s2 = sigma_agg_km * sigma_agg_km;
  Mat2 rr = Mat2::Zero();
  if (a_au < a_asteroid_au) {
    const double a_bar = a_asteroid_au / a_au;  // > 1
    const double diag = 1.0 / (2.0 * a_bar * a_bar - 2.0);
    rr(0, 0) = diag;
    rr(1, 1) = diag;
  } else if (a_au > a_asteroid_au) {
    const double a_hat = a_au / a_asteroid_au;  // > 1
    rr(0, 0) = 1.0 / (2.0 * a_hat * a_hat - 2.0);
    rr(1, 1) = (2.0 * a_hat * a_hat - 1.0) / (2.0 * a_hat * a_hat - 2.0);
  } else {
    throw ValidationError("optical_info_rr_closed_form: a == <a_A> is singular");
  }
  return rr / s2;
}

InfoMatrix4 pulsar_info_closed_form(int p, double beta0, double sigma_km) {
  if (p < 1) throw ValidationError("pulsar_info_closed_form: p must be >= 1");
  if (sigma_km <= 0.0) throw ValidationError("pulsar_info_closed_form: sigma must be > 0");
  const double s = std::sin(2.0 * beta0), c = std::cos(2.0 * beta0);
  const double pi = constants::kPi;
  const double pd = static_cast<double>(p);

  Mat2 rr = 0.5 * Mat2::Identity();

  Mat2 rdr;
  rdr << pd + s / (2.0 * pi), -c / (2.0 * pi), -c / (2.0 * pi), pd - s / (2.0 * pi);
  rdr *= 0.25;

  Mat2 drdr;
  drdr << pd * pd / 6.0 + pd * s / (8.0 * pi) + c / (16.0 * pi * pi),
      -pd * c / (8.0 * pi) + s / (16.0 * pi * pi),
      -pd * c / (8.0 * pi) + s / (16.0 * pi * pi),
      pd * pd / 6.0 - pd * s / (8.0 * pi) - c / (16.0 * pi * pi);

  InfoMatrix4 info;
  info.m.block<2, 2>(0, 0) = rr;
  info.m.block<2, 2>(0, 2) = rdr;
  info.m.block<2, 2>(2, 0) = rdr.transpose();
  info.m.block<2, 2>(2, 2) = drdr;
  info.m /= sigma_km * sigma_km;
  return info;
}

InfoMatrix4 integrate_pulsar_info(const OrbitConfig& orbit, double beta0, int p, double sigma_km) {
  (void)orbit;  // zeroth-order gradient does not involve the orbit rates
  if (p < 1) throw ValidationError("integrate_pulsar_info: p must be >= 1");
  if (sigma_km <= 0.0) throw ValidationError("integrate_pulsar_info: sigma must be > 0");
  const auto res =
      quad::integrate_matrix([&](double t_bar) { return pulsar_integrand(beta0, t_bar); },
                             day_panels(p), 1e-9, "integrate_pulsar_info");
  InfoMatrix4 info;
  info.m = res.value / (static_cast<double>(p) * sigma_km * sigma_km);
  info.symmetrize();
  return info;
}

namespace {

// Range information with explicit parameter overrides so the epsilon jets
// can scale the first-order rates.
InfoMatrix4 range_info_impl(const OrbitConfig& orbit, const SceneConfig& scene, double xi0, int p,
                            double sigma_pT_km, double n_scale) {
  if (p < 1) throw ValidationError("integrate_range_info: p must be >= 1");
  if (sigma_pT_km <= 0.0) throw ValidationError("integrate_range_info: sigma must be > 0");

  SceneConfig sc = scene;
  sc.xi0 = xi0;
  sc.n_earth = scene.n_earth * n_scale;
  sc.r_earth = scene.r_earth * n_scale;
  OrbitConfig orb = orbit;
  const double n_eff = orbit.n * n_scale;

  // Station phases fixed by the rise geometry at t = 0 (zeroth order).
  const double phi00 = geometry::station_rise_phase(sc, orb.a, xi0);
  sc.station_phases = {phi00, phi00 - constants::kPi};

  const auto timeline = geometry::range_timeline(p, orb.T);

  InfoMatrix4 info;
  // 4 sub-panels per 12-hour pass; the station phase advances pi per pass.
  for (const auto& iv : timeline) {
    std::vector<std::pair<double, double>> panels;
    const int sub = 4;
    for (int s = 0; s < sub; ++s)
      panels.emplace_back(iv.start + (iv.end - iv.start) * s / sub,
                          iv.start + (iv.end - iv.start) * (s + 1) / sub);
    const auto res = quad::integrate_matrix(
        [&](double t) {
          const double th = n_eff * t + orb.theta0;
          const Vec2 sc_r = orb.a * Vec2(std::cos(th), std::sin(th));
          const Vec2 st_r = geometry::station_position(sc, iv.station, t);
          const Vec2 d = sc_r - st_r;
          const Vec2 u = d / d.norm();
          const double n2t2 = n_eff * n_eff * t * t;
          Vec4 h;
          h << u(0) * (1.0 + n2t2), u(1) * (1.0 - 0.5 * n2t2),
              u(0) * (t / orb.T + n2t2 * t / (3.0 * orb.T)),
              u(1) * (t / orb.T - n2t2 * t / (6.0 * orb.T));
          return (h * h.transpose()).eval();
        },
        panels, 1e-7, "integrate_range_info");
    info.m += res.value;
  }
  info.m /= static_cast<double>(p) * sigma_pT_km * sigma_pT_km;
  info.symmetrize();
  return info;
}

}  // namespace

InfoMatrix4 integrate_range_info(const OrbitConfig& orbit, const SceneConfig& scene, double xi0,
                                 int p, double sigma_pT_km) {
  return range_info_impl(orbit, scene, xi0, p, sigma_pT_km, 1.0);
}

Mat2 position_covariance(const InfoMatrix4& info, double* schur_condition) {
  const Mat2 a = info.rr();
  const Mat2 b = info.rdr();
  const Mat2 d = info.drdr();

  Eigen::SelfAdjointEigenSolver<Mat2> dsolve(0.5 * (d + d.transpose()));
  const double dmin = dsolve.eigenvalues()(0);
  const double dmax = dsolve.eigenvalues()(1);
  if (!(dmax > 0.0) || dmin <= 1e-15 * dmax)
    throw RankDeficiencyError("position_covariance: singular velocity information block", dmin);

  const Mat2 schur = a - b * invert2x2(d, "position_covariance (velocity block)") * b.transpose();
  Eigen::SelfAdjointEigenSolver<Mat2> ssolve(0.5 * (schur + schur.transpose()));
  const double smin = ssolve.eigenvalues()(0);
  const double smax = ssolve.eigenvalues()(1);
  if (!(smax > 0.0) || smin <= 1e-15 * smax)
    throw RankDeficiencyError("position_covariance: singular Schur complement", smin);
  if (schur_condition != nullptr) *schur_condition = smax / smin;

  Mat2 p = invert2x2(schur, "position_covariance (Schur complement)");
  p = 0.5 * (p + p.transpose()).eval();
  return p;
}

DilutionResult dilution(const Mat2& p_rr, double sigma_agg_km) {
  if (sigma_agg_km <= 0.0) throw ValidationError("dilution: sigma_agg must be > 0");
  Eigen::SelfAdjointEigenSolver<Mat2> es(0.5 * (p_rr + p_rr.transpose()));
  if (es.eigenvalues()(0) < -1e-10 * std::abs(es.eigenvalues()(1)))
    throw ValidationError("dilution: covariance not positive semidefinite");
  DilutionResult r;
  r.sigma_agg_km = sigma_agg_km;
  r.g_rr = p_rr / (sigma_agg_km * sigma_agg_km);
  r.pdop = std::sqrt(r.g_rr.trace());
  r.sigma_xx_km = sigma_agg_km * std::sqrt(r.g_rr(0, 0));
  r.sigma_yy_km = sigma_agg_km * std::sqrt(r.g_rr(1, 1));
  r.rho_xy = r.g_rr(0, 1) / std::sqrt(r.g_rr(0, 0) * r.g_rr(1, 1));
  return r;
}

Mat2 consider_pulsar_covariance(const Mat2& p_rr, const Mat2& g_rr, double a_km,
                                double sigma_beta_rad, int n_tau) {
  if (n_tau < 1) throw ValidationError("consider_pulsar_covariance: n_tau must be >= 1");
  const double loc = a_km * sigma_beta_rad / n_tau;
  return p_rr + loc * loc * g_rr;
}

Spectrum info_spectrum(const InfoMatrix4& info) {
  Eigen::SelfAdjointEigenSolver<Mat4> es(0.5 * (info.m + info.m.transpose()));
  Spectrum s;
  for (int i = 0; i < 4; ++i) s.eigenvalues[static_cast<std::size_t>(i)] = es.eigenvalues()(i);
  s.condition_number = es.eigenvalues()(3) / es.eigenvalues()(0);
  return s;
}

InfoMatrix4 range_info_epsilon_jet(const OrbitConfig& orbit, const SceneConfig& scene, double xi0,
                                   int order) {
  if (order < 2 || order > 4) throw ValidationError("range_info_epsilon_jet: order must be 2..4");

  constexpr int kSamples = 9;
  constexpr int kDegree = 6;
  std::array<double, kSamples> eps{};
  for (int i = 0; i < kSamples; ++i)
    eps[static_cast<std::size_t>(i)] =
        0.5 + 0.5 * std::cos(constants::kPi * i / (kSamples - 1));  // Chebyshev-Lobatto on [0,1]

  // Sample I(eps) entrywise; unit sigma.
  std::array<Mat4, kSamples> samples;
  for (int i = 0; i < kSamples; ++i)
    samples[static_cast<std::size_t>(i)] =
        range_info_impl(orbit, scene, xi0, 1, 1.0, eps[static_cast<std::size_t>(i)]).m;

  Eigen::Matrix<double, kSamples, kDegree + 1> vander;
  for (int i = 0; i < kSamples; ++i) {
    double pw = 1.0;
    for (int j = 0; j <= kDegree; ++j) {
      vander(i, j) = pw;
      pw *= eps[static_cast<std::size_t>(i)];
    }
  }
  const auto qr = vander.colPivHouseholderQr();

  InfoMatrix4 jet;
  double max_resid = 0.0;
  double scale = samples[kSamples - 1].norm();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      Eigen::Matrix<double, kSamples, 1> y;
      for (int i = 0; i < kSamples; ++i) y(i) = samples[static_cast<std::size_t>(i)](r, c);
      const Eigen::Matrix<double, kDegree + 1, 1> coef = qr.solve(y);
      max_resid = std::max(max_resid, (vander * coef - y).cwiseAbs().maxCoeff());
      double sum = 0.0;
      for (int j = 0; j <= std::min(order, kDegree); ++j) sum += coef(j);  // partial sum at eps=1
      jet.m(r, c) = sum;
    }
  }
  if (scale > 0.0 && max_resid / scale > 1e-6)
    throw NumericalError("range_info_epsilon_jet: polynomial fit residual above tolerance",
                         max_resid / scale);
  jet.symmetrize();
  return jet;
}

}  // namespace navdop::info
