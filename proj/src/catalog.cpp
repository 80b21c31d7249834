#include "navdop/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace navdop::catalog {

namespace {
std::optional<double> missing() { return std::nullopt; }
}  // namespace

const std::vector<PulsarEntry>& builtin_pulsars() {
  static const std::vector<PulsarEntry> rows = {
      {"PSR J0030+0451", 8.91, 1.45, 431.2, 21.35, true},
      {"PSR J0218+4232", 47.05, 27.01, 200.3, 31.12, true},
      {"PSR J0437-4715", 50.47, -67.87, 697.1, 0.05, true},
      {"PSR B0531+21 (M1 - Crab Pulsar)", 84.10, -1.29, 28.9, 3.43, true},
      {"PSR J0751+1807", 116.33, -2.81, missing(), 7.23, false},
      {"PSR J1012+5307", 133.36, 38.76, 1474.7, 0.48, true},
      {"PSR B0833-45", 153.37, -60.36, 778.9, 0.37, false},
      {"PSR J1024-0719", 160.73, -16.04, 2791358.2, 0.67, false},
      {"PSR B1055-52", 195.77, -52.39, missing(), 209.51, false},
      {"PSR B1509-58", 243.89, -39.40, 1672.3, 1216.4, true},
      {"PSR B1821-24 (J1824-2452A)", 275.56, -1.55, 41.1, 6.01, true},
      {"PSR B0540-69", 301.60, -86.66, 573.9, 69.07, false},
      {"PSR B1937+21", 301.99, 42.33, 62.1, 0.04, true},
      {"PSR J2124-3358", 312.74, -17.82, missing(), 0.79, false},
      {"PSR J2214+3000", 348.81, 37.71, missing(), missing(), false},
  };
  return rows;
}

const std::vector<CameraSpec>& builtin_cameras() {
  // High-end M_max is the co-added limit; the base (single-image) limit is 13.5.
  static const std::vector<CameraSpec> tiers = {
      {"low-end", 26.9, 128.0, 9.5, 30.0, 0.25},
      {"mid-level", 7.0, 60.0, 10.5, 30.0, 0.25},
      {"high-end", 0.6, 10.0, 25.0, 30.0, 0.25},
  };
  return tiers;
}

const CameraSpec& camera_by_name(const std::string& name) {
  for (const auto& c : builtin_cameras())
    if (c.name == name) return c;
  throw ValidationError("camera_by_name: unknown camera tier '" + name + "'");
}

SelectionStats selection_stats(const std::vector<PulsarEntry>& selection) {
  if (selection.empty()) throw ValidationError("selection_stats: empty selection");
  SelectionStats st;
  st.count = selection.size();
  for (const auto& p : selection) {
    if (!p.s_tau) throw ValidationError("selection_stats: " + p.name + " has no s_tau");
    if (!p.sigma_beta) throw ValidationError("selection_stats: " + p.name + " has no sigma_beta");
    st.mean_s_tau += *p.s_tau;
    st.mean_sigma_beta += *p.sigma_beta;
  }
  st.mean_s_tau /= static_cast<double>(st.count);
  st.mean_sigma_beta /= static_cast<double>(st.count);
  return st;
}

std::vector<PulsarEntry> sextant_selection() {
  std::vector<PulsarEntry> out;
  for (const auto& p : builtin_pulsars())
    if (p.sextant) out.push_back(p);
  return out;
}

std::vector<PulsarEntry> best4_selection() {
  const std::vector<std::string> keys = {"J0437-4715", "B0833-45", "B1821-24", "B1937+21"};
  std::vector<PulsarEntry> out;
  for (const auto& key : keys)
    for (const auto& p : builtin_pulsars())
      if (p.name.find(key) != std::string::npos) out.push_back(p);
  return out;
}

double apparent_magnitude(double absolute_magnitude, double r_helio_au, double delta_obs_au) {
  if (r_helio_au <= 0.0 || delta_obs_au <= 0.0)
    throw ValidationError("apparent_magnitude: distances must be > 0");
  return absolute_magnitude + 5.0 * std::log10(r_helio_au * delta_obs_au);
}

bool kbo_detectable(const KboMagnitudeFit& fit, double a_spacecraft_au, double a_asteroid_au,
                    double limit_magnitude) {
  const double delta = a_asteroid_au + a_spacecraft_au;  // far-side (dimmest) pass of the scan
  return apparent_magnitude(fit.h(a_asteroid_au), a_asteroid_au, delta) < limit_magnitude;
}

namespace {

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  for (auto& f : out) {
    const auto b = f.find_first_not_of(" \t\r");
    const auto e = f.find_last_not_of(" \t\r");
    f = (b == std::string::npos) ? std::string() : f.substr(b, e - b + 1);
  }
  return out;
}

double parse_num(const std::string& s, const char* what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ValidationError(std::string("catalog: bad ") + what + " value '" + s + "'");
  }
}

std::string format_num(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::vector<PulsarEntry> parse_pulsar_csv(const std::string& text) {
  std::vector<PulsarEntry> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_fields(line);
    if (f.size() != 6) throw ValidationError("catalog: expected 6 fields, got line '" + line + "'");
    PulsarEntry p;
    p.name = f[0];
    p.ra_deg = parse_num(f[1], "ra_deg");
    p.dec_deg = parse_num(f[2], "dec_deg");
    if (!f[3].empty()) p.s_tau = parse_num(f[3], "s_tau");
    if (!f[4].empty()) p.sigma_beta = parse_num(f[4], "sigma_beta_mas");
    p.sextant = parse_num(f[5], "sextant") != 0.0;
    if (p.ra_deg < 0.0 || p.ra_deg >= 360.0) throw ValidationError("catalog: ra out of [0,360)");
    if (p.s_tau && *p.s_tau <= 0.0) throw ValidationError("catalog: s_tau must be > 0");
    if (p.sigma_beta && *p.sigma_beta <= 0.0)
      throw ValidationError("catalog: sigma_beta must be > 0");
    out.push_back(std::move(p));
  }
  return out;
}

std::string serialize_pulsar_csv(const std::vector<PulsarEntry>& entries) {
  std::string out;
  for (const auto& p : entries) {
    out += p.name + "," + format_num(p.ra_deg) + "," + format_num(p.dec_deg) + ",";
    if (p.s_tau) out += format_num(*p.s_tau);
    out += ",";
    if (p.sigma_beta) out += format_num(*p.sigma_beta);
    out += ",";
    out += p.sextant ? "1" : "0";
    out += "\n";
  }
  return out;
}

std::vector<CameraSpec> parse_camera_csv(const std::string& text) {
  std::vector<CameraSpec> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_fields(line);
    if (f.size() != 6) throw ValidationError("camera: expected 6 fields, got line '" + line + "'");
    CameraSpec c;
    c.name = f[0];
    c.fov_deg = parse_num(f[1], "fov_deg");
    c.theta_urad = parse_num(f[2], "theta_urad");
    c.m_max = parse_num(f[3], "m_max");
    c.alpha_min_deg = parse_num(f[4], "alpha_min_deg");
    c.sigma_s = parse_num(f[5], "sigma_s");
    if (c.theta_urad <= 0.0 || c.sigma_s <= 0.0 || c.fov_deg * 1e6 * constants::kDegToRad <= c.theta_urad)
      throw ValidationError("camera: invalid spec for '" + c.name + "'");
    out.push_back(std::move(c));
  }
  return out;
}

std::string serialize_camera_csv(const std::vector<CameraSpec>& cameras) {
  std::string out;
  for (const auto& c : cameras) {
    out += c.name + "," + format_num(c.fov_deg) + "," + format_num(c.theta_urad) + "," +
           format_num(c.m_max) + "," + format_num(c.alpha_min_deg) + "," + format_num(c.sigma_s) +
           "\n";
  }
  return out;
}

std::vector<PulsarEntry> load_pulsars_with_env_override() {
  const char* path = std::getenv("NAVDOP_CATALOG");
  if (path == nullptr || *path == '\0') return builtin_pulsars();
  std::ifstream in(path);
  if (!in) throw ValidationError(std::string("cannot open NAVDOP_CATALOG file: ") + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pulsar_csv(ss.str());
}

}  // namespace navdop::catalog
