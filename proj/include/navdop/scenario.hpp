#pragma once

#include <optional>
#include <string>
#include <vector>

#include "navdop/catalog.hpp"
#include "navdop/entry.hpp"
#include "navdop/geometry.hpp"
#include "navdop/information.hpp"
#include "navdop/kinematics.hpp"

namespace navdop::scenario {

// Thrown on malformed scenario files; maps to CLI exit code 2.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

enum class DataType { optical, pulsar, range, entry_compare };
enum class Preset { mars, neptune, custom };

struct Scenario {
  DataType data_type = DataType::optical;
  Preset preset = Preset::mars;
  int days = 1;
  double angle = 0.0;  // alpha0 | beta0 | xi0 [rad]
  std::optional<std::string> sweep_grid;  // "start:stop:count"

  kinematics::OrbitConfig orbit{1.5, constants::kTwoPi / 687.0};
  geometry::SceneConfig scene;

  // optical
  std::string camera = "high-end";
  int n_gamma = 1440;
  double sigma_asteroid_km = 0.0;

  // pulsar
  std::string pulsar_selection = "sextant";  // sextant | best4
  int n_tau = 8;
  double h_tau_hr = 3.0;
  double detector_area_cm2 = 129.0;
  bool consider_location_errors = false;

  // range: noise factor s_rho * rho0 [km sqrt(hr)]
  double range_noise_factor = 3.0e-4;

  // entry comparison
  entry::HyperbolicApproach approach;
  double cpf_xi_deg = 0.0;
  double apriori_sigma_pos_km = 20.0;
  double apriori_sigma_vel_km_s = 1e-4;

  void validate() const;
};

Scenario preset_scenario(Preset preset, DataType data_type);

// Flat key = value file with [section] headers; returns the scenario after
// preset expansion and validation.
Scenario parse_scenario_file(const std::string& path);
Scenario parse_scenario_text(const std::string& text);

// Aggregate measurement sigma for the scenario's data type over p days [km].
double scenario_sigma_agg(const Scenario& sc);

struct PointResult {
  info::DilutionResult dilution;
  info::Spectrum spectrum;
  // consider-augmented component uncertainties (pulsar only, optional)
  std::optional<double> consider_sigma_xx_km;
  std::optional<double> consider_sigma_yy_km;
};

// Evaluate one initial angle (alpha0 | beta0 | xi0) of the scenario.
PointResult evaluate_point(const Scenario& sc, double angle);

struct EntryCompareResult {
  double apriori_fro = 0.0;
  double pulsar_fro = 0.0;
  double cpf_fro = 0.0;
  double apriori_sigma_xx = 0.0, apriori_sigma_yy = 0.0;
  double pulsar_sigma_xx = 0.0, pulsar_sigma_yy = 0.0;
  double cpf_sigma_xx = 0.0, cpf_sigma_yy = 0.0;
};

EntryCompareResult run_entry_compare(const Scenario& sc);

struct Table3Row {
  std::string label;
  double sigma_T_km = 0.0;         // computed measurement uncertainty at 1 day
  double ref_sigma_T_km = 0.0;     // paper value
  double tol_sigma = 0.0;          // relative tolerance
  double scale_factor = 0.0;       // computed sqrt(G) (minimax over the free angle)
  double sigma_pos_km = 0.0;       // computed component uncertainty
  double ref_sigma_pos_km = 0.0;   // paper value
  double tol_pos = 0.0;
  bool is_range = false;
  // range rows report envelopes instead of single values
  double env_sigma_xx_min = 0.0, env_sigma_xx_max = 0.0;
  double env_sigma_yy_min = 0.0, env_sigma_yy_max = 0.0;
  bool pass = false;
};

std::vector<Table3Row> table3_rows(int grid_points = 360);

}  // namespace navdop::scenario
