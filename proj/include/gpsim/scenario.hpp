#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gpsim/constants.hpp"
#include "gpsim/network.hpp"
#include "gpsim/solver_config.hpp"

namespace gpsim {

/// The native scenario document (versioned JSON). All physical quantities
/// carry the unit in the field name; there is no implicit unit inference.
///
/// Top-level sections: constants, conversion_defaults, gas, power, coupling,
/// solver. Omitted constants fall back to the benchmark values.
struct ScenarioGasNode {
  std::string id;
  GasNodeKind kind = GasNodeKind::Inner;
  std::optional<TimeSeries> flow;            // sources: inflow, sinks: outflow
  std::optional<CouplingKind> coupling;      // per-node override
};

struct ScenarioGasEdge {
  std::string id;
  GasEdgeKind kind = GasEdgeKind::Pipe;
  std::string from, to;
  double length_m = 0.0;
  double diameter_m = 0.0;
  double roughness_m = 8e-6;
  std::optional<double> cross_section_m2;    // non-pipes that take part in coupling
};

struct ScenarioBus {
  std::string id;
  BusKind type = BusKind::PQ;
  double demand_mw = 0.0;
  double demand_mvar = 0.0;
  double gen_mw = 0.0;
  double gen_mvar = 0.0;
  double v_setpoint_pu = 1.0;
  double angle_deg = 0.0;
  double shunt_gs_mw = 0.0;
  double shunt_bs_mvar = 0.0;
};

struct ScenarioLine {
  std::string id;
  std::string from, to;
  double r_pu = 0.0;
  double x_pu = 0.0;
  double b_pu = 0.0;
  double tap = 1.0;
  double shift_deg = 0.0;
};

struct ScenarioCoupling {
  std::string id;
  std::string gas_node;
  std::string bus;
  std::optional<double> e_gtp_m3_per_mj;  // default: from conversion_defaults
  std::optional<double> e_ptg_m3_per_mj;
  std::optional<double> epsilon_mw;
};

/// Initial pressure anchor for the stationary solve; defaults to 60 bar at the
/// first source when absent.
struct PressureAnchor {
  std::string node;
  double pressure_bar = 60.0;
};

enum class LoadProfileKind { SinusoidalDay, Constant };

struct Scenario {
  GasConstants constants;
  ConversionFactors factors;
  double default_epsilon_mw = 1.0;

  std::vector<ScenarioGasNode> gas_nodes;
  std::vector<ScenarioGasEdge> gas_edges;
  std::optional<PressureAnchor> anchor;

  double base_mva = 100.0;
  LoadProfileKind load_profile = LoadProfileKind::SinusoidalDay;
  std::vector<ScenarioBus> buses;
  std::vector<ScenarioLine> lines;

  std::vector<ScenarioCoupling> couplings;
  SolverConfig solver;

  /// Effective anchor after defaults are applied.
  PressureAnchor effective_anchor() const;
};

/// Parses and validates a native scenario document. Unknown keys, bad types
/// and out-of-range values are reported with their JSON path.
Scenario parse_scenario(const nlohmann::json& doc);
Scenario parse_scenario_text(const std::string& text);
Scenario load_scenario(const std::string& path);

nlohmann::json scenario_to_json(const Scenario& scenario);
void save_scenario(const Scenario& scenario, const std::string& path);

/// Builds the validated network graph from a scenario: resolves references,
/// computes pipe cross sections, inherits valve/compressor cross sections from
/// their single attached pipe, and runs the structural checks.
Network build_network(const Scenario& scenario);

}  // namespace gpsim
