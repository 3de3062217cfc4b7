#include "gpsim/scenario.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gpsim/errors.hpp"

namespace gpsim {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr int kFormatVersion = 1;

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError("scenario: " + path + ": " + message);
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
}

void check_keys(const json& j, const std::string& path,
                const std::set<std::string>& allowed) {
  expect_object(j, path);
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key()))
      fail(path + "." + item.key(), "unknown key");
  }
}

double get_number(const json& j, const std::string& path, const std::string& key,
                  std::optional<double> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required number");
  }
  if (!j.at(key).is_number()) fail(path + "." + key, "expected a number");
  return j.at(key).get<double>();
}

int get_int(const json& j, const std::string& path, const std::string& key,
            std::optional<int> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required integer");
  }
  if (!j.at(key).is_number_integer()) fail(path + "." + key, "expected an integer");
  return j.at(key).get<int>();
}

std::string get_string(const json& j, const std::string& path, const std::string& key,
                       std::optional<std::string> fallback = std::nullopt) {
  if (!j.contains(key)) {
    if (fallback) return *fallback;
    fail(path + "." + key, "missing required string");
  }
  if (!j.at(key).is_string()) fail(path + "." + key, "expected a string");
  return j.at(key).get<std::string>();
}

TimeSeries parse_flow(const json& node, const std::string& path) {
  const bool has_constant = node.contains("flow_m3_per_s");
  const bool has_series = node.contains("flow_series_m3_per_s");
  if (has_constant && has_series)
    fail(path, "give either flow_m3_per_s or flow_series_m3_per_s, not both");
  if (has_constant) {
    if (!node.at("flow_m3_per_s").is_number())
      fail(path + ".flow_m3_per_s", "expected a number");
    return TimeSeries::constant(node.at("flow_m3_per_s").get<double>());
  }
  const auto& series = node.at("flow_series_m3_per_s");
  if (!series.is_array() || series.empty())
    fail(path + ".flow_series_m3_per_s", "expected a non-empty array of [t_s, value]");
  std::vector<std::pair<double, double>> samples;
  for (const auto& entry : series) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
        !entry[1].is_number())
      fail(path + ".flow_series_m3_per_s", "each sample must be [t_s, value]");
    samples.emplace_back(entry[0].get<double>(), entry[1].get<double>());
  }
  return TimeSeries(std::move(samples));
}

GasNodeKind parse_node_kind(const std::string& s, const std::string& path) {
  if (s == "source") return GasNodeKind::Source;
  if (s == "sink") return GasNodeKind::Sink;
  if (s == "inner") return GasNodeKind::Inner;
  fail(path, "unknown gas node kind '" + s + "'");
}

GasEdgeKind parse_edge_kind(const std::string& s, const std::string& path) {
  if (s == "pipe") return GasEdgeKind::Pipe;
  if (s == "short_pipe") return GasEdgeKind::ShortPipe;
  if (s == "valve") return GasEdgeKind::Valve;
  if (s == "compressor") return GasEdgeKind::Compressor;
  fail(path, "unknown gas edge kind '" + s + "'");
}

CouplingKind parse_coupling_kind(const std::string& s, const std::string& path) {
  if (s == "pressure") return CouplingKind::Pressure;
  if (s == "bernoulli") return CouplingKind::Bernoulli;
  fail(path, "unknown coupling kind '" + s + "'");
}

BusKind parse_bus_kind(const std::string& s, const std::string& path) {
  if (s == "pq") return BusKind::PQ;
  if (s == "pv") return BusKind::PV;
  if (s == "slack") return BusKind::Slack;
  fail(path, "unknown bus type '" + s + "'");
}

const char* node_kind_name(GasNodeKind k) {
  switch (k) {
    case GasNodeKind::Source: return "source";
    case GasNodeKind::Sink: return "sink";
    case GasNodeKind::Inner: return "inner";
  }
  return "?";
}

const char* edge_kind_name(GasEdgeKind k) {
  switch (k) {
    case GasEdgeKind::Pipe: return "pipe";
    case GasEdgeKind::ShortPipe: return "short_pipe";
    case GasEdgeKind::Valve: return "valve";
    case GasEdgeKind::Compressor: return "compressor";
  }
  return "?";
}

const char* bus_kind_name(BusKind k) {
  switch (k) {
    case BusKind::PQ: return "pq";
    case BusKind::PV: return "pv";
    case BusKind::Slack: return "slack";
  }
  return "?";
}

}  // namespace

PressureAnchor Scenario::effective_anchor() const {
  if (anchor) return *anchor;
  for (const auto& node : gas_nodes)
    if (node.kind == GasNodeKind::Source) return {node.id, 60.0};
  if (!gas_nodes.empty()) return {gas_nodes.front().id, 60.0};
  return {"", 60.0};
}

Scenario parse_scenario(const json& doc) {
  check_keys(doc, "$", {"version", "constants", "conversion_defaults", "gas",
                        "power", "coupling", "solver"});
  if (get_int(doc, "$", "version", kFormatVersion) != kFormatVersion)
    fail("$.version", "unsupported scenario format version");

  Scenario sc;

  if (doc.contains("constants")) {
    const auto& c = doc.at("constants");
    check_keys(c, "$.constants",
               {"rho0_kg_per_m3", "p0_bar", "z0", "t0_kelvin", "t_kelvin",
                "alpha_per_bar", "viscosity_kg_per_m_s"});
    sc.constants.rho0 = get_number(c, "$.constants", "rho0_kg_per_m3", 0.785);
    sc.constants.p0_bar = get_number(c, "$.constants", "p0_bar", 1.01325);
    sc.constants.z0 = get_number(c, "$.constants", "z0", 1.005);
    sc.constants.t0_kelvin = get_number(c, "$.constants", "t0_kelvin", 273.15);
    sc.constants.t_kelvin = get_number(c, "$.constants", "t_kelvin", 283.15);
    sc.constants.alpha_per_bar = get_number(c, "$.constants", "alpha_per_bar", -0.00224);
    sc.constants.viscosity = get_number(c, "$.constants", "viscosity_kg_per_m_s", 1e-5);
  }
  sc.constants.validate();

  if (doc.contains("conversion_defaults")) {
    const auto& c = doc.at("conversion_defaults");
    check_keys(c, "$.conversion_defaults",
               {"eta_gtp", "eta_ptg", "heating_lower_mj_per_kg",
                "upper_heating_factor", "epsilon_mw"});
    sc.factors.eta_gtp = get_number(c, "$.conversion_defaults", "eta_gtp", 0.4);
    sc.factors.eta_ptg = get_number(c, "$.conversion_defaults", "eta_ptg", 0.8);
    sc.factors.heating_lower =
        get_number(c, "$.conversion_defaults", "heating_lower_mj_per_kg", 40.0);
    sc.factors.upper_factor =
        get_number(c, "$.conversion_defaults", "upper_heating_factor", 1.11);
    sc.default_epsilon_mw = get_number(c, "$.conversion_defaults", "epsilon_mw", 1.0);
  }
  sc.factors.validate();
  if (sc.default_epsilon_mw <= 0)
    fail("$.conversion_defaults.epsilon_mw", "smoothing width must be positive");

  if (doc.contains("gas")) {
    const auto& gas = doc.at("gas");
    check_keys(gas, "$.gas", {"nodes", "edges", "initial_pressure"});
    std::size_t i = 0;
    for (const auto& n : gas.value("nodes", json::array())) {
      const std::string path = "$.gas.nodes[" + std::to_string(i++) + "]";
      check_keys(n, path, {"id", "kind", "flow_m3_per_s", "flow_series_m3_per_s",
                           "coupling"});
      ScenarioGasNode node;
      node.id = get_string(n, path, "id");
      node.kind = parse_node_kind(get_string(n, path, "kind"), path + ".kind");
      if (n.contains("flow_m3_per_s") || n.contains("flow_series_m3_per_s")) {
        if (node.kind == GasNodeKind::Inner)
          fail(path, "inner nodes cannot carry a boundary flow");
        node.flow = parse_flow(n, path);
      }
      if (n.contains("coupling"))
        node.coupling = parse_coupling_kind(get_string(n, path, "coupling"),
                                            path + ".coupling");
      sc.gas_nodes.push_back(std::move(node));
    }
    i = 0;
    for (const auto& e : gas.value("edges", json::array())) {
      const std::string path = "$.gas.edges[" + std::to_string(i++) + "]";
      check_keys(e, path, {"id", "kind", "from", "to", "length_m", "diameter_m",
                           "roughness_m", "cross_section_m2"});
      ScenarioGasEdge edge;
      edge.id = get_string(e, path, "id");
      edge.kind = parse_edge_kind(get_string(e, path, "kind", "pipe"), path + ".kind");
      edge.from = get_string(e, path, "from");
      edge.to = get_string(e, path, "to");
      if (edge.kind == GasEdgeKind::Pipe) {
        edge.length_m = get_number(e, path, "length_m");
        edge.diameter_m = get_number(e, path, "diameter_m");
        edge.roughness_m = get_number(e, path, "roughness_m", 8e-6);
        if (edge.length_m <= 0 || edge.diameter_m <= 0 || edge.roughness_m <= 0)
          fail(path, "pipe geometry must be positive");
        if (e.contains("cross_section_m2"))
          fail(path + ".cross_section_m2",
               "pipe cross sections are derived from the diameter");
      } else {
        for (const char* key : {"length_m", "diameter_m", "roughness_m"})
          if (e.contains(key)) fail(path, "geometry is only valid on pipes");
        if (e.contains("cross_section_m2")) {
          edge.cross_section_m2 = get_number(e, path, "cross_section_m2");
          if (*edge.cross_section_m2 <= 0)
            fail(path + ".cross_section_m2", "cross section must be positive");
        }
      }
      sc.gas_edges.push_back(std::move(edge));
    }
    if (gas.contains("initial_pressure")) {
      const auto& a = gas.at("initial_pressure");
      check_keys(a, "$.gas.initial_pressure", {"node", "pressure_bar"});
      PressureAnchor anchor;
      anchor.node = get_string(a, "$.gas.initial_pressure", "node");
      anchor.pressure_bar = get_number(a, "$.gas.initial_pressure", "pressure_bar", 60.0);
      if (anchor.pressure_bar <= 0)
        fail("$.gas.initial_pressure.pressure_bar", "anchor pressure must be positive");
      sc.anchor = anchor;
    }
  }

  if (doc.contains("power")) {
    const auto& power = doc.at("power");
    check_keys(power, "$.power", {"base_mva", "load_profile", "buses", "lines"});
    sc.base_mva = get_number(power, "$.power", "base_mva", 100.0);
    if (sc.base_mva <= 0) fail("$.power.base_mva", "base must be positive");
    const std::string profile =
        get_string(power, "$.power", "load_profile", "sinusoidal_day");
    if (profile == "sinusoidal_day")
      sc.load_profile = LoadProfileKind::SinusoidalDay;
    else if (profile == "constant")
      sc.load_profile = LoadProfileKind::Constant;
    else
      fail("$.power.load_profile", "unknown load profile '" + profile + "'");

    std::size_t i = 0;
    for (const auto& b : power.value("buses", json::array())) {
      const std::string path = "$.power.buses[" + std::to_string(i++) + "]";
      check_keys(b, path, {"id", "type", "demand_mw", "demand_mvar", "gen_mw",
                           "gen_mvar", "v_setpoint_pu", "angle_deg",
                           "shunt_gs_mw", "shunt_bs_mvar"});
      ScenarioBus bus;
      bus.id = get_string(b, path, "id");
      bus.type = parse_bus_kind(get_string(b, path, "type"), path + ".type");
      bus.demand_mw = get_number(b, path, "demand_mw", 0.0);
      bus.demand_mvar = get_number(b, path, "demand_mvar", 0.0);
      bus.gen_mw = get_number(b, path, "gen_mw", 0.0);
      bus.gen_mvar = get_number(b, path, "gen_mvar", 0.0);
      bus.v_setpoint_pu = get_number(b, path, "v_setpoint_pu", 1.0);
      bus.angle_deg = get_number(b, path, "angle_deg", 0.0);
      bus.shunt_gs_mw = get_number(b, path, "shunt_gs_mw", 0.0);
      bus.shunt_bs_mvar = get_number(b, path, "shunt_bs_mvar", 0.0);
      if (bus.v_setpoint_pu <= 0) fail(path + ".v_setpoint_pu", "must be positive");
      sc.buses.push_back(std::move(bus));
    }
    i = 0;
    for (const auto& l : power.value("lines", json::array())) {
      const std::string path = "$.power.lines[" + std::to_string(i++) + "]";
      check_keys(l, path, {"id", "from", "to", "r_pu", "x_pu", "b_pu", "tap",
                           "shift_deg"});
      ScenarioLine line;
      line.id = get_string(l, path, "id");
      line.from = get_string(l, path, "from");
      line.to = get_string(l, path, "to");
      line.r_pu = get_number(l, path, "r_pu", 0.0);
      line.x_pu = get_number(l, path, "x_pu", 0.0);
      line.b_pu = get_number(l, path, "b_pu", 0.0);
      line.tap = get_number(l, path, "tap", 1.0);
      line.shift_deg = get_number(l, path, "shift_deg", 0.0);
      if (line.r_pu == 0.0 && line.x_pu == 0.0)
        fail(path, "line has zero series impedance");
      if (line.tap <= 0) fail(path + ".tap", "tap ratio must be positive");
      sc.lines.push_back(std::move(line));
    }
  }

  std::size_t i = 0;
  for (const auto& c : doc.value("coupling", json::array())) {
    const std::string path = "$.coupling[" + std::to_string(i++) + "]";
    check_keys(c, path, {"id", "gas_node", "bus", "e_gtp_m3_per_mj",
                         "e_ptg_m3_per_mj", "epsilon_mw"});
    ScenarioCoupling conv;
    conv.gas_node = get_string(c, path, "gas_node");
    conv.bus = get_string(c, path, "bus");
    conv.id = get_string(c, path, "id", conv.gas_node + ":" + conv.bus);
    if (c.contains("e_gtp_m3_per_mj"))
      conv.e_gtp_m3_per_mj = get_number(c, path, "e_gtp_m3_per_mj");
    if (c.contains("e_ptg_m3_per_mj"))
      conv.e_ptg_m3_per_mj = get_number(c, path, "e_ptg_m3_per_mj");
    if (c.contains("epsilon_mw")) {
      conv.epsilon_mw = get_number(c, path, "epsilon_mw");
      if (*conv.epsilon_mw <= 0) fail(path + ".epsilon_mw", "must be positive");
    }
    sc.couplings.push_back(std::move(conv));
  }

  if (doc.contains("solver")) {
    const auto& s = doc.at("solver");
    check_keys(s, "$.solver",
               {"t_horizon_s", "dt_s", "dx_m", "newton_tol", "max_newton_iters",
                "max_step_halvings", "jacobian"});
    sc.solver.t_horizon_s = get_number(s, "$.solver", "t_horizon_s", 86400.0);
    sc.solver.dt_s = get_number(s, "$.solver", "dt_s", 900.0);
    sc.solver.dx_target_m = get_number(s, "$.solver", "dx_m", 1000.0);
    sc.solver.newton_tol = get_number(s, "$.solver", "newton_tol", 1e-8);
    sc.solver.max_newton_iters = get_int(s, "$.solver", "max_newton_iters", 50);
    sc.solver.max_step_halvings = get_int(s, "$.solver", "max_step_halvings", 30);
    const std::string jac = get_string(s, "$.solver", "jacobian", "analytic");
    if (jac == "analytic")
      sc.solver.jacobian = JacobianMode::Analytic;
    else if (jac == "finite_difference")
      sc.solver.jacobian = JacobianMode::FiniteDifference;
    else
      fail("$.solver.jacobian", "unknown jacobian mode '" + jac + "'");
  }
  sc.solver.validate();

  return sc;
}

Scenario parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("scenario: invalid JSON: ") + e.what());
  }
  return parse_scenario(doc);
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_text(buffer.str());
}

nlohmann::json scenario_to_json(const Scenario& sc) {
  json doc;
  doc["version"] = kFormatVersion;
  doc["constants"] = {{"rho0_kg_per_m3", sc.constants.rho0},
                      {"p0_bar", sc.constants.p0_bar},
                      {"z0", sc.constants.z0},
                      {"t0_kelvin", sc.constants.t0_kelvin},
                      {"t_kelvin", sc.constants.t_kelvin},
                      {"alpha_per_bar", sc.constants.alpha_per_bar},
                      {"viscosity_kg_per_m_s", sc.constants.viscosity}};
  doc["conversion_defaults"] = {{"eta_gtp", sc.factors.eta_gtp},
                                {"eta_ptg", sc.factors.eta_ptg},
                                {"heating_lower_mj_per_kg", sc.factors.heating_lower},
                                {"upper_heating_factor", sc.factors.upper_factor},
                                {"epsilon_mw", sc.default_epsilon_mw}};

  json nodes = json::array();
  for (const auto& n : sc.gas_nodes) {
    json node{{"id", n.id}, {"kind", node_kind_name(n.kind)}};
    if (n.flow) {
      if (n.flow->is_constant()) {
        node["flow_m3_per_s"] = n.flow->samples().front().second;
      } else {
        json series = json::array();
        for (const auto& [t, v] : n.flow->samples()) series.push_back({t, v});
        node["flow_series_m3_per_s"] = series;
      }
    }
    if (n.coupling)
      node["coupling"] = *n.coupling == CouplingKind::Pressure ? "pressure" : "bernoulli";
    nodes.push_back(std::move(node));
  }
  json edges = json::array();
  for (const auto& e : sc.gas_edges) {
    json edge{{"id", e.id},
              {"kind", edge_kind_name(e.kind)},
              {"from", e.from},
              {"to", e.to}};
    if (e.kind == GasEdgeKind::Pipe) {
      edge["length_m"] = e.length_m;
      edge["diameter_m"] = e.diameter_m;
      edge["roughness_m"] = e.roughness_m;
    } else if (e.cross_section_m2) {
      edge["cross_section_m2"] = *e.cross_section_m2;
    }
    edges.push_back(std::move(edge));
  }
  doc["gas"] = {{"nodes", nodes}, {"edges", edges}};
  if (sc.anchor)
    doc["gas"]["initial_pressure"] = {{"node", sc.anchor->node},
                                      {"pressure_bar", sc.anchor->pressure_bar}};

  json buses = json::array();
  for (const auto& b : sc.buses) {
    json bus{{"id", b.id}, {"type", bus_kind_name(b.type)}};
    if (b.demand_mw != 0.0) bus["demand_mw"] = b.demand_mw;
    if (b.demand_mvar != 0.0) bus["demand_mvar"] = b.demand_mvar;
    if (b.gen_mw != 0.0) bus["gen_mw"] = b.gen_mw;
    if (b.gen_mvar != 0.0) bus["gen_mvar"] = b.gen_mvar;
    bus["v_setpoint_pu"] = b.v_setpoint_pu;
    if (b.angle_deg != 0.0) bus["angle_deg"] = b.angle_deg;
    if (b.shunt_gs_mw != 0.0) bus["shunt_gs_mw"] = b.shunt_gs_mw;
    if (b.shunt_bs_mvar != 0.0) bus["shunt_bs_mvar"] = b.shunt_bs_mvar;
    buses.push_back(std::move(bus));
  }
  json lines = json::array();
  for (const auto& l : sc.lines) {
    json line{{"id", l.id}, {"from", l.from}, {"to", l.to},
              {"r_pu", l.r_pu},  {"x_pu", l.x_pu}};
    if (l.b_pu != 0.0) line["b_pu"] = l.b_pu;
    if (l.tap != 1.0) line["tap"] = l.tap;
    if (l.shift_deg != 0.0) line["shift_deg"] = l.shift_deg;
    lines.push_back(std::move(line));
  }
  doc["power"] = {{"base_mva", sc.base_mva},
                  {"load_profile", sc.load_profile == LoadProfileKind::SinusoidalDay
                                       ? "sinusoidal_day"
                                       : "constant"},
                  {"buses", buses},
                  {"lines", lines}};

  json couplings = json::array();
  for (const auto& c : sc.couplings) {
    json conv{{"id", c.id}, {"gas_node", c.gas_node}, {"bus", c.bus}};
    if (c.e_gtp_m3_per_mj) conv["e_gtp_m3_per_mj"] = *c.e_gtp_m3_per_mj;
    if (c.e_ptg_m3_per_mj) conv["e_ptg_m3_per_mj"] = *c.e_ptg_m3_per_mj;
    if (c.epsilon_mw) conv["epsilon_mw"] = *c.epsilon_mw;
    couplings.push_back(std::move(conv));
  }
  doc["coupling"] = couplings;

  doc["solver"] = {{"t_horizon_s", sc.solver.t_horizon_s},
                   {"dt_s", sc.solver.dt_s},
                   {"dx_m", sc.solver.dx_target_m},
                   {"newton_tol", sc.solver.newton_tol},
                   {"max_newton_iters", sc.solver.max_newton_iters},
                   {"max_step_halvings", sc.solver.max_step_halvings},
                   {"jacobian", sc.solver.jacobian == JacobianMode::Analytic
                                    ? "analytic"
                                    : "finite_difference"}};
  return doc;
}

void save_scenario(const Scenario& scenario, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write scenario file '" + path + "'");
  out << scenario_to_json(scenario).dump(2) << "\n";
}

Network build_network(const Scenario& sc) {
  Network net;
  net.base_mva = sc.base_mva;

  for (const auto& n : sc.gas_nodes) {
    GasNode node;
    node.id = n.id;
    node.kind = n.kind;
    node.coupling_override = n.coupling;
    if (n.kind != GasNodeKind::Inner)
      node.boundary_flow = n.flow.value_or(TimeSeries::constant(0.0));
    if (net.gas_node_index(n.id) >= 0)
      throw ValidationError("duplicate gas node id '" + n.id + "'");
    net.gas_nodes.push_back(std::move(node));
  }
  for (const auto& e : sc.gas_edges) {
    GasEdge edge;
    edge.id = e.id;
    edge.kind = e.kind;
    edge.from = net.gas_node_index(e.from);
    edge.to = net.gas_node_index(e.to);
    if (edge.from < 0)
      throw ValidationError("gas edge '" + e.id + "' references unknown node '" +
                            e.from + "'");
    if (edge.to < 0)
      throw ValidationError("gas edge '" + e.id + "' references unknown node '" +
                            e.to + "'");
    if (e.kind == GasEdgeKind::Pipe) {
      edge.length = e.length_m;
      edge.diameter = e.diameter_m;
      edge.roughness = e.roughness_m;
      edge.area = kPi * e.diameter_m * e.diameter_m / 4.0;
    } else {
      edge.area = e.cross_section_m2;
    }
    net.gas_edges.push_back(std::move(edge));
  }
  for (const auto& b : sc.buses) {
    Bus bus;
    bus.id = b.id;
    bus.kind = b.type;
    bus.demand_p_mw = b.demand_mw;
    bus.demand_q_mvar = b.demand_mvar;
    bus.gen_p_mw = b.gen_mw;
    bus.gen_q_mvar = b.gen_mvar;
    bus.v_setpoint = b.v_setpoint_pu;
    bus.angle_rad = b.angle_deg * kPi / 180.0;
    bus.shunt_gs_mw = b.shunt_gs_mw;
    bus.shunt_bs_mvar = b.shunt_bs_mvar;
    if (net.bus_index(b.id) >= 0)
      throw ValidationError("duplicate bus id '" + b.id + "'");
    net.buses.push_back(std::move(bus));
  }
  for (const auto& l : sc.lines) {
    PowerLine line;
    line.id = l.id;
    line.from = net.bus_index(l.from);
    line.to = net.bus_index(l.to);
    if (line.from < 0 || line.to < 0)
      throw ValidationError("line '" + l.id + "' references an unknown bus");
    line.r = l.r_pu;
    line.x = l.x_pu;
    line.charging = l.b_pu;
    line.tap = l.tap;
    line.shift_rad = l.shift_deg * kPi / 180.0;
    net.lines.push_back(std::move(line));
  }
  for (const auto& c : sc.couplings) {
    ConversionEdge conv;
    conv.id = c.id;
    conv.gas_node = net.gas_node_index(c.gas_node);
    conv.bus = net.bus_index(c.bus);
    if (conv.gas_node < 0)
      throw ValidationError("conversion edge '" + c.id +
                            "' references unknown gas node '" + c.gas_node + "'");
    if (conv.bus < 0)
      throw ValidationError("conversion edge '" + c.id +
                            "' references unknown bus '" + c.bus + "'");
    conv.e_gtp = c.e_gtp_m3_per_mj.value_or(sc.factors.e_gtp(sc.constants.rho0));
    conv.e_ptg = c.e_ptg_m3_per_mj.value_or(sc.factors.e_ptg(sc.constants.rho0));
    conv.epsilon_mw = c.epsilon_mw.value_or(sc.default_epsilon_mw);
    net.conversions.push_back(std::move(conv));
  }

  net.incident.assign(net.gas_nodes.size(), {});
  for (std::size_t e = 0; e < net.gas_edges.size(); ++e) {
    net.incident[net.gas_edges[e].from].push_back(
        {Network::IncidentEnd::Owner::GasEdge, static_cast<int>(e), false});
    net.incident[net.gas_edges[e].to].push_back(
        {Network::IncidentEnd::Owner::GasEdge, static_cast<int>(e), true});
  }
  for (std::size_t c = 0; c < net.conversions.size(); ++c) {
    // the gas node is the 'from' side of a plant edge: positive flow leaves it
    net.incident[net.conversions[c].gas_node].push_back(
        {Network::IncidentEnd::Owner::Conversion, static_cast<int>(c), false});
  }

  // Valves and compressors inherit the cross section of their single attached
  // pipe so coupling can reach across them.
  for (auto& edge : net.gas_edges) {
    if (edge.kind != GasEdgeKind::Valve && edge.kind != GasEdgeKind::Compressor)
      continue;
    if (edge.area.has_value()) continue;
    std::vector<int> attached_pipes;
    for (int node : {edge.from, edge.to}) {
      for (const auto& end : net.incident[node]) {
        if (end.owner != Network::IncidentEnd::Owner::GasEdge) continue;
        const auto& other = net.gas_edges[end.index];
        if (other.is_pipe()) attached_pipes.push_back(end.index);
      }
    }
    if (attached_pipes.size() != 1)
      throw ValidationError("cannot infer a cross section for '" + edge.id +
                            "': expected exactly one attached pipe, found " +
                            std::to_string(attached_pipes.size()));
    edge.area = net.gas_edges[attached_pipes.front()].area;
  }

  net.validate();
  return net;
}

}  // namespace gpsim
