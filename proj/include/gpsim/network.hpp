#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gpsim/constants.hpp"
#include "gpsim/time_series.hpp"

namespace gpsim {

enum class GasNodeKind { Source, Sink, Inner };
enum class GasEdgeKind { Pipe, ShortPipe, Valve, Compressor };
enum class CouplingKind { Pressure, Bernoulli };
enum class BusKind { PQ, PV, Slack };

/// Gas node. Sources and sinks carry a prescribed boundary flow series
/// (inflow for sources, outflow for sinks, both positive); inner nodes do not.
struct GasNode {
  std::string id;
  GasNodeKind kind = GasNodeKind::Inner;
  TimeSeries boundary_flow;                       // [m^3/s] at standard conditions
  std::optional<CouplingKind> coupling_override;  // per-node coupling choice

  /// Signed boundary term of the node balance: +inflow, -outflow, 0 for inner.
  double balance_term(double t) const;
};

/// Gas edge. Valves and compressors are treated as short pipes; they carry a
/// cross section inherited from their single attached pipe so that Bernoulli
/// coupling can reach across them.
struct GasEdge {
  std::string id;
  GasEdgeKind kind = GasEdgeKind::Pipe;
  int from = -1;
  int to = -1;
  double length = 0.0;    // [m], pipes only
  double diameter = 0.0;  // [m], pipes only
  double roughness = 0.0; // [m], pipes only
  std::optional<double> area;  // [m^2]; always set for pipes

  bool is_pipe() const { return kind == GasEdgeKind::Pipe; }
};

/// Conversion plant edge between a gas sink and a slack bus. Positive flow
/// means gas is withdrawn and converted to power.
struct ConversionEdge {
  std::string id;
  int gas_node = -1;
  int bus = -1;
  double e_gtp = 0.0;      // [m^3/MJ]
  double e_ptg = 0.0;      // [m^3/MJ]
  double epsilon_mw = 1.0; // smoothing half-width [MW]
};

/// Electrical bus. Exactly two of (V, phi, P, Q) are fixed by the kind:
/// PQ fixes the powers, PV fixes active power and voltage magnitude, slack
/// fixes magnitude and angle.
struct Bus {
  std::string id;
  BusKind kind = BusKind::PQ;
  double demand_p_mw = 0.0;   // base active demand
  double demand_q_mvar = 0.0; // base reactive demand
  double gen_p_mw = 0.0;      // scheduled active generation
  double gen_q_mvar = 0.0;    // scheduled reactive generation (PQ buses with units)
  double v_setpoint = 1.0;    // [p.u.], PV and slack
  double angle_rad = 0.0;     // slack angle reference
  double shunt_gs_mw = 0.0;   // shunt conductance, MW at V = 1 p.u.
  double shunt_bs_mvar = 0.0; // shunt susceptance, MVAr at V = 1 p.u.
};

struct PowerLine {
  std::string id;
  int from = -1;
  int to = -1;
  double r = 0.0;          // series resistance [p.u.]
  double x = 0.0;          // series reactance [p.u.]
  double charging = 0.0;   // total line charging susceptance [p.u.]
  double tap = 1.0;        // off-nominal turns ratio (1 = none)
  double shift_rad = 0.0;  // phase shift
};

/// Validated typed graph of the combined network with derived connectivity.
struct Network {
  std::vector<GasNode> gas_nodes;
  std::vector<GasEdge> gas_edges;
  std::vector<ConversionEdge> conversions;
  std::vector<Bus> buses;
  std::vector<PowerLine> lines;
  double base_mva = 100.0;

  /// One incident edge end at a gas node.
  struct IncidentEnd {
    enum class Owner { GasEdge, Conversion };
    Owner owner;
    int index;   // into gas_edges or conversions
    bool at_to;  // flow into the node counts +q at the 'to' end, -q at 'from'
  };
  std::vector<std::vector<IncidentEnd>> incident;  // per gas node

  int gas_node_index(const std::string& id) const;  // -1 when absent
  int bus_index(const std::string& id) const;
  int degree(int gas_node) const;

  /// Cross section seen by a node through one incident end, if the edge has one.
  std::optional<double> end_area(const IncidentEnd& end) const;

  /// Coupling rule actually used at a node: Bernoulli is demoted to pressure
  /// whenever any incident end lacks a cross section, or when the node carries
  /// a pressure override.
  CouplingKind effective_coupling(int gas_node, CouplingKind requested) const;

  /// Structural validation: resolvable endpoints, per-kind invariants, cross
  /// section inheritance for valves/compressors, at least one source per gas
  /// component, at least one slack per electrical component, conversion edges
  /// between sinks and slack buses. Throws ValidationError.
  void validate() const;
};

/// Index layout of the global unknown vector. Blocks in order: per-pipe
/// interleaved (rho, q) grid states; non-pipe edge end states
/// (rho_in, q_in, rho_out, q_out), conversion edges included; per-bus
/// (V, phi, P, Q); one conversion flow per plant.
struct UnknownLayout {
  struct PipeBlock {
    int edge = -1;   // index into gas_edges
    int first = 0;
    int cells = 0;   // M; grid points = M + 1
    double dx = 0.0;
  };
  struct NonPipeBlock {
    int edge = -1;
    int first = 0;
  };

  std::vector<PipeBlock> pipes;
  std::vector<NonPipeBlock> non_pipes;     // short pipes, valves, compressors
  std::vector<int> pipe_block_of_edge;     // -1 for non-pipes
  std::vector<int> non_pipe_block_of_edge; // -1 for pipes
  std::vector<int> conversion_end_first;   // per conversion edge, 4 end states
  std::vector<int> bus_first;              // per bus
  std::vector<int> conversion_flow;        // per conversion edge
  int total = 0;

  int rho_index(const PipeBlock& b, int point) const { return b.first + 2 * point; }
  int q_index(const PipeBlock& b, int point) const { return b.first + 2 * point + 1; }
  int v_index(int bus) const { return bus_first[bus]; }
  int phi_index(int bus) const { return bus_first[bus] + 1; }
  int p_index(int bus) const { return bus_first[bus] + 2; }
  int q_bus_index(int bus) const { return bus_first[bus] + 3; }

  /// Equation budget per category; built alongside the layout and required to
  /// match `total` exactly.
  struct Counts {
    int scheme = 0;          // 2 per pipe cell
    int identities = 0;      // 2 per non-pipe edge (incl. conversion end pairs)
    int conversion = 0;      // flow tie + conversion law per plant
    int node_balance = 0;    // 1 per gas node
    int node_invariant = 0;  // degree - 1 per gas node
    int power_flow = 0;      // 2 per bus
    int bus_spec = 0;        // 2 per bus
    int equations() const {
      return scheme + identities + conversion + node_balance + node_invariant +
             power_flow + bus_spec;
    }
    std::string describe() const;
  };
  Counts counts;
};

/// Builds the unknown layout; every pipe receives M = max(1, round(L/dx_target))
/// cells. Throws if the equation budget does not match the unknown count.
UnknownLayout build_layout(const Network& network, double dx_target);

}  // namespace gpsim
