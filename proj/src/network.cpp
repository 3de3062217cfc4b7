#include "gpsim/network.hpp"

#include <cmath>
#include <queue>
#include <sstream>

#include "gpsim/conversion.hpp"
#include "gpsim/errors.hpp"

namespace gpsim {

double GasNode::balance_term(double t) const {
  switch (kind) {
    case GasNodeKind::Source:
      return boundary_flow.at(t);
    case GasNodeKind::Sink:
      return -boundary_flow.at(t);
    case GasNodeKind::Inner:
      return 0.0;
  }
  return 0.0;
}

int Network::gas_node_index(const std::string& id) const {
  for (std::size_t i = 0; i < gas_nodes.size(); ++i)
    if (gas_nodes[i].id == id) return static_cast<int>(i);
  return -1;
}

int Network::bus_index(const std::string& id) const {
  for (std::size_t i = 0; i < buses.size(); ++i)
    if (buses[i].id == id) return static_cast<int>(i);
  return -1;
}

int Network::degree(int gas_node) const {
  return static_cast<int>(incident[gas_node].size());
}

std::optional<double> Network::end_area(const IncidentEnd& end) const {
  if (end.owner == IncidentEnd::Owner::Conversion) return std::nullopt;
  return gas_edges[end.index].area;
}

CouplingKind Network::effective_coupling(int gas_node,
                                         CouplingKind requested) const {
  const auto& node = gas_nodes[gas_node];
  CouplingKind kind = node.coupling_override.value_or(requested);
  if (kind == CouplingKind::Pressure) return CouplingKind::Pressure;
  for (const auto& end : incident[gas_node]) {
    if (!end_area(end).has_value()) return CouplingKind::Pressure;
  }
  return CouplingKind::Bernoulli;
}

void Network::validate() const {
  for (const auto& e : gas_edges) {
    if (e.from < 0 || e.from >= static_cast<int>(gas_nodes.size()) ||
        e.to < 0 || e.to >= static_cast<int>(gas_nodes.size()))
      throw ValidationError("gas edge '" + e.id + "' references a missing node");
    if (e.from == e.to)
      throw ValidationError("gas edge '" + e.id + "' is a self loop");
    if (e.is_pipe()) {
      if (e.length <= 0 || e.diameter <= 0 || e.roughness <= 0)
        throw ValidationError("pipe '" + e.id +
                              "' requires positive length, diameter and roughness");
      if (!e.area.has_value())
        throw ValidationError("pipe '" + e.id + "' is missing its cross section");
    }
  }
  for (std::size_t n = 0; n < gas_nodes.size(); ++n) {
    if (incident[n].empty())
      throw ValidationError("gas node '" + gas_nodes[n].id + "' has degree 0");
  }
  for (const auto& c : conversions) {
    if (c.gas_node < 0 || c.gas_node >= static_cast<int>(gas_nodes.size()))
      throw ValidationError("conversion edge '" + c.id + "' references a missing gas node");
    if (gas_nodes[c.gas_node].kind != GasNodeKind::Sink)
      throw ValidationError("conversion edge '" + c.id + "' must attach to a gas sink");
    if (c.bus < 0 || c.bus >= static_cast<int>(buses.size()))
      throw ValidationError("conversion edge '" + c.id + "' references a missing bus");
    if (buses[c.bus].kind != BusKind::Slack)
      throw ValidationError("conversion edge '" + c.id + "' must attach to a slack bus");
    if (c.e_gtp <= 0 || c.e_ptg <= 0 || c.epsilon_mw <= 0)
      throw ValidationError("conversion edge '" + c.id +
                            "' requires positive factors and smoothing width");
    if (conversion_min_slope(c.e_gtp, c.e_ptg) <= 0)
      throw ValidationError("conversion edge '" + c.id +
                            "' has a non-monotone smoothed law; adjust the factors");
  }

  // Every gas component must see at least one source.
  if (!gas_nodes.empty()) {
    std::vector<int> component(gas_nodes.size(), -1);
    int n_components = 0;
    for (std::size_t start = 0; start < gas_nodes.size(); ++start) {
      if (component[start] >= 0) continue;
      const int comp = n_components++;
      std::queue<int> frontier;
      frontier.push(static_cast<int>(start));
      component[start] = comp;
      while (!frontier.empty()) {
        const int n = frontier.front();
        frontier.pop();
        for (const auto& end : incident[n]) {
          if (end.owner != IncidentEnd::Owner::GasEdge) continue;
          const auto& e = gas_edges[end.index];
          const int other = end.at_to ? e.from : e.to;
          if (component[other] < 0) {
            component[other] = comp;
            frontier.push(other);
          }
        }
      }
    }
    std::vector<bool> has_source(n_components, false);
    for (std::size_t n = 0; n < gas_nodes.size(); ++n)
      if (gas_nodes[n].kind == GasNodeKind::Source) has_source[component[n]] = true;
    for (std::size_t n = 0; n < gas_nodes.size(); ++n)
      if (!has_source[component[n]])
        throw ValidationError("gas node '" + gas_nodes[n].id +
                              "' lies in a component with no source");
  }

  // Every electrical component must contain a slack bus.
  if (!buses.empty()) {
    for (const auto& l : lines) {
      if (l.from < 0 || l.from >= static_cast<int>(buses.size()) || l.to < 0 ||
          l.to >= static_cast<int>(buses.size()))
        throw ValidationError("line '" + l.id + "' references a missing bus");
      if (l.r == 0.0 && l.x == 0.0)
        throw ValidationError("line '" + l.id + "' has zero series impedance");
    }
    std::vector<int> component(buses.size(), -1);
    std::vector<std::vector<int>> adjacency(buses.size());
    for (const auto& l : lines) {
      adjacency[l.from].push_back(l.to);
      adjacency[l.to].push_back(l.from);
    }
    int n_components = 0;
    for (std::size_t start = 0; start < buses.size(); ++start) {
      if (component[start] >= 0) continue;
      const int comp = n_components++;
      std::queue<int> frontier;
      frontier.push(static_cast<int>(start));
      component[start] = comp;
      while (!frontier.empty()) {
        const int n = frontier.front();
        frontier.pop();
        for (int other : adjacency[n]) {
          if (component[other] < 0) {
            component[other] = comp;
            frontier.push(other);
          }
        }
      }
    }
    std::vector<bool> has_slack(n_components, false);
    for (std::size_t b = 0; b < buses.size(); ++b)
      if (buses[b].kind == BusKind::Slack) has_slack[component[b]] = true;
    for (std::size_t b = 0; b < buses.size(); ++b)
      if (!has_slack[component[b]])
        throw ValidationError("bus '" + buses[b].id +
                              "' lies in a component with no slack bus");
  }

  for (const auto& node : gas_nodes) {
    if (node.kind == GasNodeKind::Inner && !node.boundary_flow.empty())
      throw ValidationError("inner node '" + node.id + "' must not carry a boundary flow");
  }
}

std::string UnknownLayout::Counts::describe() const {
  std::ostringstream os;
  os << "scheme=" << scheme << " identities=" << identities
     << " conversion=" << conversion << " node_balance=" << node_balance
     << " node_invariant=" << node_invariant << " power_flow=" << power_flow
     << " bus_spec=" << bus_spec << " total=" << equations();
  return os.str();
}

UnknownLayout build_layout(const Network& network, double dx_target) {
  if (dx_target <= 0) throw ValidationError("dx target must be positive");
  UnknownLayout layout;
  layout.pipe_block_of_edge.assign(network.gas_edges.size(), -1);
  layout.non_pipe_block_of_edge.assign(network.gas_edges.size(), -1);

  int next = 0;
  for (std::size_t e = 0; e < network.gas_edges.size(); ++e) {
    const auto& edge = network.gas_edges[e];
    if (!edge.is_pipe()) continue;
    UnknownLayout::PipeBlock block;
    block.edge = static_cast<int>(e);
    block.first = next;
    block.cells = std::max(1, static_cast<int>(std::lround(edge.length / dx_target)));
    block.dx = edge.length / block.cells;
    layout.pipe_block_of_edge[e] = static_cast<int>(layout.pipes.size());
    layout.pipes.push_back(block);
    next += 2 * (block.cells + 1);
    layout.counts.scheme += 2 * block.cells;
  }
  for (std::size_t e = 0; e < network.gas_edges.size(); ++e) {
    const auto& edge = network.gas_edges[e];
    if (edge.is_pipe()) continue;
    layout.non_pipe_block_of_edge[e] = static_cast<int>(layout.non_pipes.size());
    layout.non_pipes.push_back({static_cast<int>(e), next});
    next += 4;
    layout.counts.identities += 2;
  }
  layout.conversion_end_first.resize(network.conversions.size());
  for (std::size_t c = 0; c < network.conversions.size(); ++c) {
    layout.conversion_end_first[c] = next;
    next += 4;
    layout.counts.identities += 2;  // rho_in = rho_out, q_in = q_out
  }
  layout.bus_first.resize(network.buses.size());
  for (std::size_t b = 0; b < network.buses.size(); ++b) {
    layout.bus_first[b] = next;
    next += 4;
  }
  layout.counts.power_flow = 2 * static_cast<int>(network.buses.size());
  layout.counts.bus_spec = 2 * static_cast<int>(network.buses.size());

  layout.conversion_flow.resize(network.conversions.size());
  for (std::size_t c = 0; c < network.conversions.size(); ++c) {
    layout.conversion_flow[c] = next++;
    layout.counts.conversion += 2;  // flow tie + conversion law
  }
  layout.total = next;

  for (std::size_t n = 0; n < network.gas_nodes.size(); ++n) {
    layout.counts.node_balance += 1;
    layout.counts.node_invariant += network.degree(static_cast<int>(n)) - 1;
  }

  if (layout.counts.equations() != layout.total) {
    throw Error("unknown/equation count mismatch: " +
                std::to_string(layout.total) + " unknowns vs " +
                layout.counts.describe());
  }
  return layout;
}

}  // namespace gpsim
