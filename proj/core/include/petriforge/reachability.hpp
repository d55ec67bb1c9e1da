#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "petriforge/net.hpp"

namespace petriforge {

using NodeId = std::uint32_t;

struct Edge {
  NodeId from = 0;
  TransitionId label;
  NodeId to = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct ExplorationLimits {
  std::size_t max_nodes = 10'000'000;
  std::size_t max_edges = 200'000'000;
};

/// Reachable markings and the firing relation between them.
///
/// Node ids follow breadth-first discovery order with transitions expanded in
/// ascending index order, so node 0 is the initial marking and edges are
/// grouped by source node.
class ReachabilityGraph {
 public:
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  const Marking& marking(NodeId n) const { return nodes_.at(n); }
  std::span<const Marking> markings() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Edge> out_edges(NodeId n) const;

 private:
  friend ReachabilityGraph build_reachability_graph(const MarkedNet&, const ExplorationLimits&);

  std::vector<Marking> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> first_edge_;  // size node_count()+1
};

/// Full explicit exploration. Throws LimitExceededError (with the counts at
/// the point of abort) once either limit would be crossed.
ReachabilityGraph build_reachability_graph(const MarkedNet& mn,
                                           const ExplorationLimits& limits = {});

std::size_t state_space_size(const ReachabilityGraph& g);

/// Nodes whose marking enables no transition.
std::vector<NodeId> deadlock_markings(const PetriNet& net, const ReachabilityGraph& g);

/// Largest max_concurrency_degree over all nodes of the graph.
std::size_t max_concurrency_over(const PetriNet& net, const ReachabilityGraph& g);

}  // namespace petriforge
