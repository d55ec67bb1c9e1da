#include "petriforge/reachability.hpp"

#include <algorithm>
#include <unordered_map>

namespace petriforge {

std::span<const Edge> ReachabilityGraph::out_edges(NodeId n) const {
  if (n >= nodes_.size()) throw IndexError("node " + std::to_string(n) + " out of range");
  return std::span<const Edge>(edges_).subspan(first_edge_[n], first_edge_[n + 1] - first_edge_[n]);
}

ReachabilityGraph build_reachability_graph(const MarkedNet& mn, const ExplorationLimits& limits) {
  const PetriNet& net = mn.net();
  ReachabilityGraph g;
  std::unordered_map<Marking, NodeId> index;

  auto add_node = [&](Marking m) -> NodeId {
    auto [it, inserted] = index.try_emplace(m, static_cast<NodeId>(g.nodes_.size()));
    if (inserted) {
      if (g.nodes_.size() >= limits.max_nodes) {
        throw LimitExceededError("reachability exploration exceeded " +
                                     std::to_string(limits.max_nodes) + " nodes",
                                 g.nodes_.size(), g.edges_.size());
      }
      g.nodes_.push_back(std::move(m));
    }
    return it->second;
  };

  add_node(mn.initial());
  // BFS: the node vector doubles as the queue.
  for (NodeId current = 0; current < g.nodes_.size(); ++current) {
    g.first_edge_.push_back(g.edges_.size());
    for (TransitionId t : enabled_set(net, g.nodes_[current])) {
      Marking next = fire(net, g.nodes_[current], t);
      const NodeId to = add_node(std::move(next));
      if (g.edges_.size() >= limits.max_edges) {
        throw LimitExceededError("reachability exploration exceeded " +
                                     std::to_string(limits.max_edges) + " edges",
                                 g.nodes_.size(), g.edges_.size());
      }
      g.edges_.push_back({current, t, to});
    }
  }
  g.first_edge_.push_back(g.edges_.size());
  return g;
}

std::size_t state_space_size(const ReachabilityGraph& g) { return g.node_count(); }

std::vector<NodeId> deadlock_markings(const PetriNet& net, const ReachabilityGraph& g) {
  std::vector<NodeId> out;
  for (NodeId n = 0; n < g.node_count(); ++n) {
    if (enabled_set(net, g.marking(n)).empty()) out.push_back(n);
  }
  return out;
}

std::size_t max_concurrency_over(const PetriNet& net, const ReachabilityGraph& g) {
  std::size_t best = 0;
  for (const Marking& m : g.markings()) best = std::max(best, max_concurrency_degree(net, m));
  return best;
}

}  // namespace petriforge
