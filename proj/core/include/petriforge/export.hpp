#pragma once

#include <span>
#include <string>

#include "petriforge/coverability.hpp"
#include "petriforge/models.hpp"
#include "petriforge/net.hpp"
#include "petriforge/reachability.hpp"

namespace petriforge {

/// Places as circles labelled with their tokens, transitions as boxes, arc
/// weights above 1 as edge labels.
std::string export_dot_net(const MarkedNet& mn);

/// One node per marking labelled with its vector, edges labelled with the
/// fired transition.
std::string export_dot_graph(const PetriNet& net, const ReachabilityGraph& g);
std::string export_dot_graph(const PetriNet& net, const CoverabilityGraph& g);

/// "p,states,edges" header then one row per entry, LF line endings. Rows must
/// be nonempty; they are written in ascending p.
std::string export_sweep_csv(std::span<const SweepRow> rows);

}  // namespace petriforge
