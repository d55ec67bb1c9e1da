#include "petriforge/export.hpp"

#include <algorithm>

#include "petriforge/error.hpp"

namespace petriforge {

namespace {

std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    if (ch == '\n') {
      out += "\\n";
      continue;
    }
    out += ch;
  }
  out += '"';
  return out;
}

template <class Graph>
std::string dot_graph(const PetriNet& net, const Graph& g) {
  std::string out = "digraph reachability {\n  node [shape=ellipse];\n";
  for (NodeId n = 0; n < g.node_count(); ++n) {
    out += "  m" + std::to_string(n) + " [label=" + quote(g.marking(n).to_string()) + "];\n";
  }
  for (const Edge& e : g.edges()) {
    out += "  m" + std::to_string(e.from) + " -> m" + std::to_string(e.to) +
           " [label=" + quote(net.transition_name(e.label)) + "];\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string export_dot_net(const MarkedNet& mn) {
  const PetriNet& net = mn.net();
  std::string out = "digraph net {\n  rankdir=LR;\n";
  for (std::uint32_t i = 0; i < net.place_count(); ++i) {
    const PlaceId p{i};
    out += "  p" + std::to_string(i) + " [shape=circle, label=" +
           quote(net.place_name(p) + "\n" + std::to_string(mn.initial()[p])) + "];\n";
  }
  for (std::uint32_t i = 0; i < net.transition_count(); ++i) {
    out += "  t" + std::to_string(i) + " [shape=box, label=" +
           quote(net.transition_name(TransitionId{i})) + "];\n";
  }
  auto arc = [&](const std::string& from, const std::string& to, Weight w) {
    out += "  " + from + " -> " + to;
    if (w > 1) out += " [label=\"" + std::to_string(w) + "\"]";
    out += ";\n";
  };
  for (std::uint32_t i = 0; i < net.transition_count(); ++i) {
    const TransitionId t{i};
    const std::string tid = "t" + std::to_string(i);
    for (const auto& [p, w] : net.pre(t)) arc("p" + std::to_string(p.index), tid, w);
    for (const auto& [p, w] : net.post(t)) arc(tid, "p" + std::to_string(p.index), w);
  }
  out += "}\n";
  return out;
}

std::string export_dot_graph(const PetriNet& net, const ReachabilityGraph& g) {
  return dot_graph(net, g);
}

std::string export_dot_graph(const PetriNet& net, const CoverabilityGraph& g) {
  return dot_graph(net, g);
}

std::string export_sweep_csv(std::span<const SweepRow> rows) {
  if (rows.empty()) throw Error("export_sweep_csv: no rows");
  std::vector<SweepRow> sorted(rows.begin(), rows.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SweepRow& a, const SweepRow& b) { return a.p < b.p; });
  std::string out = "p,states,edges\n";
  for (const auto& r : sorted) {
    out += std::to_string(r.p) + ',' + std::to_string(r.nodes) + ',' + std::to_string(r.edges) +
           '\n';
  }
  return out;
}

}  // namespace petriforge
