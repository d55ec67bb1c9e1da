#include "petriforge/coverability.hpp"

#include <algorithm>
#include <unordered_map>

namespace petriforge {

ExtendedMarking::ExtendedMarking(const Marking& m) : tokens_(m.tokens().begin(), m.tokens().end()) {
  for (Tokens t : tokens_) {
    if (t == kOmega) throw TokenOverflowError("finite marking collides with the ω sentinel");
  }
}

bool ExtendedMarking::has_omega() const noexcept {
  return std::find(tokens_.begin(), tokens_.end(), kOmega) != tokens_.end();
}

Marking ExtendedMarking::to_marking() const {
  if (has_omega()) throw Error("marking " + to_string() + " has unbounded entries");
  return Marking(tokens_);
}

std::string ExtendedMarking::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i != 0) out += ',';
    out += tokens_[i] == kOmega ? std::string("ω") : std::to_string(tokens_[i]);
  }
  out += ')';
  return out;
}

std::size_t ExtendedMarkingHash::operator()(const ExtendedMarking& m) const noexcept {
  return MarkingHash{}(Marking(std::vector<Tokens>(m.tokens().begin(), m.tokens().end())));
}

bool CoverabilityGraph::has_omega() const noexcept {
  return std::any_of(nodes_.begin(), nodes_.end(),
                     [](const ExtendedMarking& m) { return m.has_omega(); });
}

bool is_enabled(const PetriNet& net, const ExtendedMarking& m, TransitionId t) {
  if (m.size() != net.place_count()) throw IndexError("marking size does not match net");
  for (const auto& [p, w] : net.pre(t)) {
    if (m[p] != kOmega && m[p] < w) return false;
  }
  return true;
}

ExtendedMarking fire(const PetriNet& net, const ExtendedMarking& m, TransitionId t) {
  if (!is_enabled(net, m, t)) {
    throw NotEnabledError("transition '" + net.transition_name(t) + "' is not enabled at " +
                          m.to_string());
  }
  std::vector<Tokens> next(m.tokens().begin(), m.tokens().end());
  for (const auto& [p, w] : net.pre(t)) {
    if (next[p.index] != kOmega) next[p.index] -= w;
  }
  for (const auto& [p, w] : net.post(t)) {
    Tokens& v = next[p.index];
    if (v == kOmega) continue;
    if (v >= kOmega - w) throw TokenOverflowError("token count overflow on place '" + net.place_name(p) + "'");
    v += w;
  }
  return ExtendedMarking(std::move(next));
}

class CoverabilityBuilder {
 public:
  explicit CoverabilityBuilder(const PetriNet& net) : net_(net) {}

  CoverabilityGraph run(const Marking& initial) {
    add(ExtendedMarking(initial), kNoParent);
    for (NodeId current = 0; current < graph_.nodes_.size(); ++current) {
      // Only tree nodes (first occurrences) are expanded; merged duplicates
      // never become nodes of their own.
      for (TransitionId t = {0}; t.index < net_.transition_count(); ++t.index) {
        if (!is_enabled(net_, graph_.nodes_[current], t)) continue;
        ExtendedMarking next = fire(net_, graph_.nodes_[current], t);
        accelerate(next, current);
        const NodeId to = add(std::move(next), current);
        graph_.edges_.push_back({current, t, to});
      }
    }
    return std::move(graph_);
  }

 private:
  static constexpr NodeId kNoParent = static_cast<NodeId>(-1);

  // If an ancestor on the path root..from is strictly covered by m, pump every
  // strictly larger entry to ω. Repeats until no ancestor changes m.
  void accelerate(ExtendedMarking& m, NodeId from) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (NodeId a = from; a != kNoParent; a = parent_[a]) {
        const auto& anc = graph_.nodes_[a];
        bool covers = true;
        bool strict = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m.tokens_[i] < anc.tokens_[i]) {
            covers = false;
            break;
          }
          if (m.tokens_[i] > anc.tokens_[i]) strict = true;
        }
        if (!covers || !strict) continue;
        for (std::size_t i = 0; i < m.size(); ++i) {
          if (m.tokens_[i] > anc.tokens_[i] && m.tokens_[i] != kOmega) {
            m.tokens_[i] = kOmega;
            changed = true;
          }
        }
      }
    }
  }

  NodeId add(ExtendedMarking m, NodeId parent) {
    auto [it, inserted] = index_.try_emplace(m, static_cast<NodeId>(graph_.nodes_.size()));
    if (inserted) {
      graph_.nodes_.push_back(std::move(m));
      parent_.push_back(parent);
    }
    return it->second;
  }

  const PetriNet& net_;
  CoverabilityGraph graph_;
  std::vector<NodeId> parent_;
  std::unordered_map<ExtendedMarking, NodeId, ExtendedMarkingHash> index_;
};

CoverabilityGraph build_coverability_graph(const MarkedNet& mn) {
  return CoverabilityBuilder(mn.net()).run(mn.initial());
}

bool is_bounded(const MarkedNet& mn) { return !build_coverability_graph(mn).has_omega(); }

}  // namespace petriforge
