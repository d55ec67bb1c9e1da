#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "petriforge/net.hpp"
#include "petriforge/reachability.hpp"

namespace petriforge {

/// Token count or the unbounded symbol ω.
inline constexpr Tokens kOmega = std::numeric_limits<Tokens>::max();

/// A marking whose entries may be ω. Entries equal to kOmega mean ω.
class ExtendedMarking {
 public:
  ExtendedMarking() = default;
  explicit ExtendedMarking(const Marking& m);
  explicit ExtendedMarking(std::vector<Tokens> tokens) : tokens_(std::move(tokens)) {}

  std::size_t size() const noexcept { return tokens_.size(); }
  Tokens operator[](PlaceId p) const { return tokens_.at(p.index); }
  bool is_omega(PlaceId p) const { return tokens_.at(p.index) == kOmega; }
  bool has_omega() const noexcept;
  std::span<const Tokens> tokens() const noexcept { return tokens_; }

  /// Finite view; throws Error if any entry is ω.
  Marking to_marking() const;
  /// "(2,ω,0)"
  std::string to_string() const;

  friend bool operator==(const ExtendedMarking&, const ExtendedMarking&) = default;

 private:
  friend class CoverabilityBuilder;
  std::vector<Tokens> tokens_;
};

struct ExtendedMarkingHash {
  std::size_t operator()(const ExtendedMarking& m) const noexcept;
};

/// Karp–Miller coverability graph: the coverability tree with equal nodes
/// merged. Node 0 is the initial marking; ids follow breadth-first order.
class CoverabilityGraph {
 public:
  std::size_t node_count() const noexcept { return nodes_.size(); }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const ExtendedMarking& marking(NodeId n) const { return nodes_.at(n); }
  std::span<const ExtendedMarking> markings() const noexcept { return nodes_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  bool has_omega() const noexcept;

 private:
  friend class CoverabilityBuilder;
  std::vector<ExtendedMarking> nodes_;
  std::vector<Edge> edges_;
};

/// Always terminates. When a freshly reached marking strictly covers a marking
/// on its own path from the root, every strictly larger entry becomes ω.
CoverabilityGraph build_coverability_graph(const MarkedNet& mn);

/// True iff the coverability graph contains no ω entry.
bool is_bounded(const MarkedNet& mn);

bool is_enabled(const PetriNet& net, const ExtendedMarking& m, TransitionId t);
ExtendedMarking fire(const PetriNet& net, const ExtendedMarking& m, TransitionId t);

}  // namespace petriforge
