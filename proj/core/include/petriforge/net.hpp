#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "petriforge/error.hpp"

namespace petriforge {

using Tokens = std::uint64_t;
using Weight = std::uint64_t;

struct PlaceId {
  std::uint32_t index = 0;
  friend auto operator<=>(const PlaceId&, const PlaceId&) = default;
};

struct TransitionId {
  std::uint32_t index = 0;
  friend auto operator<=>(const TransitionId&, const TransitionId&) = default;
};

/// An arc endpoint together with its weight. Used for both pre- and post-sets.
struct WeightedPlace {
  PlaceId place;
  Weight weight = 0;
  friend bool operator==(const WeightedPlace&, const WeightedPlace&) = default;
};

/// Token count per place, indexed by place index.
class Marking {
 public:
  Marking() = default;
  explicit Marking(std::size_t places) : tokens_(places, 0) {}
  Marking(std::initializer_list<Tokens> tokens) : tokens_(tokens) {}
  explicit Marking(std::vector<Tokens> tokens) : tokens_(std::move(tokens)) {}

  std::size_t size() const noexcept { return tokens_.size(); }
  Tokens operator[](PlaceId p) const { return tokens_.at(p.index); }
  Tokens& operator[](PlaceId p) { return tokens_.at(p.index); }
  std::span<const Tokens> tokens() const noexcept { return tokens_; }

  /// "(3,2,0)"
  std::string to_string() const;

  friend bool operator==(const Marking&, const Marking&) = default;

 private:
  std::vector<Tokens> tokens_;
};

struct MarkingHash {
  std::size_t operator()(const Marking& m) const noexcept;
};

/// Immutable place/transition net. Build one with NetBuilder.
///
/// Places and transitions keep their declaration order; every vector indexed
/// by place or transition uses that order.
class PetriNet {
 public:
  std::size_t place_count() const noexcept { return place_names_.size(); }
  std::size_t transition_count() const noexcept { return transition_names_.size(); }

  const std::string& name() const noexcept { return name_; }
  const std::string& place_name(PlaceId p) const;
  const std::string& transition_name(TransitionId t) const;

  std::optional<PlaceId> find_place(std::string_view name) const;
  std::optional<TransitionId> find_transition(std::string_view name) const;

  /// Input places of t with W(p,t), ascending by place index.
  std::span<const WeightedPlace> pre(TransitionId t) const;
  /// Output places of t with W(t,p), ascending by place index.
  std::span<const WeightedPlace> post(TransitionId t) const;

  /// Extended weight function; 0 when the arc does not exist.
  Weight weight(PlaceId p, TransitionId t) const;
  Weight weight(TransitionId t, PlaceId p) const;

  bool contains(PlaceId p) const noexcept { return p.index < place_count(); }
  bool contains(TransitionId t) const noexcept { return t.index < transition_count(); }

  std::size_t arc_count() const noexcept;

  friend bool operator==(const PetriNet&, const PetriNet&) = default;

 private:
  friend class NetBuilder;
  PetriNet() = default;

  std::string name_;
  std::vector<std::string> place_names_;
  std::vector<std::string> transition_names_;
  std::vector<std::vector<WeightedPlace>> pre_;
  std::vector<std::vector<WeightedPlace>> post_;
};

/// Collects places, transitions and arcs, then validates them into a PetriNet.
///
/// build() rejects: an empty place or transition set, duplicate names within a
/// kind, zero weights, and repeated arcs between the same ordered pair.
class NetBuilder {
 public:
  explicit NetBuilder(std::string name = {}) : name_(std::move(name)) {}

  PlaceId add_place(std::string name);
  TransitionId add_transition(std::string name);
  void add_arc(PlaceId from, TransitionId to, Weight weight = 1);
  void add_arc(TransitionId from, PlaceId to, Weight weight = 1);

  std::size_t place_count() const noexcept { return places_.size(); }
  std::size_t transition_count() const noexcept { return transitions_.size(); }

  PetriNet build() const;

 private:
  struct Arc {
    std::uint32_t place;
    std::uint32_t transition;
    Weight weight;
    bool to_transition;
  };

  std::string name_;
  std::vector<std::string> places_;
  std::vector<std::string> transitions_;
  std::vector<Arc> arcs_;
};

/// A net paired with its initial marking.
class MarkedNet {
 public:
  MarkedNet(PetriNet net, Marking initial);

  const PetriNet& net() const noexcept { return net_; }
  const Marking& initial() const noexcept { return initial_; }

  friend bool operator==(const MarkedNet&, const MarkedNet&) = default;

 private:
  PetriNet net_;
  Marking initial_;
};

bool is_enabled(const PetriNet& net, const Marking& m, TransitionId t);

/// M'(p) = M(p) - W(p,t) + W(t,p). Throws NotEnabledError if t is not enabled.
Marking fire(const PetriNet& net, const Marking& m, TransitionId t);

/// Enabled transitions in ascending index order.
std::vector<TransitionId> enabled_set(const PetriNet& net, const Marking& m);

/// True iff the combined input demand of the set fits within m. The argument
/// is treated as a set: repeated ids count once.
bool is_concurrently_enabled(const PetriNet& net, const Marking& m,
                             std::span<const TransitionId> ts);

/// Size of the largest concurrently enabled subset of the enabled set.
std::size_t max_concurrency_degree(const PetriNet& net, const Marking& m);

}  // namespace petriforge

template <>
struct std::hash<petriforge::Marking> {
  std::size_t operator()(const petriforge::Marking& m) const noexcept {
    return petriforge::MarkingHash{}(m);
  }
};
