#include "petriforge/net.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <unordered_set>

namespace petriforge {

std::string Marking::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(tokens_[i]);
  }
  out += ')';
  return out;
}

std::size_t MarkingHash::operator()(const Marking& m) const noexcept {
  // FNV-1a over the token words, followed by a final avalanche.
  std::uint64_t h = 1469598103934665603ull;
  for (Tokens t : m.tokens()) {
    h ^= t;
    h *= 1099511628211ull;
  }
  h ^= h >> 33;
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return static_cast<std::size_t>(h);
}

const std::string& PetriNet::place_name(PlaceId p) const {
  if (!contains(p)) throw IndexError("place index " + std::to_string(p.index) + " out of range");
  return place_names_[p.index];
}

const std::string& PetriNet::transition_name(TransitionId t) const {
  if (!contains(t)) {
    throw IndexError("transition index " + std::to_string(t.index) + " out of range");
  }
  return transition_names_[t.index];
}

std::optional<PlaceId> PetriNet::find_place(std::string_view name) const {
  auto it = std::find(place_names_.begin(), place_names_.end(), name);
  if (it == place_names_.end()) return std::nullopt;
  return PlaceId{static_cast<std::uint32_t>(it - place_names_.begin())};
}

std::optional<TransitionId> PetriNet::find_transition(std::string_view name) const {
  auto it = std::find(transition_names_.begin(), transition_names_.end(), name);
  if (it == transition_names_.end()) return std::nullopt;
  return TransitionId{static_cast<std::uint32_t>(it - transition_names_.begin())};
}

std::span<const WeightedPlace> PetriNet::pre(TransitionId t) const {
  transition_name(t);
  return pre_[t.index];
}

std::span<const WeightedPlace> PetriNet::post(TransitionId t) const {
  transition_name(t);
  return post_[t.index];
}

namespace {

Weight lookup(std::span<const WeightedPlace> arcs, PlaceId p) {
  auto it = std::lower_bound(arcs.begin(), arcs.end(), p,
                             [](const WeightedPlace& a, PlaceId x) { return a.place < x; });
  return (it != arcs.end() && it->place == p) ? it->weight : 0;
}

void check_marking(const PetriNet& net, const Marking& m) {
  if (m.size() != net.place_count()) {
    throw IndexError("marking has " + std::to_string(m.size()) + " entries, net has " +
                     std::to_string(net.place_count()) + " places");
  }
}

void check_transition(const PetriNet& net, TransitionId t) {
  if (!net.contains(t)) {
    throw IndexError("transition index " + std::to_string(t.index) + " out of range");
  }
}

}  // namespace

Weight PetriNet::weight(PlaceId p, TransitionId t) const {
  place_name(p);
  return lookup(pre(t), p);
}

Weight PetriNet::weight(TransitionId t, PlaceId p) const {
  place_name(p);
  return lookup(post(t), p);
}

std::size_t PetriNet::arc_count() const noexcept {
  std::size_t n = 0;
  for (std::size_t t = 0; t < pre_.size(); ++t) n += pre_[t].size() + post_[t].size();
  return n;
}

PlaceId NetBuilder::add_place(std::string name) {
  places_.push_back(std::move(name));
  return PlaceId{static_cast<std::uint32_t>(places_.size() - 1)};
}

TransitionId NetBuilder::add_transition(std::string name) {
  transitions_.push_back(std::move(name));
  return TransitionId{static_cast<std::uint32_t>(transitions_.size() - 1)};
}

void NetBuilder::add_arc(PlaceId from, TransitionId to, Weight weight) {
  arcs_.push_back({from.index, to.index, weight, true});
}

void NetBuilder::add_arc(TransitionId from, PlaceId to, Weight weight) {
  arcs_.push_back({to.index, from.index, weight, false});
}

PetriNet NetBuilder::build() const {
  if (places_.empty()) throw NetStructureError("net has no places");
  if (transitions_.empty()) throw NetStructureError("net has no transitions");

  auto check_unique = [](const std::vector<std::string>& names, const char* kind) {
    std::unordered_set<std::string_view> seen;
    for (const auto& n : names) {
      if (!seen.insert(n).second) {
        throw NetStructureError(std::string("duplicate ") + kind + " name '" + n + "'");
      }
    }
  };
  check_unique(places_, "place");
  check_unique(transitions_, "transition");

  PetriNet net;
  net.name_ = name_;
  net.place_names_ = places_;
  net.transition_names_ = transitions_;
  net.pre_.resize(transitions_.size());
  net.post_.resize(transitions_.size());

  std::set<std::tuple<std::uint32_t, std::uint32_t, bool>> seen_arcs;
  for (const Arc& a : arcs_) {
    if (a.place >= places_.size()) {
      throw NetStructureError("arc references unknown place index " + std::to_string(a.place));
    }
    if (a.transition >= transitions_.size()) {
      throw NetStructureError("arc references unknown transition index " +
                              std::to_string(a.transition));
    }
    const std::string label = a.to_transition
                                  ? "'" + places_[a.place] + "' -> '" + transitions_[a.transition] + "'"
                                  : "'" + transitions_[a.transition] + "' -> '" + places_[a.place] + "'";
    if (a.weight == 0) throw NetStructureError("arc " + label + " has weight 0");
    if (!seen_arcs.emplace(a.place, a.transition, a.to_transition).second) {
      throw NetStructureError("duplicate arc " + label);
    }
    auto& list = a.to_transition ? net.pre_[a.transition] : net.post_[a.transition];
    list.push_back({PlaceId{a.place}, a.weight});
  }
  auto by_place = [](const WeightedPlace& x, const WeightedPlace& y) { return x.place < y.place; };
  for (auto& v : net.pre_) std::sort(v.begin(), v.end(), by_place);
  for (auto& v : net.post_) std::sort(v.begin(), v.end(), by_place);
  return net;
}

MarkedNet::MarkedNet(PetriNet net, Marking initial)
    : net_(std::move(net)), initial_(std::move(initial)) {
  check_marking(net_, initial_);
}

bool is_enabled(const PetriNet& net, const Marking& m, TransitionId t) {
  check_transition(net, t);
  check_marking(net, m);
  for (const auto& [p, w] : net.pre(t)) {
    if (m[p] < w) return false;
  }
  return true;
}

Marking fire(const PetriNet& net, const Marking& m, TransitionId t) {
  if (!is_enabled(net, m, t)) {
    throw NotEnabledError("transition '" + net.transition_name(t) + "' is not enabled at " +
                          m.to_string());
  }
  Marking next = m;
  for (const auto& [p, w] : net.pre(t)) next[p] -= w;
  for (const auto& [p, w] : net.post(t)) {
    if (next[p] > std::numeric_limits<Tokens>::max() - w) {
      throw TokenOverflowError("token count overflow on place '" + net.place_name(p) + "'");
    }
    next[p] += w;
  }
  return next;
}

std::vector<TransitionId> enabled_set(const PetriNet& net, const Marking& m) {
  check_marking(net, m);
  std::vector<TransitionId> out;
  for (std::uint32_t i = 0; i < net.transition_count(); ++i) {
    if (is_enabled(net, m, TransitionId{i})) out.push_back(TransitionId{i});
  }
  return out;
}

bool is_concurrently_enabled(const PetriNet& net, const Marking& m,
                             std::span<const TransitionId> ts) {
  check_marking(net, m);
  std::vector<TransitionId> unique(ts.begin(), ts.end());
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());

  std::vector<Tokens> demand(net.place_count(), 0);
  for (TransitionId t : unique) {
    if (!net.contains(t)) {
      throw UnknownTransitionError("transition index " + std::to_string(t.index) +
                                   " is not part of the net");
    }
    for (const auto& [p, w] : net.pre(t)) {
      demand[p.index] += w;
      if (demand[p.index] > m[p]) return false;
    }
  }
  return true;
}

namespace {

// Branch and bound over include/exclude decisions; capacity is what is left
// of the marking after the included transitions took their inputs.
void search_concurrent(const PetriNet& net, std::span<const TransitionId> candidates,
                       std::size_t next, std::size_t chosen, std::vector<Tokens>& capacity,
                       std::size_t& best) {
  best = std::max(best, chosen);
  if (next == candidates.size() || chosen + (candidates.size() - next) <= best) return;

  const TransitionId t = candidates[next];
  bool fits = true;
  for (const auto& [p, w] : net.pre(t)) {
    if (capacity[p.index] < w) {
      fits = false;
      break;
    }
  }
  if (fits) {
    for (const auto& [p, w] : net.pre(t)) capacity[p.index] -= w;
    search_concurrent(net, candidates, next + 1, chosen + 1, capacity, best);
    for (const auto& [p, w] : net.pre(t)) capacity[p.index] += w;
  }
  search_concurrent(net, candidates, next + 1, chosen, capacity, best);
}

}  // namespace

std::size_t max_concurrency_degree(const PetriNet& net, const Marking& m) {
  const auto enabled = enabled_set(net, m);
  std::vector<Tokens> capacity(m.tokens().begin(), m.tokens().end());
  std::size_t best = 0;
  search_concurrent(net, enabled, 0, 0, capacity, best);
  return best;
}

}  // namespace petriforge
