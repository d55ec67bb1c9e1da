#include <algorithm>
#include <cctype>
#include <unordered_map>
#include <unordered_set>

#include "petriforge/models.hpp"

namespace petriforge {

namespace {

std::vector<SubprocessContract> coranica_contracts(const ModelParams& q) {
  const Tokens u = q.u();
  return {
      {1, "Dig Bulbs",
       {{"Start1", 1, 0},
        {"People available", q.d, q.d},
        {"Bulbs", 0, q.nb},
        {"Start5", 0, 1},
        {"Digging sticks", q.d, q.d},
        {"Bulbs needed", q.nb, 0}}},
      {2, "Collect Firewood and Branches",
       {{"Start2", 1, 0},
        {"People available", q.c, q.c},
        {"Collected Firewood", 0, q.nfw},
        {"Collected Branches", 0, q.nbr},
        {"Start3", 0, 1},
        {"Firewood needed", q.nfw, 0},
        {"Branches needed", q.nbr, 0}}},
      {3, "Light Fire",
       {{"Start3", 1, 0},
        {"People available", 1, 1},
        {"Collected firewood", q.nfw, 0},
        {"Collected branches", q.nbr, 0},
        {"Fire and coals", 0, 1},
        {"Firesticks", 1, 1}}},
      {4, "Collect Small and Large Calcrete Blocks",
       {{"Start4", 1, 0},
        {"People available", q.b, q.b},
        {"Collected small blocks", 0, q.nbs},
        {"Collected large blocks", 0, q.nbl},
        {"Large blocks needed", q.nbl, 0},
        {"Small blocks needed", q.nbs, 0}}},
      {5, "Prepare Bulbs",
       {{"Start5", 1, 0},
        {"People available", q.a, q.a},
        {"Bulbs", q.nb, 0},
        {"Fleshy scales", 0, u},
        {"Start6", 0, 1},
        {"Knives", q.a, q.a},
        {"Bulb remains", 0, q.nb},
        {"Outer scales", 0, q.nb}}},
      {6, "Heat Selected Scales",
       {{"Start6", 1, 0},
        {"People available", q.h, q.h},
        {"Fire and coals", 1, 1},
        {"Fleshy scales", u, 0},
        {"Collected large blocks", q.nbl, q.nbl},
        {"Scales on large block", 0, u},
        {"Coals", 0, 1},
        {"# First scales", 1, 0},
        {"Ready to dust", 0, 1}}},
      {7, "Pound",
       {{"Scales on large block", u, 0},
        {"People available", 1, 1},
        {"Collected small blocks", q.nbs, q.nbs},
        {"# Scales available for kneading", 0, u},
        {"Scales ready for kneading", 0, u},
        {"All scales pounded", 0, 1}}},
      {8, "Knead",
       {{"# Scales available for kneading", 1, 0},
        {"People available", 1, 1},
        {"Scales ready for kneading", 1, 0},
        {"Fire and coals", 1, 1},
        {"All scales pounded", 1, 0},
        {"Adhesive", 0, 1}}},
  };
}

std::vector<SubprocessContract> schinzii_contracts(const ModelParams& q, bool no_return) {
  const std::string start3 = no_return ? "Collecting firewood done" : "Start3";
  const std::string start5 = no_return ? "Collecting roots done" : "Start5";
  return {
      {1, "Dig Roots",
       {{"Start1", 1, 0},
        {"People available", q.d, q.d},
        {"Extracted roots", 0, q.nr},
        {"Collecting roots done", 0, 1},
        {"O. schinzii bush", 1, 1},
        {"Digging sticks", q.d, q.d},
        {"Roots needed", q.nr, 0},
        {"Sand", 0, q.nr - 1}}},
      {2, "Collect Firewood",
       {{"Start2", 1, 0},
        {"People available", q.c, q.c},
        {"Combretum branches", 0, q.nco},
        {"T. sericea branches", 0, q.nts},
        {"Collecting firewood done", 0, 1},
        {"Combretum needed", q.nco, 0},
        {"T. sericea needed", q.nts, 0}}},
      {3, "Light Fire",
       {{start3, 1, 0},
        {"People available", 1, 1},
        {"T. sericea branches", q.nts, 0},
        {"Combretum branches", q.nco, 0},
        {"Fire and coals", 0, 1},
        {"Start6", 0, 1},
        {"Firesticks", 1, 1}}},
      {4, "Make Applicator",
       {{"Start4", 1, 0},
        {"People available", 1, 1},
        {"Applicator", 0, 1},
        {"Start8", 0, 1},
        {"Knives", 1, 1},
        {"G. flava branch", 1, 0}}},
      {5, "Root Preparation",
       {{start5, 1, 0},
        {"People available", q.a, q.a},
        {"Extracted roots", q.nr, 0},
        {"Roots with slits", 0, q.nr},
        {"Start7", 0, 1},
        {"Knives", q.a, q.a}}},
      {6, "Burn and Crush Grass",
       {{"Start6", 1, 0},
        {"People available", q.q, q.q},
        {"Black powder", 0, q.ng},
        {"Fire and coals", 1, 1},
        {"Grass needed", q.ng, 0}}},
      {7, "Heat Roots",
       {{"Start7", 1, 0},
        {"People available", 1, 1},
        {"Fire and coals", 1, 1},
        {"Roots with slits", q.nr, 0},
        {"Roots with latex", 0, q.nr},
        {"Coals", 0, 1}}},
      {8, "Dip and Mix Latex",
       {{"Start8", 1, 0},
        {"People available", q.m, q.m},
        {"Roots with latex", q.nr, 0},
        {"Applicator", 1, 1},
        {"Black powder", q.ng, 0},
        {"Glue carrier", q.gc, q.gc},
        {"Adhesive", 0, 1}}},
  };
}

bool iequals(std::string_view a, std::string_view b) {
  return a.size() == b.size() &&
         std::equal(a.begin(), a.end(), b.begin(), [](unsigned char x, unsigned char y) {
           return std::tolower(x) == std::tolower(y);
         });
}

// Exact name first; otherwise the unique case-insensitive match.
std::size_t resolve_place(const ModelSpec& spec, const std::string& name) {
  std::optional<std::size_t> loose;
  for (std::size_t i = 0; i < spec.places.size(); ++i) {
    if (spec.places[i].name == name) return i;
    if (iequals(spec.places[i].name, name)) {
      if (loose) throw UnknownPlaceError("place name '" + name + "' is ambiguous");
      loose = i;
    }
  }
  if (!loose) throw UnknownPlaceError("no place named '" + name + "' in " + spec.name);
  return *loose;
}

}  // namespace

std::vector<SubprocessContract> appendix_contracts(ModelVariant v, const ModelParams& params) {
  params.validate();
  switch (v) {
    case ModelVariant::ACoranica:
      return coranica_contracts(params);
    case ModelVariant::OSchinzii:
      return schinzii_contracts(params, false);
    case ModelVariant::OSchinziiNoGoBackHome:
      return schinzii_contracts(params, true);
    case ModelVariant::BladeExample:
      return {};
  }
  return {};
}

ContractReport validate_contract(const ModelSpec& spec, const SubprocessContract& contract,
                                 const ExplorationLimits& limits) {
  ContractReport report;
  report.subprocess = contract.subprocess;
  report.title = contract.title;

  std::vector<std::size_t> row_place;
  for (const auto& row : contract.rows) row_place.push_back(resolve_place(spec, row.place));

  std::unordered_set<std::string_view> own_places;
  std::unordered_set<std::string_view> foreign_places;
  for (const auto& t : spec.transitions) {
    auto& bucket = t.subprocess == contract.subprocess ? own_places : foreign_places;
    for (const auto& a : t.inputs) bucket.insert(a.place);
    for (const auto& a : t.outputs) bucket.insert(a.place);
  }

  ModelSpec sub;
  sub.name = spec.name + " / subprocess " + std::to_string(contract.subprocess);
  for (std::size_t i = 0; i < spec.places.size(); ++i) {
    PlaceSpec p = spec.places[i];
    const auto row = std::find(row_place.begin(), row_place.end(), i);
    if (row != row_place.end()) {
      p.initial = contract.rows[static_cast<std::size_t>(row - row_place.begin())].initial;
    } else if (p.initial != 0 && own_places.contains(p.name) && !foreign_places.contains(p.name)) {
      report.plumbing.emplace_back(p.name, p.initial);
    } else {
      p.initial = 0;
    }
    sub.places.push_back(std::move(p));
  }
  for (const auto& t : spec.transitions) {
    if (t.subprocess == contract.subprocess) sub.transitions.push_back(t);
  }
  if (sub.transitions.empty()) {
    throw UnknownPlaceError(spec.name + " has no transitions in subprocess " +
                            std::to_string(contract.subprocess));
  }

  const MarkedNet mn = sub.instantiate();
  const auto g = build_reachability_graph(mn, limits);
  report.explored_states = g.node_count();

  std::optional<NodeId> best;
  std::size_t best_mismatches = contract.rows.size() + 1;
  for (NodeId n : deadlock_markings(mn.net(), g)) {
    ++report.terminal_states;
    std::size_t mismatches = 0;
    for (std::size_t r = 0; r < contract.rows.size(); ++r) {
      const PlaceId id{static_cast<std::uint32_t>(row_place[r])};
      if (g.marking(n)[id] != contract.rows[r].final) ++mismatches;
    }
    if (mismatches < best_mismatches) {
      best_mismatches = mismatches;
      best = n;
    }
  }

  for (std::size_t r = 0; r < contract.rows.size(); ++r) {
    ContractRowResult res;
    res.expected = contract.rows[r];
    if (best) {
      res.observed = g.marking(*best)[PlaceId{static_cast<std::uint32_t>(row_place[r])}];
      res.pass = res.observed == res.expected.final;
    }
    report.rows.push_back(std::move(res));
  }
  report.pass = best.has_value() && best_mismatches == 0;
  return report;
}

}  // namespace petriforge
