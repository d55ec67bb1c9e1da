#include <map>
#include <set>

#include "petriforge/error.hpp"
#include "petriforge/models.hpp"

namespace petriforge {

namespace {

using Arcs = std::initializer_list<std::pair<std::string_view, Weight>>;

const std::string kPeople(kPeopleAvailable);

// Small DSL over ModelSpec. Places are created on first mention, in order.
class SpecBuilder {
 public:
  explicit SpecBuilder(std::string name) { spec_.name = std::move(name); }

  void place(std::string_view name, Tokens initial, std::uint64_t people_per_token = 0) {
    PlaceSpec& p = get(name);
    p.initial = initial;
    p.people_per_token = people_per_token;
  }

  // Places whose tokens stand for working people.
  void holds_people(std::initializer_list<std::string_view> names) {
    for (auto n : names) get(n).people_per_token = 1;
  }

  void subprocess(int id) { subprocess_ = id; }

  void t(std::string_view name, Arcs in, Arcs out) {
    TransitionSpec spec{std::string(name), subprocess_, {}, {}};
    for (const auto& [p, w] : in) {
      get(p);
      spec.inputs.push_back({std::string(p), w});
    }
    for (const auto& [p, w] : out) {
      get(p);
      spec.outputs.push_back({std::string(p), w});
    }
    spec_.transitions.push_back(std::move(spec));
  }

  ModelSpec finish() {
    std::map<std::string_view, std::set<int>> touched;
    for (const auto& t : spec_.transitions) {
      for (const auto& a : t.inputs) touched[a.place].insert(t.subprocess);
      for (const auto& a : t.outputs) touched[a.place].insert(t.subprocess);
    }
    for (auto& p : spec_.places) {
      const bool pool = p.people_per_token != 0 && p.name == kPeople;
      p.role = (pool || touched[p.name].size() > 1 || p.name.starts_with("Start"))
                   ? PlaceRole::Shared
                   : PlaceRole::Internal;
    }
    return std::move(spec_);
  }

 private:
  PlaceSpec& get(std::string_view name) {
    for (auto& p : spec_.places) {
      if (p.name == name) return p;
    }
    spec_.places.push_back({std::string(name), 0, PlaceRole::Internal, 0});
    return spec_.places.back();
  }

  ModelSpec spec_;
  int subprocess_ = 0;
};

ModelSpec blade() {
  SpecBuilder b("Blade production");
  b.place("Tools", 3);
  b.place("Cores", 2);
  b.place("Blades", 0);
  b.t("t1", {{"Tools", 2}, {"Cores", 1}}, {{"Blades", 1}});
  return b.finish();
}

ModelSpec coranica(const ModelParams& q) {
  const Tokens u = q.u(), x = q.x, s = q.s();
  const std::string_view PA = kPeopleAvailable;

  SpecBuilder b("A. coranica adhesive");
  b.place(PA, q.p, 1);
  b.place("Digging sticks", q.digging_sticks());
  b.place("Knives", q.knives());
  b.place("Firesticks", q.firesticks());
  b.place("Start1", 1);
  b.place("Start2", 1);
  b.place("Start4", 1);
  b.place("Bulbs needed", q.nb);
  b.place("Firewood needed", q.nfw);
  b.place("Branches needed", q.nbr);
  b.place("Small blocks needed", q.nbs);
  b.place("Large blocks needed", q.nbl);
  b.place("# First scales", 1);
  b.holds_people({"Diggers", "Digging bulb", "Collectors", "Fire maker", "Block searchers",
                  "Searching small block", "Searching large block", "Peelers", "Peeling bulb",
                  "Heaters", "Turning", "Cleaning", "Pounding", "Kneading", "Reheating"});

  b.subprocess(1);
  b.t("Start digging", {{"Start1", 1}, {PA, q.d}, {"Digging sticks", q.d}}, {{"Diggers", q.d}});
  b.t("Dig bulb", {{"Bulbs needed", 1}, {"Diggers", 1}}, {{"Digging bulb", 1}});
  b.t("Bulb dug", {{"Digging bulb", 1}},
      {{"Bulbs", 1}, {"# Collected bulbs", 1}, {"Diggers", 1}});
  b.t("Finish digging", {{"Diggers", q.d}, {"# Collected bulbs", q.nb}},
      {{"Start5", 1}, {PA, q.d}, {"Digging sticks", q.d}});

  b.subprocess(2);
  b.t("Start collecting", {{"Start2", 1}, {PA, q.c}}, {{"Collectors", q.c}});
  b.t("Collect firewood", {{"Firewood needed", 1}, {"Collectors", 1}},
      {{"Collected firewood", 1}, {"# Collected firewood", 1}, {"Collectors", 1}});
  b.t("Collect branch", {{"Branches needed", 1}, {"Collectors", 1}},
      {{"Collected branches", 1}, {"# Collected branches", 1}, {"Collectors", 1}});
  b.t("Finish collecting",
      {{"Collectors", q.c}, {"# Collected firewood", q.nfw}, {"# Collected branches", q.nbr}},
      {{"Start3", 1}, {PA, q.c}});

  b.subprocess(3);
  b.t("Light fire", {{"Start3", 1}, {PA, 1}, {"Firesticks", 1}, {"Collected firewood", q.nfw}},
      {{"Fire", 1}, {"Fire maker", 1}});
  b.t("Add branch", {{"Fire", 1}, {"Fire maker", 1}, {"Collected branches", 1}},
      {{"Fire", 1}, {"Fire maker", 1}, {"# Added branches", 1}});
  b.t("Coals ready", {{"Fire", 1}, {"Fire maker", 1}, {"# Added branches", q.nbr}},
      {{"Fire and coals", 1}, {PA, 1}, {"Firesticks", 1}});

  b.subprocess(4);
  b.t("Start block search", {{"Start4", 1}, {PA, q.b}}, {{"Block searchers", q.b}});
  b.t("Search small block", {{"Small blocks needed", 1}, {"Block searchers", 1}},
      {{"Searching small block", 1}});
  b.t("Small block found", {{"Searching small block", 1}},
      {{"Collected small blocks", 1}, {"# Collected small blocks", 1}, {"Block searchers", 1}});
  b.t("Search large block", {{"Large blocks needed", 1}, {"Block searchers", 1}},
      {{"Searching large block", 1}});
  b.t("Large block found", {{"Searching large block", 1}},
      {{"Collected large blocks", 1}, {"# Collected large blocks", 1}, {"Block searchers", 1}});
  b.t("Finish block search",
      {{"Block searchers", q.b},
       {"# Collected small blocks", q.nbs},
       {"# Collected large blocks", q.nbl}},
      {{PA, q.b}});

  b.subprocess(5);
  b.t("Start peeling", {{"Start5", 1}, {PA, q.a}, {"Knives", q.a}}, {{"Peelers", q.a}});
  b.t("Peel bulb", {{"Bulbs", 1}, {"Peelers", 1}}, {{"Peeling bulb", 1}});
  b.t("Bulb peeled", {{"Peeling bulb", 1}},
      {{"Fleshy scales", q.sb},
       {"Bulb remains", 1},
       {"Outer scales", 1},
       {"# Peeled bulbs", 1},
       {"Peelers", 1}});
  b.t("Finish peeling", {{"Peelers", q.a}, {"# Peeled bulbs", q.nb}},
      {{"Start6", 1}, {PA, q.a}, {"Knives", q.a}});

  b.subprocess(6);
  b.t("Arrange coals",
      {{"Start6", 1}, {PA, q.h}, {"Fire and coals", 1}, {"Collected large blocks", 1}},
      {{"Fire and coals", 1},
       {"Collected large blocks", 1},
       {"Coals", 1},
       {"Ready to dust", 1},
       {"Heaters", q.h}});
  b.t("Dust scale", {{"Heaters", 1}, {"Ready to dust", 1}, {"Fleshy scales", 1}},
      {{"Heaters", 1}, {"Ready to dust", 1}, {"Clean scales", 1}});
  b.t("Place first scales",
      {{"Heaters", 1}, {"Coals", 1}, {"# First scales", 1}, {"Clean scales", x}},
      {{"Heaters", 1}, {"Coals", 1}, {"Scales on coals", x}, {"Later scales", 1}});
  b.t("Place scales", {{"Heaters", 1}, {"Coals", 1}, {"Later scales", 1}, {"Clean scales", s}},
      {{"Heaters", 1}, {"Coals", 1}, {"Scales on coals", s}});
  b.t("Turn scale", {{"Heaters", 1}, {"Scales on coals", 1}}, {{"Turning", 1}});
  b.t("Move scale to block", {{"Turning", 1}, {"Collected large blocks", 1}},
      {{"Heaters", 1},
       {"Collected large blocks", 1},
       {"Scales on large block", 1},
       {"# Heated scales", 1}});
  b.t("Finish heating", {{"Heaters", q.h}, {"# Heated scales", u}}, {{PA, q.h}});

  b.subprocess(7);
  b.t("Clean scale", {{"Scales on large block", 1}, {PA, 1}}, {{"Cleaning", 1}});
  b.t("Pound scale", {{"Cleaning", 1}, {"Collected small blocks", 1}},
      {{"Pounding", 1}, {"Collected small blocks", 1}});
  b.t("Fold scale", {{"Pounding", 1}},
      {{PA, 1},
       {"Scales ready for kneading", 1},
       {"# Scales available for kneading", 1},
       {"# Pounded scales", 1}});
  b.t("All pounded", {{"# Pounded scales", u}}, {{"All scales pounded", 1}});

  b.subprocess(8);
  b.t("Knead scale",
      {{"Scales ready for kneading", 1}, {"# Scales available for kneading", 1}, {PA, 1}},
      {{"Kneading", 1}});
  b.t("Add to pulp", {{"Kneading", 1}}, {{PA, 1}, {"Pulp", 1}});
  b.t("Reheat pulp", {{"All scales pounded", 1}, {"Pulp", 1}, {"Fire and coals", 1}, {PA, 1}},
      {{"Fire and coals", 1}, {"Reheating", 1}});
  b.t("Knead pulp ball", {{"Reheating", 1}}, {{PA, 1}, {"Adhesive", 1}});
  return b.finish();
}

ModelSpec schinzii(const ModelParams& q, bool go_back_home) {
  const std::string_view PA = kPeopleAvailable;

  SpecBuilder b(go_back_home ? "O. schinzii adhesive" : "O. schinzii adhesive without 'Go back home'");
  b.place(PA, q.p, 1);
  b.place("Digging sticks", q.digging_sticks());
  b.place("Knives", q.knives());
  b.place("Firesticks", q.firesticks());
  b.place("Glue carrier", q.gc);
  b.place("Start1", 1);
  b.place("Start2", 1);
  b.place("Start4", go_back_home ? 0 : 1);
  b.place("O. schinzii bush", 1);
  b.place("Roots needed", q.nr);
  b.place("Combretum needed", q.nco);
  b.place("T. sericea needed", q.nts);
  b.place("G. flava branch", 1);
  b.place("Grass needed", q.ng);
  b.place("Coals needed", 1);
  b.holds_people({"Diggers", "Digging", "Extracting", "Collectors", "Fire maker", "Carving",
                  "Slitters", "Cutting slits", "Grass burners", "Root heater", "Arranging coals",
                  "Laying root", "Dipping", "Pressing"});
  b.place("Dipping", 0, q.m);
  b.place("Pressing", 0, q.m);

  b.subprocess(1);
  b.t("Start digging", {{"Start1", 1}, {PA, q.d}, {"Digging sticks", q.d}}, {{"Diggers", q.d}});
  b.t("Dig", {{"Roots needed", 1}, {"O. schinzii bush", 1}, {"Diggers", 1}}, {{"Digging", 1}});
  b.t("Root exposed", {{"Digging", 1}},
      {{"O. schinzii bush", 1}, {"Exposed root", 1}, {"Sand", 1}, {"Diggers", 1}});
  b.t("Extract root", {{"Exposed root", 1}, {"Diggers", 1}}, {{"Extracting", 1}});
  b.t("Root extracted", {{"Extracting", 1}},
      {{"Extracted roots", 1}, {"# Extracted roots", 1}, {"Diggers", 1}});
  b.t("Fill hole", {{"Diggers", 1}, {"# Extracted roots", q.nr}, {"Sand", 1}},
      {{"Diggers", 1}, {"Hole covered", 1}});
  b.t("Finish digging", {{"Diggers", q.d}, {"Hole covered", 1}},
      {{"Collecting roots done", 1}, {PA, q.d}, {"Digging sticks", q.d}});

  b.subprocess(2);
  b.t("Start collecting", {{"Start2", 1}, {PA, q.c}}, {{"Collectors", q.c}});
  b.t("Collect Combretum", {{"Combretum needed", 1}, {"Collectors", 1}},
      {{"Combretum branches", 1}, {"# Combretum", 1}, {"Collectors", 1}});
  b.t("Collect T. sericea", {{"T. sericea needed", 1}, {"Collectors", 1}},
      {{"T. sericea branches", 1}, {"# T. sericea", 1}, {"Collectors", 1}});
  b.t("Finish collecting", {{"Collectors", q.c}, {"# Combretum", q.nco}, {"# T. sericea", q.nts}},
      {{"Collecting firewood done", 1}, {PA, q.c}});

  std::string_view start3 = "Collecting firewood done";
  std::string_view start5 = "Collecting roots done";
  if (go_back_home) {
    b.subprocess(0);
    b.t("Go back home", {{"Collecting roots done", 1}, {"Collecting firewood done", 1}},
        {{"Start3", 1}, {"Start4", 1}, {"Start5", 1}});
    start3 = "Start3";
    start5 = "Start5";
  }

  b.subprocess(3);
  b.t("Start lighting",
      {{start3, 1}, {PA, 1}, {"Firesticks", 1}, {"T. sericea branches", q.nts}},
      {{"Fire", 1}, {"Fire maker", 1}});
  b.t("Add Combretum", {{"Fire", 1}, {"Fire maker", 1}, {"Combretum branches", q.nco}},
      {{"Fire and coals", 1}, {"Start6", 1}, {PA, 1}, {"Firesticks", 1}});

  b.subprocess(4);
  b.t("Cut branch", {{"Start4", 1}, {PA, 1}, {"Knives", 1}, {"G. flava branch", 1}},
      {{"Carving", 1}});
  b.t("Carve applicator", {{"Carving", 1}},
      {{"Applicator", 1}, {"Start8", 1}, {PA, 1}, {"Knives", 1}});

  b.subprocess(5);
  b.t("Start root preparation", {{start5, 1}, {PA, q.a}, {"Knives", q.a}}, {{"Slitters", q.a}});
  b.t("Cut slits", {{"Extracted roots", 1}, {"Slitters", 1}}, {{"Cutting slits", 1}});
  b.t("Slits cut", {{"Cutting slits", 1}},
      {{"Roots with slits", 1}, {"# Roots with slits", 1}, {"Slitters", 1}});
  b.t("Finish root preparation", {{"Slitters", q.a}, {"# Roots with slits", q.nr}},
      {{"Start7", 1}, {PA, q.a}, {"Knives", q.a}});

  b.subprocess(6);
  b.t("Start burning", {{"Start6", 1}, {PA, q.q}}, {{"Grass burners", q.q}});
  b.t("Collect grass", {{"Grass needed", 1}, {"Grass burners", 1}},
      {{"Grass", 1}, {"Grass burners", 1}});
  b.t("Light grass", {{"Grass", 1}, {"Fire and coals", 1}}, {{"Fire and coals", 1}, {"Lit grass", 1}});
  b.t("Lift and crush", {{"Lit grass", 1}}, {{"Black powder", 1}, {"# Crushed grass", 1}});
  b.t("Finish burning", {{"Grass burners", q.q}, {"# Crushed grass", q.ng}}, {{PA, q.q}});

  b.subprocess(7);
  b.t("Start heating roots", {{"Start7", 1}, {"Fire and coals", 1}, {PA, 1}},
      {{"Fire and coals", 1}, {"Root heater", 1}});
  b.t("Arrange coals", {{"Coals needed", 1}, {"Fire and coals", 1}, {"Root heater", 1}},
      {{"Arranging coals", 1}});
  b.t("Coals arranged", {{"Arranging coals", 1}},
      {{"Coals", 1}, {"Fire and coals", 1}, {"Root heater", 1}});
  b.t("Lay root", {{"Roots with slits", 1}, {"Coals", 1}, {"Root heater", 1}},
      {{"Laying root", 1}});
  b.t("Root heated", {{"Laying root", 1}},
      {{"Coals", 1}, {"Roots with latex", 1}, {"# Heated roots", 1}, {"Root heater", 1}});
  b.t("Finish heating roots", {{"Root heater", 1}, {"# Heated roots", q.nr}}, {{PA, 1}});

  b.subprocess(8);
  b.t("Start dipping",
      {{"Start8", 1}, {"Roots with latex", 1}, {PA, q.m}, {"Applicator", 1}, {"Glue carrier", 1}},
      {{"Dipping", 1}, {"Glue carrier", 1}, {"Dipping on", 1}});
  b.t("Dip latex", {{"Dipping on", 1}, {"Roots with latex", 1}, {PA, q.m}, {"Applicator", 1}},
      {{"Dipping", 1}, {"Dipping on", 1}});
  b.t("Transfer latex", {{"Dipping", 1}},
      {{"Applicator", 1}, {"Latex on carrier", 1}, {"# Latex collected", 1}, {PA, q.m}});
  b.t("Press powder",
      {{"Latex on carrier", 1}, {"Black powder", 1}, {PA, q.m}, {"Glue carrier", 1}},
      {{"Latex on carrier", 1}, {"Pressing", 1}});
  b.t("Powder pressed", {{"Pressing", 1}}, {{"# Pressed powder", 1}, {PA, q.m}, {"Glue carrier", 1}});
  b.t("Finish adhesive",
      {{"Dipping on", 1}, {"Latex on carrier", 1}, {"# Latex collected", q.nr}, {"# Pressed powder", q.ng}},
      {{"Adhesive", 1}});
  return b.finish();
}

}  // namespace

ModelSpec model_spec(ModelVariant v, const ModelParams& params) {
  if (v == ModelVariant::BladeExample) return blade();
  params.validate();
  switch (v) {
    case ModelVariant::ACoranica:
      return coranica(params);
    case ModelVariant::OSchinzii:
      return schinzii(params, true);
    case ModelVariant::OSchinziiNoGoBackHome:
      return schinzii(params, false);
    case ModelVariant::BladeExample:
      break;
  }
  return blade();
}

}  // namespace petriforge
