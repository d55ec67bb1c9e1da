#include "petriforge/models.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "petriforge/error.hpp"

namespace petriforge {

namespace {

struct VariantInfo {
  ModelVariant variant;
  std::string_view id;
  std::string_view title;
};

constexpr VariantInfo kVariantInfo[] = {
    {ModelVariant::ACoranica, "a-coranica", "A. coranica"},
    {ModelVariant::OSchinzii, "o-schinzii", "O. schinzii"},
    {ModelVariant::OSchinziiNoGoBackHome, "o-schinzii-no-return",
     "O. schinzii without 'Go back home'"},
    {ModelVariant::BladeExample, "blade", "Blade example"},
};

using Field = std::uint64_t ModelParams::*;

const std::vector<std::pair<std::string, Field>>& plain_fields() {
  static const std::vector<std::pair<std::string, Field>> fields = {
      {"p", &ModelParams::p},     {"d", &ModelParams::d},     {"c", &ModelParams::c},
      {"b", &ModelParams::b},     {"a", &ModelParams::a},     {"h", &ModelParams::h},
      {"q", &ModelParams::q},     {"m", &ModelParams::m},     {"nfw", &ModelParams::nfw},
      {"nbr", &ModelParams::nbr}, {"nb", &ModelParams::nb},   {"nbs", &ModelParams::nbs},
      {"nbl", &ModelParams::nbl}, {"x", &ModelParams::x},     {"sb", &ModelParams::sb},
      {"nr", &ModelParams::nr},   {"nts", &ModelParams::nts}, {"nco", &ModelParams::nco},
      {"ng", &ModelParams::ng},   {"gc", &ModelParams::gc},
  };
  return fields;
}

using ToolField = std::optional<std::uint64_t> ModelParams::*;

const std::vector<std::pair<std::string, ToolField>>& tool_fields() {
  static const std::vector<std::pair<std::string, ToolField>> fields = {
      {"fs", &ModelParams::fs}, {"ds", &ModelParams::ds}, {"k", &ModelParams::k}};
  return fields;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string_view variant_id(ModelVariant v) noexcept {
  for (const auto& i : kVariantInfo) {
    if (i.variant == v) return i.id;
  }
  return "?";
}

std::string_view variant_title(ModelVariant v) noexcept {
  for (const auto& i : kVariantInfo) {
    if (i.variant == v) return i.title;
  }
  return "?";
}

std::optional<ModelVariant> parse_variant(std::string_view id) {
  for (const auto& i : kVariantInfo) {
    if (i.id == id) return i.variant;
  }
  return std::nullopt;
}

const std::vector<std::string>& param_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : plain_fields()) out.push_back(n);
    for (const auto& [n, f] : tool_fields()) out.push_back(n);
    return out;
  }();
  return names;
}

void ModelParams::validate() const {
  for (const auto& [name, value] : fields()) {
    if (value == 0) throw ParamError("parameter '" + name + "' must be at least 1");
  }
  if (x > u()) {
    throw ParamError("parameter 'x' (" + std::to_string(x) + ") exceeds nb*sb (" +
                     std::to_string(u()) + ")");
  }
}

void ModelParams::set(std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  std::uint64_t parsed = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc() || ptr != value.data() + value.size() || value.empty() || parsed == 0) {
    throw ParamError("parameter '" + std::string(key) + "': '" + std::string(value) +
                     "' is not a positive integer");
  }
  for (const auto& [name, field] : plain_fields()) {
    if (name == key) {
      this->*field = parsed;
      return;
    }
  }
  for (const auto& [name, field] : tool_fields()) {
    if (name == key) {
      this->*field = parsed;
      return;
    }
  }
  throw ParamError("unknown parameter '" + std::string(key) + "'");
}

void ModelParams::apply_text(std::string_view text) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParamError("line " + std::to_string(line_no) + ": expected key=value, got '" +
                       std::string(line) + "'");
    }
    set(line.substr(0, eq), line.substr(eq + 1));
  }
}

std::vector<std::pair<std::string, std::uint64_t>> ModelParams::fields() const {
  std::vector<std::pair<std::string, std::uint64_t>> out;
  for (const auto& [name, field] : plain_fields()) out.emplace_back(name, this->*field);
  out.emplace_back("fs", firesticks());
  out.emplace_back("ds", digging_sticks());
  out.emplace_back("k", knives());
  return out;
}

const PlaceSpec* ModelSpec::find_place(std::string_view name) const {
  for (const auto& p : places) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

MarkedNet ModelSpec::instantiate() const {
  NetBuilder b(name);
  std::unordered_map<std::string_view, PlaceId> ids;
  std::vector<Tokens> initial;
  for (const auto& p : places) {
    ids.emplace(p.name, b.add_place(p.name));
    initial.push_back(p.initial);
  }
  auto place = [&](const std::string& n, const std::string& t) {
    auto it = ids.find(n);
    if (it == ids.end()) {
      throw NetStructureError("transition '" + t + "' refers to undeclared place '" + n + "'");
    }
    return it->second;
  };
  for (const auto& t : transitions) {
    const TransitionId id = b.add_transition(t.name);
    for (const auto& a : t.inputs) b.add_arc(place(a.place, t.name), id, a.weight);
    for (const auto& a : t.outputs) b.add_arc(id, place(a.place, t.name), a.weight);
  }
  return MarkedNet(b.build(), Marking(std::move(initial)));
}

MarkedNet build_model(ModelVariant v, const ModelParams& params) {
  return model_spec(v, params).instantiate();
}

std::uint64_t people_in(const ModelSpec& spec, const MarkedNet& mn, const Marking& m) {
  std::uint64_t total = 0;
  for (const auto& p : spec.places) {
    if (p.people_per_token == 0) continue;
    const auto id = mn.net().find_place(p.name);
    if (!id) throw UnknownPlaceError("place '" + p.name + "' is not in the net");
    total += m[*id] * p.people_per_token;
  }
  return total;
}

std::vector<SweepRow> sweep_people(ModelVariant v, const ModelParams& params,
                                   std::uint64_t p_first, std::uint64_t p_last,
                                   const ExplorationLimits& limits) {
  if (p_first < 1 || p_last > 64 || p_first > p_last) {
    throw ParamError("people range " + std::to_string(p_first) + ".." + std::to_string(p_last) +
                     " must be a nonempty range within 1..64");
  }
  std::vector<SweepRow> rows;
  for (std::uint64_t p = p_first; p <= p_last; ++p) {
    ModelParams at = params;
    at.p = p;
    at.fs = p;
    at.ds = p;
    at.k = p;
    const auto g = build_reachability_graph(build_model(v, at), limits);
    rows.push_back({p, g.node_count(), g.edge_count()});
  }
  return rows;
}

}  // namespace petriforge
