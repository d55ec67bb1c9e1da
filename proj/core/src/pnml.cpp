#include "petriforge/pnml.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <charconv>
#include <map>
#include <sstream>
#include <unordered_map>

namespace petriforge {

namespace pt = boost::property_tree;

std::string_view pnml_error_kind_name(PnmlErrorKind kind) noexcept {
  switch (kind) {
    case PnmlErrorKind::MalformedXml: return "malformed-xml";
    case PnmlErrorKind::NotPtNet: return "not-pt-net";
    case PnmlErrorKind::MissingElement: return "missing-element";
    case PnmlErrorKind::DuplicateId: return "duplicate-id";
    case PnmlErrorKind::DuplicateName: return "duplicate-name";
    case PnmlErrorKind::DanglingArc: return "dangling-arc";
    case PnmlErrorKind::NotBipartite: return "not-bipartite";
    case PnmlErrorKind::DuplicateArc: return "duplicate-arc";
    case PnmlErrorKind::BadMarking: return "bad-marking";
    case PnmlErrorKind::BadInscription: return "bad-inscription";
  }
  return "?";
}

namespace {

constexpr std::string_view kAttr = "<xmlattr>";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string attr(const pt::ptree& node, const char* name) {
  const auto attrs = node.get_child_optional(std::string(kAttr));
  if (!attrs) return {};
  return attrs->get<std::string>(name, "");
}

bool is_meta(const std::string& key) {
  return key == kAttr || key == "<xmlcomment>";
}

struct RawNode {
  std::string id;
  std::string name;
  Tokens marking = 0;
};

struct RawArc {
  std::string id;
  std::string source;
  std::string target;
  Weight weight = 1;
};

class Reader {
 public:
  std::vector<std::string> warnings;
  std::vector<RawNode> places;
  std::vector<RawNode> transitions;
  std::vector<RawArc> arcs;

  void collect(const pt::ptree& container, const std::string& where) {
    for (const auto& [key, child] : container) {
      if (is_meta(key) || key == "name") continue;
      if (key == "place") {
        places.push_back(read_node(child, "place", true));
      } else if (key == "transition") {
        transitions.push_back(read_node(child, "transition", false));
      } else if (key == "arc") {
        arcs.push_back(read_arc(child));
      } else if (key == "page") {
        collect(child, "page '" + attr(child, "id") + "'");
      } else {
        warnings.push_back(where + ": ignored <" + key + ">");
      }
    }
  }

 private:
  RawNode read_node(const pt::ptree& node, const char* kind, bool is_place) {
    RawNode out;
    out.id = require_id(node, kind);
    out.name = out.id;
    for (const auto& [key, child] : node) {
      if (is_meta(key)) continue;
      if (key == "name") {
        out.name = child.get<std::string>("text", out.id);
      } else if (is_place && key == "initialMarking") {
        out.marking = number(child, out.id, PnmlErrorKind::BadMarking, "initial marking", 0);
      } else {
        warnings.push_back(std::string(kind) + " '" + out.id + "': ignored <" + key + ">");
      }
    }
    return out;
  }

  RawArc read_arc(const pt::ptree& node) {
    RawArc out;
    out.id = require_id(node, "arc");
    out.source = attr(node, "source");
    out.target = attr(node, "target");
    if (out.source.empty() || out.target.empty()) {
      throw PnmlError(PnmlErrorKind::MissingElement, out.id,
                      "arc '" + out.id + "' lacks a source or target attribute");
    }
    for (const auto& [key, child] : node) {
      if (is_meta(key)) continue;
      if (key == "inscription") {
        out.weight = number(child, out.id, PnmlErrorKind::BadInscription, "inscription", 1);
      } else {
        warnings.push_back("arc '" + out.id + "': ignored <" + key + ">");
      }
    }
    return out;
  }

  static std::string require_id(const pt::ptree& node, const char* kind) {
    std::string id = attr(node, "id");
    if (id.empty()) {
      throw PnmlError(PnmlErrorKind::MissingElement, "",
                      std::string("<") + kind + "> without an id attribute");
    }
    return id;
  }

  static std::uint64_t number(const pt::ptree& node, const std::string& id, PnmlErrorKind kind,
                              const char* what, std::uint64_t minimum) {
    const auto text = node.get_optional<std::string>("text");
    if (!text) {
      throw PnmlError(kind, id, std::string(what) + " of '" + id + "' has no <text>");
    }
    const std::string_view s = trim(*text);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || value < minimum) {
      throw PnmlError(kind, id,
                      std::string(what) + " of '" + id + "' is not a valid count: '" +
                          std::string(s) + "'");
    }
    return value;
  }
};

}  // namespace

PnmlParseResult parse_pnml(std::string_view xml) {
  pt::ptree doc;
  try {
    std::istringstream in{std::string(xml)};
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    throw PnmlError(PnmlErrorKind::MalformedXml, "",
                    "malformed XML at line " + std::to_string(e.line()) + ": " + e.message());
  }

  const auto root = doc.get_child_optional("pnml");
  if (!root) throw PnmlError(PnmlErrorKind::MissingElement, "", "document has no <pnml> root");

  Reader reader;
  const pt::ptree* net = nullptr;
  std::string net_id;
  for (const auto& [key, child] : *root) {
    if (is_meta(key)) continue;
    if (key != "net") {
      reader.warnings.push_back("pnml: ignored <" + key + ">");
      continue;
    }
    if (net != nullptr) {
      reader.warnings.push_back("pnml: ignored additional net '" + attr(child, "id") + "'");
      continue;
    }
    net = &child;
    net_id = attr(child, "id");
  }
  if (net == nullptr) throw PnmlError(PnmlErrorKind::MissingElement, "", "document has no <net>");

  const std::string type = attr(*net, "type");
  if (type != kPtNetType) {
    throw PnmlError(PnmlErrorKind::NotPtNet, net_id,
                    "net '" + net_id + "' has type '" + type + "', expected a P/T net");
  }
  const std::string net_name = net->get<std::string>("name.text", "");
  reader.collect(*net, "net '" + net_id + "'");

  enum class Kind { Place, Transition };
  std::unordered_map<std::string, std::pair<Kind, std::uint32_t>> index;
  auto register_id = [&](const std::string& id, Kind kind, std::size_t i) {
    if (!index.emplace(id, std::pair{kind, static_cast<std::uint32_t>(i)}).second || id == net_id) {
      throw PnmlError(PnmlErrorKind::DuplicateId, id, "id '" + id + "' is used more than once");
    }
  };
  for (std::size_t i = 0; i < reader.places.size(); ++i) {
    register_id(reader.places[i].id, Kind::Place, i);
  }
  for (std::size_t i = 0; i < reader.transitions.size(); ++i) {
    register_id(reader.transitions[i].id, Kind::Transition, i);
  }
  if (reader.places.empty() || reader.transitions.empty()) {
    throw PnmlError(PnmlErrorKind::MissingElement, net_id,
                    "net '" + net_id + "' needs at least one place and one transition");
  }

  auto check_names = [](const std::vector<RawNode>& nodes, const char* kind) {
    std::unordered_map<std::string_view, std::string_view> seen;
    for (const auto& n : nodes) {
      const auto [it, fresh] = seen.emplace(n.name, n.id);
      if (!fresh) {
        throw PnmlError(PnmlErrorKind::DuplicateName, n.id,
                        std::string(kind) + " '" + n.id + "' has the same name as '" +
                            std::string(it->second) + "': '" + n.name + "'");
      }
    }
  };
  check_names(reader.places, "place");
  check_names(reader.transitions, "transition");

  NetBuilder builder(net_name);
  std::vector<Tokens> initial;
  for (const auto& p : reader.places) {
    builder.add_place(p.name);
    initial.push_back(p.marking);
  }
  for (const auto& t : reader.transitions) builder.add_transition(t.name);

  std::map<std::tuple<Kind, std::uint32_t, std::uint32_t>, std::string> seen_arcs;
  std::unordered_map<std::string_view, int> arc_ids;
  for (const auto& a : reader.arcs) {
    if (index.contains(a.id) || a.id == net_id || !arc_ids.emplace(a.id, 0).second) {
      throw PnmlError(PnmlErrorKind::DuplicateId, a.id, "id '" + a.id + "' is used more than once");
    }
    const auto src = index.find(a.source);
    const auto dst = index.find(a.target);
    if (src == index.end() || dst == index.end()) {
      const std::string& missing = src == index.end() ? a.source : a.target;
      throw PnmlError(PnmlErrorKind::DanglingArc, a.id,
                      "arc '" + a.id + "' references unknown node '" + missing + "'");
    }
    if (src->second.first == dst->second.first) {
      throw PnmlError(PnmlErrorKind::NotBipartite, a.id,
                      "arc '" + a.id + "' connects two nodes of the same kind");
    }
    const bool to_transition = src->second.first == Kind::Place;
    const std::uint32_t place = to_transition ? src->second.second : dst->second.second;
    const std::uint32_t transition = to_transition ? dst->second.second : src->second.second;
    const auto key = std::tuple{src->second.first, place, transition};
    if (!seen_arcs.emplace(key, a.id).second) {
      throw PnmlError(PnmlErrorKind::DuplicateArc, a.id,
                      "arc '" + a.id + "' duplicates arc '" + seen_arcs[key] + "'");
    }
    if (to_transition) {
      builder.add_arc(PlaceId{place}, TransitionId{transition}, a.weight);
    } else {
      builder.add_arc(TransitionId{transition}, PlaceId{place}, a.weight);
    }
  }

  return {MarkedNet(builder.build(), Marking(std::move(initial))), std::move(reader.warnings)};
}

namespace {

std::string escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string write_pnml(const MarkedNet& mn) {
  const PetriNet& net = mn.net();
  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<pnml xmlns=\"" + std::string(kPnmlNamespace) + "\">\n";
  out += "  <net id=\"net\" type=\"" + std::string(kPtNetType) + "\">\n";
  if (!net.name().empty()) out += "    <name><text>" + escape(net.name()) + "</text></name>\n";
  out += "    <page id=\"page\">\n";
  for (std::uint32_t i = 0; i < net.place_count(); ++i) {
    const PlaceId p{i};
    out += "      <place id=\"p" + std::to_string(i) + "\"><name><text>" +
           escape(net.place_name(p)) + "</text></name>";
    if (mn.initial()[p] != 0) {
      out += "<initialMarking><text>" + std::to_string(mn.initial()[p]) +
             "</text></initialMarking>";
    }
    out += "</place>\n";
  }
  for (std::uint32_t i = 0; i < net.transition_count(); ++i) {
    out += "      <transition id=\"t" + std::to_string(i) + "\"><name><text>" +
           escape(net.transition_name(TransitionId{i})) + "</text></name></transition>\n";
  }
  std::size_t arc = 0;
  auto emit = [&](const std::string& src, const std::string& dst, Weight w) {
    out += "      <arc id=\"a" + std::to_string(arc++) + "\" source=\"" + src + "\" target=\"" +
           dst + "\"";
    if (w == 1) {
      out += "/>\n";
    } else {
      out += "><inscription><text>" + std::to_string(w) + "</text></inscription></arc>\n";
    }
  };
  for (std::uint32_t i = 0; i < net.transition_count(); ++i) {
    const TransitionId t{i};
    const std::string tid = "t" + std::to_string(i);
    for (const auto& [p, w] : net.pre(t)) emit("p" + std::to_string(p.index), tid, w);
    for (const auto& [p, w] : net.post(t)) emit(tid, "p" + std::to_string(p.index), w);
  }
  out += "    </page>\n";
  out += "  </net>\n";
  out += "</pnml>\n";
  return out;
}

}  // namespace petriforge
