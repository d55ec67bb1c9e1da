#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <future>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "petriforge/coverability.hpp"
#include "petriforge/error.hpp"
#include "petriforge/export.hpp"
#include "petriforge/models.hpp"
#include "petriforge/pnml.hpp"
#include "petriforge/reachability.hpp"
#include "petriforge/simulate.hpp"

namespace petriforge::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};
struct InputError : Error {
  using Error::Error;
};

struct Source {
  std::string model;
  std::vector<std::string> params;
  std::string params_file;
  std::string pnml;
  bool json = false;
};

struct Loaded {
  std::optional<MarkedNet> net;
  std::optional<ModelVariant> variant;
  std::optional<ModelSpec> spec;
  ModelParams params;
  std::vector<std::string> warnings;
};

std::string read_file(const std::string& path, std::string_view flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(std::string(flag) + ": cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

ExplorationLimits limits_from_env() {
  ExplorationLimits limits;
  if (const char* env = std::getenv("PETRIFORGE_MAX_NODES")) {
    const auto v = parse_u64(env);
    if (!v || *v == 0) {
      throw UsageError(std::string("PETRIFORGE_MAX_NODES: expected a positive integer, got '") +
                       env + "'");
    }
    limits.max_nodes = *v;
  }
  return limits;
}

ModelParams resolve_params(const Source& src) {
  ModelParams params;
  if (!src.params_file.empty()) {
    const std::string text = read_file(src.params_file, "--params");
    try {
      params.apply_text(text);
    } catch (const ParamError& e) {
      throw UsageError("--params " + src.params_file + ": " + e.what());
    }
  }
  for (const auto& kv : src.params) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw UsageError("--param: expected key=value, got '" + kv + "'");
    try {
      params.set(std::string_view(kv).substr(0, eq), std::string_view(kv).substr(eq + 1));
    } catch (const ParamError& e) {
      throw UsageError(std::string("--param: ") + e.what());
    }
  }
  try {
    params.validate();
  } catch (const ParamError& e) {
    throw UsageError(std::string("--param: ") + e.what());
  }
  return params;
}

ModelVariant require_variant(const Source& src, std::string_view command) {
  if (!src.pnml.empty()) {
    throw UsageError(std::string(command) + ": --pnml is not supported here; use --model");
  }
  if (src.model.empty()) throw UsageError(std::string(command) + ": --model is required");
  return *parse_variant(src.model);
}

Loaded load(const Source& src) {
  Loaded l;
  if (!src.model.empty() && !src.pnml.empty()) {
    throw UsageError("--model and --pnml are mutually exclusive");
  }
  if (!src.pnml.empty()) {
    if (!src.params.empty() || !src.params_file.empty()) {
      throw UsageError("--param/--params apply only to --model");
    }
    const std::string xml = read_file(src.pnml, "--pnml");
    try {
      auto parsed = parse_pnml(xml);
      l.net = std::move(parsed.net);
      l.warnings = std::move(parsed.warnings);
    } catch (const PnmlError& e) {
      throw InputError("--pnml " + src.pnml + ": " + e.what());
    }
    return l;
  }
  if (src.model.empty()) throw UsageError("one of --model or --pnml is required");
  l.variant = parse_variant(src.model);
  l.params = resolve_params(src);
  l.spec = model_spec(*l.variant, l.params);
  l.net = l.spec->instantiate();
  return l;
}

void add_source(CLI::App& sub, Source& src, bool allow_pnml = true) {
  std::vector<std::string> ids;
  for (auto v : kAllVariants) ids.emplace_back(variant_id(v));
  sub.add_option("--model", src.model, "Built-in model")->check(CLI::IsMember(ids));
  sub.add_option("--param", src.params, "Override a model parameter, key=value")
      ->type_name("KEY=VALUE");
  sub.add_option("--params", src.params_file, "File of key=value lines")->type_name("FILE");
  if (allow_pnml) sub.add_option("--pnml", src.pnml, "Load a PNML P/T net")->type_name("FILE");
  sub.add_flag("--json", src.json, "Machine-readable output");
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

// Prints "key   value" lines with aligned values, or one JSON object.
void emit(std::ostream& out, const Json& obj, bool json) {
  if (json) {
    out << obj.dump(2) << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : obj.items()) {
    if (!v.is_structured()) width = std::max(width, k.size());
  }
  for (const auto& [k, v] : obj.items()) {
    if (v.is_structured()) continue;
    out << k << ':' << std::string(width - k.size() + 1, ' ') << scalar_text(v) << '\n';
  }
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  const auto first = parse_u64(text.substr(0, dots));
  const auto last = dots == std::string::npos ? first : parse_u64(text.substr(dots + 2));
  if (!first || !last || *first == 0 || *first > *last || *last > 64) {
    throw UsageError("--p: expected a..b with 1 <= a <= b <= 64, got '" + text + "'");
  }
  return {*first, *last};
}

std::vector<SweepRow> run_sweep(ModelVariant v, const ModelParams& params,
                                std::pair<std::uint64_t, std::uint64_t> range, unsigned jobs,
                                const ExplorationLimits& limits) {
  std::vector<SweepRow> rows;
  if (jobs <= 1) return sweep_people(v, params, range.first, range.second, limits);
  std::vector<std::future<std::vector<SweepRow>>> pending;
  for (std::uint64_t p = range.first; p <= range.second; ++p) {
    pending.push_back(std::async(std::launch::async, [&, p] {
      return sweep_people(v, params, p, p, limits);
    }));
    if (pending.size() >= jobs || p == range.second) {
      for (auto& f : pending) {
        for (const auto& r : f.get()) rows.push_back(r);
      }
      pending.clear();
    }
  }
  return rows;
}

Json base_info(const Loaded& l) {
  const PetriNet& net = l.net->net();
  Json j;
  j["net"] = net.name();
  if (l.variant) j["model"] = std::string(variant_id(*l.variant));
  j["places"] = net.place_count();
  j["transitions"] = net.transition_count();
  return j;
}

bool has_goal_place(const PetriNet& net) { return net.find_place(kAdhesive).has_value(); }

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw InputError("--output: cannot write '" + path + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Place/Transition net toolkit", "petriforge"};
  app.require_subcommand(1, 1);
  app.fallthrough(false);

  Source src;
  std::string p_range = "1..11";
  unsigned jobs = 1;
  std::uint64_t seed = 0, runs = 1, max_steps = 10000;
  bool show_trace = false, verbose = false;
  std::string format, output;

  auto* info = app.add_subcommand("info", "Net statistics");
  add_source(*info, src);
  auto* analyze = app.add_subcommand("analyze", "Reachability graph metrics");
  add_source(*analyze, src);
  auto* cover = app.add_subcommand("cover", "Coverability graph and boundedness");
  add_source(*cover, src);
  auto* sweep = app.add_subcommand("sweep", "State-space size over a range of p (CSV)");
  add_source(*sweep, src, false);
  sweep->add_option("--p", p_range, "Range a..b of people available")->capture_default_str();
  sweep->add_option("--jobs", jobs, "Points computed in parallel")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  auto* simulate = app.add_subcommand("simulate", "Seeded random runs");
  add_source(*simulate, src);
  simulate->add_option("--seed", seed, "First seed")->capture_default_str();
  simulate->add_option("--runs", runs, "Number of runs, seeds seed..seed+runs-1")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_option("--max-steps", max_steps, "Step cap per run")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  simulate->add_flag("--trace", show_trace, "Print the trace of a single run");
  auto* validate = app.add_subcommand("validate", "Check subprocess contracts");
  add_source(*validate, src, false);
  validate->add_flag("--verbose,-v", verbose, "Show every row");
  auto* exp = app.add_subcommand("export", "Write pnml, dot, graph or csv");
  add_source(*exp, src);
  exp->add_option("--format", format, "pnml | dot | graph | csv")
      ->required()
      ->check(CLI::IsMember({"pnml", "dot", "graph", "csv"}));
  exp->add_option("--output,-o", output, "Output file (default stdout)");
  exp->add_option("--p", p_range, "Range for csv")->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    err << app.help();
    return kUsage;
  }

  try {
    const ExplorationLimits limits = limits_from_env();

    if (info->parsed()) {
      const Loaded l = load(src);
      for (const auto& w : l.warnings) err << "warning: " << w << '\n';
      Json j = base_info(l);
      j["arcs"] = l.net->net().arc_count();
      Tokens total = 0;
      for (Tokens t : l.net->initial().tokens()) total += t;
      j["initial_tokens"] = total;
      j["initial_marking"] = l.net->initial().to_string();
      if (l.spec) {
        int subprocesses = 0;
        for (const auto& t : l.spec->transitions) subprocesses = std::max(subprocesses, t.subprocess);
        j["subprocesses"] = subprocesses;
        Json params = Json::object();
        for (const auto& [k, v] : l.params.fields()) params[k] = v;
        j["params"] = params;
      }
      emit(out, j, src.json);
      if (!src.json && l.spec) {
        out << "params:";
        for (const auto& [k, v] : l.params.fields()) out << ' ' << k << '=' << v;
        out << '\n';
      }
      return kOk;
    }

    if (analyze->parsed()) {
      const Loaded l = load(src);
      for (const auto& w : l.warnings) err << "warning: " << w << '\n';
      const PetriNet& net = l.net->net();
      const auto g = build_reachability_graph(*l.net, limits);
      const auto dead = deadlock_markings(net, g);
      Json j = base_info(l);
      j["states"] = state_space_size(g);
      j["edges"] = g.edge_count();
      j["deadlocks"] = dead.size();
      if (has_goal_place(net)) {
        const PlaceId goal = *net.find_place(kAdhesive);
        std::size_t n = 0;
        for (NodeId d : dead) n += g.marking(d)[goal] == 1 ? 1 : 0;
        j["goal_deadlocks"] = n;
      }
      j["max_concurrency"] = max_concurrency_over(net, g);
      emit(out, j, src.json);
      return kOk;
    }

    if (cover->parsed()) {
      const Loaded l = load(src);
      for (const auto& w : l.warnings) err << "warning: " << w << '\n';
      const PetriNet& net = l.net->net();
      const auto g = build_coverability_graph(*l.net);
      Json j = base_info(l);
      j["nodes"] = g.node_count();
      j["edges"] = g.edge_count();
      j["bounded"] = !g.has_omega();
      Json unbounded = Json::array();
      for (std::uint32_t i = 0; i < net.place_count(); ++i) {
        for (const auto& m : g.markings()) {
          if (m.is_omega(PlaceId{i})) {
            unbounded.push_back(net.place_name(PlaceId{i}));
            break;
          }
        }
      }
      if (src.json) {
        j["unbounded_places"] = unbounded;
        emit(out, j, true);
      } else {
        emit(out, j, false);
        for (const auto& p : unbounded) out << "unbounded: " << p.get<std::string>() << '\n';
      }
      return kOk;
    }

    if (sweep->parsed()) {
      const ModelVariant v = require_variant(src, "sweep");
      const auto range = parse_range(p_range);
      const ModelParams params = resolve_params(src);
      const auto rows = run_sweep(v, params, range, jobs, limits);
      if (src.json) {
        Json j;
        j["model"] = std::string(variant_id(v));
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back({{"p", r.p}, {"states", r.nodes}, {"edges", r.edges}});
        j["rows"] = arr;
        out << j.dump(2) << '\n';
      } else {
        out << export_sweep_csv(rows);
      }
      return kOk;
    }

    if (simulate->parsed()) {
      const Loaded l = load(src);
      for (const auto& w : l.warnings) err << "warning: " << w << '\n';
      const PetriNet& net = l.net->net();
      if (runs == 1) {
        const Trace t = random_run(*l.net, seed, max_steps);
        if (show_trace && !src.json) out << trace_to_text(net, t);
        Json j = base_info(l);
        j["seed"] = seed;
        j["steps"] = t.steps.size();
        j["stop_reason"] = std::string(stop_reason_name(t.stop_reason));
        if (has_goal_place(net)) j["goal_reached"] = t.final[*net.find_place(kAdhesive)] == 1;
        j["final_marking"] = t.final.to_string();
        if (show_trace && src.json) {
          Json steps = Json::array();
          for (const auto& s : t.steps) steps.push_back(net.transition_name(s.fired));
          j["trace"] = steps;
        }
        emit(out, j, src.json);
        return kOk;
      }
      if (show_trace) throw UsageError("--trace: only valid with --runs 1");
      std::vector<std::uint64_t> seeds;
      for (std::uint64_t i = 0; i < runs; ++i) seeds.push_back(seed + i);
      const RunSummary s = run_statistics(*l.net, seeds, max_steps);
      Json j = base_info(l);
      j["runs"] = runs;
      j["first_seed"] = seed;
      std::size_t deadlocks = 0;
      for (auto r : s.stop_reasons) deadlocks += r == StopReason::Deadlock ? 1 : 0;
      j["deadlocked_runs"] = deadlocks;
      j["min_steps"] = *std::min_element(s.step_counts.begin(), s.step_counts.end());
      j["max_steps"] = *std::max_element(s.step_counts.begin(), s.step_counts.end());
      if (s.goal_fraction) j["goal_fraction"] = *s.goal_fraction;
      j["max_concurrency"] = s.max_concurrency;
      if (src.json) j["step_counts"] = s.step_counts;
      emit(out, j, src.json);
      return kOk;
    }

    if (validate->parsed()) {
      const ModelVariant v = require_variant(src, "validate");
      const ModelParams params = resolve_params(src);
      const ModelSpec spec = model_spec(v, params);
      const auto contracts = appendix_contracts(v, params);
      if (contracts.empty()) throw UsageError("validate: model '" + src.model + "' has no contracts");
      bool all = true;
      Json arr = Json::array();
      for (const auto& c : contracts) {
        const ContractReport r = validate_contract(spec, c, limits);
        all = all && r.pass;
        if (src.json) {
          Json rows = Json::array();
          for (const auto& row : r.rows) {
            rows.push_back({{"place", row.expected.place},
                            {"initial", row.expected.initial},
                            {"final", row.expected.final},
                            {"observed", row.observed},
                            {"pass", row.pass}});
          }
          Json plumbing = Json::object();
          for (const auto& [p, t] : r.plumbing) plumbing[p] = t;
          arr.push_back({{"subprocess", r.subprocess},
                         {"title", r.title},
                         {"pass", r.pass},
                         {"explored_states", r.explored_states},
                         {"terminal_states", r.terminal_states},
                         {"plumbing", plumbing},
                         {"rows", rows}});
          continue;
        }
        out << "subprocess " << r.subprocess << "  " << (r.pass ? "PASS" : "FAIL") << "  "
            << r.title << "  (" << r.explored_states << " states, " << r.terminal_states
            << " terminal)\n";
        for (const auto& [p, t] : r.plumbing) out << "    plumbing " << p << " = " << t << '\n';
        for (const auto& row : r.rows) {
          if (row.pass && !verbose) continue;
          out << "    " << (row.pass ? "ok  " : "BAD ") << row.expected.place << ": "
              << row.expected.initial << " -> " << row.expected.final << " (observed "
              << row.observed << ")\n";
        }
      }
      if (src.json) {
        Json j;
        j["model"] = std::string(variant_id(v));
        j["pass"] = all;
        j["contracts"] = arr;
        out << j.dump(2) << '\n';
      } else {
        out << (all ? "all contracts pass" : "some contracts fail") << '\n';
      }
      return all ? kOk : kAnalysisFailed;
    }

    if (exp->parsed()) {
      if (src.json) throw UsageError("export: --json is not supported");
      if (format == "csv") {
        const ModelVariant v = require_variant(src, "export --format csv");
        const auto rows = run_sweep(v, resolve_params(src), parse_range(p_range), 1, limits);
        write_output(output, export_sweep_csv(rows), out);
        return kOk;
      }
      const Loaded l = load(src);
      for (const auto& w : l.warnings) err << "warning: " << w << '\n';
      std::string text;
      if (format == "pnml") {
        text = write_pnml(*l.net);
      } else if (format == "dot") {
        text = export_dot_net(*l.net);
      } else {
        text = export_dot_graph(l.net->net(), build_reachability_graph(*l.net, limits));
      }
      write_output(output, text, out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  } catch (const LimitExceededError& e) {
    err << "error: " << e.what() << " (PETRIFORGE_MAX_NODES; stopped at " << e.nodes()
        << " states, " << e.edges() << " edges)\n";
    return kAnalysisFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInput;
  }
  return kUsage;
}

}  // namespace petriforge::cli
