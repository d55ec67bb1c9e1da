#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "petriforge/net.hpp"
#include "petriforge/reachability.hpp"

namespace petriforge {

enum class ModelVariant { ACoranica, OSchinzii, OSchinziiNoGoBackHome, BladeExample };

inline constexpr ModelVariant kAllVariants[] = {
    ModelVariant::ACoranica, ModelVariant::OSchinzii, ModelVariant::OSchinziiNoGoBackHome,
    ModelVariant::BladeExample};

/// Command-line identifier: a-coranica, o-schinzii, o-schinzii-no-return, blade.
std::string_view variant_id(ModelVariant v) noexcept;
/// Human-readable name, e.g. "A. coranica".
std::string_view variant_title(ModelVariant v) noexcept;
std::optional<ModelVariant> parse_variant(std::string_view id);

/// Parameters of the two production models. Defaults reproduce the reference
/// setting with one person available.
struct ModelParams {
  std::uint64_t p = 1;

  // makers engaged per action
  std::uint64_t d = 1, c = 1, b = 1, a = 1, h = 1, q = 1, m = 1;

  // A. coranica quantities
  std::uint64_t nfw = 4, nbr = 4, nb = 4, nbs = 1, nbl = 1, x = 1, sb = 2;

  // O. schinzii quantities
  std::uint64_t nr = 4, nts = 4, nco = 4, ng = 4, gc = 1;

  // toolkit; unset means "one per person"
  std::optional<std::uint64_t> fs, ds, k;

  std::uint64_t firesticks() const { return fs.value_or(p); }
  std::uint64_t digging_sticks() const { return ds.value_or(p); }
  std::uint64_t knives() const { return k.value_or(p); }

  /// Fleshy scales in total, nb*sb.
  std::uint64_t u() const { return nb * sb; }
  /// Scales placed on the coals after the first x, u - x.
  std::uint64_t s() const { return u() - x; }

  /// Throws ParamError unless every field is >= 1 and x <= nb*sb.
  void validate() const;

  /// Assign one field by name. Throws ParamError for unknown keys or values
  /// that are not positive integers.
  void set(std::string_view key, std::string_view value);

  /// Apply "key=value" lines. Blank lines and lines starting with '#' are
  /// skipped; surrounding whitespace is ignored.
  void apply_text(std::string_view text);

  /// All fields as (name, value), in declaration order, toolkit resolved.
  std::vector<std::pair<std::string, std::uint64_t>> fields() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;
};

/// Names accepted by ModelParams::set, in declaration order.
const std::vector<std::string>& param_names();

enum class PlaceRole {
  Shared,    // connects subprocesses (Start places, pools, intermediate products)
  Internal,  // local to one subprocess
};

struct PlaceSpec {
  std::string name;
  Tokens initial = 0;
  PlaceRole role = PlaceRole::Internal;
  /// People represented by one token here. Nonzero for 'People available'
  /// and for places that hold working people.
  std::uint64_t people_per_token = 0;
};

struct ArcSpec {
  std::string place;
  Weight weight = 1;
};

struct TransitionSpec {
  std::string name;
  int subprocess = 0;  // 1..8; 0 for nets without subprocesses
  std::vector<ArcSpec> inputs;
  std::vector<ArcSpec> outputs;
};

/// Declarative description of a model. build_model() instantiates it; the
/// subprocess tags drive contract validation.
struct ModelSpec {
  std::string name;
  std::vector<PlaceSpec> places;
  std::vector<TransitionSpec> transitions;

  const PlaceSpec* find_place(std::string_view name) const;
  MarkedNet instantiate() const;
};

ModelSpec model_spec(ModelVariant v, const ModelParams& params = {});
MarkedNet build_model(ModelVariant v, const ModelParams& params = {});

inline constexpr std::string_view kPeopleAvailable = "People available";
inline constexpr std::string_view kAdhesive = "Adhesive";

/// People working or waiting in marking m: the sum of tokens weighted by
/// people_per_token.
std::uint64_t people_in(const ModelSpec& spec, const MarkedNet& mn, const Marking& m);

struct ContractRow {
  std::string place;
  Tokens initial = 0;
  Tokens final = 0;
};

/// Minimum enabling marking and final marking of one subprocess.
struct SubprocessContract {
  int subprocess = 0;
  std::string title;
  std::vector<ContractRow> rows;
};

/// The contract tables for a production variant, scaled by params. The
/// no-return variant uses the O. schinzii tables with 'Start3' and 'Start5'
/// replaced by the places that take their role. Empty for the blade net.
std::vector<SubprocessContract> appendix_contracts(ModelVariant v, const ModelParams& params = {});

struct ContractRowResult {
  ContractRow expected;
  Tokens observed = 0;
  bool pass = false;
};

struct ContractReport {
  int subprocess = 0;
  std::string title;
  std::vector<ContractRowResult> rows;
  /// Places outside the contract that had to be marked so the subnet could run.
  std::vector<std::pair<std::string, Tokens>> plumbing;
  std::size_t explored_states = 0;
  std::size_t terminal_states = 0;
  bool pass = false;
};

/// Explores the subnet formed by the contract's subprocess transitions,
/// starting from the contract's initial column (all other places empty, apart
/// from reported plumbing). Passes when some terminal marking agrees with the
/// final column on every row. Rows of the report show the terminal marking
/// closest to the final column. Throws UnknownPlaceError for unknown places.
ContractReport validate_contract(const ModelSpec& spec, const SubprocessContract& contract,
                                 const ExplorationLimits& limits = {});

struct SweepRow {
  std::uint64_t p = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  friend bool operator==(const SweepRow&, const SweepRow&) = default;
};

/// Full reachability size for every p in [p_first, p_last], with
/// fs = ds = k = p. The range must lie within 1..64.
std::vector<SweepRow> sweep_people(ModelVariant v, const ModelParams& params,
                                   std::uint64_t p_first, std::uint64_t p_last,
                                   const ExplorationLimits& limits = {});

}  // namespace petriforge
