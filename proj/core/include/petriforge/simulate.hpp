#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "petriforge/net.hpp"

namespace petriforge {

enum class StopReason { Deadlock, MaxSteps };

struct TraceStep {
  Marking before;
  TransitionId fired;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
  std::uint64_t seed = 0;
  std::vector<TraceStep> steps;
  Marking final;
  StopReason stop_reason = StopReason::Deadlock;
  friend bool operator==(const Trace&, const Trace&) = default;
};

/// Uniform integer in [0, n) from a 64-bit engine. Uses Lemire's
/// multiply-and-reject reduction so results do not depend on the standard
/// library's distribution implementation. n must be positive.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n);

/// Token game: at each step one transition is drawn uniformly from the
/// enabled set (ascending index order) using std::mt19937_64 seeded with
/// seed. Stops on deadlock or after max_steps firings. max_steps must be
/// positive.
Trace random_run(const MarkedNet& mn, std::uint64_t seed, std::uint64_t max_steps);

struct RunSummary {
  std::vector<std::uint64_t> seeds;
  std::vector<std::size_t> step_counts;
  std::vector<StopReason> stop_reasons;
  /// Fraction of runs ending with a token on 'Adhesive'; empty when the net
  /// has no such place.
  std::optional<double> goal_fraction;
  /// Largest max_concurrency_degree over every marking visited.
  std::size_t max_concurrency = 0;
};

RunSummary run_statistics(const MarkedNet& mn, std::span<const std::uint64_t> seeds,
                          std::uint64_t max_steps);

/// One "transition-name | marking" line per step, marking taken after the
/// step.
std::string trace_to_text(const PetriNet& net, const Trace& trace);

std::string_view stop_reason_name(StopReason r) noexcept;

}  // namespace petriforge
