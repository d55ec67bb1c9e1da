#include "petriforge/simulate.hpp"

#include <algorithm>

#include "petriforge/error.hpp"

namespace petriforge {

namespace {
__extension__ using u128 = unsigned __int128;
}  // namespace

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t n) {
  if (n == 0) throw Error("uniform_below: empty range");
  u128 m = static_cast<u128>(engine()) * n;
  auto low = static_cast<std::uint64_t>(m);
  if (low < n) {
    const std::uint64_t threshold = (0 - n) % n;
    while (low < threshold) {
      m = static_cast<u128>(engine()) * n;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

Trace random_run(const MarkedNet& mn, std::uint64_t seed, std::uint64_t max_steps) {
  if (max_steps == 0) throw Error("random_run: max_steps must be positive");
  std::mt19937_64 engine(seed);
  Trace trace;
  trace.seed = seed;
  Marking current = mn.initial();
  for (;;) {
    const auto enabled = enabled_set(mn.net(), current);
    if (enabled.empty()) {
      trace.stop_reason = StopReason::Deadlock;
      break;
    }
    if (trace.steps.size() == max_steps) {
      trace.stop_reason = StopReason::MaxSteps;
      break;
    }
    const TransitionId t = enabled[uniform_below(engine, enabled.size())];
    Marking next = fire(mn.net(), current, t);
    trace.steps.push_back({std::move(current), t});
    current = std::move(next);
  }
  trace.final = std::move(current);
  return trace;
}

RunSummary run_statistics(const MarkedNet& mn, std::span<const std::uint64_t> seeds,
                          std::uint64_t max_steps) {
  if (seeds.empty()) throw Error("run_statistics: no seeds given");
  RunSummary summary;
  const auto goal = mn.net().find_place("Adhesive");
  std::size_t reached = 0;
  for (std::uint64_t seed : seeds) {
    const Trace trace = random_run(mn, seed, max_steps);
    summary.seeds.push_back(seed);
    summary.step_counts.push_back(trace.steps.size());
    summary.stop_reasons.push_back(trace.stop_reason);
    for (const auto& step : trace.steps) {
      summary.max_concurrency =
          std::max(summary.max_concurrency, max_concurrency_degree(mn.net(), step.before));
    }
    summary.max_concurrency =
        std::max(summary.max_concurrency, max_concurrency_degree(mn.net(), trace.final));
    if (goal && trace.final[*goal] > 0) ++reached;
  }
  if (goal) summary.goal_fraction = static_cast<double>(reached) / static_cast<double>(seeds.size());
  return summary;
}

std::string trace_to_text(const PetriNet& net, const Trace& trace) {
  std::string out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const Marking& after = i + 1 < trace.steps.size() ? trace.steps[i + 1].before : trace.final;
    out += net.transition_name(trace.steps[i].fired);
    out += " | ";
    out += after.to_string();
    out += '\n';
  }
  return out;
}

std::string_view stop_reason_name(StopReason r) noexcept {
  return r == StopReason::Deadlock ? "deadlock" : "max-steps";
}

}  // namespace petriforge
