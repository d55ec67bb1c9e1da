#include <doctest.h>

#include <set>

#include "petriforge/coverability.hpp"
#include "petriforge/pnml.hpp"
#include "petriforge/reachability.hpp"
#include "petriforge/simulate.hpp"
#include "support/oracles.hpp"
#include "support/pnml_schema.hpp"
#include "support/random_net.hpp"

using namespace petriforge;
using namespace testsupport;

namespace {

constexpr int kNets = 1200;
constexpr std::size_t kCap = 2000;

// Half the nets are conservative so most reachable sets are finite.
RawNet nth_net(int i) {
  std::mt19937_64 rng(0x5eed0000ULL + static_cast<std::uint64_t>(i));
  RawNetOptions o;
  o.conservative = i % 2 == 0;
  return random_raw_net(rng, o);
}

// A few markings visited by a random walk from the initial marking.
std::vector<Vec> sample_markings(const RawNet& n, std::mt19937_64& rng) {
  std::vector<Vec> out{n.initial};
  Vec m = n.initial;
  for (int step = 0; step < 8; ++step) {
    std::vector<std::size_t> en;
    for (std::size_t t = 0; t < n.transitions; ++t) {
      if (raw_enabled(n, m, t)) en.push_back(t);
    }
    if (en.empty()) break;
    m = raw_fire(n, m, en[pick(rng, 0, en.size() - 1)]);
    out.push_back(m);
  }
  // plus an arbitrary marking, reachable or not
  Vec any(n.places);
  for (auto& v : any) v = pick(rng, 0, 4);
  out.push_back(any);
  return out;
}

}  // namespace

TEST_CASE("firing: locality, token balance, nonnegativity") {
  std::size_t fired = 0;
  for (int i = 0; i < kNets; ++i) {
    const RawNet raw = nth_net(i);
    const MarkedNet mn = raw.build();
    std::mt19937_64 rng(i);
    for (const Vec& v : sample_markings(raw, rng)) {
      const Marking m(v);
      for (std::size_t t = 0; t < raw.transitions; ++t) {
        const TransitionId tid{static_cast<std::uint32_t>(t)};
        if (!raw_enabled(raw, v, t)) {
          REQUIRE_THROWS_AS(fire(mn.net(), m, tid), NotEnabledError);
          continue;
        }
        const Vec next = to_vec(fire(mn.net(), m, tid));
        REQUIRE(next == raw_fire(raw, v, t));
        std::int64_t delta = 0;
        for (std::size_t p = 0; p < raw.places; ++p) {
          if (raw.pre[t][p] == 0 && raw.post[t][p] == 0) REQUIRE(next[p] == v[p]);
          delta += static_cast<std::int64_t>(raw.post[t][p]) - static_cast<std::int64_t>(raw.pre[t][p]);
        }
        std::int64_t before = 0, after = 0;
        for (std::size_t p = 0; p < raw.places; ++p) {
          before += static_cast<std::int64_t>(v[p]);
          after += static_cast<std::int64_t>(next[p]);
        }
        REQUIRE(after - before == delta);
        ++fired;
      }
    }
  }
  CHECK(fired > 1000);
}

TEST_CASE("enabled set and concurrent enabling agree with brute force") {
  for (int i = 0; i < kNets; ++i) {
    const RawNet raw = nth_net(i);
    const MarkedNet mn = raw.build();
    std::mt19937_64 rng(i + 7);
    for (const Vec& v : sample_markings(raw, rng)) {
      const Marking m(v);
      std::vector<TransitionId> expect;
      for (std::size_t t = 0; t < raw.transitions; ++t) {
        const TransitionId tid{static_cast<std::uint32_t>(t)};
        if (raw_enabled(raw, v, t)) expect.push_back(tid);
        const TransitionId single[] = {tid};
        REQUIRE(is_concurrently_enabled(mn.net(), m, single) == is_enabled(mn.net(), m, tid));
      }
      REQUIRE(enabled_set(mn.net(), m) == expect);
      // a random subset against summed demand
      std::vector<TransitionId> subset;
      Vec need(raw.places, 0);
      for (std::size_t t = 0; t < raw.transitions; ++t) {
        if (pick(rng, 0, 1) == 0) continue;
        subset.push_back(TransitionId{static_cast<std::uint32_t>(t)});
        for (std::size_t p = 0; p < raw.places; ++p) need[p] += raw.pre[t][p];
      }
      bool fits = true;
      for (std::size_t p = 0; p < raw.places; ++p) fits = fits && need[p] <= v[p];
      REQUIRE(is_concurrently_enabled(mn.net(), m, subset) == fits);
      REQUIRE(max_concurrency_degree(mn.net(), m) == raw_max_concurrency(raw, v));
    }
  }
}

TEST_CASE("reachability equals the fixed-point oracle") {
  std::size_t finite = 0, infinite = 0;
  for (int i = 0; i < kNets; ++i) {
    const RawNet raw = nth_net(i);
    const MarkedNet mn = raw.build();
    const auto expect = raw_reachable(raw, kCap);
    if (!expect) {
      REQUIRE_THROWS_AS(build_reachability_graph(mn, ExplorationLimits{kCap, 1'000'000}),
                        LimitExceededError);
      ++infinite;
      continue;
    }
    const auto g = build_reachability_graph(mn, ExplorationLimits{kCap, 1'000'000});
    std::set<Vec> got;
    for (const auto& m : g.markings()) got.insert(to_vec(m));
    REQUIRE(got.size() == g.node_count());
    REQUIRE(got == *expect);
    REQUIRE(g.edge_count() == raw_edge_count(raw, *expect));
    REQUIRE(g.marking(0) == Marking(raw.initial));
    for (const Edge& e : g.edges()) {
      REQUIRE(fire(mn.net(), g.marking(e.from), e.label) == g.marking(e.to));
    }
    ++finite;
  }
  CHECK(finite >= 500);
  CHECK(infinite >= 1);
}

TEST_CASE("coverability equals reachability on bounded nets") {
  std::size_t bounded = 0;
  for (int i = 0; i < kNets; ++i) {
    const RawNet raw = nth_net(i);
    const MarkedNet mn = raw.build();
    const auto c = build_coverability_graph(mn);
    const auto expect = raw_reachable(raw, kCap);
    if (c.has_omega()) {
      REQUIRE_FALSE(expect.has_value());
      continue;
    }
    REQUIRE(expect.has_value());
    std::set<Vec> got;
    for (const auto& m : c.markings()) got.insert(to_vec(m.to_marking()));
    REQUIRE(got == *expect);
    REQUIRE(c.node_count() == expect->size());
    REQUIRE(c.edge_count() == raw_edge_count(raw, *expect));
    ++bounded;
  }
  CHECK(bounded >= 500);
}

TEST_CASE("PNML round trip is the identity") {
  std::string previous;
  for (int i = 0; i < kNets; ++i) {
    const RawNet raw = nth_net(i);
    const MarkedNet mn = raw.build("net " + std::to_string(i));
    const std::string xml = write_pnml(mn);
    REQUIRE(pnml_schema_violations(xml).empty());
    const auto back = parse_pnml(xml);
    REQUIRE(back.net == mn);
    REQUIRE(write_pnml(back.net) == xml);
    REQUIRE(xml != previous);
    previous = xml;
  }
}

TEST_CASE("distinct nets serialize differently") {
  std::map<std::string, MarkedNet> seen;
  for (int i = 0; i < kNets; ++i) {
    const MarkedNet mn = nth_net(i).build();
    const auto [it, fresh] = seen.emplace(write_pnml(mn), mn);
    if (!fresh) REQUIRE(it->second == mn);
  }
}

TEST_CASE("random runs follow the firing rule") {
  for (int i = 0; i < kNets; ++i) {
    const RawNet raw = nth_net(i);
    const MarkedNet mn = raw.build();
    const Trace t = random_run(mn, static_cast<std::uint64_t>(i), 50);
    Vec m = raw.initial;
    for (const auto& s : t.steps) {
      REQUIRE(to_vec(s.before) == m);
      REQUIRE(raw_enabled(raw, m, s.fired.index));
      m = raw_fire(raw, m, s.fired.index);
    }
    REQUIRE(to_vec(t.final) == m);
    bool dead = true;
    for (std::size_t tr = 0; tr < raw.transitions; ++tr) dead = dead && !raw_enabled(raw, m, tr);
    REQUIRE((t.stop_reason == StopReason::Deadlock) == dead);
    REQUIRE(random_run(mn, static_cast<std::uint64_t>(i), 50) == t);
  }
}
