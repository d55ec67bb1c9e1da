#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "random_net.hpp"

namespace testsupport {

using Vec = std::vector<std::uint64_t>;

inline bool raw_enabled(const RawNet& n, const Vec& m, std::size_t t) {
  for (std::size_t p = 0; p < n.places; ++p) {
    if (m[p] < n.pre[t][p]) return false;
  }
  return true;
}

inline Vec raw_fire(const RawNet& n, const Vec& m, std::size_t t) {
  Vec out = m;
  for (std::size_t p = 0; p < n.places; ++p) out[p] = out[p] - n.pre[t][p] + n.post[t][p];
  return out;
}

// Least fixed point of S = {M0} ∪ step(S), by Kleene iteration. Each round
// applies step only to the markings added by the previous round. Returns
// nullopt if the set grows past cap.
inline std::optional<std::set<Vec>> raw_reachable(const RawNet& n, std::size_t cap) {
  std::set<Vec> s{n.initial};
  std::set<Vec> added{n.initial};
  while (!added.empty()) {
    std::set<Vec> next;
    for (const Vec& m : added) {
      for (std::size_t t = 0; t < n.transitions; ++t) {
        if (!raw_enabled(n, m, t)) continue;
        Vec succ = raw_fire(n, m, t);
        if (!s.contains(succ)) next.insert(std::move(succ));
      }
    }
    s.insert(next.begin(), next.end());
    if (s.size() > cap) return std::nullopt;
    added = std::move(next);
  }
  return s;
}

inline std::size_t raw_edge_count(const RawNet& n, const std::set<Vec>& states) {
  std::size_t e = 0;
  for (const Vec& m : states) {
    for (std::size_t t = 0; t < n.transitions; ++t) e += raw_enabled(n, m, t) ? 1 : 0;
  }
  return e;
}

// Largest subset of transitions whose summed input demand fits in m,
// by enumerating every subset.
inline std::size_t raw_max_concurrency(const RawNet& n, const Vec& m) {
  std::size_t best = 0;
  for (std::uint64_t mask = 1; mask < (1ULL << n.transitions); ++mask) {
    Vec need(n.places, 0);
    std::size_t size = 0;
    for (std::size_t t = 0; t < n.transitions; ++t) {
      if (!(mask >> t & 1)) continue;
      ++size;
      for (std::size_t p = 0; p < n.places; ++p) need[p] += n.pre[t][p];
    }
    bool fits = true;
    for (std::size_t p = 0; p < n.places; ++p) fits = fits && need[p] <= m[p];
    if (fits) best = std::max(best, size);
  }
  return best;
}

inline Vec to_vec(const petriforge::Marking& m) { return Vec(m.tokens().begin(), m.tokens().end()); }

}  // namespace testsupport
