#include "pmp/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

namespace pmp {

namespace {

using u64 = std::uint64_t;

// Positions of pebbles 1..n written in radix N. Distinctness of positions is
// implied by reachability from a valid start, so occupancy needs no bits.
struct Codec {
  int n_vertices;
  int n_pebbles;

  u64 encode(const PebbleConfig& c) const {
    u64 key = 0;
    for (int p = n_pebbles; p >= 1; --p)
      key = key * static_cast<u64>(n_vertices) +
            static_cast<u64>(c.position_of(p));
    return key;
  }

  PebbleConfig decode(u64 key) const {
    std::vector<int> pos(n_pebbles);
    for (int i = 0; i < n_pebbles; ++i) {
      pos[i] = static_cast<int>(key % static_cast<u64>(n_vertices));
      key /= static_cast<u64>(n_vertices);
    }
    return PebbleConfig::from_positions(n_vertices, pos);
  }

  bool fits() const {
    // n * log2(N) must stay below 64 bits; checked by repeated multiply.
    long double span = 1.0L;
    for (int i = 0; i < n_pebbles; ++i) span *= n_vertices;
    return span < 18'446'744'073'709'551'615.0L;
  }
};

struct Visit {
  u64 parent;
  Move via;
};

// Core search shared by the three entry points. Expands configurations in
// breadth-first order; `accept` decides termination.
OracleResult search(const Graph& g, const PebbleConfig& start,
                    const std::function<bool(const PebbleConfig&)>& accept,
                    long long max_states, bool count_only,
                    long long* reach_out) {
  PMP_CHECK(start.vertex_count() == g.vertex_count(), errc::size_mismatch,
            "configuration does not fit the graph");
  PMP_CHECK(max_states > 0, errc::invalid_argument, "bad state budget");
  Codec codec{g.vertex_count(), start.pebble_count()};
  PMP_CHECK(codec.fits(), errc::unsupported,
            "state space key exceeds 64 bits; oracle is for small boards");

  const u64 start_key = codec.encode(start);
  std::unordered_map<u64, Visit> seen;
  seen.reserve(static_cast<size_t>(std::min<long long>(max_states, 1 << 20)));
  seen.emplace(start_key, Visit{start_key, Move{}});

  OracleResult out;
  auto finish = [&](u64 goal_key, int dist) {
    out.status = OracleStatus::solved;
    out.optimal_moves = dist;
    out.states_seen = static_cast<long long>(seen.size());
    MoveSeq rev;
    for (u64 k = goal_key; k != start_key; k = seen.at(k).parent)
      rev.push_back(seen.at(k).via);
    out.trace.assign(rev.rbegin(), rev.rend());
    if (reach_out) *reach_out = out.states_seen;
    return out;
  };

  if (!count_only && accept(start)) return finish(start_key, 0);

  std::deque<std::pair<u64, int>> queue{{start_key, 0}};
  std::vector<int> cells(g.vertex_count());
  while (!queue.empty()) {
    auto [key, dist] = queue.front();
    queue.pop_front();
    PebbleConfig cfg = codec.decode(key);
    // Weight of pebble p's digit in the key, for incremental re-encoding.
    std::vector<u64> weight(cfg.pebble_count());
    u64 w = 1;
    for (int p = 1; p <= cfg.pebble_count(); ++p) {
      weight[p - 1] = w;
      w *= static_cast<u64>(g.vertex_count());
    }
    for (int from = 0; from < g.vertex_count(); ++from) {
      int p = cfg.at(from);
      if (p == 0) continue;
      for (int to : g.neighbors(from)) {
        if (!cfg.is_blank(to)) continue;
        u64 next = key + weight[p - 1] * static_cast<u64>(to) -
                   weight[p - 1] * static_cast<u64>(from);
        if (seen.count(next)) continue;
        if (static_cast<long long>(seen.size()) >= max_states) {
          out.status = OracleStatus::budget_exhausted;
          out.states_seen = static_cast<long long>(seen.size());
          if (reach_out) *reach_out = -1;
          return out;
        }
        seen.emplace(next, Visit{key, Move{from, to}});
        if (!count_only) {
          PebbleConfig ncfg = cfg;
          ncfg.relocate(from, to);
          if (accept(ncfg)) return finish(next, dist + 1);
        }
        queue.emplace_back(next, dist + 1);
      }
    }
  }
  out.status = OracleStatus::no_solution;
  out.states_seen = static_cast<long long>(seen.size());
  if (reach_out) *reach_out = out.states_seen;
  return out;
}

}  // namespace

OracleResult oracle_solve(const Instance& inst, long long max_states) {
  inst.check();
  const PebbleConfig& goal = inst.goal;
  return search(
      inst.graph, inst.start,
      [&goal](const PebbleConfig& c) { return c == goal; }, max_states,
      /*count_only=*/false, nullptr);
}

OracleResult oracle_first(const Graph& g, const PebbleConfig& start,
                          const std::function<bool(const PebbleConfig&)>& pred,
                          long long max_states) {
  return search(g, start, pred, max_states, /*count_only=*/false, nullptr);
}

long long oracle_reachable_count(const Graph& g, const PebbleConfig& start,
                                 long long max_states) {
  long long reached = -1;
  search(
      g, start, [](const PebbleConfig&) { return false; }, max_states,
      /*count_only=*/true, &reached);
  return reached;
}

}  // namespace pmp
