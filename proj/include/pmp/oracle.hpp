#ifndef PMP_ORACLE_HPP
#define PMP_ORACLE_HPP

#include <functional>

#include "pmp/instance.hpp"

namespace pmp {

enum class OracleStatus {
  solved,            // goal (or predicate) reached; trace is optimal
  no_solution,       // full reachable set explored, goal not in it
  budget_exhausted,  // ran out of state budget before deciding
};

struct OracleResult {
  OracleStatus status = OracleStatus::budget_exhausted;
  int optimal_moves = -1;
  MoveSeq trace;
  long long states_seen = 0;
};

// Exhaustive breadth-first search over labeled configurations. Only suitable
// for small boards: the state space has N!/(N-n)! configurations. Requires
// the positions tuple to fit a 64-bit key, i.e. roughly n*log2(N) <= 63.
// Moves from each configuration are expanded in (from, to) order, so results
// (including the returned trace) are deterministic.
OracleResult oracle_solve(const Instance& inst,
                          long long max_states = 2'000'000);

// Shortest move count until pred(config) first holds; 0 when it holds at the
// start. The returned trace realizes that minimum.
OracleResult oracle_first(const Graph& g, const PebbleConfig& start,
                          const std::function<bool(const PebbleConfig&)>& pred,
                          long long max_states = 2'000'000);

// Number of configurations reachable from start (start included), or -1 when
// the budget is exhausted first.
long long oracle_reachable_count(const Graph& g, const PebbleConfig& start,
                                 long long max_states = 2'000'000);

}  // namespace pmp

#endif  // PMP_ORACLE_HPP
