#ifndef PMP_ENGINE_INTERNAL_HPP
#define PMP_ENGINE_INTERNAL_HPP

// Internal machinery shared by the staged tree solvers (partition/sort
// engines, the spacious-tree solver, the swap routine and the dense-board
// solver). Not installed; everything here lives in pmp::detail and may
// change freely.

#include <optional>
#include <utility>
#include <vector>

#include "pmp/config.hpp"
#include "pmp/graph.hpp"

namespace pmp {
namespace detail {

// ---------------------------------------------------------------------------
// Arena: mutable solving state. Every emitted move is validated against the
// current configuration immediately, so a bug in a schedule trips an
// internal-error check at the faulty move instead of producing a bad trace.
struct Arena {
  const Graph* g = nullptr;
  PebbleConfig cur;
  MoveSeq out;

  // Applies a single move (from must hold a pebble, to must be blank).
  void step(int from, int to);
  // Applies a whole sequence.
  void play(const MoveSeq& seq);
  // Walks the pebble at path.front() along the path; every other path cell
  // must be blank. Returns the pebble id moved.
  int walk(const std::vector<int>& path);
  // Walks the pebble at `from` to `to` along the unique tree path.
  int walk_to(int from, int to);
  int pebble_at(int cell) const { return cur.cell(cell); }
  bool blank(int cell) const { return cur.cell(cell) < 0; }
};

// ---------------------------------------------------------------------------
// Cell-set helpers. Boards and shells are vectors of host vertex ids.

// First `count` vertices reachable from `root` through `allow`ed vertices
// (root excluded, root need not be allowed), in BFS (layer, id) order.
// Throws internal_error if fewer than `count` cells are reachable.
std::vector<int> grow_cells(const Graph& g, int root,
                            const std::vector<char>& allow, int count);

// Cells sorted by (distance from gate descending, id ascending): the order in
// which a shell is filled ("deepest first"). Distances are host distances.
std::vector<int> deep_first(const Graph& g, int gate,
                            const std::vector<int>& cells);

// Cells sorted by (distance from gate ascending, id ascending): the order in
// which occupied shell cells are extracted ("shallowest first").
std::vector<int> shallow_first(const Graph& g, int gate,
                               const std::vector<int>& cells);

// ---------------------------------------------------------------------------
// Unlabeled transfers on sub-boards, with landing maps.

struct TransferPlan {
  MoveSeq moves;                          // host-id moves
  std::vector<std::pair<int, int>> map;   // (from cell, landing cell) pairs
};

// Computes (without applying) the unlabeled transfer of the pebbles on
// `from` to the cells `to`, restricted to the induced board `board`
// (host ids; must induce a tree containing from and to). Cells of the host
// outside `board` are ignored entirely, so they must not be needed.
TransferPlan plan_transfer(const Graph& host, const std::vector<int>& board,
                           const std::vector<int>& from,
                           const std::vector<int>& to);

// The configuration that, after playing `later`, becomes `target`.
PebbleConfig pulled_back(const PebbleConfig& target, const MoveSeq& later);

// ---------------------------------------------------------------------------
// Phase planner. One four-set schedule drives both partition engines; the
// planner picks shell sizes, initial quarter sizes and per-phase keep counts
// so that every capacity, recursion-fit and mark-flow constraint holds for
// the given side capacities. Shell sizes exclude the anchor cells (the rivet
// cell / the chain endpoints), which stay blank between phases.
struct PhasePlan {
  int s1 = 0, s2 = 0, s3 = 0, s4 = 0;  // shell sizes (anchors excluded)
  int q1 = 0, q2 = 0, q3 = 0, q4 = 0;  // initial quarter occupancies
  int h3 = 0, h4 = 0, h5 = 0, h6 = 0;  // keep counts of phases 3..6
  int m3 = 0, m4 = 0, m5 = 0, m6 = 0;  // pebble counts of phases 3..6
  int want_a = 0;                      // pebbles ending on side 1
};

enum class PlanKind { rivet, chain };

// Finds a schedule for m pebbles with `want_a` of them ending on side 1.
// side_a / side_b are the total side sizes including the anchor (rivet kind)
// or excluding the chain (chain kind, anchors v1/v2 not counted). entry_a,
// if nonnegative, pins q1+q2 (the side-1 entry occupancy) for chain-kind
// recursive calls so the initial redistribution never crosses the chain.
// `sorting` additionally reserves capacity for the sort schedule (all of
// side 1's pebbles park on shell 1, all of side 2's on shell 4).
std::optional<PhasePlan> plan_phases(PlanKind kind, bool sorting, int m,
                                     int want_a, int side_a, int side_b,
                                     int entry_a = -1);

// ---------------------------------------------------------------------------
// Shell engines: boards made of an occupied branch system plus an empty
// buffer behind its gate. All pebbles are parked into the buffer and
// streamed back out; because destination groups are depth-segregated, the
// forced buffer order never matters for a partition, and sorting recurses on
// depth halves. Cost O(m * (m + buffer depth)) resp. the same times log m.

struct ShellBoard {
  int gate = -1;                 // branch cells attach at gate
  std::vector<int> branch;       // occupied branch system (excludes gate)
  std::vector<int> buffer;       // empty workspace (excludes gate), a
                                 // connected region adjacent to gate
};

// Moves the pebbles currently on board.branch so that exactly the pebbles
// `deep_set` (by id) end on `deep_cells` and the rest on the remaining
// branch cells; deep_cells must be depth-closed from below within branch
// (no shallower target blocks a deeper one's route).
void partition_shell(Arena& a, const ShellBoard& board,
                     const std::vector<int>& deep_cells,
                     const std::vector<char>& deep_set);

// Places every pebble on board.branch at target.pos(pebble); the target
// support must equal a subset of branch cells of the right size.
void sort_shell(Arena& a, const ShellBoard& board, const PebbleConfig& target);

// ---------------------------------------------------------------------------
// Four-set engines. A SplitBoard describes one rivet- or chain-structured
// board: anchors, the two side cell sets (excluding anchors and chain), and
// for chain kind the interior chain cells in order from v1 to v2.
struct SplitBoard {
  PlanKind kind = PlanKind::rivet;
  int o = -1;                  // rivet cell (rivet kind), else -1
  int v1 = -1, v2 = -1;        // chain endpoints (chain kind), else -1
  std::vector<int> side1;      // side cells, anchor(s) excluded
  std::vector<int> side2;
  std::vector<int> chain;      // interior chain cells v1->v2 (chain kind)
};

// Partition: routes marked pebbles (mark[id] != 0; exactly want_a of the
// pebbles on the board) into side 1, the rest into side 2. Pebbles must
// already sit on the board. For chain kind the chain must be empty.
void partition_split(Arena& a, const SplitBoard& board,
                     const std::vector<char>& mark, int want_a);

// Sort: transforms the pebbles on the board into exactly `target`
// (sup(target) within side cells). For chain kind the chain must be empty.
void sort_split(Arena& a, const SplitBoard& board, const PebbleConfig& target);

// ---------------------------------------------------------------------------
// Small-board exact search: breadth-first search over configurations of the
// induced board (must stay tiny; asserts at most 16 cells and 4 pebbles).
// Stops at the first configuration satisfying `goal` and applies the found
// moves. Used as the base case of the rivet recursion, where boards shrink
// to a handful of cells but branch degrees stop supporting the schedule.
void tiny_solve(Arena& a, const std::vector<int>& board,
                const std::vector<char>& goal_by_support,
                const PebbleConfig* exact_goal,
                const std::vector<int>& side1_cells,
                const std::vector<char>& mark);

// ---------------------------------------------------------------------------
// Swap machinery (used by swap_pebbles and the n <= 4 spacious base case).
// Exchanges pebbles p and q, restoring every other pebble, on a tree with
// N >= 3n. Appends to the arena.
void swap_spacious(Arena& a, int p, int q);

}  // namespace detail
}  // namespace pmp

#endif  // PMP_ENGINE_INTERNAL_HPP
