#ifndef PMP_SOLVERS_HPP
#define PMP_SOLVERS_HPP

#include <vector>

#include "pmp/config.hpp"
#include "pmp/graph.hpp"

namespace pmp {

// Moves the set of occupied vertices of a tree from `from_support` to
// `to_support`, ignoring labels. Emits at most n*D moves (n pebbles, tree
// diameter D). Which label lands on which target is determined by the
// schedule; callers that care about labels fix them up afterwards.
//
// Works by discharging per-edge net flows in leaf-peel order: when a peeled
// leaf must send or receive one pebble across its parent edge, a cascade
// walk along pending flow edges clears or supplies the parent first. Every
// intermediate state keeps one pebble per vertex, so each emitted move is
// legal by construction.
MoveSeq transfer_unlabeled(const Graph& tree,
                           const std::vector<int>& from_support,
                           const std::vector<int>& to_support);

// Structural case a spacious tree instance falls into, per the position of
// the centroid: at a branching vertex, inside a short chain, or inside a
// chain long enough to hold every pebble.
enum class AmpleCase { rivet, isthmus_short, isthmus_long };

// Precomputed split of a tree with at least 3n vertices into two work sides
// around an anchor. For `rivet` and `isthmus_short` the anchor is a single
// branching vertex `rivet` shared by both sides; for `isthmus_long` the
// anchors are the chain endpoints `v1` (side 1) and `v2` (side 2) with the
// chain interior in `corridor`. `side1`/`side2` are in BFS order from their
// anchor and exclude anchors and corridor; side2 is never smaller.
struct AmpleContext {
  const Graph* graph = nullptr;
  int n = 0;
  int diameter = 0;
  AmpleCase kind = AmpleCase::rivet;
  int rivet = -1;
  int v1 = -1;
  int v2 = -1;
  std::vector<int> corridor;
  std::vector<int> side1;
  std::vector<int> side2;
};

// Builds the case analysis for a feasible tree with N >= 3n and n >= 1.
// Throws errc::precondition_failed if the tree is too small or infeasible.
AmpleContext make_ample_context(const Graph& tree, int n);

// Routes every pebble of q1 into side 1 and every pebble of q2 into side 2
// (each side includes the shared anchor) of a rivet-style context (kind
// rivet or isthmus_short), starting from pi. q1 and q2 partition the pebbles
// and differ in size by at most one; both sides must have at least n+1
// vertices. Uses the four-set staging shuffle with recursive halving; length
// is O(n*D + n^2*log n).
MoveSeq partition_rivet(const AmpleContext& ctx, const PebbleConfig& pi,
                        const std::vector<int>& q1, const std::vector<int>& q2);

// Transforms pi1 into exactly pi2 (same pebbles, any supports) on a
// rivet-style context; both sides must have at least n+1 vertices. Length is
// O(n*D + n^2*log n).
MoveSeq sort_rivet(const AmpleContext& ctx, const PebbleConfig& pi1,
                   const PebbleConfig& pi2);

// Same as partition_rivet but for a long-chain context (kind isthmus_long):
// side 1 / side 2 are the subtrees at the two chain endpoints. Requires a
// chain of at least n vertices and sides of at least n/2 + 1 vertices each;
// the empty chain doubles as staging space, which is what lowers the side
// requirement compared to the rivet variant.
MoveSeq partition_isthmus(const AmpleContext& ctx, const PebbleConfig& pi,
                          const std::vector<int>& q1,
                          const std::vector<int>& q2);

// Same as sort_rivet but for a long-chain context (side requirement n/2 + 1).
MoveSeq sort_isthmus(const AmpleContext& ctx, const PebbleConfig& pi1,
                     const PebbleConfig& pi2);

// Solves a spacious tree instance (N >= 3n) exactly: returns moves taking f
// to g. Dispatches on the centroid case analysis: a branching centroid or a
// short chain reduces to sort_rivet; a chain of at least n vertices is
// handled by sorts on two overlapping sub-boards around the chain endpoints.
// Length is O(n*D + n^2*log n).
MoveSeq solve_ample(const Graph& tree, const PebbleConfig& f,
                    const PebbleConfig& g);

// Exchanges pebbles p and q and restores every other pebble: the result of
// replaying from pi is exactly pi with p and q swapped. Requires N >= 3n and
// a feasible (non-path or trivial) tree. Works by escorting both pebbles to
// two branches of a junction, rotating them through it, and replaying the
// escort backwards. Length is O(N + n*D).
MoveSeq swap_pebbles(const Graph& tree, const PebbleConfig& pi, int p, int q);

// Solves a tree instance whose longest interior chain has at most `max_chain`
// vertices, with no spaciousness requirement beyond feasibility. Places
// pebbles by cycle-following exact swaps; length is O(n*D) with the constant
// depending on max_chain. f and g need not share a support.
MoveSeq solve_bounded_isthmus(const Graph& tree, const PebbleConfig& f,
                              const PebbleConfig& g, int max_chain);

// Reference baseline that relocates pebbles one at a time in label order via
// exact swaps, with no locality: the move count scales like n^2 * D on
// congested families. Used for benchmark contrast, never by the main solver.
MoveSeq solve_baseline(const Graph& tree, const PebbleConfig& f,
                       const PebbleConfig& g);

}  // namespace pmp

#endif  // PMP_SOLVERS_HPP
