#ifndef PMP_DECOMPOSITION_HPP
#define PMP_DECOMPOSITION_HPP

#include <functional>
#include <optional>
#include <vector>

#include "pmp/graph.hpp"

namespace pmp {

// Graph induced by `verts` (sorted host ids); local vertex i corresponds to
// verts[i].
Graph induced_subgraph(const Graph& host, const std::vector<int>& verts);

// A centroid anchor: either a single vertex or an edge of the host tree.
struct Anchor {
  std::optional<int> vertex;
  std::optional<Edge> edge;
  bool operator==(const Anchor&) const = default;
};

// Halves of a centroid split. With a vertex anchor both halves contain the
// anchor vertex (|first| + |second| = |region| + 1); with an edge anchor the
// halves are disjoint. `first` is the smaller half (ties: smaller minimum
// vertex id).
struct TreeSplit {
  std::vector<int> first, second;  // sorted host ids
  Anchor anchor;
};

// Splits the subtree induced by `region` at its centroid. Components left by
// removing the anchor are merged two-smallest-first (ties toward the smaller
// minimum id) until exactly two groups remain. Requires |region| >= 2.
TreeSplit centroid_split(const Graph& host, const std::vector<int>& region);
TreeSplit centroid_split(const Graph& tree);

// Grows a connected subtree of the host tree around `seed` by adding whole
// breadth-first frontiers; the last frontier is truncated to the smallest
// ids to hit `target` vertices exactly. Growth only enters vertices passing
// `allow` (all, when empty). May return fewer than `target` vertices when
// the allowed region is exhausted; callers must check. The frontier
// discipline guarantees the result's longest isthmus never exceeds the
// host's.
std::vector<int> grow_subtree(const Graph& host, const std::vector<int>& seed,
                              int target,
                              const std::function<bool(int)>& allow = {});

// Decomposition tree: recursive centroid splitting of `region` until parts
// have at most `part_size` vertices. Leaves are the cover parts; an internal
// node's halves share at most the anchor vertex. Every node carries two
// anchors: `cen`, its own centroid, and `joi`, the joint through which the
// node's region attaches to the rest of the tree. The joint rule: the root's
// joint is its centroid; at a split, the child containing the parent's joint
// keeps it, the other child's joint is the split centroid.
class DecompTree {
 public:
  struct Node {
    std::vector<int> verts;  // sorted host ids
    Anchor cen;
    Anchor joi;
    int parent = -1;
    int first = -1, second = -1;  // children in split order; -1 for leaves
    bool alive = true;
    bool leaf() const { return first < 0; }
  };

  DecompTree(const Graph& host, const std::vector<int>& region, int part_size);

  int root() const { return root_; }
  const Node& node(int t) const { return nodes_.at(t); }
  int node_count() const;  // alive nodes

  // Child of t away from t's joint (the "peripheral" child); the other child
  // is joint_child. When both halves contain the joint anchor, the split
  // order decides: first is peripheral.
  int peripheral_child(int t) const;
  int joint_child(int t) const;

  // Leaf reached from the root by walking peripheral children.
  int first_child_leaf() const;

  // Alive leaves in depth-first order, peripheral child before joint child.
  std::vector<int> leaf_walk() const;

  // Removes leaf t; its sibling is spliced into the parent's place and
  // inherits the parent's joint (its own centroid when it becomes the root).
  void remove_leaf(int t);

 private:
  int build(const Graph& host, std::vector<int> region, int part_size);
  bool contains_anchor(const Node& n, const Anchor& a) const;

  std::vector<Node> nodes_;
  int root_ = -1;
};

// Cover of `region` with connected parts of at most `part_size` vertices,
// adjacent parts overlapping in at most one vertex: the leaf walk of the
// decomposition tree.
std::vector<std::vector<int>> cover_tree(const Graph& host,
                                         const std::vector<int>& region,
                                         int part_size);

}  // namespace pmp

#endif  // PMP_DECOMPOSITION_HPP
