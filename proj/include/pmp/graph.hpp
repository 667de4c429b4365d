#ifndef PMP_GRAPH_HPP
#define PMP_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pmp {

// Structured failure codes; the CLI maps these onto process exit codes.
enum class errc {
  invalid_argument,
  parse_error,
  invalid_vertex,
  duplicate_edge,
  disconnected_graph,
  not_a_tree,
  non_adjacent,
  source_blank,
  destination_occupied,
  white_endpoint,
  size_mismatch,
  precondition_failed,
  infeasible,
  budget_exceeded,
  unsupported,
  internal,
};

const char* errc_name(errc c);

struct error : std::runtime_error {
  errc code;
  error(errc c, const std::string& what)
      : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

#define PMP_CHECK(cond, code, msg)                  \
  do {                                              \
    if (!(cond)) throw ::pmp::error((code), (msg)); \
  } while (0)

// Internal invariant check; failures indicate a bug in the library itself.
#define PMP_INTERNAL(cond, msg) PMP_CHECK(cond, ::pmp::errc::internal, (msg))

using Edge = std::pair<int, int>;

// Simple undirected graph on vertices 0..N-1 with sorted adjacency lists.
// Self loops and parallel edges are rejected; all algorithms in the library
// iterate neighbors in increasing id order, which makes every derived
// structure (BFS trees, witnesses, traces) deterministic.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int vertex_count);

  static Graph from_edges(int vertex_count, const std::vector<Edge>& edges);

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  const std::vector<int>& neighbors(int v) const { return adj_.at(v); }

  std::vector<Edge> edges() const;  // sorted (u < v within, then lexicographic)

  bool is_connected() const;
  bool is_tree() const;
  // Connected and every vertex has degree exactly 2.
  bool is_cycle_graph() const;
  bool is_path_graph() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
};

// Bridges, cut vertices and biconnected components in one pass.
struct StructureScan {
  std::vector<Edge> bridges;           // sorted, u < v within each edge
  std::vector<int> cut_vertices;       // sorted
  // Vertex sets of the biconnected components, each sorted, components
  // ordered by their smallest vertex id.
  std::vector<std::vector<int>> biconnected_components;
};

StructureScan structure_scan(const Graph& g);

// An isthmus is a path in which every edge is a bridge, every vertex is a cut
// vertex, and every interior vertex has degree exactly 2. Result of scanning
// for the longest one.
struct IsthmusResult {
  int max_vertices = 1;               // k; 1 when no isthmus exists
  std::optional<std::vector<int>> witness;  // longest isthmus, vertex sequence
};

// k = max number of vertices of an isthmus of g. Graphs with no isthmus at
// all (2-edge-connected graphs, single vertices, single edges) report k = 1
// with no witness. Ties are broken toward the lexicographically smallest
// vertex sequence; each witness is oriented so that it is lexicographically
// no larger than its reverse.
IsthmusResult max_isthmus(const Graph& g);

// All isthmuses with exactly q vertices, used for feasibility witnesses.
// Returns the lexicographically smallest q-vertex isthmus, if any.
std::optional<std::vector<int>> smallest_isthmus_with(const Graph& g, int q);

// Centroid of a tree: either a single vertex whose removal leaves components
// of at most (N-1)/2 vertices, or an edge splitting the tree into two halves
// of exactly N/2. When a centroid vertex exists it is preferred.
struct CentroidResult {
  std::optional<int> vertex;
  std::optional<Edge> edge;
};

CentroidResult centroid(const Graph& tree);

int diameter(const Graph& g);

// Breadth-first spanning tree from root: every vertex is connected through a
// minimum-length path, tie-broken toward the smallest parent id.
Graph bfs_spanning_tree(const Graph& g, int root);

enum class CycleSearch { exact, any };

// Shortest (mode exact) or arbitrary (mode any) simple cycle through v, as a
// closed vertex sequence starting and ending at v's position (the start
// vertex is not repeated at the end). Empty result when v lies on no cycle.
std::optional<std::vector<int>> shortest_cycle_through(const Graph& g, int v,
                                                       CycleSearch mode);

// Largest, over all vertices that lie on some cycle, of the shortest cycle
// length through that vertex; 1 for forests.
int cycle_length_bound(const Graph& g);

// Distances from src to every vertex (-1 when unreachable).
std::vector<int> bfs_distances(const Graph& g, int src);

// Unique tree path between two vertices, endpoints included.
std::vector<int> tree_path(const Graph& tree, int from, int to);

}  // namespace pmp

#endif  // PMP_GRAPH_HPP
