#include "pmp/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace pmp {

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_argument: return "invalid argument";
    case errc::parse_error: return "parse error";
    case errc::invalid_vertex: return "invalid vertex";
    case errc::duplicate_edge: return "duplicate edge";
    case errc::disconnected_graph: return "disconnected graph";
    case errc::not_a_tree: return "not a tree";
    case errc::non_adjacent: return "non-adjacent move";
    case errc::source_blank: return "source vertex is blank";
    case errc::destination_occupied: return "destination vertex is occupied";
    case errc::white_endpoint: return "move touches finalized vertex";
    case errc::size_mismatch: return "size mismatch";
    case errc::precondition_failed: return "precondition failed";
    case errc::infeasible: return "infeasible instance";
    case errc::budget_exceeded: return "budget exceeded";
    case errc::unsupported: return "unsupported";
    case errc::internal: return "internal invariant violated";
  }
  return "unknown error";
}

Graph::Graph(int vertex_count) {
  PMP_CHECK(vertex_count >= 0, errc::invalid_argument,
            "vertex count must be non-negative");
  adj_.resize(vertex_count);
}

Graph Graph::from_edges(int vertex_count, const std::vector<Edge>& edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(int u, int v) {
  const int n = vertex_count();
  PMP_CHECK(u >= 0 && u < n && v >= 0 && v < n, errc::invalid_vertex,
            "edge endpoint out of range");
  PMP_CHECK(u != v, errc::invalid_argument, "self loops are not allowed");
  PMP_CHECK(!has_edge(u, v), errc::duplicate_edge, "edge already present");
  auto& au = adj_[u];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adj_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
  const auto& au = adj_.at(u);
  return std::binary_search(au.begin(), au.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < vertex_count(); ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int src) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::deque<int> queue{src};
  dist.at(src) = 0;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return false;
  auto dist = bfs_distances(*this, 0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d < 0; });
}

bool Graph::is_tree() const {
  return is_connected() && edge_count_ == vertex_count() - 1;
}

bool Graph::is_cycle_graph() const {
  if (!is_connected() || vertex_count() < 3) return false;
  for (int v = 0; v < vertex_count(); ++v)
    if (degree(v) != 2) return false;
  return true;
}

bool Graph::is_path_graph() const {
  if (!is_tree()) return false;
  for (int v = 0; v < vertex_count(); ++v)
    if (degree(v) > 2) return false;
  return true;
}

namespace {

// Iterative lowpoint DFS computing bridges, articulation points and the
// vertex sets of biconnected components (edge stack variant).
struct LowpointScan {
  const Graph& g;
  std::vector<int> entry, low, parent;
  std::vector<bool> is_cut;
  std::vector<Edge> bridges;
  std::vector<std::vector<int>> components;
  std::vector<Edge> edge_stack;
  int timer = 0;

  explicit LowpointScan(const Graph& graph)
      : g(graph),
        entry(graph.vertex_count(), -1),
        low(graph.vertex_count(), 0),
        parent(graph.vertex_count(), -1),
        is_cut(graph.vertex_count(), false) {}

  void pop_component(const Edge& top) {
    std::vector<int> verts;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e == top) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    components.push_back(std::move(verts));
  }

  void run(int root) {
    struct Frame {
      int v;
      size_t next = 0;
    };
    std::vector<Frame> stack{{root}};
    entry[root] = low[root] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto& nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        int w = nbrs[f.next++];
        if (w == parent[f.v]) continue;
        if (entry[w] < 0) {
          parent[w] = f.v;
          entry[w] = low[w] = timer++;
          edge_stack.push_back({f.v, w});
          if (f.v == root) ++root_children;
          stack.push_back({w});
        } else if (entry[w] < entry[f.v]) {
          edge_stack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], entry[w]);
        }
      } else {
        stack.pop_back();
        if (stack.empty()) break;
        int v = f.v, u = stack.back().v;
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= entry[u]) {
          if (u != root) is_cut[u] = true;
          pop_component({u, v});
        }
        if (low[v] > entry[u]) {
          int a = std::min(u, v), b = std::max(u, v);
          bridges.push_back({a, b});
        }
      }
    }
    if (root_children >= 2) is_cut[root] = true;
  }
};

}  // namespace

StructureScan structure_scan(const Graph& g) {
  PMP_CHECK(g.vertex_count() > 0, errc::invalid_argument, "empty graph");
  PMP_CHECK(g.is_connected(), errc::disconnected_graph,
            "structure scan requires a connected graph");
  LowpointScan scan(g);
  scan.run(0);

  StructureScan out;
  out.bridges = std::move(scan.bridges);
  std::sort(out.bridges.begin(), out.bridges.end());
  for (int v = 0; v < g.vertex_count(); ++v)
    if (scan.is_cut[v]) out.cut_vertices.push_back(v);
  out.biconnected_components = std::move(scan.components);
  if (g.vertex_count() == 1 && out.biconnected_components.empty())
    out.biconnected_components.push_back({0});
  std::sort(out.biconnected_components.begin(),
            out.biconnected_components.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() != b.front() ? a.front() < b.front()
                                            : a < b;
            });
  return out;
}

namespace {

// Canonical orientation of a path: the sequence or its reverse, whichever is
// lexicographically smaller.
std::vector<int> canonical_path(std::vector<int> p) {
  std::vector<int> r(p.rbegin(), p.rend());
  return r < p ? r : p;
}

// Enumerates every maximal isthmus of g (vertex sequences). Singleton cut
// vertices and plain cut-cut bridges are included so that any isthmus of the
// graph is a sub-path of some element of the result.
std::vector<std::vector<int>> maximal_isthmuses(const Graph& g,
                                                const StructureScan& scan) {
  const int n = g.vertex_count();
  std::vector<bool> cut(n, false);
  for (int v : scan.cut_vertices) cut[v] = true;
  std::vector<std::vector<bool>> bridge_to(n);
  auto is_bridge = [&](int u, int v) {
    int a = std::min(u, v), b = std::max(u, v);
    return std::binary_search(scan.bridges.begin(), scan.bridges.end(),
                              Edge{a, b});
  };
  // chainable: may appear in the interior of an isthmus.
  auto chainable = [&](int v) {
    if (!cut[v] || g.degree(v) != 2) return false;
    for (int w : g.neighbors(v))
      if (!is_bridge(v, w) || !cut[w]) return false;
    return true;
  };

  std::vector<std::vector<int>> result;
  std::vector<bool> seen(n, false);
  for (int v = 0; v < n; ++v) {
    if (!chainable(v) || seen[v]) continue;
    // Walk both ways through chainable vertices to the segment's ends.
    std::vector<int> seg{v};
    seen[v] = true;
    for (int dir = 0; dir < 2; ++dir) {
      int prev = v;
      int cur = g.neighbors(v)[dir];
      while (chainable(cur) && !seen[cur]) {
        seen[cur] = true;
        if (dir == 0)
          seg.insert(seg.begin(), cur);
        else
          seg.push_back(cur);
        int nxt = -1;
        for (int w : g.neighbors(cur))
          if (w != prev) nxt = w;
        prev = cur;
        cur = nxt;
      }
      // Attach the non-chainable endpoint when it extends the isthmus.
      if (!chainable(cur) && cut[cur] && is_bridge(prev, cur)) {
        if (dir == 0)
          seg.insert(seg.begin(), cur);
        else
          seg.push_back(cur);
      }
    }
    result.push_back(seg);
  }
  // Bridges joining two non-chainable cut vertices form 2-isthmuses that no
  // chainable segment covers.
  for (const auto& [u, v] : scan.bridges)
    if (cut[u] && cut[v] && !chainable(u) && !chainable(v))
      result.push_back({u, v});
  // Every cut vertex alone is a 1-isthmus.
  for (int v : scan.cut_vertices) result.push_back({v});
  return result;
}

}  // namespace

IsthmusResult max_isthmus(const Graph& g) {
  auto scan = structure_scan(g);
  IsthmusResult out;
  if (scan.cut_vertices.empty()) return out;  // k = 1, no witness
  std::optional<std::vector<int>> best;
  for (auto& cand : maximal_isthmuses(g, scan)) {
    auto canon = canonical_path(cand);
    if (!best || canon.size() > best->size() ||
        (canon.size() == best->size() && canon < *best))
      best = std::move(canon);
  }
  out.max_vertices = static_cast<int>(best->size());
  out.witness = std::move(best);
  return out;
}

std::optional<std::vector<int>> smallest_isthmus_with(const Graph& g, int q) {
  PMP_CHECK(q >= 1, errc::invalid_argument, "isthmus size must be positive");
  auto scan = structure_scan(g);
  std::optional<std::vector<int>> best;
  for (const auto& cand : maximal_isthmuses(g, scan)) {
    const int len = static_cast<int>(cand.size());
    for (int i = 0; i + q <= len; ++i) {
      auto sub = canonical_path(
          std::vector<int>(cand.begin() + i, cand.begin() + i + q));
      if (!best || sub < *best) best = std::move(sub);
    }
  }
  return best;
}

CentroidResult centroid(const Graph& tree) {
  PMP_CHECK(tree.is_tree(), errc::not_a_tree, "centroid requires a tree");
  const int n = tree.vertex_count();
  CentroidResult out;
  if (n == 1) {
    out.vertex = 0;
    return out;
  }
  // Subtree sizes via a DFS order from vertex 0.
  std::vector<int> order, par(n, -1), size(n, 1);
  order.reserve(n);
  order.push_back(0);
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : tree.neighbors(order[i]))
      if (w != par[order[i]]) {
        par[w] = order[i];
        order.push_back(w);
      }
  for (size_t i = order.size(); i-- > 1;) size[par[order[i]]] += size[order[i]];

  std::vector<int> maxcomp(n, 0);
  for (int v = 0; v < n; ++v) {
    maxcomp[v] = v == 0 ? 0 : n - size[v];
    for (int w : tree.neighbors(v))
      if (w != par[v]) maxcomp[v] = std::max(maxcomp[v], size[w]);
  }
  int best = 0;
  for (int v = 1; v < n; ++v)
    if (maxcomp[v] < maxcomp[best]) best = v;
  if (2 * maxcomp[best] <= n - 1) {
    out.vertex = best;
    return out;
  }
  // No centroid vertex: the minimizer's heaviest component holds exactly
  // half the tree and the joining edge is the centroid edge.
  PMP_INTERNAL(2 * maxcomp[best] == n, "unbalanced centroid minimizer");
  int other = -1;
  for (int w : tree.neighbors(best)) {
    int comp = w == par[best] ? n - size[best] : size[w];
    if (comp == maxcomp[best]) {
      other = w;
      break;
    }
  }
  out.edge = Edge{std::min(best, other), std::max(best, other)};
  return out;
}

int diameter(const Graph& g) {
  PMP_CHECK(g.is_connected(), errc::disconnected_graph,
            "diameter requires a connected graph");
  auto farthest = [&](int src) {
    auto dist = bfs_distances(g, src);
    int arg = src;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (dist[v] > dist[arg]) arg = v;
    return std::pair{arg, dist[arg]};
  };
  if (g.is_tree()) {
    auto [a, _] = farthest(0);
    return farthest(a).second;
  }
  int best = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, farthest(v).second);
  return best;
}

Graph bfs_spanning_tree(const Graph& g, int root) {
  PMP_CHECK(root >= 0 && root < g.vertex_count(), errc::invalid_vertex,
            "root out of range");
  PMP_CHECK(g.is_connected(), errc::disconnected_graph,
            "spanning tree requires a connected graph");
  Graph tree(g.vertex_count());
  std::vector<bool> seen(g.vertex_count(), false);
  std::deque<int> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        tree.add_edge(v, w);
        queue.push_back(w);
      }
    }
  }
  return tree;
}

std::optional<std::vector<int>> shortest_cycle_through(const Graph& g, int v,
                                                       CycleSearch mode) {
  PMP_CHECK(v >= 0 && v < g.vertex_count(), errc::invalid_vertex,
            "vertex out of range");
  const int n = g.vertex_count();
  // BFS from v remembering, for every vertex, which branch below v reached
  // it first; a non-tree edge joining two distinct branches closes a simple
  // cycle through v.
  std::vector<int> dist(n, -1), par(n, -1), branch(n, -1);
  std::deque<int> queue{v};
  dist[v] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(x)) {
      if (dist[w] < 0) {
        dist[w] = dist[x] + 1;
        par[w] = x;
        branch[w] = x == v ? w : branch[x];
        queue.push_back(w);
      }
    }
  }
  long long best = std::numeric_limits<long long>::max();
  Edge best_edge{-1, -1};
  for (int x = 0; x < n; ++x) {
    if (x == v || dist[x] < 0) continue;
    for (int w : g.neighbors(x)) {
      if (w == v || w <= x || dist[w] < 0) continue;
      if (branch[x] == branch[w] || par[w] == x || par[x] == w) continue;
      long long len = 1LL + dist[x] + dist[w];
      if (len < best) {
        best = len;
        best_edge = {x, w};
      }
    }
  }
  if (best_edge.first < 0) return std::nullopt;
  if (mode == CycleSearch::any) {
    // Any cycle is acceptable; reuse the optimal one found above (the scan
    // is linear in the edge count either way).
  }
  std::vector<int> left, right;
  for (int x = best_edge.first; x != v; x = par[x]) left.push_back(x);
  for (int x = best_edge.second; x != v; x = par[x]) right.push_back(x);
  std::vector<int> cycle{v};
  for (auto it = left.rbegin(); it != left.rend(); ++it) cycle.push_back(*it);
  for (int x : right) cycle.push_back(x);
  return cycle;
}

int cycle_length_bound(const Graph& g) {
  int best = 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    auto cyc = shortest_cycle_through(g, v, CycleSearch::exact);
    if (cyc) best = std::max(best, static_cast<int>(cyc->size()));
  }
  return best;
}

std::vector<int> tree_path(const Graph& tree, int from, int to) {
  auto dist = bfs_distances(tree, to);
  PMP_CHECK(dist.at(from) >= 0, errc::disconnected_graph,
            "no path between vertices");
  std::vector<int> path{from};
  int cur = from;
  while (cur != to) {
    for (int w : tree.neighbors(cur)) {
      if (dist[w] == dist[cur] - 1) {
        cur = w;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace pmp
