#include <algorithm>
#include <queue>

#include "pmp/solvers.hpp"

namespace pmp {

namespace {

// Shared mutable state of one transfer run. Flows are stored per vertex:
// flow_up[v] is the signed number of pebbles that still have to cross the
// edge (v, parent[v]) upward (negative: downward).
struct Discharge {
  const Graph& tree;
  std::vector<int> parent;
  std::vector<long long> flow_up;
  std::vector<bool> occupied;
  MoveSeq out;

  long long flow(int x, int y) const {  // pending flow x -> y
    return parent[x] == y ? flow_up[x] : -flow_up[y];
  }

  void use_flow(int x, int y) {  // one pebble crossed x -> y
    if (parent[x] == y)
      --flow_up[x];
    else
      ++flow_up[y];
  }

  void step(int x, int y) {
    PMP_INTERNAL(occupied[x] && !occupied[y] && flow(x, y) > 0,
                 "illegal discharge step");
    occupied[x] = false;
    occupied[y] = true;
    use_flow(x, y);
    out.push_back({x, y});
  }

  // Next hop continuing a walk out of (push) or into (pull) vertex cur,
  // following edges that still carry flow in the walk's direction. The
  // smallest id wins, keeping the schedule deterministic.
  int next_hop(int cur, bool outgoing) const {
    int pick = -1;
    for (int w : tree.neighbors(cur)) {
      long long f = outgoing ? flow(cur, w) : flow(w, cur);
      if (f > 0 && (pick < 0 || w < pick)) pick = w;
    }
    PMP_INTERNAL(pick >= 0, "flow conservation violated");
    return pick;
  }

  // Frees vertex u by pushing its pebble one hop along pending flow,
  // cascading while the next vertex is occupied too.
  void make_blank(int u) {
    std::vector<int> walk{u};
    while (occupied[walk.back()]) walk.push_back(next_hop(walk.back(), true));
    for (size_t i = walk.size() - 1; i-- > 0;) step(walk[i], walk[i + 1]);
  }

  // Occupies vertex u by pulling the nearest pebble along pending flow.
  void make_occupied(int u) {
    std::vector<int> walk{u};
    while (!occupied[walk.back()]) walk.push_back(next_hop(walk.back(), false));
    for (size_t i = walk.size() - 1; i > 0; --i) step(walk[i], walk[i - 1]);
  }
};

}  // namespace

MoveSeq transfer_unlabeled(const Graph& tree,
                           const std::vector<int>& from_support,
                           const std::vector<int>& to_support) {
  PMP_CHECK(tree.is_tree(), errc::not_a_tree,
            "transfer_unlabeled runs on trees");
  PMP_CHECK(from_support.size() == to_support.size(), errc::size_mismatch,
            "support sizes differ");
  const int n = tree.vertex_count();
  std::vector<int> net(n, 0);
  std::vector<bool> occupied(n, false), target(n, false);
  for (int v : from_support) {
    PMP_CHECK(v >= 0 && v < n, errc::invalid_vertex, "support out of range");
    PMP_CHECK(!occupied[v], errc::invalid_argument, "duplicate support vertex");
    occupied[v] = true;
    ++net[v];
  }
  for (int v : to_support) {
    PMP_CHECK(v >= 0 && v < n, errc::invalid_vertex, "support out of range");
    PMP_CHECK(!target[v], errc::invalid_argument, "duplicate target vertex");
    target[v] = true;
    --net[v];
  }

  // Root at 0; flow across (v, parent) = net of v's whole subtree.
  std::vector<int> order, parent(n, -1);
  order.reserve(n);
  order.push_back(0);
  for (size_t i = 0; i < order.size(); ++i)
    for (int w : tree.neighbors(order[i]))
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<long long> flow_up(n, 0);
  for (size_t i = order.size(); i-- > 1;) {
    int v = order[i];
    flow_up[v] += net[v];
    flow_up[parent[v]] += flow_up[v];  // accumulate subtree net upward
  }
  // The root has no parent edge; its accumulated value plus its own net is
  // the global balance, zero by the size check above.
  PMP_INTERNAL(flow_up[0] + net[0] == 0, "flow accumulation broken");
  flow_up[0] = 0;

  Discharge d{tree, std::move(parent), std::move(flow_up),
              std::move(occupied), {}};

  // Peel leaves smallest-id first, discharging each parent edge exactly when
  // the leaf dies. By then the leaf's subtree is gone, so the pending flow
  // is at most one pebble in either direction.
  std::vector<int> live_degree(n);
  std::priority_queue<int, std::vector<int>, std::greater<int>> heap;
  for (int v = 0; v < n; ++v) {
    live_degree[v] = tree.degree(v);
    if (v != 0 && live_degree[v] == 1) heap.push(v);
  }
  for (int peeled = 0; peeled + 1 < n; ++peeled) {
    int v = heap.top();
    heap.pop();
    int u = d.parent[v];
    long long c = d.flow_up[v];
    PMP_INTERNAL(c >= -1 && c <= 1, "residual leaf flow exceeds one pebble");
    if (c > 0) {
      PMP_INTERNAL(d.occupied[v], "surplus leaf lost its pebble");
      if (d.occupied[u]) d.make_blank(u);
      d.step(v, u);
    } else if (c < 0) {
      PMP_INTERNAL(!d.occupied[v] && target[v], "deficit leaf inconsistent");
      if (!d.occupied[u]) d.make_occupied(u);
      d.step(u, v);
    }
    if (--live_degree[u] == 1 && u != 0) heap.push(u);
  }

  for (int v = 0; v < n; ++v) {
    PMP_INTERNAL(d.flow_up[v] == 0, "undischarged flow");
    PMP_INTERNAL(d.occupied[v] == target[v], "transfer missed its target");
  }
  return std::move(d.out);
}

}  // namespace pmp
