#include "pmp/decomposition.hpp"

#include <algorithm>
#include <deque>

namespace pmp {

namespace {

int local_id(const std::vector<int>& verts, int host_id) {
  auto it = std::lower_bound(verts.begin(), verts.end(), host_id);
  PMP_INTERNAL(it != verts.end() && *it == host_id,
               "vertex not in region");
  return static_cast<int>(it - verts.begin());
}

bool in_region(const std::vector<int>& verts, int host_id) {
  return std::binary_search(verts.begin(), verts.end(), host_id);
}

}  // namespace

Graph induced_subgraph(const Graph& host, const std::vector<int>& verts) {
  PMP_CHECK(std::is_sorted(verts.begin(), verts.end()) &&
                std::adjacent_find(verts.begin(), verts.end()) == verts.end(),
            errc::invalid_argument, "region must be sorted and unique");
  Graph g(static_cast<int>(verts.size()));
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    for (int w : host.neighbors(verts[i]))
      if (w > verts[i] && in_region(verts, w))
        g.add_edge(i, local_id(verts, w));
  return g;
}

TreeSplit centroid_split(const Graph& host, const std::vector<int>& region) {
  PMP_CHECK(region.size() >= 2, errc::invalid_argument,
            "cannot split fewer than two vertices");
  Graph sub = induced_subgraph(host, region);
  PMP_CHECK(sub.is_tree(), errc::not_a_tree,
            "region does not induce a subtree");
  CentroidResult c = centroid(sub);

  TreeSplit out;
  // Collect components left after removing the anchor, in host ids.
  std::vector<std::vector<int>> comps;
  std::vector<bool> seen(sub.vertex_count(), false);
  auto sweep = [&](int from) {
    std::vector<int> comp;
    std::deque<int> queue{from};
    seen[from] = true;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      comp.push_back(region[v]);
      for (int w : sub.neighbors(v))
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  };

  if (c.vertex) {
    out.anchor.vertex = region[*c.vertex];
    seen[*c.vertex] = true;
    for (int w : sub.neighbors(*c.vertex))
      if (!seen[w]) sweep(w);
  } else {
    auto [a, b] = *c.edge;
    out.anchor.edge = Edge{std::min(region[a], region[b]),
                           std::max(region[a], region[b])};
    seen[a] = true;  // block the edge by sweeping each side separately
    sweep(b);
    seen[a] = false;
    seen[b] = true;
    sweep(a);
  }

  // Merge the two smallest groups (ties: smaller minimum id) until two
  // remain.
  auto group_less = [](const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return x.front() < y.front();
  };
  while (comps.size() > 2) {
    std::sort(comps.begin(), comps.end(), group_less);
    std::vector<int> merged;
    std::merge(comps[0].begin(), comps[0].end(), comps[1].begin(),
               comps[1].end(), std::back_inserter(merged));
    comps.erase(comps.begin(), comps.begin() + 2);
    comps.push_back(std::move(merged));
  }
  PMP_INTERNAL(comps.size() == 2, "centroid split lost components");
  if (group_less(comps[1], comps[0])) std::swap(comps[0], comps[1]);
  out.first = std::move(comps[0]);
  out.second = std::move(comps[1]);
  if (out.anchor.vertex) {
    // Both halves keep the anchor vertex.
    out.first.insert(std::lower_bound(out.first.begin(), out.first.end(),
                                      *out.anchor.vertex),
                     *out.anchor.vertex);
    out.second.insert(std::lower_bound(out.second.begin(), out.second.end(),
                                       *out.anchor.vertex),
                      *out.anchor.vertex);
  }
  return out;
}

TreeSplit centroid_split(const Graph& tree) {
  std::vector<int> all(tree.vertex_count());
  for (int v = 0; v < tree.vertex_count(); ++v) all[v] = v;
  return centroid_split(tree, all);
}

std::vector<int> grow_subtree(const Graph& host, const std::vector<int>& seed,
                              int target,
                              const std::function<bool(int)>& allow) {
  PMP_CHECK(!seed.empty(), errc::invalid_argument, "empty seed");
  PMP_CHECK(target >= static_cast<int>(seed.size()), errc::invalid_argument,
            "target smaller than seed");
  std::vector<bool> in(host.vertex_count(), false);
  std::vector<int> x;
  x.reserve(target);
  for (int v : seed) {
    PMP_CHECK(v >= 0 && v < host.vertex_count(), errc::invalid_vertex,
              "seed out of range");
    PMP_INTERNAL(!in[v], "duplicate seed vertex");
    in[v] = true;
    x.push_back(v);
  }

  std::vector<int> layer = x;
  while (static_cast<int>(x.size()) < target) {
    std::vector<int> next;
    for (int v : layer)
      for (int w : host.neighbors(v))
        if (!in[w] && (!allow || allow(w))) {
          in[w] = true;
          next.push_back(w);
        }
    if (next.empty()) break;  // allowed region exhausted
    std::sort(next.begin(), next.end());
    int room = target - static_cast<int>(x.size());
    if (static_cast<int>(next.size()) > room) {
      // Truncate the final frontier to the smallest ids. Dropped vertices
      // stay marked `in` only transiently; unmark them.
      for (size_t i = room; i < next.size(); ++i) in[next[i]] = false;
      next.resize(room);
    }
    x.insert(x.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(x.begin(), x.end());
  return x;
}

DecompTree::DecompTree(const Graph& host, const std::vector<int>& region,
                       int part_size) {
  PMP_CHECK(part_size >= 1, errc::invalid_argument, "part size must be >= 1");
  PMP_CHECK(!region.empty(), errc::invalid_argument, "empty region");
  root_ = build(host, region, part_size);
  // Joint anchors, top down: root's joint is its own centroid.
  nodes_[root_].joi = nodes_[root_].cen;
  std::vector<int> stack{root_};
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    const Node& n = nodes_[t];
    if (n.leaf()) continue;
    int keeper;  // child that keeps the parent's joint
    bool in_first = contains_anchor(nodes_[n.first], n.joi);
    bool in_second = contains_anchor(nodes_[n.second], n.joi);
    PMP_INTERNAL(in_first || in_second, "joint anchor outside both halves");
    keeper = in_first && in_second ? n.second : (in_second ? n.second
                                                           : n.first);
    int other = keeper == n.first ? n.second : n.first;
    nodes_[keeper].joi = n.joi;
    nodes_[other].joi = n.cen;
    stack.push_back(n.first);
    stack.push_back(n.second);
  }
}

int DecompTree::build(const Graph& host, std::vector<int> region,
                      int part_size) {
  int id = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  if (static_cast<int>(region.size()) >= 2) {
    TreeSplit split = centroid_split(host, region);
    nodes_[id].cen = split.anchor;
    if (static_cast<int>(region.size()) > part_size) {
      nodes_[id].verts = std::move(region);
      int a = build(host, std::move(split.first), part_size);
      int b = build(host, std::move(split.second), part_size);
      nodes_[id].first = a;
      nodes_[id].second = b;
      nodes_[a].parent = id;
      nodes_[b].parent = id;
      return id;
    }
  } else {
    nodes_[id].cen.vertex = region.front();
  }
  nodes_[id].verts = std::move(region);
  return id;
}

bool DecompTree::contains_anchor(const Node& n, const Anchor& a) const {
  if (a.vertex) return in_region(n.verts, *a.vertex);
  return in_region(n.verts, a.edge->first) ||
         in_region(n.verts, a.edge->second);
}

int DecompTree::node_count() const {
  int c = 0;
  for (const Node& n : nodes_)
    if (n.alive) ++c;
  return c;
}

int DecompTree::joint_child(int t) const {
  const Node& n = nodes_.at(t);
  PMP_CHECK(!n.leaf(), errc::invalid_argument, "leaf has no children");
  bool in_first = contains_anchor(nodes_[n.first], n.joi);
  bool in_second = contains_anchor(nodes_[n.second], n.joi);
  PMP_INTERNAL(in_first || in_second, "joint anchor outside both halves");
  if (in_first && in_second) return n.second;
  return in_second ? n.second : n.first;
}

int DecompTree::peripheral_child(int t) const {
  const Node& n = nodes_.at(t);
  return joint_child(t) == n.first ? n.second : n.first;
}

int DecompTree::first_child_leaf() const {
  int t = root_;
  while (!nodes_[t].leaf()) t = peripheral_child(t);
  return t;
}

std::vector<int> DecompTree::leaf_walk() const {
  std::vector<int> out, stack{root_};
  while (!stack.empty()) {
    int t = stack.back();
    stack.pop_back();
    if (nodes_[t].leaf()) {
      out.push_back(t);
      continue;
    }
    // Peripheral child first: push joint child deeper in the stack.
    stack.push_back(joint_child(t));
    stack.push_back(peripheral_child(t));
  }
  return out;
}

void DecompTree::remove_leaf(int t) {
  Node& n = nodes_.at(t);
  PMP_CHECK(n.alive && n.leaf(), errc::invalid_argument,
            "can only remove alive leaves");
  PMP_CHECK(t != root_, errc::invalid_argument,
            "cannot remove the last part");
  n.alive = false;
  int p = n.parent;
  Node& par = nodes_[p];
  int sib = par.first == t ? par.second : par.first;
  par.alive = false;
  Node& s = nodes_[sib];
  s.parent = par.parent;
  s.joi = par.joi;
  if (p == root_) {
    root_ = sib;
    s.joi = s.cen;
  } else {
    Node& gp = nodes_[par.parent];
    (gp.first == p ? gp.first : gp.second) = sib;
  }
}

std::vector<std::vector<int>> cover_tree(const Graph& host,
                                         const std::vector<int>& region,
                                         int part_size) {
  DecompTree t(host, region, part_size);
  std::vector<std::vector<int>> parts;
  for (int leaf : t.leaf_walk()) parts.push_back(t.node(leaf).verts);
  return parts;
}

}  // namespace pmp
