#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "pmp/solvers.hpp"

using namespace pmp;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

// Replays the transfer and checks legality, the final support, and the n*D
// move budget.
void check_transfer(const Graph& tree, const std::vector<int>& s1,
                    const std::vector<int>& s2) {
  MoveSeq seq = transfer_unlabeled(tree, s1, s2);
  auto start = PebbleConfig::from_positions(tree.vertex_count(), s1);
  auto r = validate_sequence(tree, start, seq);
  REQUIRE(r.ok);
  std::vector<int> want(s2);
  std::sort(want.begin(), want.end());
  CHECK(r.final_config.support() == want);
  long long budget =
      static_cast<long long>(s1.size()) * std::max(1, diameter(tree));
  CHECK(static_cast<long long>(seq.size()) <= budget);
}

}  // namespace

TEST_CASE("transfer on paths: frozen schedules") {
  CHECK(transfer_unlabeled(path(3), {0, 1}, {1, 2}) == MoveSeq{{1, 2}, {0, 1}});
  CHECK(transfer_unlabeled(path(4), {0, 3}, {1, 2}) == MoveSeq{{3, 2}, {0, 1}});
  // Sliding a packed pair to the other end needs a cascade at each step.
  CHECK(transfer_unlabeled(path(4), {2, 3}, {0, 1}) ==
        MoveSeq{{2, 1}, {3, 2}, {1, 0}, {2, 1}});
  CHECK(transfer_unlabeled(path(4), {1, 2}, {1, 2}).empty());
}

TEST_CASE("transfer input validation") {
  auto code_of = [](auto&& f) -> std::optional<errc> {
    try {
      f();
    } catch (const error& e) {
      return e.code;
    }
    return std::nullopt;
  };
  Graph c3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(code_of([&] { transfer_unlabeled(c3, {0}, {1}); }) ==
        errc::not_a_tree);
  CHECK(code_of([&] { transfer_unlabeled(path(3), {0, 1}, {2}); }) ==
        errc::size_mismatch);
  CHECK(code_of([&] { transfer_unlabeled(path(3), {0, 0}, {1, 2}); }) ==
        errc::invalid_argument);
  CHECK(code_of([&] { transfer_unlabeled(path(3), {0, 5}, {1, 2}); }) ==
        errc::invalid_vertex);
}

TEST_CASE("transfer is deterministic") {
  Graph t = Graph::from_edges(
      7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  auto a = transfer_unlabeled(t, {3, 4, 5}, {0, 2, 6});
  auto b = transfer_unlabeled(t, {3, 4, 5}, {0, 2, 6});
  CHECK(a == b);
  check_transfer(t, {3, 4, 5}, {0, 2, 6});
}

TEST_CASE("transfer fuzz over random trees and supports") {
  std::mt19937_64 rng(20260815);
  auto below = [&](int m) { return static_cast<int>(rng() % m); };
  for (int iter = 0; iter < 4000; ++iter) {
    int n = 2 + below(14);
    Graph tree(n);
    for (int v = 1; v < n; ++v) tree.add_edge(below(v), v);
    int pebbles = 1 + below(n);
    auto pick = [&](int count) {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) all[i] = i;
      for (int i = 0; i < count; ++i) std::swap(all[i], all[i + below(n - i)]);
      all.resize(count);
      return all;
    };
    check_transfer(tree, pick(pebbles), pick(pebbles));
  }
}

TEST_CASE("transfer on a packed long path stays within budget") {
  // Worst-ish case: shift a block of n pebbles all the way across.
  const int n = 60, k = 25;
  Graph g = path(n);
  std::vector<int> s1(k), s2(k);
  for (int i = 0; i < k; ++i) {
    s1[i] = i;
    s2[i] = n - k + i;
  }
  check_transfer(g, s1, s2);
  MoveSeq seq = transfer_unlabeled(g, s1, s2);
  // Exactly the sum of per-edge flows: every pebble travels n-k edges.
  CHECK(seq.size() == static_cast<size_t>(k * (n - k)));
}
