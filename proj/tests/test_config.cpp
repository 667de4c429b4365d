#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <optional>
#include <sstream>

#include "pmp/config.hpp"
#include "pmp/instance.hpp"

using namespace pmp;

namespace {

template <typename F>
std::optional<errc> code_of(F&& f) {
  try {
    f();
  } catch (const error& e) {
    return e.code;
  }
  return std::nullopt;
}

Graph path(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

}  // namespace

TEST_CASE("pebble configuration construction") {
  auto c = PebbleConfig::from_cells({0, 2, 0, 1});
  CHECK(c.vertex_count() == 4);
  CHECK(c.pebble_count() == 2);
  CHECK(c.at(1) == 2);
  CHECK(c.at(0) == 0);
  CHECK(c.is_blank(2));
  CHECK(!c.is_blank(3));
  CHECK(c.position_of(1) == 3);
  CHECK(c.position_of(2) == 1);
  CHECK(c.support() == std::vector<int>{1, 3});

  auto d = PebbleConfig::from_positions(4, {3, 1});
  CHECK(d == c);

  CHECK(code_of([] { PebbleConfig::from_cells({1, 1}); }) ==
        errc::invalid_argument);
  CHECK(code_of([] { PebbleConfig::from_cells({2, 0}); }) ==
        errc::invalid_argument);
  CHECK(code_of([] { PebbleConfig::from_cells({3, 0}); }) ==
        errc::invalid_argument);
  CHECK(code_of([] { PebbleConfig::from_positions(3, {0, 0}); }) ==
        errc::invalid_argument);
  CHECK(code_of([] { PebbleConfig::from_positions(3, {5}); }) ==
        errc::invalid_vertex);
}

TEST_CASE("apply_move validates endpoints and reports distinct codes") {
  Graph g = path(3);
  auto c = PebbleConfig::from_cells({1, 0, 2});
  apply_move(g, c, {0, 1});
  CHECK(c.at(1) == 1);
  CHECK(c.is_blank(0));

  c = PebbleConfig::from_cells({1, 0, 2});
  CHECK(code_of([&] { apply_move(g, c, {0, 2}); }) == errc::non_adjacent);
  CHECK(code_of([&] { apply_move(g, c, {1, 0}); }) == errc::source_blank);
  CHECK(code_of([&] { apply_move(g, c, {-1, 0}); }) == errc::invalid_vertex);

  auto full = PebbleConfig::from_cells({1, 2, 0});
  CHECK(code_of([&] { apply_move(g, full, {0, 1}); }) ==
        errc::destination_occupied);
  // Failed moves must not change the configuration.
  CHECK(full == PebbleConfig::from_cells({1, 2, 0}));
}

TEST_CASE("board state blocks finalized vertices") {
  Graph g = path(3);
  BoardState board(g, PebbleConfig::from_cells({1, 0, 2}));
  CHECK(board.col == std::vector<Color>(3, Color::black));

  board.col[1] = Color::white;
  CHECK(code_of([&] { apply_move(board, {0, 1}); }) == errc::white_endpoint);
  board.col[1] = Color::black;
  board.col[0] = Color::white;
  CHECK(code_of([&] { apply_move(board, {0, 1}); }) == errc::white_endpoint);

  // Gray vertices still admit traffic.
  board.col[0] = Color::gray;
  apply_move(board, {0, 1});
  CHECK(board.peb.at(1) == 1);
}

TEST_CASE("validate_sequence finds the first violation") {
  Graph g = path(4);
  auto start = PebbleConfig::from_cells({1, 0, 2, 0});

  MoveSeq good{{0, 1}, {2, 3}, {1, 2}};
  auto r = validate_sequence(g, start, good);
  CHECK(r.ok);
  CHECK(!r.first_violation.has_value());
  CHECK(r.final_config == PebbleConfig::from_cells({0, 0, 1, 2}));

  auto expected = PebbleConfig::from_cells({0, 0, 1, 2});
  CHECK(validate_sequence(g, start, good, &expected).ok);
  auto wrong = PebbleConfig::from_cells({0, 0, 2, 1});
  auto miss = validate_sequence(g, start, good, &wrong);
  CHECK(!miss.ok);
  CHECK(miss.first_violation->code == errc::size_mismatch);
  CHECK(miss.first_violation->index == 3);

  MoveSeq bad{{0, 1}, {1, 0}, {3, 2}};
  auto v = validate_sequence(g, start, bad);
  CHECK(!v.ok);
  CHECK(v.first_violation->index == 2);
  CHECK(v.first_violation->code == errc::source_blank);
  CHECK(v.first_violation->move == Move{3, 2});
}

TEST_CASE("invert_sequence replays a sequence backwards") {
  Graph g = path(4);
  auto start = PebbleConfig::from_cells({1, 0, 2, 0});
  MoveSeq seq{{0, 1}, {2, 3}, {1, 2}};

  MoveSeq inv = invert_sequence(seq);
  CHECK(inv == MoveSeq{{2, 1}, {3, 2}, {1, 0}});

  auto mid = validate_sequence(g, start, seq);
  REQUIRE(mid.ok);
  auto back = validate_sequence(g, mid.final_config, inv, &start);
  CHECK(back.ok);
}

TEST_CASE("trace serialization is byte exact") {
  CHECK(trace_to_string({}) == "moves 0\n");
  CHECK(trace_to_string({{0, 1}, {12, 7}}) == "moves 2\n0 1\n12 7\n");

  std::istringstream in("moves 2\n0 1\n12 7\n");
  CHECK(read_trace(in) == MoveSeq{{0, 1}, {12, 7}});

  std::istringstream bad1("steps 2\n0 1\n");
  CHECK(code_of([&] { read_trace(bad1); }) == errc::parse_error);
  std::istringstream bad2("moves 3\n0 1\n");
  CHECK(code_of([&] { read_trace(bad2); }) == errc::parse_error);
  std::istringstream bad3("moves -1\n");
  CHECK(code_of([&] { read_trace(bad3); }) == errc::parse_error);
}

TEST_CASE("instance round trip and exact text form") {
  Instance inst;
  inst.graph = path(4);
  inst.start = PebbleConfig::from_positions(4, {0, 1});
  inst.goal = PebbleConfig::from_positions(4, {3, 2});
  inst.meta = {{"family", "demo"}, {"seed", "7"}};
  inst.check();

  std::string text = instance_to_string(inst);
  CHECK(text ==
        "# family: demo\n"
        "# seed: 7\n"
        "pmp 1\n"
        "vertices 4\n"
        "edges 3\n"
        "0 1\n"
        "1 2\n"
        "2 3\n"
        "pebbles 2\n"
        "1 0 3\n"
        "2 1 2\n");

  Instance copy = instance_from_string(text);
  CHECK(copy.graph == inst.graph);
  CHECK(copy.start == inst.start);
  CHECK(copy.goal == inst.goal);
  CHECK(copy.meta == inst.meta);
}

TEST_CASE("instance parser accepts comments and rejects malformed input") {
  Instance ok = instance_from_string(
      "# name: tiny\n"
      "pmp 1\n"
      "vertices 2   # inline comment\n"
      "edges 1\n"
      "0 1\n"
      "pebbles 1\n"
      "1 0 1\n");
  CHECK(ok.meta.at("name") == "tiny");
  CHECK(ok.pebble_count() == 1);
  CHECK(ok.blank_count() == 1);

  auto parse = [](const std::string& s) {
    return code_of([&] { instance_from_string(s); });
  };
  CHECK(parse("pmp 2\nvertices 1\nedges 0\npebbles 0\n") == errc::parse_error);
  CHECK(parse("vertices 1\n") == errc::parse_error);
  CHECK(parse("pmp 1\nvertices 3\nedges 1\n0 1\npebbles 0\n") ==
        errc::disconnected_graph);
  CHECK(parse("pmp 1\nvertices 2\nedges 1\n0 1\npebbles 2\n1 0 0\n1 1 1\n") ==
        errc::parse_error);  // duplicate pebble id
  CHECK(parse("pmp 1\nvertices 2\nedges 1\n0 1\npebbles 1\n3 0 1\n") ==
        errc::parse_error);
  CHECK(parse("pmp 1\nvertices 2\nedges 1\n0 1\npebbles 2\n1 0 0\n2 0 1\n") ==
        errc::invalid_argument);
}
