#include "pmp/config.hpp"

#include <fstream>
#include <sstream>

namespace pmp {

PebbleConfig PebbleConfig::from_cells(std::vector<int> cells) {
  PebbleConfig c;
  int n = 0;
  for (int x : cells) {
    PMP_CHECK(x >= 0, errc::invalid_argument, "negative pebble id");
    n = std::max(n, x);
  }
  PMP_CHECK(n <= static_cast<int>(cells.size()), errc::invalid_argument,
            "pebble id exceeds vertex count");
  c.cell_ = std::move(cells);
  c.pos_.assign(n, -1);
  for (int v = 0; v < static_cast<int>(c.cell_.size()); ++v) {
    int p = c.cell_[v];
    if (p == 0) continue;
    PMP_CHECK(c.pos_[p - 1] == -1, errc::invalid_argument,
              "pebble " + std::to_string(p) + " placed twice");
    c.pos_[p - 1] = v;
  }
  for (int p = 1; p <= n; ++p)
    PMP_CHECK(c.pos_[p - 1] != -1, errc::invalid_argument,
              "pebble ids not contiguous: missing " + std::to_string(p));
  return c;
}

PebbleConfig PebbleConfig::from_positions(int vertex_count,
                                          const std::vector<int>& positions) {
  std::vector<int> cells(vertex_count, 0);
  for (int i = 0; i < static_cast<int>(positions.size()); ++i) {
    int v = positions[i];
    PMP_CHECK(v >= 0 && v < vertex_count, errc::invalid_vertex,
              "pebble position out of range");
    PMP_CHECK(cells[v] == 0, errc::invalid_argument,
              "two pebbles on vertex " + std::to_string(v));
    cells[v] = i + 1;
  }
  return from_cells(std::move(cells));
}

std::vector<int> PebbleConfig::support() const {
  std::vector<int> s;
  s.reserve(pos_.size());
  for (int v = 0; v < vertex_count(); ++v)
    if (cell_[v] != 0) s.push_back(v);
  return s;
}

void PebbleConfig::relocate(int from, int to) {
  int p = cell_.at(from);
  PMP_INTERNAL(p != 0 && cell_.at(to) == 0, "relocate endpoints invalid");
  cell_[from] = 0;
  cell_[to] = p;
  pos_[p - 1] = to;
}

void apply_move(const Graph& g, PebbleConfig& cfg, Move m) {
  PMP_CHECK(m.from >= 0 && m.from < g.vertex_count() && m.to >= 0 &&
                m.to < g.vertex_count(),
            errc::invalid_vertex, "move endpoint out of range");
  PMP_CHECK(g.has_edge(m.from, m.to), errc::non_adjacent,
            "move " + std::to_string(m.from) + "->" + std::to_string(m.to) +
                " is not along an edge");
  PMP_CHECK(!cfg.is_blank(m.from), errc::source_blank,
            "no pebble on vertex " + std::to_string(m.from));
  PMP_CHECK(cfg.is_blank(m.to), errc::destination_occupied,
            "vertex " + std::to_string(m.to) + " is occupied");
  cfg.relocate(m.from, m.to);
}

void apply_move(BoardState& board, Move m) {
  PMP_INTERNAL(board.graph != nullptr, "board has no graph");
  PMP_CHECK(m.from >= 0 && m.from < board.graph->vertex_count() && m.to >= 0 &&
                m.to < board.graph->vertex_count(),
            errc::invalid_vertex, "move endpoint out of range");
  PMP_CHECK(board.col[m.from] != Color::white &&
                board.col[m.to] != Color::white,
            errc::white_endpoint, "move touches a finalized vertex");
  apply_move(*board.graph, board.peb, m);
}

ValidationResult validate_sequence(const Graph& g, const PebbleConfig& start,
                                   const MoveSeq& seq,
                                   const PebbleConfig* expected) {
  ValidationResult r;
  r.final_config = start;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    try {
      apply_move(g, r.final_config, seq[i]);
    } catch (const error& e) {
      r.first_violation = Violation{i, seq[i], e.code, e.what()};
      return r;
    }
  }
  if (expected && !(r.final_config == *expected)) {
    r.first_violation =
        Violation{static_cast<int>(seq.size()), Move{},
                  errc::size_mismatch, "final configuration differs from goal"};
    return r;
  }
  r.ok = true;
  return r;
}

MoveSeq invert_sequence(const MoveSeq& seq) {
  MoveSeq inv;
  inv.reserve(seq.size());
  for (auto it = seq.rbegin(); it != seq.rend(); ++it)
    inv.push_back(Move{it->to, it->from});
  return inv;
}

void write_trace(std::ostream& out, const MoveSeq& seq) {
  out << "moves " << seq.size() << "\n";
  for (const Move& m : seq) out << m.from << " " << m.to << "\n";
}

std::string trace_to_string(const MoveSeq& seq) {
  std::ostringstream os;
  write_trace(os, seq);
  return os.str();
}

MoveSeq read_trace(std::istream& in) {
  std::string word;
  PMP_CHECK(static_cast<bool>(in >> word) && word == "moves", errc::parse_error,
            "trace must start with 'moves <count>'");
  long long count = -1;
  PMP_CHECK(static_cast<bool>(in >> count) && count >= 0, errc::parse_error,
            "bad move count");
  MoveSeq seq;
  seq.reserve(static_cast<size_t>(count));
  for (long long i = 0; i < count; ++i) {
    Move m;
    PMP_CHECK(static_cast<bool>(in >> m.from >> m.to), errc::parse_error,
              "trace truncated at move " + std::to_string(i));
    seq.push_back(m);
  }
  return seq;
}

void save_trace(const std::string& path, const MoveSeq& seq) {
  std::ofstream out(path, std::ios::binary);
  PMP_CHECK(out.good(), errc::parse_error, "cannot open " + path);
  write_trace(out, seq);
  PMP_CHECK(out.good(), errc::parse_error, "write failed: " + path);
}

MoveSeq load_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  PMP_CHECK(in.good(), errc::parse_error, "cannot open " + path);
  return read_trace(in);
}

}  // namespace pmp
