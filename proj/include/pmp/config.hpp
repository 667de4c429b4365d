#ifndef PMP_CONFIG_HPP
#define PMP_CONFIG_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pmp/graph.hpp"

namespace pmp {

struct Move {
  int from = -1;
  int to = -1;
  bool operator==(const Move&) const = default;
};

using MoveSeq = std::vector<Move>;

// Placement of n labeled pebbles (1..n) on the vertices of a graph with N
// vertices. Vertex occupancy and pebble positions are kept in sync; 0 marks
// a blank vertex.
class PebbleConfig {
 public:
  PebbleConfig() = default;
  // cells[v] = pebble id occupying v, or 0 for blank. Ids must be exactly
  // 1..n for some n, each appearing once.
  static PebbleConfig from_cells(std::vector<int> cells);
  // positions[p-1] = vertex of pebble p.
  static PebbleConfig from_positions(int vertex_count,
                                     const std::vector<int>& positions);

  int vertex_count() const { return static_cast<int>(cell_.size()); }
  int pebble_count() const { return static_cast<int>(pos_.size()); }
  int at(int v) const { return cell_.at(v); }
  bool is_blank(int v) const { return cell_.at(v) == 0; }
  int position_of(int p) const { return pos_.at(p - 1); }

  // Occupied vertices in increasing order.
  std::vector<int> support() const;

  // Moves the pebble at `from` to the blank vertex `to` without validating
  // adjacency (callers go through apply_move for that).
  void relocate(int from, int to);

  bool operator==(const PebbleConfig&) const = default;

 private:
  std::vector<int> cell_;
  std::vector<int> pos_;
};

// Finalization state used by the divide-and-conquer solver: white vertices
// are settled and may not be touched again, gray vertices hold settled
// pebbles that may still host transient traffic, black vertices are live.
enum class Color : unsigned char { white, gray, black };

struct BoardState {
  const Graph* graph = nullptr;
  PebbleConfig peb;
  std::vector<Color> col;

  BoardState() = default;
  BoardState(const Graph& g, PebbleConfig p)
      : graph(&g), peb(std::move(p)),
        col(g.vertex_count(), Color::black) {}
};

// Applies one slide move, validating adjacency and occupancy.
void apply_move(const Graph& g, PebbleConfig& cfg, Move m);
// As above, additionally rejecting moves with a white endpoint.
void apply_move(BoardState& board, Move m);

struct Violation {
  int index = -1;   // position in the sequence
  Move move;
  errc code = errc::internal;
  std::string detail;
};

struct ValidationResult {
  PebbleConfig final_config;
  bool ok = false;
  std::optional<Violation> first_violation;
};

// Replays seq from start, reporting (not throwing) the first illegal move.
// When `expected` is given, ok additionally requires the final configuration
// to equal it.
ValidationResult validate_sequence(const Graph& g, const PebbleConfig& start,
                                   const MoveSeq& seq,
                                   const PebbleConfig* expected = nullptr);

// Reverse order, swap endpoints: undoes seq when replayed after it.
MoveSeq invert_sequence(const MoveSeq& seq);

// Trace serialization. The format is line-oriented and byte-exact:
//   moves <count>
//   <from> <to>        (count lines)
// with single spaces, no trailing whitespace and a trailing newline.
void write_trace(std::ostream& out, const MoveSeq& seq);
std::string trace_to_string(const MoveSeq& seq);
MoveSeq read_trace(std::istream& in);
void save_trace(const std::string& path, const MoveSeq& seq);
MoveSeq load_trace(const std::string& path);

}  // namespace pmp

#endif  // PMP_CONFIG_HPP
