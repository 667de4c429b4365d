#ifndef PMP_INSTANCE_HPP
#define PMP_INSTANCE_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "pmp/config.hpp"
#include "pmp/graph.hpp"

namespace pmp {

// A full problem instance: board graph plus start and goal placements of the
// same pebble set.
struct Instance {
  Graph graph;
  PebbleConfig start;
  PebbleConfig goal;
  // Free-form metadata carried in header comments (name, family, seed, ...).
  std::map<std::string, std::string> meta;

  int vertex_count() const { return graph.vertex_count(); }
  int pebble_count() const { return start.pebble_count(); }
  int blank_count() const { return vertex_count() - pebble_count(); }

  // Throws unless the graph is connected and start/goal agree on the pebble
  // set and fit the graph.
  void check() const;
};

// Text format, line oriented, "#" starts a comment:
//   pmp 1
//   vertices <N>
//   edges <M>
//   <u> <v>            (M lines)
//   pebbles <n>
//   <id> <start> <goal>  (n lines, ids 1..n in any order)
// Header comments of the form "# key: value" before the "pmp 1" line are
// collected into Instance::meta and re-emitted by write_instance.
Instance read_instance(std::istream& in);
void write_instance(std::ostream& out, const Instance& inst);
Instance load_instance(const std::string& path);
void save_instance(const std::string& path, const Instance& inst);
Instance instance_from_string(const std::string& text);
std::string instance_to_string(const Instance& inst);

}  // namespace pmp

#endif  // PMP_INSTANCE_HPP
