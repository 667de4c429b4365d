#include "pmp/instance.hpp"

#include <fstream>
#include <sstream>

namespace pmp {

void Instance::check() const {
  PMP_CHECK(graph.vertex_count() > 0, errc::invalid_argument, "empty graph");
  PMP_CHECK(graph.is_connected(), errc::disconnected_graph,
            "instance graph must be connected");
  PMP_CHECK(start.vertex_count() == graph.vertex_count() &&
                goal.vertex_count() == graph.vertex_count(),
            errc::size_mismatch, "configuration size differs from graph");
  PMP_CHECK(start.pebble_count() == goal.pebble_count(), errc::size_mismatch,
            "start and goal pebble counts differ");
}

namespace {

// Pulls the next significant line, stripping comments; returns false at EOF.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto end = line.find_last_not_of(" \t\r");
    if (end == std::string::npos) continue;
    line.erase(end + 1);
    return true;
  }
  return false;
}

std::string expect_line(std::istream& in, const std::string& what) {
  std::string line;
  PMP_CHECK(next_line(in, line), errc::parse_error,
            "unexpected end of input, expected " + what);
  return line;
}

long long parse_header(const std::string& line, const std::string& keyword) {
  std::istringstream ls(line);
  std::string word;
  long long value = -1;
  PMP_CHECK(static_cast<bool>(ls >> word >> value) && word == keyword &&
                value >= 0 && !(ls >> word),
            errc::parse_error, "expected '" + keyword + " <count>', got '" +
                line + "'");
  return value;
}

}  // namespace

Instance read_instance(std::istream& in) {
  Instance inst;
  // Header comments may carry metadata ("# key: value") before the magic.
  std::string line;
  bool saw_magic = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      auto colon = line.find(':', first);
      if (colon != std::string::npos) {
        std::string key = line.substr(first + 1, colon - first - 1);
        std::string value = line.substr(colon + 1);
        auto trim = [](std::string& s) {
          auto b = s.find_first_not_of(" \t");
          auto e = s.find_last_not_of(" \t");
          s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
        };
        trim(key);
        trim(value);
        if (!key.empty()) inst.meta[key] = value;
      }
      continue;
    }
    std::istringstream ls(line.substr(first));
    std::string word;
    int version = 0;
    PMP_CHECK(static_cast<bool>(ls >> word >> version) && word == "pmp" &&
                  version == 1,
              errc::parse_error, "expected 'pmp 1' header, got '" + line + "'");
    saw_magic = true;
    break;
  }
  PMP_CHECK(saw_magic, errc::parse_error, "missing 'pmp 1' header");

  long long n_vertices = parse_header(expect_line(in, "vertices"), "vertices");
  PMP_CHECK(n_vertices >= 1 && n_vertices <= 50'000'000, errc::parse_error,
            "vertex count out of range");
  long long n_edges = parse_header(expect_line(in, "edges"), "edges");
  inst.graph = Graph(static_cast<int>(n_vertices));
  for (long long i = 0; i < n_edges; ++i) {
    std::istringstream ls(expect_line(in, "an edge"));
    int u = -1, v = -1;
    std::string extra;
    PMP_CHECK(static_cast<bool>(ls >> u >> v) && !(ls >> extra),
              errc::parse_error, "bad edge line");
    inst.graph.add_edge(u, v);
  }

  long long n_pebbles = parse_header(expect_line(in, "pebbles"), "pebbles");
  PMP_CHECK(n_pebbles <= n_vertices, errc::parse_error,
            "more pebbles than vertices");
  std::vector<int> start_pos(n_pebbles, -1), goal_pos(n_pebbles, -1);
  for (long long i = 0; i < n_pebbles; ++i) {
    std::istringstream ls(expect_line(in, "a pebble line"));
    int id = -1, s = -1, t = -1;
    std::string extra;
    PMP_CHECK(static_cast<bool>(ls >> id >> s >> t) && !(ls >> extra),
              errc::parse_error, "bad pebble line");
    PMP_CHECK(id >= 1 && id <= n_pebbles, errc::parse_error,
              "pebble id out of range: " + std::to_string(id));
    PMP_CHECK(start_pos[id - 1] == -1, errc::parse_error,
              "duplicate pebble id " + std::to_string(id));
    start_pos[id - 1] = s;
    goal_pos[id - 1] = t;
  }
  inst.start =
      PebbleConfig::from_positions(static_cast<int>(n_vertices), start_pos);
  inst.goal =
      PebbleConfig::from_positions(static_cast<int>(n_vertices), goal_pos);
  inst.check();
  return inst;
}

void write_instance(std::ostream& out, const Instance& inst) {
  for (const auto& [key, value] : inst.meta)
    out << "# " << key << ": " << value << "\n";
  out << "pmp 1\n";
  out << "vertices " << inst.graph.vertex_count() << "\n";
  const auto edges = inst.graph.edges();
  out << "edges " << edges.size() << "\n";
  for (const auto& [u, v] : edges) out << u << " " << v << "\n";
  out << "pebbles " << inst.start.pebble_count() << "\n";
  for (int p = 1; p <= inst.start.pebble_count(); ++p)
    out << p << " " << inst.start.position_of(p) << " "
        << inst.goal.position_of(p) << "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  PMP_CHECK(in.good(), errc::parse_error, "cannot open " + path);
  return read_instance(in);
}

void save_instance(const std::string& path, const Instance& inst) {
  std::ofstream out(path, std::ios::binary);
  PMP_CHECK(out.good(), errc::parse_error, "cannot open " + path);
  write_instance(out, inst);
  PMP_CHECK(out.good(), errc::parse_error, "write failed: " + path);
}

Instance instance_from_string(const std::string& text) {
  std::istringstream in(text);
  return read_instance(in);
}

std::string instance_to_string(const Instance& inst) {
  std::ostringstream out;
  write_instance(out, inst);
  return out.str();
}

}  // namespace pmp
