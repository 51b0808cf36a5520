#include "plancol/io.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

namespace plancol {

using json = nlohmann::json;

namespace {

json parse_or_throw(const std::string& text, const std::string& origin) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    throw InputError(origin + ": not valid JSON");
  }
  return j;
}

std::int64_t int_field(const json& j, const char* key, const std::string& origin) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw InputError(origin + ": missing integer field \"" + key + "\"");
  }
  return j[key].get<std::int64_t>();
}

}  // namespace

Graph graph_from_json(const std::string& text, const std::string& origin) {
  json j = parse_or_throw(text, origin);
  if (!j.is_object()) throw InputError(origin + ": expected a JSON object");
  std::vector<VertexId> vertices;
  if (j.contains("vertices")) {
    if (!j["vertices"].is_array()) throw InputError(origin + ": \"vertices\" must be an array");
    for (const auto& v : j["vertices"]) {
      if (!v.is_number_integer()) throw InputError(origin + ": vertex ids must be integers");
      vertices.push_back(v.get<VertexId>());
    }
  } else {
    std::int64_t n = int_field(j, "n", origin);
    if (n < 0) throw InputError(origin + ": \"n\" must be nonnegative");
    vertices.reserve(static_cast<std::size_t>(n));
    for (VertexId v = 1; v <= n; ++v) vertices.push_back(v);
  }
  if (!j.contains("edges") || !j["edges"].is_array()) {
    throw InputError(origin + ": missing \"edges\" array");
  }
  std::set<VertexId> declared(vertices.begin(), vertices.end());
  EdgeList edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw InputError(origin + ": each edge must be a pair of integer vertex ids");
    }
    edges.push_back({e[0].get<VertexId>(), e[1].get<VertexId>()});
    for (VertexId v : {edges.back().first, edges.back().second}) {
      if (!declared.count(v)) {
        throw InputError(origin + ": edge endpoint " + std::to_string(v) +
                         " is not a declared vertex");
      }
    }
  }
  try {
    return Graph::from_edges(std::move(vertices), edges);
  } catch (const PreconditionError& err) {
    throw InputError(origin + ": " + err.what());
  }
}

std::string graph_to_json(const Graph& g) {
  json j;
  const auto& ids = g.vertices();
  bool contiguous = ids.empty() || (ids.front() == 1 && ids.back() == g.vertex_count());
  if (contiguous) {
    j["n"] = g.vertex_count();
  } else {
    j["vertices"] = ids;
  }
  json edges = json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j.dump(2) + "\n";
}

Graph read_graph_json(const std::filesystem::path& path) {
  return graph_from_json(read_text_file(path), path.string());
}

void write_graph_json(const Graph& g, const std::filesystem::path& path) {
  write_text_file(path, graph_to_json(g));
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::string text = read_text_file(path);
  std::istringstream in(text);
  std::string line;
  EdgeList edges;
  std::int64_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    VertexId u, v;
    if (!(ls >> u)) continue;  // blank or comment-only line
    std::string where = path.string() + ":" + std::to_string(lineno);
    if (!(ls >> v)) throw InputError(where + ": expected two vertex ids");
    std::string rest;
    if (ls >> rest) throw InputError(where + ": trailing tokens after edge");
    edges.push_back({u, v});
  }
  std::vector<VertexId> vertices;
  for (const auto& [u, v] : edges) {
    vertices.push_back(u);
    vertices.push_back(v);
  }
  try {
    return Graph::from_edges(std::move(vertices), edges);
  } catch (const PreconditionError& err) {
    throw InputError(path.string() + ": " + err.what());
  }
}

void write_edge_list(const Graph& g, const std::filesystem::path& path) {
  std::ostringstream out;
  for (const auto& [u, v] : g.edges()) out << u << " " << v << "\n";
  write_text_file(path, out.str());
}

ColorAssignment colors_from_json(const std::string& text, const std::string& origin) {
  json j = parse_or_throw(text, origin);
  if (!j.is_object()) throw InputError(origin + ": expected a JSON object");
  ColorAssignment c;
  std::int64_t palette = int_field(j, "palette", origin);
  if (palette < 0 || palette > std::numeric_limits<int>::max()) {
    throw InputError(origin + ": \"palette\" out of range");
  }
  c.palette_size = static_cast<int>(palette);
  if (!j.contains("colors") || !j["colors"].is_object()) {
    throw InputError(origin + ": missing \"colors\" object");
  }
  for (const auto& [key, value] : j["colors"].items()) {
    VertexId v;
    try {
      std::size_t used = 0;
      v = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw InputError(origin + ": color key \"" + key + "\" is not a vertex id");
    }
    if (!value.is_number_integer()) {
      throw InputError(origin + ": color of vertex " + key + " must be an integer");
    }
    c.set(v, value.get<int>());
  }
  return c;
}

std::string colors_to_json(const ColorAssignment& c) {
  json j;
  j["palette"] = c.palette_size;
  // keys end up lexicographically sorted, deterministic even if odd to read
  json colors = json::object();
  for (const auto& [v, col] : c.colors) colors[std::to_string(v)] = col;
  j["colors"] = std::move(colors);
  return j.dump(2) + "\n";
}

ColorAssignment read_colors_json(const std::filesystem::path& path) {
  return colors_from_json(read_text_file(path), path.string());
}

void write_colors_json(const ColorAssignment& c, const std::filesystem::path& path) {
  write_text_file(path, colors_to_json(c));
}

std::string trace_to_csv(const RoundTrace& trace) {
  std::ostringstream out;
  out << "round,messages,max_bits\n";
  for (const auto& r : trace.per_round) {
    out << r.round << "," << r.messages << "," << r.max_bits << "\n";
  }
  return out.str();
}

void write_trace_csv(const RoundTrace& trace, const std::filesystem::path& path) {
  write_text_file(path, trace_to_csv(trace));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("failed while writing " + path.string());
}

}  // namespace plancol
