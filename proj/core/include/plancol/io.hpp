#pragma once

#include <filesystem>
#include <string>

#include "plancol/engine.hpp"
#include "plancol/graph.hpp"

namespace plancol {

// Graph interchange is JSON: {"n": <count>, "edges": [[u, v], ...]} with
// vertex ids 1..n. Graphs whose id set is not contiguous from 1 carry an
// explicit "vertices" array instead of relying on "n". Output is
// deterministic: keys sorted, edges sorted with u < v.
Graph graph_from_json(const std::string& text, const std::string& origin = "<string>");
std::string graph_to_json(const Graph& g);
Graph read_graph_json(const std::filesystem::path& path);
void write_graph_json(const Graph& g, const std::filesystem::path& path);

// Plain text edge list: one "u v" pair per line, '#' starts a comment.
// Isolated vertices do not survive this format; JSON is the lossless one.
Graph read_edge_list(const std::filesystem::path& path);
void write_edge_list(const Graph& g, const std::filesystem::path& path);

// Color assignment: {"palette": <k>, "colors": {"<vertex>": <color>, ...}}.
ColorAssignment colors_from_json(const std::string& text, const std::string& origin = "<string>");
std::string colors_to_json(const ColorAssignment& c);
ColorAssignment read_colors_json(const std::filesystem::path& path);
void write_colors_json(const ColorAssignment& c, const std::filesystem::path& path);

// Round trace as CSV: header "round,messages,max_bits", one row per round in
// which traffic occurred.
std::string trace_to_csv(const RoundTrace& trace);
void write_trace_csv(const RoundTrace& trace, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace plancol
