#ifndef BROOMREC_GRAPH_IO_HPP
#define BROOMREC_GRAPH_IO_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "broomrec/graph.hpp"

namespace broomrec {

// {"n": vertex_count, "edges": [[u,v], ...]}, u < v, sorted lexicographically.
nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Standard graph6 interchange encoding (6-bit ASCII of the upper triangle,
// column-major). Supports the short and the 4-byte long size header.
std::string graph_to_graph6(const Graph& g);
Graph graph_from_graph6(std::string_view text);

}  // namespace broomrec

#endif
