#include "broomrec/graph_io.hpp"

#include "broomrec/errors.hpp"

namespace broomrec {

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return nlohmann::json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
    throw InputError("graph json: expected object with \"n\" and \"edges\"");
  }
  if (!j["n"].is_number_integer()) throw InputError("graph json: \"n\" must be an integer");
  const int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& item : j["edges"]) {
    if (!item.is_array() || item.size() != 2) {
      throw InputError("graph json: each edge must be a pair [u,v]");
    }
    const int u = item[0].get<int>();
    const int v = item[1].get<int>();
    if (u >= v) throw InputError("graph json: edges must satisfy u < v");
    edges.emplace_back(u, v);
  }
  return Graph(n, std::move(edges));  // validates range/duplicates
}

std::string graph_to_graph6(const Graph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

Graph graph_from_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw InputError("graph6: truncated input");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw InputError("graph6: byte out of range");
    return c - 63;
  };
  int n;
  if (!text.empty() && text[0] == 126) {
    ++pos;
    if (pos < text.size() && text[pos] == 126) {
      throw InputError("graph6: graphs beyond 2^18 vertices not supported");
    }
    n = (next() << 12) | (next() << 6) | next();
  } else {
    n = next();
  }
  if (n > Graph::kMaxVertices) throw InputError("graph6: too many vertices");
  std::vector<Edge> edges;
  int group = 0, remaining = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (remaining == 0) {
        group = next();
        remaining = 6;
      }
      --remaining;
      if ((group >> remaining) & 1) edges.emplace_back(i, j);
    }
  }
  if (pos != text.size()) throw InputError("graph6: trailing bytes");
  return Graph(n, std::move(edges));
}

}  // namespace broomrec
