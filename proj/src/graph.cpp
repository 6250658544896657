#include "broomrec/graph.hpp"

#include <algorithm>
#include <bit>

#include "broomrec/errors.hpp"

namespace broomrec {

namespace {
std::string edge_str(Edge e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}
}  // namespace

Graph::Graph(int vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVertices) {
    throw InputError("vertex count out of range: " + std::to_string(vertex_count));
  }
  n_ = vertex_count;
  words_ = (n_ + 63) / 64;
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

Graph::Graph(int vertex_count, std::vector<Edge> edges) : Graph(vertex_count) {
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge e = edges[i];
    if (e.u < 0 || e.v >= n_) throw InputError("edge endpoint out of range: " + edge_str(e));
    if (e.u == e.v) throw InputError("self-loop not allowed at vertex " + std::to_string(e.u));
    if (i > 0 && edges[i - 1] == e) throw InputError("duplicate edge " + edge_str(e));
    adj_[static_cast<std::size_t>(e.u) * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    adj_[static_cast<std::size_t>(e.v) * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
  edges_ = std::move(edges);
}

void Graph::check_vertex(Vertex v, const char* who) const {
  if (v < 0 || v >= n_) {
    throw InputError(std::string(who) + ": vertex " + std::to_string(v) +
                     " out of range [0," + std::to_string(n_) + ")");
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u, "has_edge");
  check_vertex(v, "has_edge");
  if (u == v) return false;
  return (adj_[static_cast<std::size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

int Graph::degree(Vertex v) const {
  check_vertex(v, "degree");
  int d = 0;
  for (std::uint64_t w : row(v)) d += std::popcount(w);
  return d;
}

int Graph::edge_degree(Edge e) const {
  if (!std::binary_search(edges_.begin(), edges_.end(), e)) {
    throw InputError("edge_degree: " + edge_str(e) + " is not an edge");
  }
  return degree(e.u) + degree(e.v) - 2;
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_, 0);
  for (const Edge& e : edges_) {
    ++d[e.u];
    ++d[e.v];
  }
  return d;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v, "neighbors");
  std::vector<Vertex> out;
  auto r = row(v);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

Graph Graph::delete_edge(Edge e) const {
  if (!std::binary_search(edges_.begin(), edges_.end(), e)) {
    throw InputError("delete_edge: " + edge_str(e) + " is not an edge");
  }
  std::vector<Edge> rest;
  rest.reserve(edges_.size() - 1);
  for (const Edge& f : edges_) {
    if (f != e) rest.push_back(f);
  }
  return Graph(n_, std::move(rest));
}

Graph Graph::add_edge(Vertex u, Vertex v) const {
  check_vertex(u, "add_edge");
  check_vertex(v, "add_edge");
  if (u == v) throw InputError("add_edge: self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) throw InputError("add_edge: " + edge_str(Edge(u, v)) + " already present");
  std::vector<Edge> all = edges_;
  all.emplace_back(u, v);
  return Graph(n_, std::move(all));
}

std::string Graph::key() const {
  std::string k;
  k.reserve(4 + edges_.size() * 4);
  k.push_back(static_cast<char>(n_ >> 8));
  k.push_back(static_cast<char>(n_ & 0xff));
  for (const Edge& e : edges_) {
    k.push_back(static_cast<char>(e.u >> 8));
    k.push_back(static_cast<char>(e.u & 0xff));
    k.push_back(static_cast<char>(e.v >> 8));
    k.push_back(static_cast<char>(e.v & 0xff));
  }
  return k;
}

Graph permute(const Graph& g, const std::vector<int>& perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(perm.size()) != n) throw InputError("permute: size mismatch");
  std::vector<bool> seen(n, false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[p]) throw InputError("permute: not a permutation");
    seen[p] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return Graph(n, std::move(edges));
}

}  // namespace broomrec
