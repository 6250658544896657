#ifndef BROOMREC_GRAPH_HPP
#define BROOMREC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace broomrec {

using Vertex = int;

// Unordered vertex pair; always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable labeled simple undirected graph on a fixed vertex set.
// Edge deletion keeps the vertex set: cards retain their isolated vertices.
// Adjacency is kept as fixed-width bitset rows, one row per vertex.
class Graph {
 public:
  static constexpr int kMaxVertices = 65535;

  Graph() = default;
  explicit Graph(int vertex_count);
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(Vertex u, Vertex v) const;
  int degree(Vertex v) const;
  // Number of edges adjacent to e: deg(u) + deg(v) - 2.
  int edge_degree(Edge e) const;
  std::vector<int> degrees() const;
  std::vector<Vertex> neighbors(Vertex v) const;

  Graph delete_edge(Edge e) const;
  Graph add_edge(Vertex u, Vertex v) const;

  std::span<const std::uint64_t> row(Vertex v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }
  int words_per_row() const { return words_; }

  // Compact byte serialization of the labeled graph; cache/hash key.
  std::string key() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(Vertex v, const char* who) const;

  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> adj_;
  std::vector<Edge> edges_;  // sorted, u < v
};

// Relabeled copy: vertex i of g becomes perm[i].
Graph permute(const Graph& g, const std::vector<int>& perm);

}  // namespace broomrec

#endif
