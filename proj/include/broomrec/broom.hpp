#ifndef BROOMREC_BROOM_HPP
#define BROOMREC_BROOM_HPP

#include <string>
#include <string_view>
#include <vector>

#include "broomrec/graph.hpp"

namespace broomrec {

// One group of internally disjoint hub-to-hub paths: mult copies of order k
// (k counts both hubs, so a path of order k contributes k-2 interior vertices).
struct PathGroup {
  int mult = 0;
  int order = 0;
  friend auto operator<=>(const PathGroup&, const PathGroup&) = default;
};

// Parameters of a strong double broom B(n1, n2, m1Pk1 + m2Pk2 + ...).
// Always normalized: zero-multiplicity groups dropped, orders strictly
// increasing. A hub-to-hub edge (order 2) can appear only once and only first.
struct BroomSpec {
  int n1 = 0;  // leaves appended at hub u
  int n2 = 0;  // leaves appended at hub v
  std::vector<PathGroup> paths;

  int total_paths() const;
  int vertex_count() const;  // n1 + n2 + 2 + sum mi*(ki-2)
  int edge_count() const;    // n1 + n2 + sum mi*(ki-1)

  friend auto operator<=>(const BroomSpec&, const BroomSpec&) = default;
};

// Normalize and validate raw parameters; throws InputError on violation.
BroomSpec make_spec(int n1, int n2, std::vector<PathGroup> paths);

// Grammar: B( INT , INT , TERM (+ TERM)* ) with TERM = INT P INT.
// Whitespace is ignored anywhere.
BroomSpec parse_spec(std::string_view text);
std::string render_spec(const BroomSpec& spec);

// Hubs swapped so that n1 <= n2 (builds of the two orders are isomorphic).
BroomSpec hub_normalized(const BroomSpec& spec);

// Deterministic construction: hub u = 0, hub v = 1, then the n1 leaves of u,
// the n2 leaves of v, then path interiors group by group, each path running
// from the u side to the v side.
Graph build(const BroomSpec& spec);

enum class VertexRole { Leaf, Hub, Middle };
VertexRole classify_vertex(const BroomSpec& spec, Vertex v);

// Card type of an edge: L for leaf edges, K for hub-incident internal edges
// (including a hub-to-hub edge), M_i for an internal edge whose ends lie at
// distance i-1 and i from the nearer hub (2 <= i <= floor(k/2)).
struct EdgeLabel {
  enum class Kind { L, K, M };
  Kind kind = Kind::L;
  int index = 0;  // the i of M_i; 0 for L and K
  std::string to_string() const;
  friend bool operator==(const EdgeLabel&, const EdgeLabel&) = default;
};
EdgeLabel classify_edge(const BroomSpec& spec, Edge e);

// Finer per-edge data used for deck class naming.
struct EdgeProfile {
  EdgeLabel label;
  int path_order = 0;                      // k of the path the edge lies on; 0 for L
  enum class Side { U, V, Center } side = Side::Center;
};
EdgeProfile edge_profile(const BroomSpec& spec, Edge e);

}  // namespace broomrec

#endif
