#include "broomrec/broom.hpp"

#include <algorithm>
#include <cctype>

#include "broomrec/errors.hpp"

namespace broomrec {

int BroomSpec::total_paths() const {
  int m = 0;
  for (const PathGroup& p : paths) m += p.mult;
  return m;
}

int BroomSpec::vertex_count() const {
  int n = n1 + n2 + 2;
  for (const PathGroup& p : paths) n += p.mult * (p.order - 2);
  return n;
}

int BroomSpec::edge_count() const {
  int e = n1 + n2;
  for (const PathGroup& p : paths) e += p.mult * (p.order - 1);
  return e;
}

BroomSpec make_spec(int n1, int n2, std::vector<PathGroup> paths) {
  if (n1 < 1 || n2 < 1) {
    throw InputError("broom spec: both hubs need at least one leaf");
  }
  std::erase_if(paths, [](const PathGroup& p) { return p.mult == 0; });
  for (const PathGroup& p : paths) {
    if (p.mult < 0) throw InputError("broom spec: negative path multiplicity");
    if (p.order < 2) throw InputError("broom spec: path order must be at least 2");
  }
  std::sort(paths.begin(), paths.end(),
            [](const PathGroup& a, const PathGroup& b) { return a.order < b.order; });
  for (std::size_t i = 1; i < paths.size(); ++i) {
    if (paths[i].order == paths[i - 1].order) {
      throw InputError("broom spec: duplicate path order " + std::to_string(paths[i].order));
    }
  }
  if (paths.empty()) throw InputError("broom spec: no paths given");
  if (paths[0].order == 2 && paths[0].mult > 1) {
    throw InputError("broom spec: more than one hub-to-hub edge violates simplicity");
  }
  BroomSpec spec{n1, n2, std::move(paths)};
  if (spec.total_paths() < 2) {
    throw InputError("broom spec: at least two internally disjoint paths required");
  }
  if (spec.vertex_count() < 5) {
    throw InputError("broom spec: fewer than 5 vertices");
  }
  return spec;
}

namespace {

struct Parser {
  std::string s;  // input with whitespace stripped
  std::size_t pos = 0;

  explicit Parser(std::string_view text) {
    s.reserve(text.size());
    for (char c : text) {
      if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("broom spec: " + what + " at position " + std::to_string(pos) +
                     " in \"" + s + "\"");
  }

  void expect(char c) {
    if (pos >= s.size() || s[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  }

  bool peek(char c) const { return pos < s.size() && s[pos] == c; }

  int integer() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    if (pos - start > 6) fail("integer too large");
    return std::stoi(s.substr(start, pos - start));
  }
};

}  // namespace

BroomSpec parse_spec(std::string_view text) {
  Parser p(text);
  p.expect('B');
  p.expect('(');
  const int n1 = p.integer();
  p.expect(',');
  const int n2 = p.integer();
  p.expect(',');
  std::vector<PathGroup> paths;
  for (;;) {
    const int mult = p.integer();
    p.expect('P');
    const int order = p.integer();
    paths.push_back({mult, order});
    if (p.peek('+')) {
      ++p.pos;
      continue;
    }
    break;
  }
  p.expect(')');
  if (p.pos != p.s.size()) p.fail("trailing characters");
  return make_spec(n1, n2, std::move(paths));
}

std::string render_spec(const BroomSpec& spec) {
  std::string out = "B(" + std::to_string(spec.n1) + "," + std::to_string(spec.n2) + ",";
  for (std::size_t i = 0; i < spec.paths.size(); ++i) {
    if (i > 0) out += "+";
    out += std::to_string(spec.paths[i].mult) + "P" + std::to_string(spec.paths[i].order);
  }
  out += ")";
  return out;
}

BroomSpec hub_normalized(const BroomSpec& spec) {
  if (spec.n1 <= spec.n2) return spec;
  BroomSpec swapped = spec;
  std::swap(swapped.n1, swapped.n2);
  return swapped;
}

Graph build(const BroomSpec& spec) {
  constexpr Vertex kHubU = 0, kHubV = 1;
  std::vector<Edge> edges;
  edges.reserve(spec.edge_count());
  Vertex next = 2;
  for (int i = 0; i < spec.n1; ++i) edges.emplace_back(kHubU, next++);
  for (int i = 0; i < spec.n2; ++i) edges.emplace_back(kHubV, next++);
  for (const PathGroup& pg : spec.paths) {
    for (int copy = 0; copy < pg.mult; ++copy) {
      if (pg.order == 2) {
        edges.emplace_back(kHubU, kHubV);
        continue;
      }
      Vertex prev = kHubU;
      for (int step = 0; step < pg.order - 2; ++step) {
        edges.emplace_back(prev, next);
        prev = next++;
      }
      edges.emplace_back(prev, kHubV);
    }
  }
  return Graph(spec.vertex_count(), std::move(edges));
}

VertexRole classify_vertex(const BroomSpec& spec, Vertex v) {
  if (v < 0 || v >= spec.vertex_count()) {
    throw InputError("classify_vertex: vertex out of range");
  }
  if (v <= 1) return VertexRole::Hub;
  if (v < 2 + spec.n1 + spec.n2) return VertexRole::Leaf;
  return VertexRole::Middle;
}

std::string EdgeLabel::to_string() const {
  switch (kind) {
    case Kind::L:
      return "L";
    case Kind::K:
      return "K";
    case Kind::M:
      return "M" + std::to_string(index);
  }
  return "?";
}

namespace {

// Position of a middle vertex along its path: order k and distance from hub u
// (1 .. k-2), recovered from the deterministic build labeling.
struct MiddleInfo {
  int order = 0;
  int dist_u = 0;
};

MiddleInfo middle_info(const BroomSpec& spec, Vertex v) {
  Vertex base = 2 + spec.n1 + spec.n2;
  for (const PathGroup& pg : spec.paths) {
    const int interior = pg.order - 2;
    const int span = pg.mult * interior;
    if (v < base + span) {
      return {pg.order, (v - base) % interior + 1};
    }
    base += span;
  }
  throw InputError("middle_info: vertex is not a middle vertex");
}

}  // namespace

EdgeProfile edge_profile(const BroomSpec& spec, Edge e) {
  const Graph g = build(spec);
  if (!std::binary_search(g.edges().begin(), g.edges().end(), e)) {
    throw InputError("classify_edge: not an edge of the broom");
  }
  const VertexRole ru = classify_vertex(spec, e.u);
  const VertexRole rv = classify_vertex(spec, e.v);
  EdgeProfile out;
  if (ru == VertexRole::Leaf || rv == VertexRole::Leaf) {
    out.label = {EdgeLabel::Kind::L, 0};
    const Vertex leaf = (ru == VertexRole::Leaf) ? e.u : e.v;
    out.side = (leaf < 2 + spec.n1) ? EdgeProfile::Side::U : EdgeProfile::Side::V;
    return out;
  }
  if (ru == VertexRole::Hub && rv == VertexRole::Hub) {
    out.label = {EdgeLabel::Kind::K, 0};
    out.path_order = 2;
    out.side = EdgeProfile::Side::Center;
    return out;
  }
  if (ru == VertexRole::Hub || rv == VertexRole::Hub) {
    const Vertex hub = (ru == VertexRole::Hub) ? e.u : e.v;
    const MiddleInfo mi = middle_info(spec, (ru == VertexRole::Hub) ? e.v : e.u);
    out.label = {EdgeLabel::Kind::K, 0};
    out.path_order = mi.order;
    out.side = (hub == 0) ? EdgeProfile::Side::U : EdgeProfile::Side::V;
    return out;
  }
  // Interior edge between positions j and j+1 of a path of order k. Ends lie
  // at distance (j, j+1) from u and (k-1-j, k-2-j) from v; the nearer hub
  // gives M_i with i = min(j+1, k-1-j).
  const MiddleInfo a = middle_info(spec, e.u);
  const int k = a.order;
  const int j = std::min(a.dist_u, middle_info(spec, e.v).dist_u);
  const int i = std::min(j + 1, k - 1 - j);
  out.label = {EdgeLabel::Kind::M, i};
  out.path_order = k;
  if (j + 1 < k - 1 - j) {
    out.side = EdgeProfile::Side::U;
  } else if (j + 1 > k - 1 - j) {
    out.side = EdgeProfile::Side::V;
  } else {
    out.side = EdgeProfile::Side::Center;
  }
  return out;
}

EdgeLabel classify_edge(const BroomSpec& spec, Edge e) { return edge_profile(spec, e).label; }

}  // namespace broomrec
