#include "broomrec/random_graphs.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "broomrec/canonical.hpp"
#include "broomrec/deck.hpp"

namespace broomrec {

Graph random_graph(Rng& rng, int max_n) {
  const int n = std::uniform_int_distribution<int>(1, max_n)(rng);
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  }
  std::shuffle(all.begin(), all.end(), rng);
  const int m = std::uniform_int_distribution<int>(0, static_cast<int>(all.size()))(rng);
  all.resize(m);
  return Graph(n, std::move(all));
}

std::vector<int> random_permutation(Rng& rng, int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

BroomSpec random_spec(Rng& rng) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (;;) {
    const int n1 = pick(1, 6);
    const int n2 = pick(1, 6);
    const int t = pick(1, 3);
    std::vector<PathGroup> paths;
    std::vector<int> orders;
    for (int i = 0; i < t; ++i) {
      int k = pick(2, 8);
      if (std::find(orders.begin(), orders.end(), k) != orders.end()) continue;
      orders.push_back(k);
      paths.push_back({k == 2 ? 1 : pick(1, 4), k});
    }
    try {
      return make_spec(n1, n2, std::move(paths));
    } catch (const std::exception&) {
      continue;  // e.g. a single path only; redraw
    }
  }
}

bool run_selfcheck(std::uint64_t seed, int trials, int max_n, std::ostream& out) {
  Rng rng(seed);
  auto report = [&](int trial, const Graph& g, const char* what) {
    out << "selfcheck failed at trial " << trial << ": " << what << " (n=" << g.vertex_count()
        << ", m=" << g.edge_count() << ")\n";
    return false;
  };
  for (int trial = 0; trial < trials; ++trial) {
    const Graph g = random_graph(rng, max_n);
    int degree_sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    if (degree_sum != 2 * g.edge_count()) return report(trial, g, "degree sum != 2|E|");

    const CanonicalCode code = canonical_form(g);
    const Graph relabeled = permute(g, random_permutation(rng, g.vertex_count()));
    if (canonical_form(relabeled) != code) {
      return report(trial, g, "canonical code changed under relabeling");
    }

    if (g.edge_count() > 0) {
      const std::size_t pick =
          std::uniform_int_distribution<std::size_t>(0, g.edges().size() - 1)(rng);
      const Edge e = g.edges()[pick];
      const Graph cut = g.delete_edge(e);
      if (!(cut.add_edge(e.u, e.v) == g)) return report(trial, g, "delete/add is not identity");

      const DaCard card = da_ecard(g, e);
      if (card.d != g.degree(e.u) + g.degree(e.v) - 2) {
        return report(trial, g, "edge degree formula violated");
      }
      bool found_g = false;
      for (const Graph& h : extensions(card)) {
        if (h.edge_count() != card.card.edge_count() + 1) {
          return report(trial, g, "extension edge count wrong");
        }
        if (is_isomorphic(h, g)) found_g = true;
      }
      if (!found_g) return report(trial, g, "extension round trip lost the host graph");

      if (da_edeck(g).total != g.edge_count()) return report(trial, g, "deck total != |E|");
    }
  }
  out << "selfcheck passed: " << trials << " trials, max " << max_n << " vertices\n";
  return true;
}

}  // namespace broomrec
