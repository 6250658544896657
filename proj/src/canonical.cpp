#include "broomrec/canonical.hpp"

#include <algorithm>
#include <utility>

namespace broomrec {

namespace {

// Iterated neighborhood refinement (1-WL). Color ids are ranks of the sorted
// (old color, sorted neighbor colors) signatures, so the resulting ordered
// partition depends only on the isomorphism type plus prior individualization.
// Returns the number of color classes.
int refine(const Graph& g, std::vector<int>& color) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  for (;;) {
    std::vector<std::vector<int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int>& s = sig[v];
      s.reserve(1 + g.degree(v));
      s.push_back(color[v]);
      for (Vertex w : g.neighbors(v)) s.push_back(color[w]);
      std::sort(s.begin() + 1, s.end());
    }
    std::vector<int> order(n);
    for (int v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return sig[a] < sig[b]; });
    int next = 0;
    std::vector<int> fresh(n);
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
      fresh[order[i]] = next;
    }
    // Ranked ids are always installed; a literal fixpoint (same dense ids)
    // is the stopping condition, so callers never see non-dense colorings.
    if (fresh == color) return next + 1;
    color = std::move(fresh);
  }
}

std::vector<int> individualize(const Graph& g, const std::vector<int>& color, int v) {
  std::vector<int> c(color.size());
  for (std::size_t u = 0; u < color.size(); ++u) {
    c[u] = 2 * color[u] + (static_cast<int>(u) == v ? 0 : 1);
  }
  refine(g, c);
  return c;
}

struct CanonSearch {
  const Graph& g;
  int n;
  bool have_best = false;
  std::string best_bits;
  std::vector<int> best_labeling;

  explicit CanonSearch(const Graph& graph) : g(graph), n(graph.vertex_count()) {}

  void run() {
    std::vector<int> color(n, 0);
    refine(g, color);
    descend(color, count_classes(color));
  }

  static int count_classes(const std::vector<int>& color) {
    if (color.empty()) return 0;
    return 1 + *std::max_element(color.begin(), color.end());
  }

  // Twins (equal neighborhoods apart from one another) are swapped by a
  // transposition fixing every other vertex, so their branches at any node
  // produce identical leaf-code sets; one representative suffices.
  bool twins(Vertex u, Vertex v) const {
    auto ru = g.row(u), rv = g.row(v);
    for (int w = 0; w < g.words_per_row(); ++w) {
      std::uint64_t diff = ru[w] ^ rv[w];
      if (u / 64 == w) diff &= ~(std::uint64_t{1} << (u % 64));
      if (v / 64 == w) diff &= ~(std::uint64_t{1} << (v % 64));
      if (diff) return false;
    }
    return true;
  }

  void descend(const std::vector<int>& color, int classes) {
    if (classes == n) {
      leaf(color);
      return;
    }
    // Target cell: the smallest non-singleton class, lowest color id on ties.
    std::vector<int> size(classes, 0);
    for (int c : color) ++size[c];
    int target = -1;
    for (int c = 0; c < classes; ++c) {
      if (size[c] >= 2 && (target < 0 || size[c] < size[target])) target = c;
    }
    std::vector<Vertex> branched;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      bool redundant = false;
      for (Vertex b : branched) {
        if (twins(b, v)) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      branched.push_back(v);
      std::vector<int> child = individualize(g, color, v);
      descend(child, count_classes(child));
    }
  }

  void leaf(const std::vector<int>& color) {
    std::vector<int> vertex_at(n);
    for (int v = 0; v < n; ++v) vertex_at[color[v]] = v;
    std::string bits((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8, '\0');
    std::size_t idx = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j, ++idx) {
        if (g.has_edge(vertex_at[i], vertex_at[j])) {
          bits[idx >> 3] |= static_cast<char>(0x80u >> (idx & 7));
        }
      }
    }
    if (!have_best || bits < best_bits) {
      have_best = true;
      best_bits = std::move(bits);
      best_labeling = color;
    }
  }
};

}  // namespace

CanonicalCode canonical_form(const Graph& g) {
  CanonSearch search(g);
  search.run();
  std::string bytes;
  bytes.reserve(2 + search.best_bits.size());
  bytes.push_back(static_cast<char>(g.vertex_count() >> 8));
  bytes.push_back(static_cast<char>(g.vertex_count() & 0xff));
  bytes += search.best_bits;
  return CanonicalCode{std::move(bytes)};
}

std::vector<int> canonical_labeling(const Graph& g) {
  CanonSearch search(g);
  search.run();
  return search.best_labeling;
}

Graph canonicalized(const Graph& g) { return permute(g, canonical_labeling(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() != h.vertex_count()) return false;
  if (g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_form(g) == canonical_form(h);
}

const CanonicalCode& CanonCache::get(const Graph& g) {
  auto [it, inserted] = memo_.try_emplace(g.key());
  if (inserted) it->second = canonical_form(g);
  return it->second;
}

}  // namespace broomrec
