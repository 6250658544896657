// Test-only brute-force isomorphism oracle: scans every vertex bijection for
// graphs with at most 8 vertices. Deliberately independent of the canonical
// labeling implementation it is used to check.
#ifndef BROOMREC_TESTS_PERM_ORACLE_HPP
#define BROOMREC_TESTS_PERM_ORACLE_HPP

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "broomrec/deck.hpp"
#include "broomrec/graph.hpp"

namespace broomrec::testing {

inline bool oracle_isomorphic(const Graph& g, const Graph& h) {
  const int n = g.vertex_count();
  if (n > 8 || h.vertex_count() > 8) {
    throw std::logic_error("oracle_isomorphic is capped at 8 vertices");
  }
  if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
  std::vector<int> dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (const Edge& e : g.edges()) {
      if (!h.has_edge(perm[e.u], perm[e.v])) {
        match = false;
        break;
      }
    }
    if (match) return true;  // equal edge counts make this a full check
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Deck classification that groups cards with the permutation oracle instead of
// canonical codes.
struct OracleDeckClass {
  DaCard rep;
  int mult = 0;
};

inline std::vector<OracleDeckClass> oracle_deck(const Graph& g) {
  std::vector<OracleDeckClass> classes;
  for (const Edge& e : g.edges()) {
    const DaCard card = da_ecard(g, e);
    bool placed = false;
    for (OracleDeckClass& c : classes) {
      if (c.rep.d == card.d && oracle_isomorphic(c.rep.card, card.card)) {
        ++c.mult;
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({card, 1});
  }
  return classes;
}

}  // namespace broomrec::testing

#endif
