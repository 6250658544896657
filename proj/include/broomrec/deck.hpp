#ifndef BROOMREC_DECK_HPP
#define BROOMREC_DECK_HPP

#include <vector>

#include <nlohmann/json.hpp>

#include "broomrec/canonical.hpp"
#include "broomrec/graph.hpp"

namespace broomrec {

// Degree associated edge card: the deleted edge's degree d(e) together with
// the edge-deleted subgraph. Cards carry unlabeled semantics: two DaCards are
// the same class iff d matches and the cards are isomorphic.
struct DaCard {
  int d = 0;
  Graph card;
};

bool same_class(const DaCard& a, const DaCard& b);

// True if some non-adjacent vertex pair of the card has degree sum d. Genuine
// cards always qualify (restoring the deleted edge), hand-built ones may not.
bool realizable(const DaCard& c);

struct DeckClass {
  DaCard rep;          // canonically relabeled representative
  CanonicalCode code;  // canonical code of rep.card
  int mult = 0;
};

// The da-edeck as a multiset of card classes, sorted by (d, code).
struct ClassifiedDeck {
  std::vector<DeckClass> classes;
  int total = 0;

  int find(int d, const CanonicalCode& code) const;  // index or -1
  bool empty() const { return total == 0; }

  friend bool operator==(const ClassifiedDeck& a, const ClassifiedDeck& b);
};

DaCard da_ecard(const Graph& g, Edge e);

ClassifiedDeck classify_cards(const std::vector<DaCard>& cards, CanonCache* cache = nullptr);
ClassifiedDeck da_edeck(const Graph& g, CanonCache* cache = nullptr);

// All graphs obtained from the card by one edge addition between non-adjacent
// vertices with degree sum d, deduplicated up to isomorphism and sorted by
// canonical code. May be empty for unrealizable d.
std::vector<Graph> extensions(const DaCard& c, CanonCache* cache = nullptr);

// Multiset containment: every class of sub present in deck with at least the
// same multiplicity.
bool deck_contains(const ClassifiedDeck& deck, const ClassifiedDeck& sub);

// {"total": t, "classes": [{"d": d, "mult": m, "card": <graph json>}, ...]}
nlohmann::json deck_to_json(const ClassifiedDeck& deck);
ClassifiedDeck deck_from_json(const nlohmann::json& j);

}  // namespace broomrec

#endif
