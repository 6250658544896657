#include "broomrec/deck.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <utility>

#include "broomrec/errors.hpp"
#include "broomrec/graph_io.hpp"

namespace broomrec {

bool same_class(const DaCard& a, const DaCard& b) {
  return a.d == b.d && is_isomorphic(a.card, b.card);
}

bool realizable(const DaCard& c) {
  const Graph& g = c.card;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) == c.d) return true;
    }
  }
  return false;
}

int ClassifiedDeck::find(int d, const CanonicalCode& code) const {
  auto it = std::lower_bound(classes.begin(), classes.end(), std::make_pair(d, code),
                             [](const DeckClass& c, const std::pair<int, CanonicalCode>& key) {
                               return std::tie(c.rep.d, c.code) < std::tie(key.first, key.second);
                             });
  if (it == classes.end() || it->rep.d != d || it->code != code) return -1;
  return static_cast<int>(it - classes.begin());
}

bool operator==(const ClassifiedDeck& a, const ClassifiedDeck& b) {
  if (a.total != b.total || a.classes.size() != b.classes.size()) return false;
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    const DeckClass& x = a.classes[i];
    const DeckClass& y = b.classes[i];
    if (x.rep.d != y.rep.d || x.code != y.code || x.mult != y.mult) return false;
  }
  return true;
}

DaCard da_ecard(const Graph& g, Edge e) { return DaCard{g.edge_degree(e), g.delete_edge(e)}; }

ClassifiedDeck classify_cards(const std::vector<DaCard>& cards, CanonCache* cache) {
  CanonCache local;
  CanonCache& memo = cache ? *cache : local;
  std::map<std::pair<int, CanonicalCode>, std::pair<DaCard, int>> groups;
  for (const DaCard& c : cards) {
    const CanonicalCode& code = memo.get(c.card);
    auto [it, inserted] = groups.try_emplace({c.d, code}, std::make_pair(c, 0));
    if (inserted) it->second.first.card = canonicalized(c.card);
    ++it->second.second;
  }
  ClassifiedDeck deck;
  deck.classes.reserve(groups.size());
  for (auto& [key, value] : groups) {
    deck.classes.push_back({std::move(value.first), key.second, value.second});
    deck.total += value.second;
  }
  return deck;
}

ClassifiedDeck da_edeck(const Graph& g, CanonCache* cache) {
  std::vector<DaCard> cards;
  cards.reserve(g.edges().size());
  for (const Edge& e : g.edges()) cards.push_back(da_ecard(g, e));
  return classify_cards(cards, cache);
}

std::vector<Graph> extensions(const DaCard& c, CanonCache* cache) {
  CanonCache local;
  CanonCache& memo = cache ? *cache : local;
  const Graph& base = c.card;
  std::map<CanonicalCode, Graph> out;
  for (Vertex u = 0; u < base.vertex_count(); ++u) {
    for (Vertex v = u + 1; v < base.vertex_count(); ++v) {
      if (base.has_edge(u, v)) continue;
      if (base.degree(u) + base.degree(v) != c.d) continue;
      Graph h = base.add_edge(u, v);
      CanonicalCode code = memo.get(h);
      out.try_emplace(std::move(code), std::move(h));
    }
  }
  std::vector<Graph> result;
  result.reserve(out.size());
  for (auto& [code, h] : out) result.push_back(std::move(h));
  return result;
}

bool deck_contains(const ClassifiedDeck& deck, const ClassifiedDeck& sub) {
  for (const DeckClass& c : sub.classes) {
    const int idx = deck.find(c.rep.d, c.code);
    if (idx < 0 || deck.classes[idx].mult < c.mult) return false;
  }
  return true;
}

nlohmann::json deck_to_json(const ClassifiedDeck& deck) {
  nlohmann::json classes = nlohmann::json::array();
  for (const DeckClass& c : deck.classes) {
    classes.push_back({{"d", c.rep.d}, {"mult", c.mult}, {"card", graph_to_json(c.rep.card)}});
  }
  return nlohmann::json{{"total", deck.total}, {"classes", classes}};
}

ClassifiedDeck deck_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("total") || !j.contains("classes")) {
    throw InputError("deck json: expected object with \"total\" and \"classes\"");
  }
  std::vector<DaCard> cards;
  std::vector<int> mults;
  for (const auto& item : j["classes"]) {
    const int d = item.at("d").get<int>();
    const int mult = item.at("mult").get<int>();
    if (mult < 1) throw InputError("deck json: multiplicity must be positive");
    cards.push_back(DaCard{d, graph_from_json(item.at("card"))});
    mults.push_back(mult);
  }
  // Regroup so hand-edited files with split or unsorted classes still load.
  std::map<std::pair<int, CanonicalCode>, std::pair<DaCard, int>> groups;
  for (std::size_t i = 0; i < cards.size(); ++i) {
    CanonicalCode code = canonical_form(cards[i].card);
    auto [it, inserted] = groups.try_emplace({cards[i].d, code}, std::make_pair(cards[i], 0));
    if (inserted) it->second.first.card = canonicalized(cards[i].card);
    it->second.second += mults[i];
  }
  ClassifiedDeck deck;
  for (auto& [key, value] : groups) {
    deck.classes.push_back({std::move(value.first), key.second, value.second});
    deck.total += value.second;
  }
  if (deck.total != j["total"].get<int>()) {
    throw InputError("deck json: total does not match class multiplicities");
  }
  return deck;
}

}  // namespace broomrec
