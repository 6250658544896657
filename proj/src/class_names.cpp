#include "broomrec/class_names.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

#include "broomrec/errors.hpp"

namespace broomrec {

namespace {

std::string side_suffix(EdgeProfile::Side side) {
  switch (side) {
    case EdgeProfile::Side::U:
      return "/u";
    case EdgeProfile::Side::V:
      return "/v";
    case EdgeProfile::Side::Center:
      return "/c";
  }
  return "";
}

}  // namespace

std::vector<std::string> card_class_labels(const BroomSpec& spec, const ClassifiedDeck& deck) {
  const Graph g = build(spec);
  CanonCache cache;
  // Collect the edge profiles landing in each class.
  std::vector<std::vector<EdgeProfile>> profiles(deck.classes.size());
  for (const Edge& e : g.edges()) {
    const DaCard card = da_ecard(g, e);
    const int idx = deck.find(card.d, cache.get(card.card));
    if (idx < 0) throw InputError("card_class_labels: deck does not belong to this spec");
    profiles[idx].push_back(edge_profile(spec, e));
  }
  std::vector<std::string> base(deck.classes.size());
  for (std::size_t i = 0; i < deck.classes.size(); ++i) {
    if (profiles[i].empty()) throw InputError("card_class_labels: class with no matching edge");
    base[i] = profiles[i].front().label.to_string();
  }
  // Qualify only where the short name collides.
  std::map<std::string, int> uses;
  for (const std::string& b : base) ++uses[b];
  std::vector<std::string> names = base;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (uses[base[i]] <= 1) continue;
    std::set<int> orders;
    for (std::size_t jj = 0; jj < names.size(); ++jj) {
      if (base[jj] == base[i]) orders.insert(profiles[jj].front().path_order);
    }
    if (orders.size() > 1 && profiles[i].front().path_order > 0) {
      names[i] += "@" + std::to_string(profiles[i].front().path_order);
    }
  }
  std::map<std::string, int> still;
  for (const std::string& nm : names) ++still[nm];
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (still[names[i]] <= 1) continue;
    std::set<EdgeProfile::Side> sides;
    for (const EdgeProfile& p : profiles[i]) sides.insert(p.side);
    if (sides.size() == 1) names[i] += side_suffix(*sides.begin());
  }
  std::map<std::string, int> last;
  for (const std::string& nm : names) ++last[nm];
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (last[names[i]] > 1) names[i] = "#" + std::to_string(i);
  }
  return names;
}

std::vector<int> parse_collection(const std::string& descriptor, const BroomSpec& spec,
                                  const ClassifiedDeck& deck) {
  const std::vector<std::string> labels = card_class_labels(spec, deck);
  std::vector<int> counts(deck.classes.size(), 0);
  std::size_t pos = 0;
  bool any = false;
  while (pos < descriptor.size()) {
    std::size_t comma = descriptor.find(',', pos);
    if (comma == std::string::npos) comma = descriptor.size();
    std::string item = descriptor.substr(pos, comma - pos);
    pos = comma + 1;
    // trim
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front()))) item.erase(0, 1);
    while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back()))) item.pop_back();
    if (item.empty()) continue;
    const std::size_t colon = item.rfind(':');
    if (colon == std::string::npos) {
      throw InputError("collection: expected NAME:COUNT, got \"" + item + "\"");
    }
    const std::string name = item.substr(0, colon);
    int count = 0;
    try {
      count = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw InputError("collection: bad count in \"" + item + "\"");
    }
    if (count < 1) throw InputError("collection: counts must be positive");
    int idx = -1;
    if (!name.empty() && name[0] == '#') {
      try {
        idx = std::stoi(name.substr(1));
      } catch (const std::exception&) {
        idx = -1;
      }
      if (idx < 0 || idx >= static_cast<int>(deck.classes.size())) {
        throw InputError("collection: class index " + name + " out of range");
      }
    } else {
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == name) {
          idx = static_cast<int>(i);
          break;
        }
      }
      if (idx < 0) {
        std::string known;
        for (const std::string& l : labels) known += (known.empty() ? "" : ", ") + l;
        throw InputError("collection: unknown class \"" + name + "\" (classes: " + known + ")");
      }
    }
    if (counts[idx] != 0) throw InputError("collection: class \"" + name + "\" listed twice");
    if (count > deck.classes[idx].mult) {
      throw InputError("collection: count " + std::to_string(count) + " for class \"" + name +
                       "\" exceeds deck multiplicity " +
                       std::to_string(deck.classes[idx].mult));
    }
    counts[idx] = count;
    any = true;
  }
  if (!any) throw InputError("collection: empty descriptor");
  return counts;
}

}  // namespace broomrec
