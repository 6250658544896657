#ifndef BROOMREC_CLASS_NAMES_HPP
#define BROOMREC_CLASS_NAMES_HPP

#include <string>
#include <vector>

#include "broomrec/broom.hpp"
#include "broomrec/deck.hpp"

namespace broomrec {

// Names for the deck classes of a built broom, aligned with deck.classes.
// Base names are L, K, M<i>; when several classes share a base they are
// disambiguated by path order (K@5) and then by hub side (L/u, M2@7/v).
std::vector<std::string> card_class_labels(const BroomSpec& spec, const ClassifiedDeck& deck);

// Parse a collection descriptor like "L:2,K:2" or "M2@5:1" into per-class
// counts. Classes may also be addressed positionally as "#<index>:<count>".
// Throws InputError for unknown names, duplicates, or counts exceeding the
// deck multiplicities.
std::vector<int> parse_collection(const std::string& descriptor, const BroomSpec& spec,
                                  const ClassifiedDeck& deck);

}  // namespace broomrec

#endif
