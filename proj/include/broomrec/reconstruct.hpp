#ifndef BROOMREC_RECONSTRUCT_HPP
#define BROOMREC_RECONSTRUCT_HPP

#include <chrono>
#include <map>
#include <optional>
#include <vector>

#include "broomrec/canonical.hpp"
#include "broomrec/deck.hpp"
#include "broomrec/graph.hpp"

namespace broomrec {

// Wall-clock guard. A zero limit means unlimited.
struct Budget {
  std::chrono::steady_clock::duration limit{};
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  static Budget unlimited() { return Budget{}; }
  static Budget seconds(double s);
  void check() const;  // throws BudgetExceeded
};

struct Verdict {
  bool determines = false;
  std::optional<Graph> witness;  // an H != G containing the collection
};

// Exhaustive engine bound to one graph G. Sub-multisets of the da-edeck are
// addressed as per-class multiplicity vectors over deck().classes; verdicts
// depend only on those vectors, which is what makes the search tractable.
class Reconstructor {
 public:
  explicit Reconstructor(Graph g, Budget budget = Budget::unlimited());

  const Graph& graph() const { return g_; }
  const ClassifiedDeck& deck() const { return deck_; }

  Verdict determines(const std::vector<int>& counts);
  Verdict determines(const ClassifiedDeck& sub);
  // Same question answered from a caller-chosen support class; cross-check
  // hook, bypasses the memo.
  Verdict determines_with_base(const std::vector<int>& counts, int base_class);

  struct SearchResult {
    int value = 0;
    std::vector<int> counts;  // minimal determining set (dern) / largest bad set (adern)
  };
  SearchResult dern();   // throws NotReconstructible if even the full deck fails
  SearchResult adern();  // value = 1 + size of the largest non-determining set

  ClassifiedDeck subdeck(const std::vector<int>& counts) const;
  std::vector<int> counts_of(const ClassifiedDeck& sub) const;

 private:
  struct Candidate {
    Graph h;
    bool iso_to_g = false;
    std::vector<int> counts;  // how many cards of each deck class h carries
  };

  void ensure_candidates();
  Verdict scan(const std::vector<int>& counts, int base_class) const;
  void validate(const std::vector<int>& counts) const;
  void check_reconstructible();

  Graph g_;
  Budget budget_;
  CanonCache cache_;
  ClassifiedDeck deck_;
  CanonicalCode g_code_;
  std::vector<std::vector<Candidate>> candidates_;
  bool candidates_ready_ = false;
  bool reconstructible_checked_ = false;
  std::map<std::vector<int>, Verdict> memo_;
};

// One-shot conveniences.
Verdict determines(const ClassifiedDeck& sub, const Graph& g,
                   Budget budget = Budget::unlimited());
std::optional<Graph> counterexample(const ClassifiedDeck& sub, const Graph& g,
                                    Budget budget = Budget::unlimited());
Reconstructor::SearchResult dern_brute(const Graph& g, Budget budget = Budget::unlimited());
Reconstructor::SearchResult adern_brute(const Graph& g, Budget budget = Budget::unlimited());

}  // namespace broomrec

#endif
