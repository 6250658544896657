#include "broomrec/reconstruct.hpp"

#include <algorithm>
#include <functional>

#include "broomrec/errors.hpp"

namespace broomrec {

Budget Budget::seconds(double s) {
  Budget b;
  b.limit = std::chrono::duration_cast<std::chrono::steady_clock::duration>(
      std::chrono::duration<double>(s));
  return b;
}

void Budget::check() const {
  if (limit.count() == 0) return;
  if (std::chrono::steady_clock::now() - start > limit) {
    throw BudgetExceeded("wall-clock budget exceeded");
  }
}

Reconstructor::Reconstructor(Graph g, Budget budget)
    : g_(std::move(g)), budget_(budget) {
  deck_ = da_edeck(g_, &cache_);
  g_code_ = cache_.get(g_);
}

void Reconstructor::ensure_candidates() {
  if (candidates_ready_) return;
  // Per class: every extension of the representative, its deck expressed as
  // counts over G's classes, and whether it is G itself. Any H whose da-edeck
  // contains a card of class j is, up to isomorphism, one of these graphs.
  std::map<CanonicalCode, std::vector<int>> deck_counts;
  candidates_.resize(deck_.classes.size());
  for (std::size_t j = 0; j < deck_.classes.size(); ++j) {
    budget_.check();
    std::vector<Graph> exts = extensions(deck_.classes[j].rep, &cache_);
    candidates_[j].reserve(exts.size());
    for (Graph& h : exts) {
      budget_.check();
      Candidate cand;
      const CanonicalCode code = cache_.get(h);
      auto it = deck_counts.find(code);
      if (it == deck_counts.end()) {
        const ClassifiedDeck hd = da_edeck(h, &cache_);
        std::vector<int> counts(deck_.classes.size(), 0);
        for (const DeckClass& c : hd.classes) {
          const int idx = deck_.find(c.rep.d, c.code);
          if (idx >= 0) counts[idx] = c.mult;
        }
        it = deck_counts.emplace(code, std::move(counts)).first;
      }
      cand.counts = it->second;
      cand.iso_to_g = (code == g_code_);
      cand.h = std::move(h);
      candidates_[j].push_back(std::move(cand));
    }
  }
  candidates_ready_ = true;
}

void Reconstructor::validate(const std::vector<int>& counts) const {
  if (counts.size() != deck_.classes.size()) {
    throw InputError("determines: counts vector has wrong length");
  }
  int total = 0;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] < 0 || counts[j] > deck_.classes[j].mult) {
      throw InputError("determines: collection not contained in the da-edeck");
    }
    total += counts[j];
  }
  if (total == 0) throw InputError("determines: empty collection");
}

Verdict Reconstructor::scan(const std::vector<int>& counts, int base_class) const {
  for (const Candidate& cand : candidates_[base_class]) {
    budget_.check();
    if (cand.iso_to_g) continue;
    bool contains = true;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      if (counts[j] > cand.counts[j]) {
        contains = false;
        break;
      }
    }
    if (contains) return Verdict{false, cand.h};
  }
  return Verdict{true, std::nullopt};
}

Verdict Reconstructor::determines(const std::vector<int>& counts) {
  validate(counts);
  auto it = memo_.find(counts);
  if (it != memo_.end()) return it->second;
  ensure_candidates();
  // Smallest candidate frontier among the classes present in the collection.
  int base = -1;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] > 0 &&
        (base < 0 || candidates_[j].size() < candidates_[base].size())) {
      base = static_cast<int>(j);
    }
  }
  Verdict v = scan(counts, base);
  memo_.emplace(counts, v);
  return v;
}

Verdict Reconstructor::determines(const ClassifiedDeck& sub) {
  return determines(counts_of(sub));
}

Verdict Reconstructor::determines_with_base(const std::vector<int>& counts, int base_class) {
  validate(counts);
  if (base_class < 0 || base_class >= static_cast<int>(deck_.classes.size()) ||
      counts[base_class] == 0) {
    throw InputError("determines_with_base: base class not in the collection");
  }
  ensure_candidates();
  return scan(counts, base_class);
}

std::vector<int> Reconstructor::counts_of(const ClassifiedDeck& sub) const {
  std::vector<int> counts(deck_.classes.size(), 0);
  for (const DeckClass& c : sub.classes) {
    const int idx = deck_.find(c.rep.d, c.code);
    if (idx < 0) throw InputError("collection not contained in the da-edeck");
    counts[idx] += c.mult;
  }
  return counts;
}

ClassifiedDeck Reconstructor::subdeck(const std::vector<int>& counts) const {
  if (counts.size() != deck_.classes.size()) throw InputError("subdeck: wrong length");
  ClassifiedDeck sub;
  for (std::size_t j = 0; j < counts.size(); ++j) {
    if (counts[j] == 0) continue;
    if (counts[j] < 0 || counts[j] > deck_.classes[j].mult) {
      throw InputError("subdeck: counts exceed deck multiplicities");
    }
    DeckClass c = deck_.classes[j];
    c.mult = counts[j];
    sub.classes.push_back(std::move(c));
    sub.total += counts[j];
  }
  return sub;
}

void Reconstructor::check_reconstructible() {
  if (reconstructible_checked_) return;
  if (g_.edge_count() == 0) throw InputError("graph has no edges");
  std::vector<int> full(deck_.classes.size());
  for (std::size_t j = 0; j < full.size(); ++j) full[j] = deck_.classes[j].mult;
  if (!determines(full).determines) {
    throw NotReconstructible("the full da-edeck does not determine the graph");
  }
  reconstructible_checked_ = true;
}

namespace {

// Visit all vectors c with 0 <= c[j] <= mult[j] and sum(c) = size, in
// descending lexicographic order (earlier classes filled first). Stops early
// when fn returns true.
bool for_each_composition(const std::vector<int>& mult, int size,
                          const std::function<bool(const std::vector<int>&)>& fn) {
  const int r = static_cast<int>(mult.size());
  std::vector<int> suffix(r + 1, 0);  // suffix[j] = sum of mult[j..]
  for (int j = r - 1; j >= 0; --j) suffix[j] = suffix[j + 1] + mult[j];
  std::vector<int> c(r, 0);
  std::function<bool(int, int)> rec = [&](int j, int remaining) -> bool {
    if (j == r) return fn(c);
    const int lo = std::max(0, remaining - suffix[j + 1]);
    const int hi = std::min(mult[j], remaining);
    for (int v = hi; v >= lo; --v) {
      c[j] = v;
      if (rec(j + 1, remaining - v)) return true;
    }
    c[j] = 0;
    return false;
  };
  if (size > suffix[0]) return false;
  return rec(0, size);
}

}  // namespace

Reconstructor::SearchResult Reconstructor::dern() {
  check_reconstructible();
  std::vector<int> mult(deck_.classes.size());
  for (std::size_t j = 0; j < mult.size(); ++j) mult[j] = deck_.classes[j].mult;
  SearchResult result;
  for (int size = 1; size <= deck_.total; ++size) {
    const bool found = for_each_composition(mult, size, [&](const std::vector<int>& c) {
      if (determines(c).determines) {
        result = {size, c};
        return true;
      }
      return false;
    });
    if (found) return result;
  }
  throw NotReconstructible("no determining subcollection found");  // unreachable
}

Reconstructor::SearchResult Reconstructor::adern() {
  check_reconstructible();
  std::vector<int> mult(deck_.classes.size());
  for (std::size_t j = 0; j < mult.size(); ++j) mult[j] = deck_.classes[j].mult;
  // Bad collections are closed under taking sub-multisets, so the first size
  // (descending) carrying a bad vector is the maximum bad size.
  SearchResult result;
  for (int size = deck_.total - 1; size >= 1; --size) {
    const bool found = for_each_composition(mult, size, [&](const std::vector<int>& c) {
      if (!determines(c).determines) {
        result = {size + 1, c};
        return true;
      }
      return false;
    });
    if (found) return result;
  }
  // Only the empty collection fails: it never determines anything.
  return {1, std::vector<int>(deck_.classes.size(), 0)};
}

Verdict determines(const ClassifiedDeck& sub, const Graph& g, Budget budget) {
  Reconstructor r(g, budget);
  return r.determines(sub);
}

std::optional<Graph> counterexample(const ClassifiedDeck& sub, const Graph& g, Budget budget) {
  return determines(sub, g, budget).witness;
}

Reconstructor::SearchResult dern_brute(const Graph& g, Budget budget) {
  Reconstructor r(g, budget);
  return r.dern();
}

Reconstructor::SearchResult adern_brute(const Graph& g, Budget budget) {
  Reconstructor r(g, budget);
  return r.adern();
}

}  // namespace broomrec
