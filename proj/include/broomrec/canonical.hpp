#ifndef BROOMREC_CANONICAL_HPP
#define BROOMREC_CANONICAL_HPP

#include <compare>
#include <string>
#include <unordered_map>
#include <vector>

#include "broomrec/graph.hpp"

namespace broomrec {

// Complete isomorphism invariant: equal codes <=> isomorphic graphs.
// Layout: vertex count as a 2-byte big-endian prefix, then the upper-triangular
// adjacency bits of the canonical labeling, row-major, packed MSB-first.
struct CanonicalCode {
  std::string bytes;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

CanonicalCode canonical_form(const Graph& g);

// The labeling realizing canonical_form: vertex v of g gets label labeling[v].
std::vector<int> canonical_labeling(const Graph& g);

// Relabeled copy in canonical vertex order (stable output for serialization).
Graph canonicalized(const Graph& g);

// Canonical-code equality behind a degree-sequence fast reject.
bool is_isomorphic(const Graph& g, const Graph& h);

// Per-run memo keyed by the labeled graph bytes. Not thread-safe; use one
// instance per worker.
class CanonCache {
 public:
  const CanonicalCode& get(const Graph& g);
  std::size_t size() const { return memo_.size(); }

 private:
  std::unordered_map<std::string, CanonicalCode> memo_;
};

}  // namespace broomrec

#endif
