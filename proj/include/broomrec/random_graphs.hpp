#ifndef BROOMREC_RANDOM_GRAPHS_HPP
#define BROOMREC_RANDOM_GRAPHS_HPP

#include <cstdint>
#include <iosfwd>
#include <random>

#include "broomrec/broom.hpp"
#include "broomrec/graph.hpp"

namespace broomrec {

using Rng = std::mt19937_64;

// Uniform vertex count in [1, max_n], then a uniformly chosen edge count.
Graph random_graph(Rng& rng, int max_n);

std::vector<int> random_permutation(Rng& rng, int n);

// Uniform-ish valid broom spec with small parameters; always validates.
BroomSpec random_spec(Rng& rng);

// Randomized invariant checks over small graphs: relabeling invariance of the
// canonical code, edge edit round trips, deck totals, extension round trips.
// Reports the first violation to `out` and returns false.
bool run_selfcheck(std::uint64_t seed, int trials, int max_n, std::ostream& out);

}  // namespace broomrec

#endif
