#ifndef BROOMREC_ERRORS_HPP
#define BROOMREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace broomrec {

// Malformed or out-of-contract input (bad spec text, missing edge, ...).
struct InputError : std::runtime_error {
  explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Requested a closed-form value outside the family the formulas cover.
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

// Wall-clock budget exhausted; the result is inconclusive, never guessed.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// Even the full da-edeck fails to pin down the graph.
struct NotReconstructible : std::runtime_error {
  explicit NotReconstructible(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace broomrec

#endif
