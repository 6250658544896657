#ifndef BROOMREC_CLI_HPP
#define BROOMREC_CLI_HPP

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "broomrec/broom.hpp"
#include "broomrec/formulas.hpp"

namespace broomrec {

// Inclusive integer interval, parsed from "a..b" or a bare "a".
struct Range {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
};
Range parse_range(const std::string& text);

struct SweepConfig {
  enum class Family { TwoPk, MPk, Multi, Unequal };
  enum class Method { Brute, Formula, Both };

  Family family = Family::TwoPk;
  Range n1, n2, m, k;
  Method method = Method::Both;
  double budget_seconds = 120.0;
  bool timing = true;
};

// The sweep's spec grid, in deterministic generation order. Parameter
// combinations failing validation are skipped with a note on `log`.
std::vector<BroomSpec> sweep_specs(const SweepConfig& config, std::ostream& log);

// Injectable predictors so a corrupted formula can be exercised in tests.
struct VerifyDeps {
  std::function<Prediction(const BroomSpec&)> dern;
  std::function<Prediction(const BroomSpec&)> adern;
  static VerifyDeps real();
};

// Brute-force versus closed form over the sweep. Writes one row per spec
// (format "csv" or "json") to `out` and a summary to `log`. Returns 0 when
// every Exact prediction agrees, 1 on any Exact disagreement, 3 if any spec
// was inconclusive under the budget. CaseDerived mismatches are findings, not
// failures.
int verify_sweep(const SweepConfig& config, const std::string& format, std::ostream& out,
                 std::ostream& log, const VerifyDeps& deps = VerifyDeps::real());

// Entry point used by both the binary and the tests. Returns the process exit
// code: 0 success/agreement, 1 verified disagreement, 2 invalid input,
// 3 inconclusive (budget exhausted).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace broomrec

#endif
