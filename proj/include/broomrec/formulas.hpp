#ifndef BROOMREC_FORMULAS_HPP
#define BROOMREC_FORMULAS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "broomrec/broom.hpp"

namespace broomrec {

enum class Exactness { Exact, CaseDerived };

// Closed-form prediction. Exact carries a single value. CaseDerived means the
// theorem only pins the value to {1, 2}; `value` is then the refinement the
// proof cases suggest, to be settled by brute force.
struct Prediction {
  int value = 0;
  Exactness exactness = Exactness::Exact;
  std::string theorem;
  std::string branch;

  bool admits(int v) const {
    return exactness == Exactness::Exact ? v == value : (v == 1 || v == 2);
  }
};

nlohmann::json prediction_to_json(const Prediction& p);

// dern over the whole strong double broom family. Always 1 or 2.
Prediction dern_formula(const BroomSpec& spec);

// adern for B(n,n,mPk) only; throws UnsupportedError elsewhere.
Prediction adern_formula(const BroomSpec& spec);

// The two adern case tables, row for row.
enum class AdernFamily { TwoPaths, ManyPaths };

struct ProofTableRow {
  int k_lo = 0, k_hi = 0;  // k_hi = 0 means unbounded above
  int m_lo = 0, m_hi = 0;  // TwoPaths rows have m_lo = m_hi = 2
  int n_lo = 0, n_hi = 0;
  std::string cases;  // proof cases covering the cell
  int adern = 0;

  bool matches(int n, int m, int k) const;
};

std::vector<ProofTableRow> proof_table(AdernFamily family);
// Row covering (n, m, k); throws UnsupportedError outside the family's scope.
const ProofTableRow& proof_table_row(AdernFamily family, int n, int m, int k);

}  // namespace broomrec

#endif
