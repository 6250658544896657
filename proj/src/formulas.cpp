#include "broomrec/formulas.hpp"

#include "broomrec/errors.hpp"

namespace broomrec {

nlohmann::json prediction_to_json(const Prediction& p) {
  nlohmann::json j{{"theorem", p.theorem}, {"branch", p.branch}};
  if (p.exactness == Exactness::Exact) {
    j["exactness"] = "Exact";
    j["value"] = p.value;
  } else {
    j["exactness"] = "CaseDerived";
    j["value_set"] = {1, 2};
    j["preferred"] = p.value;
  }
  return j;
}

namespace {

Prediction exact(int value, std::string theorem, std::string branch) {
  return Prediction{value, Exactness::Exact, std::move(theorem), std::move(branch)};
}

Prediction derived(int preferred, std::string theorem, std::string branch) {
  return Prediction{preferred, Exactness::CaseDerived, std::move(theorem), std::move(branch)};
}

// B(n,n,mPk), one path length, equal leaf counts.
Prediction dern_equal_single(int n, int m, int k) {
  const char* id = "dern.equal-n.single-length";
  if (n + m >= 6) return exact(1, id, "n+m>=6");
  const bool small_exception = (n == 1 && (m == 2 || m == 3));
  if (k == 3 && !small_exception) return exact(1, id, "n+m<6, (n,m) not in {(1,2),(1,3)}, k=3");
  return exact(2, id, k >= 4 ? "n+m<6, k>=4" : "(n,m) in {(1,2),(1,3)}, k=3");
}

// B(n1,n2,mPk) with n1 < n2.
Prediction dern_unequal_single(int n1, int n2, int m, int k) {
  const char* id = "dern.unequal-n.single-length";
  const int diff = n2 - n1;
  if (k > 3 && n1 + m <= 5) {
    if (diff == 2 || diff == 3) return exact(2, id, "n1+m<=5, n2-n1 in {2,3}, k>3");
    if (diff == 1 && n2 + m != 6) return exact(2, id, "n1+m<=5, n2-n1=1, n2+m!=6, k>3");
  }
  return exact(1, id, "otherwise (a leaf or hub card suffices)");
}

// B(n,n,m1Pk1+...), at least two path lengths, all orders >= 3.
Prediction dern_equal_multi(int n, int m, int k1, int k2) {
  const char* id = "dern.equal-n.multi-length";
  if (n + m >= 6) return exact(1, id, "n+m>=6");
  if (n + m == 5 && k1 == 3) return exact(1, id, "n+m=5, k1=3");
  if (n + m == 4 && k1 == 3 && k2 == 4 && n == 2) return exact(1, id, "n+m=4, k1=3, k2=4, n=2");
  return exact(2, id, "otherwise (leaf plus middle card)");
}

// Specs containing a hub-to-hub edge (k1 = 2). Leaf counts normalized.
Prediction dern_p2(int n1, int n2, int rest_paths, int k2) {
  const char* id = "dern.p2-path";
  if (rest_paths == 1 && k2 > 3 && n1 == 1 && n2 <= 4) {
    return exact(2, id, "one extra path, its order > 3, n1=1, n2<=4");
  }
  return exact(1, id, "otherwise (hub or leaf card suffices)");
}

// Remaining territory: n1 != n2, several lengths, all orders >= 3. The
// governing theorem only proves membership in {1, 2}; the proof cases say
// which collections suffice, so the preferred value follows them.
Prediction dern_general(int n1, int n2, int m, int k1, int k2) {
  const char* id = "dern.unequal-n.multi-length";
  const int diff = n2 - n1;
  const bool case1 = (n1 + m >= 6) || (n1 + m <= 5 && diff >= 4) || (n1 + m == 5 && diff == 1);
  const bool case2 = (n1 + m == 3 && ((n2 == 2 && k2 == 4) || (n2 == 4 && k1 == 3))) ||
                     (n1 + m == 4 && diff < 4 && !(n1 == 2 && n2 == 4) && k1 == 3);
  const bool case3 = (n1 + m == 4 && n1 == 2 && n2 == 4 && k2 == 4) ||
                     (n1 + m == 5 && (diff == 2 || diff == 3) && k1 == 3);
  if (case1) return derived(1, id, "a leaf card suffices");
  if (case2 || case3) return derived(1, id, "a hub card suffices");
  return derived(2, id, "leaf plus middle card");
}

}  // namespace

Prediction dern_formula(const BroomSpec& in) {
  const BroomSpec spec = hub_normalized(in);
  const int n1 = spec.n1;
  const int n2 = spec.n2;
  const int m = spec.total_paths();
  const int t = static_cast<int>(spec.paths.size());
  if (t == 1) {
    const int k = spec.paths[0].order;
    if (n1 == n2) return dern_equal_single(n1, m, k);
    return dern_unequal_single(n1, n2, m, k);
  }
  if (spec.paths[0].order == 2) return dern_p2(n1, n2, m - 1, spec.paths[1].order);
  const int k1 = spec.paths[0].order;
  const int k2 = spec.paths[1].order;
  if (n1 == n2) return dern_equal_multi(n1, m, k1, k2);
  return dern_general(n1, n2, m, k1, k2);
}

Prediction adern_formula(const BroomSpec& in) {
  const BroomSpec spec = hub_normalized(in);
  if (spec.paths.size() != 1 || spec.n1 != spec.n2) {
    throw UnsupportedError("adern formula covers only B(n,n,mPk); got " + render_spec(in));
  }
  const int n = spec.n1;
  const int m = spec.paths[0].mult;
  const int k = spec.paths[0].order;
  if (m == 2) {
    const char* id = "adern.two-paths";
    if (n == 1 && k >= 4) return exact(5, id, "n=1, k>=4");
    if ((n == 2 || n == 3) && k == 3) return exact(2, id, "n in {2,3}, k=3");
    if (n >= 3 && k == 4) return exact(2, id, "n>=3, k=4");
    if (n >= 4 && k == 3) return exact(1, id, "n>=4, k=3");
    return exact(3, id, "otherwise");
  }
  const char* id = "adern.many-paths";
  if (k >= 5) return exact(3, id, "k>=5");
  if (m == 3 && k == 4 && n == 1) return exact(3, id, "m=3, k=4, n=1");
  if (m == 3 && k == 3 && n == 2) return exact(2, id, "m=3, k=3, n=2");
  if (m == 4 && k == 3 && n == 1) return exact(2, id, "m=4, k=3, n=1");
  if (m == 3 && k == 3 && n == 1) return exact(2, id, "m=3, k=3, n=1");
  if (m >= 4 && k == 4) return exact(2, id, "m>=4, k=4");
  if (m == 3 && k == 4 && n >= 2) return exact(2, id, "m=3, k=4, n>=2");
  return exact(1, id, "otherwise");
}

bool ProofTableRow::matches(int n, int m, int k) const {
  const auto in = [](int v, int lo, int hi) { return v >= lo && (hi == 0 || v <= hi); };
  return in(k, k_lo, k_hi) && in(m, m_lo, m_hi) && in(n, n_lo, n_hi);
}

std::vector<ProofTableRow> proof_table(AdernFamily family) {
  if (family == AdernFamily::TwoPaths) {
    return {
        {3, 3, 2, 2, 1, 1, "3", 3},
        {3, 3, 2, 2, 2, 3, "2, 3", 2},
        {3, 3, 2, 2, 4, 0, "1, 2", 1},
        {4, 4, 2, 2, 1, 1, "4, 5.1, 6, 7, 10, 12", 5},
        {4, 4, 2, 2, 2, 2, "4, 5.1, 9, 10, 13", 3},
        {4, 4, 2, 2, 3, 0, "1, 4, 5.1, 8, 10, 13", 2},
        {5, 5, 2, 2, 1, 1, "4, 6, 7, 12", 5},
        {5, 5, 2, 2, 2, 2, "4, 5.2.1, 9, 13", 3},
        {5, 5, 2, 2, 3, 0, "1, 4, 5.2.1, 8, 13", 3},
        {6, 0, 2, 2, 1, 1, "4, 5.2.2, 6, 7, 11, 12", 5},
        {6, 0, 2, 2, 2, 2, "4, 5.2, 9, 11, 13", 3},
        {6, 0, 2, 2, 3, 0, "1, 4, 5.2, 8, 13", 3},
    };
  }
  return {
      {3, 3, 3, 3, 1, 1, "3, 8", 2},
      {3, 3, 3, 3, 2, 2, "2, 6", 2},
      {3, 3, 3, 3, 3, 0, "1, 2", 1},
      {3, 3, 4, 4, 1, 1, "2, 6", 2},
      {3, 3, 4, 4, 2, 0, "1, 2", 1},
      {3, 3, 5, 0, 1, 0, "1, 2", 1},
      {4, 4, 3, 3, 1, 1, "3, 4, 7, 8, 9", 3},
      {4, 4, 3, 3, 2, 2, "3, 4, 6, 8, 9", 2},
      {4, 4, 3, 3, 3, 0, "1, 4, 8, 9", 2},
      {4, 4, 4, 4, 1, 1, "3, 4, 6, 8, 9", 2},
      {4, 4, 4, 4, 2, 0, "1, 4, 8, 9", 2},
      {4, 4, 5, 0, 1, 0, "1, 4, 8, 9", 2},
      {5, 0, 3, 3, 1, 1, "3, 4, 5 (if k>5), 7, 8, 10", 3},
      {5, 0, 3, 3, 2, 2, "3, 4, 5 (if k>5), 6, 8, 10", 3},
      {5, 0, 3, 3, 3, 0, "1, 4, 5 (if k>5), 8, 10", 3},
      {5, 0, 4, 4, 1, 1, "3, 4, 5 (if k>5), 6, 8, 10", 3},
      {5, 0, 4, 4, 2, 0, "1, 4, 5 (if k>5), 8, 10", 3},
      {5, 0, 5, 0, 1, 0, "1, 4, 5 (if k>5), 8, 10", 3},
  };
}

const ProofTableRow& proof_table_row(AdernFamily family, int n, int m, int k) {
  static const std::vector<ProofTableRow> two = proof_table(AdernFamily::TwoPaths);
  static const std::vector<ProofTableRow> many = proof_table(AdernFamily::ManyPaths);
  const std::vector<ProofTableRow>& rows = (family == AdernFamily::TwoPaths) ? two : many;
  const int min_m = (family == AdernFamily::TwoPaths) ? 2 : 3;
  const int max_m = (family == AdernFamily::TwoPaths) ? 2 : 0;
  if (n < 1 || k < 3 || m < min_m || (max_m != 0 && m > max_m)) {
    throw UnsupportedError("parameters outside the table's family");
  }
  for (const ProofTableRow& row : rows) {
    if (row.matches(n, m, k)) return row;
  }
  throw UnsupportedError("parameters outside the table's family");
}

}  // namespace broomrec
