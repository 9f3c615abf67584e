#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "filtralab/hilbert.hpp"
#include "filtralab/reduction.hpp"

namespace filtralab {

enum class Verdict { verified, violated, conditional, inapplicable };

std::string to_string(Verdict v);

// Structured pass/fail/conditional outcome of one theorem checker with the
// intermediate quantities needed to replay it by hand.
struct TheoremReport {
  std::string theorem;
  Verdict verdict = Verdict::inapplicable;
  std::vector<std::string> hypotheses_checked;
  std::vector<std::string> hypotheses_assumed;
  std::vector<std::pair<std::string, std::string>> quantities;
  std::vector<std::string> trail;
  std::vector<std::pair<std::string, ReductionReport>> candidates;
};

struct CheckOptions {
  long long window = 8;
  FitOptions fit;
  RRConfig rr;
};

// e_1 >= e_0 - lambda(R/F(1)) >= 0 in a CM ring.
TheoremReport check_northcott(const Filtration& F, CheckOptions opts = {});

// e_0 - e_1 = lambda(R/F(1))  <=>  r(F) <= 1, with the consequence block
// e_2 = ... = e_d = 0, n(F) <= 0, F(n) = F(1)^n.
TheoremReport check_huneke_ooishi(const Filtration& F,
                                  const std::vector<MonomialIdeal>& candidates,
                                  const std::vector<std::string>& names,
                                  CheckOptions opts = {});

// r_J(F) = n(F) + d for a minimal reduction J, and the associated-graded
// level statement: H_R != P_R exactly at r_J - d.
TheoremReport check_sally_postulation(const Filtration& F,
                                      const MonomialIdeal& J,
                                      const std::string& j_name,
                                      CheckOptions opts = {});

// Strict positivity of the coefficients at |alpha| = d, nonnegativity at
// |alpha| in {d-1, d-2}; univariate e_1, e_2 >= 0 with e_3 informational.
TheoremReport check_nonnegativity(const Filtration& F, CheckOptions opts = {});

// Dimension-2 identities: h2_0 = e_2, h2_1 = e_0 - e_1 + e_2 -
// lambda(R/breve F(1)), h2_{-1} = e_1 + e_2 (derived), h2 nonincreasing.
TheoremReport check_dim2_cohomology_identities(const Filtration& F,
                                               CheckOptions opts = {});

// Equivalences around e_2(I) = 0 in dimension 2: the e_1 - e_0 +
// lambda(R/breve I) = 0 identity, (breve I)^2 = Q breve I, breve(I^{n+1}) =
// Q^n breve I on a window, and e_2 = 0.
TheoremReport check_itoh_e2(const MonomialIdeal& I,
                            const std::vector<MonomialIdeal>& q_candidates,
                            const std::vector<std::string>& names,
                            CheckOptions opts = {});

// Multi-graded analogue: per axis i, e_{(d-1)e_i}(F) >= e_1(F^(i)),
// e(I_i) - e_{(d-1)e_i}(F) <= lambda(R/F(e_i)), equality iff r(F^(i)) <= 1
// and the coefficients agree.
TheoremReport check_multigraded_ho(const Filtration& F,
                                   const std::vector<MonomialIdeal>& candidates,
                                   const std::vector<std::string>& names,
                                   CheckOptions opts = {});

// In dimension 2: e_0(F) = 0 implies e(I_i) - e_{e_i}(F) =
// lambda(R/breve F(e_i)) per axis; converse under assumed admissibility of
// breve F.
TheoremReport check_e2_zero_multi(const Filtration& F, CheckOptions opts = {});

// Nonnegativity of the third normal Hilbert coefficient in dimension 3.
TheoremReport check_normal_e3(const MonomialIdeal& I, CheckOptions opts = {});

} // namespace filtralab
