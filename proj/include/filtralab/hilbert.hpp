#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "filtralab/filtration.hpp"
#include "filtralab/ints.hpp"

namespace filtralab {

struct FitOptions {
  int margin = 4;    // verification points past the interpolation grid
  int max_base = 64; // how far the grid base may advance before giving up
};

// Hilbert function table plus the exactly fitted polynomial.
//
// Univariate (arity 1), coefficients e_0..e_d in the binomial basis
//   P(n) = sum_i (-1)^i e_i C(n + d - 1 - i, d - i).
// Multi-graded (arity s >= 2), coefficients e_alpha, |alpha| <= d, in
//   P(n) = sum_alpha (-1)^(d-|alpha|) e_alpha prod_i C(n_i + alpha_i - 1, alpha_i).
struct HilbertSummary {
  int dimension = 0;
  int arity = 1;
  std::vector<Int> e;                                // univariate
  std::vector<std::pair<MultiIndex, Int>> e_alpha;   // multi, lex by alpha
  std::map<MultiIndex, Int> function_table;
  MultiIndex fit_base;
  int margin = 0;
  std::vector<MultiIndex> verification_points;
  std::optional<long long> postulation;  // univariate; unset when P == H on Z
  bool cohen_macaulay_known = false;

  Int evaluate(const MultiIndex& n) const; // P(n), integral on Z^s
  Int evaluate(long long n) const;         // univariate convenience
};

Int hilbert_function(const Filtration& F, const MultiIndex& n);

HilbertSummary fit_polynomial(const Filtration& F, FitOptions opts = {});
HilbertSummary fit_polynomial_multi(const Filtration& F, FitOptions opts = {});
// Dispatch on arity.
HilbertSummary fit(const Filtration& F, FitOptions opts = {});

// Largest n with P(n) != H(n); computed during the univariate fit.
long long postulation_number(const HilbertSummary& summary);

// chi(n) = P(n) - H(n) over a window: [lo, hi] univariate, [0, hi]^s multi.
struct DefectTable {
  std::vector<std::pair<MultiIndex, Int>> rows;
};
DefectTable defect_table(const Filtration& F, const HilbertSummary& summary,
                         long long lo, long long hi);

// Dimension-2 local cohomology lengths: h1 = lambda(breve F(n)/F(n)),
// h2 = chi(n) + h1. The n = -1 entry (univariate) is the identity value
// e_1 + e_2, derived rather than measured.
struct CohomologyTable {
  struct Row {
    MultiIndex n;
    Int h1;
    Int h2;
  };
  std::vector<Row> rows;
  std::optional<Int> h2_minus_one;
};
CohomologyTable cohomology_table_dim2(const Filtration& F,
                                      const HilbertSummary& summary,
                                      long long window);

// lambda((breve F(n+e_i) cap F(n)) / F(n+e_i)) over a window.
struct GTorsionTable {
  int axis = 0;
  std::vector<std::pair<MultiIndex, Int>> rows;
};
GTorsionTable g_torsion_table(const Filtration& F, int axis,
                              long long window);

// Exact solve of an (over)determined rational system; nullopt when the
// system is inconsistent or the columns are dependent.
std::optional<std::vector<Rat>> solve_exact(
    std::vector<std::vector<Rat>> matrix, std::vector<Rat> rhs);

// The alphas indexing the multi-graded coefficient table, lex order.
std::vector<MultiIndex> coefficient_multi_indices(int dimension, int arity);

} // namespace filtralab
