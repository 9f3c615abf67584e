#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <limits>
#include <random>

#include "filtralab/errors.hpp"
#include "filtralab/hilbert.hpp"
#include "oracles.hpp"

using namespace filtralab;

namespace {

RingPtr kxy() { return make_ring({"x", "y"}); }
RingPtr kxyz() { return make_ring({"x", "y", "z"}); }

MonomialIdeal ideal(RingPtr r, std::vector<ExponentVector> gens) {
  return minimal_generators(std::move(gens), std::move(r));
}

MonomialIdeal marley_ideal(RingPtr r) {
  return ideal(r, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {2, 1, 0}, {1, 2, 0},
                   {0, 1, 2}, {1, 1, 1}});
}

std::vector<Int> evec(std::initializer_list<long long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

} // namespace

TEST_CASE("hilbert function values") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  auto F = Filtration::adic({m});
  CHECK(hilbert_function(F, {3}) == 6);
  CHECK(hilbert_function(F, {0}) == 0);
  auto M = Filtration::adic({m, m});
  CHECK(hilbert_function(M, {1, 1}) == 3);

  auto R3 = kxyz();
  auto FM = Filtration::adic({marley_ideal(R3)});
  CHECK(hilbert_function(FM, {1}) == 14);
}

TEST_CASE("univariate fits reproduce the known coefficient vectors") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  CHECK(fit_polynomial(Filtration::adic({m})).e == evec({1, 0, 0}));
  CHECK(fit_polynomial(Filtration::adic({power(m, 2)})).e == evec({4, 1, 0}));
  CHECK(fit_polynomial(Filtration::normal({ideal(R, {{3, 0}, {0, 3}})})).e ==
        evec({9, 3, 0}));

  auto R3 = kxyz();
  auto sm = fit_polynomial(Filtration::adic({marley_ideal(R3)}));
  CHECK(sm.e == evec({27, 18, 4, -1}));
  CHECK(fit_polynomial(Filtration::normal(
            {ideal(R3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})})).e ==
        evec({8, 4, 0, 0}));
  // oracle-pinned: lattice-volume fit of the normal filtration of
  // (x^3,y^3,z^3) is (27, 18, 1, 0)
  CHECK(fit_polynomial(Filtration::normal(
            {ideal(R3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}})})).e ==
        evec({27, 18, 1, 0}));
}

TEST_CASE("fit rejects non-m-primary bases and multi filtrations") {
  auto R = kxy();
  CHECK_THROWS_AS(fit_polynomial(Filtration::adic({ideal(R, {{1, 0}})})),
                  domain_error);
  auto m = ideal(R, {{1, 0}, {0, 1}});
  CHECK_THROWS_AS(fit_polynomial(Filtration::adic({m, m})), input_error);
  CHECK_THROWS_AS(fit_polynomial_multi(Filtration::adic({m})), input_error);
  CHECK_THROWS_AS(
      fit_polynomial_multi(Filtration::adic({m, ideal(R, {{1, 0}})})),
      domain_error);
}

TEST_CASE("fit verification margin holds well past the grid") {
  auto R3 = kxyz();
  std::vector<Filtration> filts = {
      Filtration::adic({marley_ideal(R3)}),
      Filtration::normal({ideal(R3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})})};
  for (const auto& F : filts) {
    auto s = fit_polynomial(F);
    const int d = s.dimension;
    long long grid_end = s.fit_base[0] + d + s.margin;
    for (long long n = grid_end + 1; n <= grid_end + 2 * (d + 1); ++n)
      CHECK(s.evaluate(n) == F.hilbert_value(static_cast<int>(n)));
  }
}

TEST_CASE("postulation numbers") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  CHECK(postulation_number(fit_polynomial(Filtration::adic({m}))) == -2);
  CHECK(postulation_number(fit_polynomial(Filtration::adic({power(m, 2)}))) ==
        -1);
  auto R3 = kxyz();
  CHECK(postulation_number(fit_polynomial(
            Filtration::adic({marley_ideal(R3)}))) == 0);
  CHECK(postulation_number(fit_polynomial(Filtration::normal(
            {ideal(R, {{3, 0}, {0, 3}})}))) == -1);
}

TEST_CASE("defect tables vanish past the postulation number") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  auto F = Filtration::adic({m});
  auto s = fit_polynomial(F);
  auto t = defect_table(F, s, 0, 5);
  for (const auto& [n, chi] : t.rows) CHECK(chi == 0);

  auto R3 = kxyz();
  auto FM = Filtration::adic({marley_ideal(R3)});
  auto sM = fit_polynomial(FM);
  auto tM = defect_table(FM, sM, 0, 6);
  CHECK(tM.rows[0].second == 1); // chi(0) = P(0) - 0 = 1
  for (const auto& [n, chi] : tM.rows)
    if (n[0] > *sM.postulation) CHECK(chi == 0);

  auto N = Filtration::normal({ideal(R, {{3, 0}, {0, 3}})});
  auto sN = fit_polynomial(N);
  for (const auto& [n, chi] : defect_table(N, sN, 0, 4).rows) CHECK(chi == 0);
}

TEST_CASE("multi-graded fits and defects") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  auto F = Filtration::adic({m, m});
  auto s = fit_polynomial_multi(F);
  auto at = [&](int a, int b) {
    for (const auto& [alpha, c] : s.e_alpha)
      if (alpha == MultiIndex{a, b}) return c;
    return Int(-999);
  };
  CHECK(at(2, 0) == 1);
  CHECK(at(1, 1) == 1);
  CHECK(at(0, 2) == 1);
  CHECK(at(1, 0) == 0);
  CHECK(at(0, 1) == 0);
  CHECK(at(0, 0) == 0);
  for (const auto& [n, chi] : defect_table(F, s, 0, 4).rows) CHECK(chi == 0);
}

TEST_CASE("top coefficients agree between adic and normal filtrations") {
  // integral closure preserves mixed multiplicities (|alpha| = d)
  auto R = kxy();
  auto I = ideal(R, {{3, 0}, {0, 3}});
  auto J = ideal(R, {{2, 0}, {1, 1}, {0, 2}});
  auto sa = fit_polynomial_multi(Filtration::adic({I, J}));
  auto sn = fit_polynomial_multi(Filtration::normal({I, J}));
  for (const auto& [alpha, c] : sa.e_alpha)
    if (total_degree(alpha) == 2) {
      for (const auto& [beta, cn] : sn.e_alpha)
        if (beta == alpha) CHECK(c == cn);
    }
}

TEST_CASE("dimension-2 cohomology table") {
  auto R = kxy();
  auto gap = ideal(R, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
  auto F = Filtration::adic({gap});
  auto s = fit_polynomial(F);
  CHECK(s.e == evec({16, 6, 0}));
  auto t = cohomology_table_dim2(F, s, 5);
  CHECK(t.rows[1].h1 == 1); // lambda(tilde I / I) = 1, the monomial x^2 y^2
  CHECK(t.rows[0].h1 == 0);
  CHECK(t.rows[0].h2 == 0); // h2_0 = e_2 = 0
  CHECK(*t.h2_minus_one == 6); // e_1 + e_2
  for (size_t i = 0; i + 1 < t.rows.size(); ++i)
    CHECK(t.rows[i + 1].h2 <= t.rows[i].h2);
  for (const auto& row : t.rows) {
    CHECK(row.h1 >= 0);
    CHECK(row.h2 >= 0);
  }

  // where breve F = F and chi = 0 the row is (0, 0)
  auto m = ideal(R, {{1, 0}, {0, 1}});
  auto Fm = Filtration::adic({m});
  auto tm = cohomology_table_dim2(Fm, fit_polynomial(Fm), 4);
  for (const auto& row : tm.rows) {
    CHECK(row.h1 == 0);
    CHECK(row.h2 == 0);
  }
  CHECK_THROWS_AS(
      cohomology_table_dim2(Filtration::adic({ideal(kxyz(), {{1, 0, 0},
                                                             {0, 1, 0},
                                                             {0, 0, 1}})}),
                            fit_polynomial(Filtration::adic(
                                {ideal(kxyz(), {{1, 0, 0}, {0, 1, 0},
                                                {0, 0, 1}})})),
                            3),
      unsupported_error);
}

TEST_CASE("g-torsion table") {
  auto R = kxy();
  auto gap = ideal(R, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
  auto F = Filtration::adic({gap});
  auto t = g_torsion_table(F, 0, 4);
  CHECK(t.rows[0].second == 1); // (tilde I cap R) / I has length 1
  // far past stabilization the torsion vanishes
  CHECK(t.rows.back().second == 0);

  auto m2 = ideal(R, {{2, 0}, {1, 1}, {0, 2}});
  auto Fm2 = Filtration::adic({m2});
  for (const auto& [n, v] : g_torsion_table(Fm2, 0, 4).rows) CHECK(v == 0);
}

TEST_CASE("binomial-basis round trip on random coefficient vectors") {
  std::mt19937 rng(55555);
  std::uniform_int_distribution<int> coef(-9, 9);
  std::uniform_int_distribution<int> dim(1, 3);
  int trials = 0;
  // univariate: evaluate P from a random e-vector on a grid, re-solve, compare
  while (trials < 60) {
    int d = dim(rng);
    std::vector<Int> e(d + 1);
    for (auto& c : e) c = coef(rng);
    HilbertSummary s;
    s.dimension = d;
    s.arity = 1;
    s.e = e;
    std::vector<std::vector<Rat>> m;
    std::vector<Rat> rhs;
    for (int j = 0; j <= d; ++j) {
      long long n = 2 + j;
      std::vector<Rat> row;
      for (int i = 0; i <= d; ++i) {
        Rat sign = (i % 2 == 0) ? 1 : -1;
        row.push_back(sign * Rat(binomial(n + d - 1 - i, d - i)));
      }
      m.push_back(row);
      rhs.push_back(Rat(s.evaluate(n)));
    }
    auto sol = solve_exact(m, rhs);
    REQUIRE(sol.has_value());
    for (int i = 0; i <= d; ++i) CHECK(numerator_if_integer((*sol)[i]) == e[i]);
    ++trials;
  }
  // multi-graded: same round trip through the Teissier basis
  while (trials < 100) {
    int d = 2, arity = 2;
    auto alphas = coefficient_multi_indices(d, arity);
    HilbertSummary s;
    s.dimension = d;
    s.arity = arity;
    for (const auto& a : alphas) s.e_alpha.emplace_back(a, Int(coef(rng)));
    std::vector<std::vector<Rat>> m;
    std::vector<Rat> rhs;
    for (int x = 0; x <= d; ++x)
      for (int y = 0; y <= d; ++y) {
        MultiIndex n{2 + x, 2 + y};
        std::vector<Rat> row;
        for (const auto& a : alphas) {
          Rat sign = ((d - total_degree(a)) % 2 == 0) ? 1 : -1;
          row.push_back(sign * Rat(binomial(n[0] + a[0] - 1, a[0])) *
                        Rat(binomial(n[1] + a[1] - 1, a[1])));
        }
        m.push_back(row);
        rhs.push_back(Rat(s.evaluate(n)));
      }
    auto sol = solve_exact(m, rhs);
    REQUIRE(sol.has_value());
    for (size_t i = 0; i < alphas.size(); ++i)
      CHECK(numerator_if_integer((*sol)[i]) == s.e_alpha[i].second);
    ++trials;
  }
}

TEST_CASE("generalized binomials at negative arguments") {
  CHECK(binomial(-1, 2) == 1);
  CHECK(binomial(-2, 3) == -4);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(4, 2) == 6);
  // P(-2) = C(-1,2) = 1 for the maximal ideal of k[x,y]
  auto R = kxy();
  auto s = fit_polynomial(Filtration::adic({ideal(R, {{1, 0}, {0, 1}})}));
  CHECK(s.evaluate(static_cast<long long>(-2)) == 1);
  CHECK(s.evaluate(static_cast<long long>(-1)) == 0);
}

TEST_CASE("function tables are nondecreasing in each coordinate") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  auto s = fit_polynomial_multi(Filtration::adic({m, power(m, 2)}));
  for (const auto& [n, h] : s.function_table)
    for (size_t i = 0; i < n.size(); ++i) {
      MultiIndex prev = n;
      if (prev[i] == 0) continue;
      --prev[i];
      auto it = s.function_table.find(prev);
      if (it != s.function_table.end()) CHECK(it->second <= h);
    }
}

TEST_CASE("postulation sentinel for an identically-polynomial function") {
  HilbertSummary s;
  s.arity = 1;
  s.dimension = 1;
  s.e = {Int(0), Int(0)};
  CHECK(postulation_number(s) == std::numeric_limits<long long>::min());
}
