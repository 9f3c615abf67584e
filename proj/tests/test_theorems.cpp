#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "filtralab/theorems.hpp"

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

bool has_line(const TheoremReport& r, const std::string& needle) {
  for (const auto& l : r.trail)
    if (l.find(needle) != std::string::npos) return true;
  return false;
}

} // namespace

TEST_CASE("reduction reports") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  auto m2 = power(m, 2);
  auto F = Filtration::adic({m2});

  auto rep = is_reduction(ideal(R, {{2, 0}, {0, 2}}), F);
  CHECK(rep.is_reduction);
  CHECK(*rep.r == 1);
  CHECK(rep.adic_certificate);
  CHECK(rep.parameter_sized);

  auto self = is_reduction(m2, F);
  CHECK(*self.r == 0);
  CHECK_FALSE(self.parameter_sized); // three generators in dimension 2

  auto bad = is_reduction(ideal(R, {{1, 0}, {0, 3}}), F);
  CHECK_FALSE(bad.precondition_ok); // x is not inside F(1) = m^2

  // windowed certificate on a normal filtration
  auto I33 = ideal(R, {{3, 0}, {0, 3}});
  auto N = Filtration::normal({I33});
  auto wn = is_reduction(I33, N);
  CHECK(wn.is_reduction);
  CHECK(*wn.r == 1);
  CHECK_FALSE(wn.adic_certificate);
}

TEST_CASE("northcott on the standard instances") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  CHECK(check_northcott(Filtration::adic({m})).verdict == Verdict::verified);
  CHECK(check_northcott(Filtration::adic({power(m, 2)})).verdict ==
        Verdict::verified);
  auto R3 = kxyz();
  auto r = check_northcott(Filtration::adic({marley_ideal(R3)}));
  CHECK(r.verdict == Verdict::verified);
}

TEST_CASE("huneke-ooishi positive, contrapositive and conditional") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  auto m2 = power(m, 2);
  auto J = ideal(R, {{2, 0}, {0, 2}});
  CHECK(check_huneke_ooishi(Filtration::adic({m2}), {J}, {"J"}).verdict ==
        Verdict::verified);
  CHECK(check_huneke_ooishi(Filtration::adic({m}), {m}, {"m"}).verdict ==
        Verdict::verified);

  auto R3 = kxyz();
  auto P = ideal(R3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  auto contra =
      check_huneke_ooishi(Filtration::adic({marley_ideal(R3)}), {P}, {"P"});
  CHECK(contra.verdict == Verdict::verified);
  CHECK(has_line(contra, "contrapositive"));

  // equality holds but no eligible candidate: the line-pair quotient has no
  // principal monomial reduction
  auto L = make_ring({"x", "y"}, {{1, 1}}, true);
  auto mL = minimal_generators({{1, 0}, {0, 1}}, L);
  auto cond = check_huneke_ooishi(Filtration::adic({mL}), {mL}, {"m"});
  CHECK(cond.verdict == Verdict::conditional);
}

TEST_CASE("sally postulation identity") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  CHECK(check_sally_postulation(Filtration::adic({m}), m, "m").verdict ==
        Verdict::verified);
  auto m2 = power(m, 2);
  auto J = ideal(R, {{2, 0}, {0, 2}});
  CHECK(check_sally_postulation(Filtration::adic({m2}), J, "J").verdict ==
        Verdict::verified);
  auto I33 = ideal(R, {{3, 0}, {0, 3}});
  CHECK(check_sally_postulation(Filtration::normal({I33}), I33, "I").verdict ==
        Verdict::verified);

  // Marley's ideal violates the grade hypothesis (e_3 < 0), so the identity
  // fails softly: conditional, never violated
  auto R3 = kxyz();
  auto P = ideal(R3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}});
  auto r = check_sally_postulation(Filtration::adic({marley_ideal(R3)}), P,
                                   "P");
  CHECK(r.verdict == Verdict::conditional);
  CHECK(has_line(r, "FAIL"));
}

TEST_CASE("nonnegativity univariate and multigraded") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  CHECK(check_nonnegativity(Filtration::adic({m, m})).verdict ==
        Verdict::verified);
  auto R3 = kxyz();
  auto marl = check_nonnegativity(Filtration::adic({marley_ideal(R3)}));
  CHECK(marl.verdict == Verdict::verified);
  CHECK(has_line(marl, "e_3 = -1"));

  auto Q = make_ring({"x1", "x2", "x3", "x4"}, {{0, 0, 0, 3}}, true);
  auto In = minimal_generators(
      {{1, 0, 0, 0}, {0, 2, 0, 0}, {0, 0, 2, 0}, {0, 1, 0, 1}, {0, 0, 1, 1}},
      Q);
  auto narita = check_nonnegativity(Filtration::adic({In}));
  CHECK(narita.verdict == Verdict::conditional); // CM only asserted
  CHECK(has_line(narita, "e_3 = -1"));
}

TEST_CASE("dimension-2 cohomology identities") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  CHECK(check_dim2_cohomology_identities(Filtration::adic({m})).verdict ==
        Verdict::verified);
  auto gap = ideal(R, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
  CHECK(check_dim2_cohomology_identities(Filtration::adic({gap})).verdict ==
        Verdict::verified);
  CHECK(check_dim2_cohomology_identities(
            Filtration::normal({ideal(R, {{3, 0}, {0, 3}})})).verdict ==
        Verdict::verified);
  auto R3 = kxyz();
  CHECK(check_dim2_cohomology_identities(
            Filtration::adic({marley_ideal(R3)})).verdict ==
        Verdict::inapplicable);
}

TEST_CASE("itoh e2 equivalences in both directions") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  auto m2 = power(m, 2);
  CHECK(check_itoh_e2(m2, {ideal(R, {{2, 0}, {0, 2}})}, {"Q"}).verdict ==
        Verdict::verified);
  CHECK(check_itoh_e2(m, {m}, {"m"}).verdict == Verdict::verified);

  // gap ideal: e_2 = 0 and all equivalences hold positively
  auto gap = ideal(R, {{4, 0}, {3, 1}, {1, 3}, {0, 4}});
  CHECK(check_itoh_e2(gap, {ideal(R, {{4, 0}, {0, 4}})}, {"Q"}).verdict ==
        Verdict::verified);

  // e_2 = 1 != 0: the equivalences must all fail together
  auto pos = ideal(R, {{3, 0}, {1, 2}, {0, 3}});
  auto neg = check_itoh_e2(pos, {ideal(R, {{3, 0}, {0, 3}})}, {"Q"});
  CHECK(neg.verdict == Verdict::verified);
  CHECK(has_line(neg, "(4) e_2 = 0: fails"));

  // no eligible candidate: only (1) <=> (4) checkable
  CHECK(check_itoh_e2(pos, {}, {}).verdict == Verdict::conditional);
}

TEST_CASE("multigraded huneke-ooishi") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  CHECK(check_multigraded_ho(Filtration::adic({m, m}), {m}, {"m"}).verdict ==
        Verdict::verified);
  auto m2 = power(m, 2);
  auto J = ideal(R, {{2, 0}, {0, 2}});
  CHECK(check_multigraded_ho(Filtration::adic({m2, m2}), {J}, {"J"}).verdict ==
        Verdict::verified);
  auto mixed = Filtration::product(
      {Filtration::normal({ideal(R, {{2, 0}, {0, 2}})}), Filtration::adic({m})});
  auto r = check_multigraded_ho(mixed, {ideal(R, {{2, 0}, {0, 2}}), m},
                                {"Q", "m"});
  CHECK(r.verdict == Verdict::verified);
}

TEST_CASE("e2 zero multigraded and its vacuous branch") {
  auto R = kxy();
  auto m = ideal(R, {{1, 0}, {0, 1}});
  CHECK(check_e2_zero_multi(Filtration::adic({m, m})).verdict ==
        Verdict::verified);
  auto I33 = ideal(R, {{3, 0}, {0, 3}});
  CHECK(check_e2_zero_multi(Filtration::normal({I33, I33})).verdict ==
        Verdict::verified);
  // e_2 != 0: forward implication vacuous
  auto pos = ideal(R, {{3, 0}, {1, 2}, {0, 3}});
  CHECK(check_e2_zero_multi(Filtration::adic({pos})).verdict ==
        Verdict::inapplicable);
}

TEST_CASE("normal e3 nonnegativity") {
  auto R3 = kxyz();
  CHECK(check_normal_e3(ideal(R3, {{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})).verdict ==
        Verdict::verified);
  CHECK(check_normal_e3(ideal(R3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})).verdict ==
        Verdict::verified);
  CHECK(check_normal_e3(ideal(R3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}})).verdict ==
        Verdict::verified);
  auto R = kxy();
  CHECK(check_normal_e3(ideal(R, {{1, 0}, {0, 1}})).verdict ==
        Verdict::inapplicable);
}

TEST_CASE("adic reduction certificate re-verifies subsequent indices") {
  auto R = kxy();
  auto m2 = ideal(R, {{2, 0}, {1, 1}, {0, 2}});
  auto rep = is_reduction(ideal(R, {{2, 0}, {0, 2}}), Filtration::adic({m2}));
  int reverified = 0;
  for (const auto& l : rep.trail)
    if (l.find("re-verified") != std::string::npos) ++reverified;
  CHECK(reverified == 3);
}
