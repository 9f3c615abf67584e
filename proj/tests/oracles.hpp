#pragma once

// Brute-force reference implementations used to pin expected values. These
// deliberately take the dumbest correct route (definition-level membership
// over an explicit lattice box) and stay independent of the library's
// minimization / colon / LP code paths.

#include <set>
#include <vector>

#include "filtralab/filtration.hpp"
#include "filtralab/ideal.hpp"
#include "filtralab/newton.hpp"

namespace oracle {

using filtralab::ExponentVector;
using filtralab::Int;
using filtralab::MonomialIdeal;

using PointSet = std::set<ExponentVector>;

// Inclusive pure-power box [0, b_1] x ... x [0, b_v] of an m-primary ideal.
inline std::vector<int> box_of(const MonomialIdeal& I) {
  std::vector<int> b;
  for (int i = 0; i < I.ring()->variable_count(); ++i) {
    auto e = filtralab::pure_power_exponent(I, i);
    b.push_back(e ? *e : 0);
  }
  return b;
}

inline unsigned long long box_cells(const std::vector<int>& box) {
  unsigned long long n = 1;
  for (int b : box) n *= static_cast<unsigned long long>(b + 1);
  return n;
}

template <typename Fn>
void for_each_point(const std::vector<int>& box, Fn&& fn) {
  ExponentVector a(box.size(), 0);
  while (true) {
    fn(a);
    size_t i = box.size();
    while (i > 0 && a[i - 1] == box[i - 1]) a[--i] = 0;
    if (i == 0) return;
    ++a[i - 1];
  }
}

// Definition-level membership: some generator (or quotient generator)
// divides the point.
inline bool member(const MonomialIdeal& I, const ExponentVector& a) {
  for (const auto& g : I.generators())
    if (filtralab::divides(g, a)) return true;
  for (const auto& g : I.ring()->quotient_generators())
    if (filtralab::divides(g, a)) return true;
  return false;
}

inline PointSet members_in_box(const MonomialIdeal& I,
                               const std::vector<int>& box) {
  PointSet s;
  for_each_point(box, [&](const ExponentVector& a) {
    if (member(I, a)) s.insert(a);
  });
  return s;
}

// a in I+J iff a in I or a in J.
inline bool member_sum(const MonomialIdeal& I, const MonomialIdeal& J,
                       const ExponentVector& a) {
  return member(I, a) || member(J, a);
}

// a in I*J iff a splits as b + c with b in I and c in J.
inline bool member_product(const MonomialIdeal& I, const MonomialIdeal& J,
                           const ExponentVector& a) {
  ExponentVector b(a.size(), 0);
  while (true) {
    if (member(I, b)) {
      ExponentVector c(a.size());
      for (size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
      if (member(J, c)) return true;
    }
    size_t i = a.size();
    while (i > 0 && b[i - 1] == a[i - 1]) b[--i] = 0;
    if (i == 0) return false;
    ++b[i - 1];
  }
}

// a in (I : J) iff a + h in I for every generator h of J.
inline bool member_colon(const MonomialIdeal& I, const MonomialIdeal& J,
                         const ExponentVector& a) {
  for (const auto& h : J.generators())
    if (!member(I, filtralab::sum(a, h))) return false;
  return true;
}

// Flat-loop colength over the exclusive standard box; no pruning.
inline Int colength(const MonomialIdeal& I) {
  std::vector<int> box = box_of(I);
  for (int& b : box) --b; // standard monomials live strictly below
  unsigned long long count = 0;
  bool empty = false;
  for (int b : box)
    if (b < 0) empty = true;
  if (!empty)
    for_each_point(box, [&](const ExponentVector& a) {
      if (!member(I, a)) ++count;
    });
  return Int(count);
}

// Hilbert function of the adic filtration by brute products; powers are
// generator k-fold sums without minimization.
inline MonomialIdeal brute_power(const MonomialIdeal& I, int n) {
  std::vector<ExponentVector> gens{ExponentVector(
      static_cast<size_t>(I.ring()->variable_count()), 0)};
  for (int k = 0; k < n; ++k) {
    std::vector<ExponentVector> next;
    for (const auto& a : gens)
      for (const auto& g : I.generators())
        next.push_back(filtralab::sum(a, g));
    gens = std::move(next);
  }
  return filtralab::minimal_generators(gens, I.ring());
}

// Ratliff-Rush member set: z with z * I^k inside I^{k+1} for some k <= 10.
inline PointSet ratliff_rush_box(const MonomialIdeal& I, int kmax = 10) {
  PointSet result;
  std::vector<MonomialIdeal> powers;
  for (int k = 0; k <= kmax + 1; ++k)
    powers.push_back(filtralab::power(I, k));
  for_each_point(box_of(I), [&](const ExponentVector& z) {
    for (int k = 0; k <= kmax; ++k) {
      bool ok = true;
      for (const auto& w : powers[k].generators())
        if (!member(powers[k + 1], filtralab::sum(z, w))) {
          ok = false;
          break;
        }
      if (ok) {
        result.insert(z);
        return;
      }
    }
  });
  return result;
}

// Power-membership route to the integral closure: (x^a)^k in I^k for some
// k <= kmax.
inline bool integral_member(const MonomialIdeal& I, const ExponentVector& a,
                            int kmax = 6) {
  for (int k = 1; k <= kmax; ++k) {
    ExponentVector ka(a.size());
    for (size_t i = 0; i < a.size(); ++i) ka[i] = k * a[i];
    if (member(filtralab::power(I, k), ka)) return true;
  }
  return false;
}

} // namespace oracle
