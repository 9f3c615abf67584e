#include "filtralab/newton.hpp"

#include <algorithm>

#include "filtralab/errors.hpp"

namespace filtralab {

namespace {

// Decides max{ sum nu : P nu <= a, nu >= 0 } >= 1 by the primal simplex
// with Bland's rule, exact rationals throughout. All right-hand sides are
// nonnegative, so the slack basis starts feasible and no phase 1 is needed.
// An unbounded objective counts as feasible.
bool simplex_reaches_one(const std::vector<ExponentVector>& points,
                         const ExponentVector& a) {
  const size_t m = points.size();
  const size_t v = a.size();
  // Tableau: v constraint rows, columns = m structural + v slacks + rhs.
  std::vector<std::vector<Rat>> t(v + 1, std::vector<Rat>(m + v + 1, Rat(0)));
  const size_t rhs = m + v;
  for (size_t j = 0; j < m; ++j) t[0][j] = Rat(-1);
  for (size_t i = 0; i < v; ++i) {
    for (size_t j = 0; j < m; ++j) t[i + 1][j] = Rat(points[j][i]);
    t[i + 1][m + i] = Rat(1);
    t[i + 1][rhs] = Rat(a[i]);
  }
  std::vector<size_t> basis(v);
  for (size_t i = 0; i < v; ++i) basis[i] = m + i;

  while (true) {
    if (t[0][rhs] >= 1) return true;
    size_t enter = m + v;
    for (size_t j = 0; j < m + v; ++j)
      if (t[0][j] < 0) {
        enter = j;
        break;
      }
    if (enter == m + v) return false; // optimal, objective below 1
    size_t leave = 0;
    bool found = false;
    Rat best;
    for (size_t i = 1; i <= v; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][rhs] / t[i][enter];
      if (!found || ratio < best ||
          (ratio == best && basis[i - 1] < basis[leave - 1])) {
        best = ratio;
        leave = i;
        found = true;
      }
    }
    if (!found) return true; // unbounded improvement
    const Rat pivot = t[leave][enter];
    for (size_t j = 0; j <= m + v; ++j) t[leave][j] /= pivot;
    for (size_t i = 0; i <= v; ++i) {
      if (i == leave) continue;
      const Rat c = t[i][enter];
      if (c == 0) continue;
      for (size_t j = 0; j <= m + v; ++j) t[i][j] -= c * t[leave][j];
    }
    basis[leave - 1] = enter;
  }
}

void require_polynomial_m_primary(const MonomialIdeal& I) {
  if (!I.ring()->is_polynomial())
    throw unsupported_error(
        "integral closure is only supported over a polynomial ambient");
  if (!is_m_primary(I))
    throw domain_error("Newton polyhedron needs an m-primary ideal");
}

// Scaled generator sumset {n_1 g_1 + ... + n_s g_s : g_j generator of I_j};
// its convex hull plus the orthant is n_1 NP(I_1) + ... + n_s NP(I_s).
std::vector<ExponentVector> scaled_sumset(
    const std::vector<const MonomialIdeal*>& ideals,
    const std::vector<int>& multipliers) {
  const int v = ideals[0]->ring()->variable_count();
  std::vector<ExponentVector> acc{ExponentVector(v, 0)};
  for (size_t j = 0; j < ideals.size(); ++j) {
    if (multipliers[j] == 0) continue;
    std::vector<ExponentVector> next;
    next.reserve(acc.size() * ideals[j]->generators().size());
    for (const auto& base : acc)
      for (const auto& g : ideals[j]->generators()) {
        ExponentVector p = base;
        for (int i = 0; i < v; ++i) p[i] += multipliers[j] * g[i];
        next.push_back(std::move(p));
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  acc.erase(std::unique(acc.begin(), acc.end()), acc.end());
  return acc;
}

} // namespace

bool newton_membership_sum(const ExponentVector& a,
                           const std::vector<const MonomialIdeal*>& ideals,
                           const std::vector<int>& multipliers) {
  if (ideals.empty() || ideals.size() != multipliers.size())
    throw input_error("newton_membership_sum: malformed arguments");
  for (size_t j = 0; j < ideals.size(); ++j) {
    require_polynomial_m_primary(*ideals[j]);
    if (multipliers[j] < 0)
      throw input_error("newton_membership_sum: negative multiplier");
  }
  if (static_cast<int>(a.size()) != ideals[0]->ring()->variable_count())
    throw input_error("exponent vector length does not match the ring");
  bool all_zero = true;
  for (int n : multipliers)
    if (n != 0) all_zero = false;
  if (all_zero) return true; // NP of the unit ideal is the whole orthant
  auto points = scaled_sumset(ideals, multipliers);
  for (const auto& p : points)
    if (total_degree(p) == 0) return true;
  for (const auto& p : points)
    if (divides(p, a)) return true; // cheap pre-check: a above a vertex
  return simplex_reaches_one(points, a);
}

bool newton_membership(const ExponentVector& a, const MonomialIdeal& I,
                       int n) {
  if (n <= 0) {
    if (n == 0) return true;
    throw input_error("newton_membership: n must be nonnegative");
  }
  return newton_membership_sum(a, {&I}, {n});
}

namespace {

// Box scan with the upward-monotonicity shortcut: a point whose predecessor
// along any axis is already in the polyhedron is in it too, so the LP only
// runs on the staircase boundary. Minimal generators are exactly the
// members with no member predecessor.
MonomialIdeal closure_from_box(const std::vector<const MonomialIdeal*>& ideals,
                               const std::vector<int>& multipliers) {
  const RingPtr& ring = ideals[0]->ring();
  const int v = ring->variable_count();
  std::vector<long long> bound(v, 0);
  for (size_t j = 0; j < ideals.size(); ++j) {
    if (multipliers[j] == 0) continue;
    for (int i = 0; i < v; ++i) {
      auto b = pure_power_exponent(*ideals[j], i);
      if (!b) throw domain_error("Newton polyhedron needs an m-primary ideal");
      bound[i] += static_cast<long long>(multipliers[j]) * *b;
    }
  }
  unsigned long long cells = 1;
  for (int i = 0; i < v; ++i) {
    cells *= static_cast<unsigned long long>(bound[i] + 1);
    if (cells > 50'000'000ull)
      throw unsupported_error("integral closure box too large");
  }
  std::vector<char> member(cells, 0);
  std::vector<long long> stride(v);
  long long s = 1;
  for (int i = v - 1; i >= 0; --i) {
    stride[i] = s;
    s *= bound[i] + 1;
  }
  std::vector<ExponentVector> gens;
  ExponentVector a(v, 0);
  for (unsigned long long idx = 0; idx < cells; ++idx) {
    {
      unsigned long long r = idx;
      for (int i = 0; i < v; ++i) {
        a[i] = static_cast<int>(r / stride[i]);
        r %= stride[i];
      }
    }
    bool from_below = false;
    for (int i = 0; i < v && !from_below; ++i)
      if (a[i] > 0 && member[idx - stride[i]]) from_below = true;
    bool in;
    if (from_below) {
      in = true;
    } else {
      in = newton_membership_sum(a, ideals, multipliers);
      if (in) gens.push_back(a);
    }
    member[idx] = in ? 1 : 0;
  }
  return minimal_generators(std::move(gens), ring);
}

} // namespace

MonomialIdeal integral_closure_power(const MonomialIdeal& I, int n) {
  require_polynomial_m_primary(I);
  if (n < 0) throw input_error("integral_closure_power: n must be nonnegative");
  if (n == 0) return MonomialIdeal::unit(I.ring());
  return closure_from_box({&I}, {n});
}

MonomialIdeal integral_closure_product(const std::vector<MonomialIdeal>& base,
                                       const std::vector<int>& multipliers) {
  if (base.empty() || base.size() != multipliers.size())
    throw input_error("integral_closure_product: malformed arguments");
  std::vector<const MonomialIdeal*> ptrs;
  bool all_zero = true;
  for (size_t j = 0; j < base.size(); ++j) {
    require_polynomial_m_primary(base[j]);
    ptrs.push_back(&base[j]);
    if (multipliers[j] < 0)
      throw input_error("integral_closure_product: negative multiplier");
    if (multipliers[j] != 0) all_zero = false;
  }
  if (all_zero) return MonomialIdeal::unit(base[0].ring());
  return closure_from_box(ptrs, multipliers);
}

} // namespace filtralab
