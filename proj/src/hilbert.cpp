#include "filtralab/hilbert.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "filtralab/errors.hpp"

namespace filtralab {

namespace {

Rat univariate_basis(long long n, int d, int i) {
  Rat sign = (i % 2 == 0) ? 1 : -1;
  return sign * Rat(binomial(n + d - 1 - i, d - i));
}

Rat multi_basis(const MultiIndex& n, int d, const MultiIndex& alpha) {
  long long deg = total_degree(alpha);
  Rat value = ((d - deg) % 2 == 0) ? 1 : -1;
  for (size_t i = 0; i < alpha.size(); ++i)
    value *= Rat(binomial(n[i] + alpha[i] - 1, alpha[i]));
  return value;
}

} // namespace

Int HilbertSummary::evaluate(const MultiIndex& n) const {
  Rat acc = 0;
  if (arity == 1) {
    for (int i = 0; i <= dimension; ++i)
      acc += Rat(e[i]) * univariate_basis(n.at(0), dimension, i);
  } else {
    for (const auto& [alpha, c] : e_alpha)
      acc += Rat(c) * multi_basis(n, dimension, alpha);
  }
  return numerator_if_integer(acc);
}

Int HilbertSummary::evaluate(long long n) const {
  return evaluate(MultiIndex{static_cast<int>(n)});
}

Int hilbert_function(const Filtration& F, const MultiIndex& n) {
  return F.hilbert_value(n);
}

std::optional<std::vector<Rat>> solve_exact(
    std::vector<std::vector<Rat>> matrix, std::vector<Rat> rhs) {
  const size_t rows = matrix.size();
  const size_t cols = rows ? matrix[0].size() : 0;
  std::vector<size_t> pivot_col;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && matrix[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(matrix[p], matrix[r]);
    std::swap(rhs[p], rhs[r]);
    const Rat inv = Rat(1) / matrix[r][c];
    for (size_t j = c; j < cols; ++j) matrix[r][j] *= inv;
    rhs[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rat f = matrix[i][c];
      if (f == 0) continue;
      for (size_t j = c; j < cols; ++j) matrix[i][j] -= f * matrix[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (pivot_col.size() < cols) return std::nullopt; // rank-deficient
  for (size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt; // inconsistent
  std::vector<Rat> x(cols, Rat(0));
  for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

std::vector<MultiIndex> coefficient_multi_indices(int dimension, int arity) {
  std::vector<MultiIndex> all;
  MultiIndex cur(arity, 0);
  // Enumerate alpha with |alpha| <= dimension in lex order.
  while (true) {
    if (total_degree(cur) <= dimension) all.push_back(cur);
    int i = arity - 1;
    while (i >= 0 && cur[i] == dimension) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(all.begin(), all.end());
  return all;
}

namespace {

Int clamped_h(const Filtration& F, const MultiIndex& n) {
  return F.hilbert_value(clamp_nonnegative(n));
}

// Largest n where the fitted polynomial misses the Hilbert function,
// scanning downward from the verified region. For n <= 0 the function
// vanishes, and a nonzero polynomial has at most d integer roots, so the
// scan is complete by -(d+2) unless P is identically H on Z.
std::optional<long long> scan_postulation(const Filtration& F,
                                          const HilbertSummary& s,
                                          long long top) {
  const int d = s.dimension;
  for (long long n = top; n >= -(d + 2); --n) {
    Int h = n >= 1 ? F.hilbert_value(static_cast<int>(n)) : Int(0);
    if (s.evaluate(n) != h) return n;
  }
  bool zero = std::all_of(s.e.begin(), s.e.end(),
                          [](const Int& c) { return c == 0; });
  if (zero) return std::nullopt; // P == H == 0 on all of Z
  std::ostringstream os;
  os << "postulation scan exhausted below -(d+2)";
  throw fit_error(os.str());
}

} // namespace

HilbertSummary fit_polynomial(const Filtration& F, FitOptions opts) {
  if (F.arity() != 1)
    throw input_error("fit_polynomial expects a univariate filtration");
  const int d = F.ring()->dimension();
  HilbertSummary s;
  s.dimension = d;
  s.arity = 1;
  s.margin = opts.margin;
  s.cohen_macaulay_known = F.ring()->cohen_macaulay_known();

  for (int base = 1; base <= opts.max_base; ++base) {
    std::vector<std::vector<Rat>> m(d + 1, std::vector<Rat>(d + 1));
    std::vector<Rat> rhs(d + 1);
    for (int j = 0; j <= d; ++j) {
      long long n = base + j;
      for (int i = 0; i <= d; ++i) m[j][i] = univariate_basis(n, d, i);
      rhs[j] = Rat(F.hilbert_value(static_cast<int>(n)));
    }
    auto coeffs = solve_exact(std::move(m), std::move(rhs));
    if (!coeffs) continue;
    bool verified = true;
    std::vector<MultiIndex> vpoints;
    for (int j = 1; j <= opts.margin; ++j) {
      long long n = base + d + j;
      Rat p = 0;
      for (int i = 0; i <= d; ++i)
        p += (*coeffs)[i] * univariate_basis(n, d, i);
      vpoints.push_back({static_cast<int>(n)});
      if (p != Rat(F.hilbert_value(static_cast<int>(n)))) {
        verified = false;
        break;
      }
    }
    if (!verified) continue;
    for (const Rat& c : *coeffs)
      if (!is_integer(c))
        throw fit_error("verified fit has a non-integer coefficient");
    s.e.reserve(d + 1);
    for (const Rat& c : *coeffs) s.e.push_back(numerator_if_integer(c));
    if (d >= 1 && s.e[0] <= 0)
      throw fit_error("fitted multiplicity e_0 is not positive");
    s.fit_base = {base};
    s.verification_points = std::move(vpoints);
    for (long long n = 0; n <= base + d + opts.margin; ++n)
      s.function_table[{static_cast<int>(n)}] =
          F.hilbert_value(static_cast<int>(n));
    s.postulation = scan_postulation(F, s, base + d + opts.margin);
    return s;
  }
  throw fit_error("no stable univariate fit within the base advance bound");
}

HilbertSummary fit_polynomial_multi(const Filtration& F, FitOptions opts) {
  const int arity = F.arity();
  if (arity < 2)
    throw input_error("fit_polynomial_multi expects arity >= 2");
  const int d = F.ring()->dimension();
  const auto alphas = coefficient_multi_indices(d, arity);

  HilbertSummary s;
  s.dimension = d;
  s.arity = arity;
  s.margin = opts.margin;
  s.cohen_macaulay_known = F.ring()->cohen_macaulay_known();

  // Grid offsets [0..d]^s; (d+1)^s points against C(d+s, s) unknowns.
  std::vector<MultiIndex> offsets;
  {
    MultiIndex cur(arity, 0);
    while (true) {
      offsets.push_back(cur);
      int i = arity - 1;
      while (i >= 0 && cur[i] == d) {
        cur[i] = 0;
        --i;
      }
      if (i < 0) break;
      ++cur[i];
    }
  }

  for (int base = 1; base <= opts.max_base; ++base) {
    std::vector<std::vector<Rat>> m;
    std::vector<Rat> rhs;
    std::vector<MultiIndex> grid;
    for (const auto& off : offsets) {
      MultiIndex n(arity);
      for (int i = 0; i < arity; ++i) n[i] = base + off[i];
      std::vector<Rat> row(alphas.size());
      for (size_t a = 0; a < alphas.size(); ++a)
        row[a] = multi_basis(n, d, alphas[a]);
      m.push_back(std::move(row));
      rhs.push_back(Rat(F.hilbert_value(n)));
      grid.push_back(std::move(n));
    }
    auto coeffs = solve_exact(std::move(m), std::move(rhs));
    if (!coeffs) continue;

    // Shifted verification grid: the diagonal past the grid and each axis
    // pushed past it separately.
    std::vector<MultiIndex> vpoints;
    for (int j = 1; j <= opts.margin; ++j)
      vpoints.push_back(MultiIndex(arity, base + d + j));
    for (int axis = 0; axis < arity; ++axis)
      for (int j = 1; j <= opts.margin; ++j) {
        MultiIndex n(arity, base + d);
        n[axis] = base + d + j;
        vpoints.push_back(std::move(n));
      }
    std::sort(vpoints.begin(), vpoints.end());
    vpoints.erase(std::unique(vpoints.begin(), vpoints.end()), vpoints.end());

    bool verified = true;
    for (const auto& n : vpoints) {
      Rat p = 0;
      for (size_t a = 0; a < alphas.size(); ++a)
        p += (*coeffs)[a] * multi_basis(n, d, alphas[a]);
      if (p != Rat(F.hilbert_value(n))) {
        verified = false;
        break;
      }
    }
    if (!verified) continue;
    for (const Rat& c : *coeffs)
      if (!is_integer(c))
        throw fit_error("verified fit has a non-integer coefficient");
    for (size_t a = 0; a < alphas.size(); ++a)
      s.e_alpha.emplace_back(alphas[a], numerator_if_integer((*coeffs)[a]));
    s.fit_base = MultiIndex(arity, base);
    s.verification_points = vpoints;
    for (const auto& n : grid) s.function_table[n] = F.hilbert_value(n);
    for (const auto& n : vpoints) s.function_table[n] = F.hilbert_value(n);
    return s;
  }
  throw fit_error("no stable multi-graded fit within the base advance bound");
}

HilbertSummary fit(const Filtration& F, FitOptions opts) {
  return F.arity() == 1 ? fit_polynomial(F, opts)
                        : fit_polynomial_multi(F, opts);
}

long long postulation_number(const HilbertSummary& summary) {
  if (summary.arity != 1)
    throw input_error("postulation number is univariate only");
  // Minus-infinity sentinel: P coincides with H on all of Z.
  if (!summary.postulation) return std::numeric_limits<long long>::min();
  return *summary.postulation;
}

DefectTable defect_table(const Filtration& F, const HilbertSummary& summary,
                         long long lo, long long hi) {
  DefectTable t;
  if (summary.arity == 1) {
    for (long long n = lo; n <= hi; ++n) {
      Int h = n >= 1 ? F.hilbert_value(static_cast<int>(n)) : Int(0);
      t.rows.emplace_back(MultiIndex{static_cast<int>(n)},
                          summary.evaluate(n) - h);
    }
    return t;
  }
  MultiIndex cur(summary.arity, static_cast<int>(lo));
  while (true) {
    t.rows.emplace_back(cur, summary.evaluate(cur) - clamped_h(F, cur));
    int i = summary.arity - 1;
    while (i >= 0 && cur[i] == hi) {
      cur[i] = static_cast<int>(lo);
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(t.rows.begin(), t.rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return t;
}

CohomologyTable cohomology_table_dim2(const Filtration& F,
                                      const HilbertSummary& summary,
                                      long long window) {
  if (F.ring()->dimension() != 2)
    throw unsupported_error("cohomology table requires dimension 2");
  if (!F.ring()->cohen_macaulay_known())
    throw unsupported_error(
        "cohomology table requires a Cohen-Macaulay ambient (assert cm)");
  Filtration breve = Filtration::ratliff_rush_closure(F);
  CohomologyTable t;
  const int s = F.arity();
  MultiIndex cur(s, 0);
  while (true) {
    Int h = clamped_h(F, cur);
    Int h1 = h - breve.hilbert_value(cur);
    Int chi = summary.evaluate(cur) - h;
    t.rows.push_back({cur, h1, chi + h1});
    int i = s - 1;
    while (i >= 0 && cur[i] == window) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(t.rows.begin(), t.rows.end(),
            [](const auto& a, const auto& b) { return a.n < b.n; });
  if (s == 1) {
    // h^2 at -1 equals e_1 + e_2; identity-derived, not measured.
    t.h2_minus_one = summary.e.at(1) + summary.e.at(2);
  }
  return t;
}

GTorsionTable g_torsion_table(const Filtration& F, int axis,
                              long long window) {
  if (axis < 0 || axis >= F.arity())
    throw input_error("g_torsion_table: axis out of range");
  Filtration breve = Filtration::ratliff_rush_closure(F);
  GTorsionTable t;
  t.axis = axis;
  const int s = F.arity();
  MultiIndex cur(s, 0);
  while (true) {
    MultiIndex up = cur;
    ++up[axis];
    MonomialIdeal inter = intersect(breve.piece(up), F.piece(cur));
    t.rows.emplace_back(cur, F.hilbert_value(up) - colength(inter));
    int i = s - 1;
    while (i >= 0 && cur[i] == window) {
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
    ++cur[i];
  }
  std::sort(t.rows.begin(), t.rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return t;
}

} // namespace filtralab
