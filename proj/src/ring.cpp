#include "filtralab/ring.hpp"

#include <algorithm>
#include <sstream>

#include "filtralab/errors.hpp"

namespace filtralab {

bool divides(const ExponentVector& a, const ExponentVector& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

ExponentVector join(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

ExponentVector sum(const ExponentVector& a, const ExponentVector& b) {
  ExponentVector r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

ExponentVector colon_shift(const ExponentVector& b, const ExponentVector& a) {
  ExponentVector r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = std::max(b[i] - a[i], 0);
  return r;
}

long long total_degree(const ExponentVector& a) {
  long long d = 0;
  for (int e : a) d += e;
  return d;
}

namespace {

// Drop quotient generators divisible by others; validates shape.
std::vector<ExponentVector> minimize_set(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              long long da = total_degree(a), db = total_degree(b);
              return da != db ? da < db : a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> out;
  for (const auto& g : gens) {
    bool redundant = false;
    for (const auto& h : out)
      if (divides(h, g)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(g);
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

AmbientRing::AmbientRing(std::vector<std::string> variables,
                         std::vector<ExponentVector> quotient_generators,
                         bool asserted_cohen_macaulay)
    : variables_(std::move(variables)), asserted_cm_(asserted_cohen_macaulay) {
  if (variables_.empty())
    throw input_error("ring needs at least one variable");
  {
    auto sorted = variables_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw input_error("duplicate variable name in ring");
  }
  const int v = variable_count();
  for (const auto& g : quotient_generators) {
    if (static_cast<int>(g.size()) != v)
      throw input_error("quotient generator length does not match the ring");
    for (int e : g)
      if (e < 0) throw input_error("negative exponent in quotient generator");
  }
  quotient_ = minimize_set(std::move(quotient_generators));
  // The unit ideal is not a valid quotient.
  for (const auto& g : quotient_)
    if (total_degree(g) == 0)
      throw input_error("quotient ideal must be proper");

  nilpotent_.assign(v, false);
  for (const auto& g : quotient_) {
    int support = -1;
    bool pure = true;
    for (int i = 0; i < v; ++i)
      if (g[i] > 0) {
        if (support >= 0) pure = false;
        support = i;
      }
    if (pure && support >= 0) nilpotent_[support] = true;
  }

  if (quotient_.empty()) {
    dimension_ = v;
    return;
  }
  if (v > 24) throw unsupported_error("too many variables for a quotient ring");
  // d = max |A| over variable subsets A touching no full quotient-generator
  // support.
  int best = 0;
  for (unsigned mask = 0; mask < (1u << v); ++mask) {
    bool ok = true;
    for (const auto& g : quotient_) {
      bool inside = true;
      for (int i = 0; i < v && inside; ++i)
        if (g[i] > 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  dimension_ = best;
}

bool AmbientRing::in_quotient(const ExponentVector& a) const {
  for (const auto& g : quotient_)
    if (divides(g, a)) return true;
  return false;
}

std::string AmbientRing::monomial_string(const ExponentVector& a) const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < variable_count(); ++i) {
    if (a[i] == 0) continue;
    if (!first) os << "*";
    os << variables_[i];
    if (a[i] > 1) os << "^" << a[i];
    first = false;
  }
  if (first) os << "1";
  return os.str();
}

bool AmbientRing::same_as(const AmbientRing& other) const {
  return variables_ == other.variables_ && quotient_ == other.quotient_ &&
         asserted_cm_ == other.asserted_cm_;
}

RingPtr make_ring(std::vector<std::string> variables,
                  std::vector<ExponentVector> quotient_generators,
                  bool asserted_cohen_macaulay) {
  return std::make_shared<AmbientRing>(std::move(variables),
                                       std::move(quotient_generators),
                                       asserted_cohen_macaulay);
}

} // namespace filtralab
