#pragma once

#include <memory>
#include <string>
#include <vector>

namespace filtralab {

// Exponent vector of a monomial; length equals the ambient variable count,
// all entries nonnegative.
using ExponentVector = std::vector<int>;

bool divides(const ExponentVector& a, const ExponentVector& b);
ExponentVector join(const ExponentVector& a, const ExponentVector& b);
ExponentVector sum(const ExponentVector& a, const ExponentVector& b);
// max(b - a, 0) componentwise: the exponent of (x^b : x^a).
ExponentVector colon_shift(const ExponentVector& b, const ExponentVector& a);
long long total_degree(const ExponentVector& a);

// Polynomial ring k[x_1..x_v], optionally modulo a monomial ideal q.
// The Krull dimension is the largest number of variables spanning a
// coordinate subspace not killed by q; it is fixed at construction.
// Cohen-Macaulayness of a proper quotient is user-asserted, never computed.
class AmbientRing {
 public:
  explicit AmbientRing(std::vector<std::string> variables,
                       std::vector<ExponentVector> quotient_generators = {},
                       bool asserted_cohen_macaulay = false);

  int variable_count() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<ExponentVector>& quotient_generators() const {
    return quotient_;
  }
  bool is_polynomial() const { return quotient_.empty(); }
  bool asserted_cohen_macaulay() const { return asserted_cm_; }
  // True when CM holds by construction (polynomial ring) or by assertion.
  bool cohen_macaulay_known() const { return is_polynomial() || asserted_cm_; }
  int dimension() const { return dimension_; }
  bool variable_nilpotent(int i) const { return nilpotent_[i]; }
  bool in_quotient(const ExponentVector& a) const;

  std::string monomial_string(const ExponentVector& a) const;
  bool same_as(const AmbientRing& other) const;

 private:
  std::vector<std::string> variables_;
  std::vector<ExponentVector> quotient_;
  bool asserted_cm_ = false;
  int dimension_ = 0;
  std::vector<bool> nilpotent_;
};

using RingPtr = std::shared_ptr<const AmbientRing>;

RingPtr make_ring(std::vector<std::string> variables,
                  std::vector<ExponentVector> quotient_generators = {},
                  bool asserted_cohen_macaulay = false);

inline int krull_dim(const AmbientRing& ring) { return ring.dimension(); }

} // namespace filtralab
