#pragma once

#include <optional>
#include <string>
#include <vector>

#include "filtralab/ints.hpp"
#include "filtralab/ring.hpp"

namespace filtralab {

// Monomial ideal held in canonical form: pairwise non-dividing generators,
// sorted lexicographically, with generators lying in the quotient ideal
// dropped. Equality of canonical forms is equality of ideals. The zero
// ideal has no generators; the unit ideal is generated by the constant
// monomial.
class MonomialIdeal {
 public:
  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal unit(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<ExponentVector>& generators() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;

  bool contains(const ExponentVector& a) const;
  bool contains(const MonomialIdeal& other) const;

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) {
    return !(a == b);
  }

 private:
  MonomialIdeal(RingPtr ring, std::vector<ExponentVector> canonical_gens)
      : ring_(std::move(ring)), gens_(std::move(canonical_gens)) {}
  friend MonomialIdeal minimal_generators(std::vector<ExponentVector>,
                                          RingPtr);

  RingPtr ring_;
  std::vector<ExponentVector> gens_;
};

// Canonicalize an arbitrary generating set.
MonomialIdeal minimal_generators(std::vector<ExponentVector> gens,
                                 RingPtr ring);

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int n);
MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

inline bool equals(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a == b;
}
inline bool contains_ideal(const MonomialIdeal& a, const MonomialIdeal& b) {
  return a.contains(b);
}
inline bool contains_monomial(const MonomialIdeal& a,
                              const ExponentVector& m) {
  return a.contains(m);
}

bool is_m_primary(const MonomialIdeal& a);

// Smallest e with x_i^e in I (counting the quotient); nullopt when no pure
// power of x_i lies in the ideal.
std::optional<int> pure_power_exponent(const MonomialIdeal& a, int axis);

// Length of R/I by lattice enumeration over the pure-power box. Throws
// domain_error ("infinite colength") when the ideal is not m-primary.
Int colength(const MonomialIdeal& a);

} // namespace filtralab
