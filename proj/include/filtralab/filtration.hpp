#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "filtralab/ideal.hpp"

namespace filtralab {

using MultiIndex = std::vector<int>;

MultiIndex clamp_nonnegative(MultiIndex n);

struct RRConfig {
  int k_max = 32;          // overridable via FILTRALAB_KMAX / --kmax
  int stable_window = 2;   // consecutive equalities required to stop
};

enum class FiltrationKind { adic, normal, ratliff_rush, product, axis };

// Declarative multi-graded filtration with a memoizing evaluator. Values
// are immutable; the memo table takes a lock around lookups and insertions
// so concurrent workers can share one instance.
//
//   adic:          F(n) = I_1^{n_1} ... I_s^{n_s}
//   normal:        F(n) = integral closure of I_1^{n_1} ... I_s^{n_s}
//   ratliff_rush:  F(n) = breve G(n) for the wrapped filtration G
//   product:       F(n) = G_1(n_1) ... G_s(n_s), each axis univariate
//   axis:          F(n) = G(n * e_i), the univariate restriction of G
class Filtration {
 public:
  static Filtration adic(std::vector<MonomialIdeal> base, RRConfig cfg = {});
  static Filtration normal(std::vector<MonomialIdeal> base, RRConfig cfg = {});
  static Filtration ratliff_rush_closure(Filtration inner);
  static Filtration product(std::vector<Filtration> axes);
  static Filtration axis_restriction(Filtration inner, int axis);

  int arity() const { return arity_; }
  const RingPtr& ring() const { return ring_; }
  FiltrationKind kind() const { return kind_; }
  // Plain power filtration: one adic axis, or the adic kind with s = 1.
  bool is_adic_univariate() const;
  const std::vector<MonomialIdeal>& base_ideals() const { return base_; }
  const RRConfig& rr_config() const { return rr_; }

  // F(1)...: the s base ideals as evaluated at the unit multi-indices.
  MonomialIdeal piece(const MultiIndex& n) const;
  MonomialIdeal piece(int n) const; // univariate convenience

  // lambda(R / F(n)), memoized alongside the pieces.
  Int hilbert_value(const MultiIndex& n) const;
  Int hilbert_value(int n) const;

 private:
  Filtration() = default;
  MonomialIdeal evaluate(const MultiIndex& clamped) const;
  void require_m_primary_base() const;

  FiltrationKind kind_ = FiltrationKind::adic;
  RingPtr ring_;
  int arity_ = 1;
  std::vector<MonomialIdeal> base_;
  std::vector<Filtration> axes_;
  std::shared_ptr<Filtration> inner_;
  int axis_ = 0;
  RRConfig rr_;

  struct Memo {
    std::mutex mu;
    std::map<MultiIndex, MonomialIdeal> pieces;
    std::map<MultiIndex, Int> lengths;
    bool base_checked = false;
  };
  std::shared_ptr<Memo> memo_;
};

// breve F(n) = union over k of (F(n + k e) : F(e)^k), computed as the
// increasing colon chain stopped after rr.stable_window consecutive
// equalities. Throws unstable_error past rr.k_max.
MonomialIdeal ratliff_rush_piece(const Filtration& F, const MultiIndex& n,
                                 const RRConfig& rr = {});

// Ratliff-Rush closure of a single ideal: breve of its adic filtration at 1.
MonomialIdeal ratliff_rush(const MonomialIdeal& I, const RRConfig& rr = {});

} // namespace filtralab
