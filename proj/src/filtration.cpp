#include "filtralab/filtration.hpp"

#include <algorithm>
#include <sstream>

#include "filtralab/errors.hpp"
#include "filtralab/newton.hpp"

namespace filtralab {

MultiIndex clamp_nonnegative(MultiIndex n) {
  for (int& c : n) c = std::max(c, 0);
  return n;
}

Filtration Filtration::adic(std::vector<MonomialIdeal> base, RRConfig cfg) {
  if (base.empty()) throw input_error("adic filtration needs base ideals");
  for (size_t i = 1; i < base.size(); ++i)
    if (!base[i].ring()->same_as(*base[0].ring()))
      throw input_error("base ideals live in different rings");
  Filtration f;
  f.kind_ = FiltrationKind::adic;
  f.ring_ = base[0].ring();
  f.arity_ = static_cast<int>(base.size());
  f.base_ = std::move(base);
  f.rr_ = cfg;
  f.memo_ = std::make_shared<Memo>();
  return f;
}

Filtration Filtration::normal(std::vector<MonomialIdeal> base, RRConfig cfg) {
  Filtration f = adic(std::move(base), cfg);
  f.kind_ = FiltrationKind::normal;
  return f;
}

Filtration Filtration::ratliff_rush_closure(Filtration inner) {
  Filtration f;
  f.kind_ = FiltrationKind::ratliff_rush;
  f.ring_ = inner.ring();
  f.arity_ = inner.arity();
  f.base_ = inner.base_ideals();
  f.rr_ = inner.rr_config();
  f.inner_ = std::make_shared<Filtration>(std::move(inner));
  f.memo_ = std::make_shared<Memo>();
  return f;
}

Filtration Filtration::product(std::vector<Filtration> axes) {
  if (axes.empty()) throw input_error("product filtration needs axes");
  for (const auto& ax : axes) {
    if (ax.arity() != 1)
      throw input_error("product filtration axes must be univariate");
    if (!ax.ring()->same_as(*axes[0].ring()))
      throw input_error("product filtration axes live in different rings");
  }
  Filtration f;
  f.kind_ = FiltrationKind::product;
  f.ring_ = axes[0].ring();
  f.arity_ = static_cast<int>(axes.size());
  for (const auto& ax : axes)
    f.base_.push_back(ax.base_ideals().at(0));
  f.rr_ = axes[0].rr_config();
  f.axes_ = std::move(axes);
  f.memo_ = std::make_shared<Memo>();
  return f;
}

Filtration Filtration::axis_restriction(Filtration inner, int axis) {
  if (axis < 0 || axis >= inner.arity())
    throw input_error("axis_restriction: axis out of range");
  Filtration f;
  f.kind_ = FiltrationKind::axis;
  f.ring_ = inner.ring();
  f.arity_ = 1;
  f.base_ = {inner.base_ideals().at(axis)};
  f.rr_ = inner.rr_config();
  f.axis_ = axis;
  f.inner_ = std::make_shared<Filtration>(std::move(inner));
  f.memo_ = std::make_shared<Memo>();
  return f;
}

bool Filtration::is_adic_univariate() const {
  if (kind_ == FiltrationKind::adic && arity_ == 1) return true;
  if (kind_ == FiltrationKind::axis &&
      inner_->kind() == FiltrationKind::adic)
    return true;
  return false;
}

void Filtration::require_m_primary_base() const {
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    if (memo_->base_checked) return;
  }
  for (const auto& I : base_)
    if (!is_m_primary(I))
      throw domain_error("filtration base ideal is not m-primary: " +
                         I.to_string());
  std::lock_guard<std::mutex> lock(memo_->mu);
  memo_->base_checked = true;
}

MonomialIdeal Filtration::piece(const MultiIndex& n) const {
  if (static_cast<int>(n.size()) != arity_)
    throw input_error("multi-index length does not match filtration arity");
  MultiIndex key = clamp_nonnegative(n);
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->pieces.find(key);
    if (it != memo_->pieces.end()) return it->second;
  }
  MonomialIdeal value = evaluate(key);
  std::lock_guard<std::mutex> lock(memo_->mu);
  return memo_->pieces.emplace(std::move(key), std::move(value))
      .first->second;
}

MonomialIdeal Filtration::piece(int n) const { return piece(MultiIndex{n}); }

MonomialIdeal Filtration::evaluate(const MultiIndex& n) const {
  require_m_primary_base();
  switch (kind_) {
    case FiltrationKind::adic: {
      MonomialIdeal r = MonomialIdeal::unit(ring_);
      for (int j = 0; j < arity_; ++j) r = multiply(r, power(base_[j], n[j]));
      return r;
    }
    case FiltrationKind::normal:
      return integral_closure_product(base_, n);
    case FiltrationKind::ratliff_rush:
      return ratliff_rush_piece(*inner_, n, rr_);
    case FiltrationKind::product: {
      MonomialIdeal r = MonomialIdeal::unit(ring_);
      for (int j = 0; j < arity_; ++j)
        r = multiply(r, axes_[j].piece(MultiIndex{n[j]}));
      return r;
    }
    case FiltrationKind::axis: {
      MultiIndex full(inner_->arity(), 0);
      full[axis_] = n[0];
      return inner_->piece(full);
    }
  }
  throw input_error("unreachable filtration kind");
}

Int Filtration::hilbert_value(const MultiIndex& n) const {
  MultiIndex key = clamp_nonnegative(n);
  if (static_cast<int>(key.size()) != arity_)
    throw input_error("multi-index length does not match filtration arity");
  {
    std::lock_guard<std::mutex> lock(memo_->mu);
    auto it = memo_->lengths.find(key);
    if (it != memo_->lengths.end()) return it->second;
  }
  Int value = colength(piece(key));
  std::lock_guard<std::mutex> lock(memo_->mu);
  return memo_->lengths.emplace(std::move(key), std::move(value))
      .first->second;
}

Int Filtration::hilbert_value(int n) const {
  return hilbert_value(MultiIndex{n});
}

MonomialIdeal ratliff_rush_piece(const Filtration& F, const MultiIndex& n,
                                 const RRConfig& rr) {
  MultiIndex base = clamp_nonnegative(n);
  const MultiIndex ones(F.arity(), 1);
  const MonomialIdeal Fe = F.piece(ones);
  MonomialIdeal current = F.piece(base);
  MonomialIdeal Fek = MonomialIdeal::unit(F.ring());
  MultiIndex shifted = base;
  int equal_run = 0;
  std::vector<std::string> chain;
  for (int k = 1; k <= rr.k_max; ++k) {
    Fek = multiply(Fek, Fe);
    for (int j = 0; j < F.arity(); ++j) shifted[j] = base[j] + k;
    MonomialIdeal next = colon(F.piece(shifted), Fek);
    chain.push_back(next.to_string());
    if (k > 1 && next == current) {
      if (++equal_run >= rr.stable_window) return current;
    } else {
      equal_run = 0;
      current = std::move(next);
    }
  }
  std::ostringstream os;
  os << "Ratliff-Rush chain did not stabilize within k_max=" << rr.k_max
     << " at index (";
  for (size_t i = 0; i < base.size(); ++i)
    os << (i ? "," : "") << base[i];
  os << ")";
  throw unstable_error(os.str(), std::move(chain));
}

MonomialIdeal ratliff_rush(const MonomialIdeal& I, const RRConfig& rr) {
  return ratliff_rush_piece(Filtration::adic({I}, rr), MultiIndex{1}, rr);
}

} // namespace filtralab
