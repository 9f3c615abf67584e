#include "filtralab/ideal.hpp"

#include <algorithm>
#include <sstream>

#include "filtralab/errors.hpp"

namespace filtralab {

namespace {

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!a.ring()->same_as(*b.ring()))
    throw input_error("ideals live in different ambient rings");
}

// Minimize a generating set: sort by degree so earlier elements can only
// divide later ones, drop multiples, then restore lex order.
std::vector<ExponentVector> minimize(std::vector<ExponentVector> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const ExponentVector& a, const ExponentVector& b) {
              long long da = total_degree(a), db = total_degree(b);
              return da != db ? da < db : a < b;
            });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<ExponentVector> out;
  out.reserve(gens.size());
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

std::vector<ExponentVector> canonicalize(std::vector<ExponentVector> gens,
                                         const AmbientRing& ring) {
  auto mins = minimize(std::move(gens));
  std::vector<ExponentVector> out;
  out.reserve(mins.size());
  for (auto& g : mins)
    if (!ring.in_quotient(g)) out.push_back(std::move(g));
  return out;
}

} // namespace

MonomialIdeal minimal_generators(std::vector<ExponentVector> gens,
                                 RingPtr ring) {
  const int v = ring->variable_count();
  for (const auto& g : gens) {
    if (static_cast<int>(g.size()) != v)
      throw input_error("generator length does not match the ring");
    for (int e : g)
      if (e < 0) throw input_error("negative exponent in generator");
  }
  auto canon = canonicalize(std::move(gens), *ring);
  return MonomialIdeal(std::move(ring), std::move(canon));
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) {
  return MonomialIdeal(std::move(ring), {});
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  ExponentVector one(ring->variable_count(), 0);
  return MonomialIdeal(std::move(ring), {std::move(one)});
}

bool MonomialIdeal::is_unit() const {
  return gens_.size() == 1 && total_degree(gens_[0]) == 0;
}

bool MonomialIdeal::contains(const ExponentVector& a) const {
  if (static_cast<int>(a.size()) != ring_->variable_count())
    throw input_error("exponent vector length does not match the ring");
  for (const auto& g : gens_)
    if (divides(g, a)) return true;
  return ring_->in_quotient(a);
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(*this, other);
  for (const auto& g : other.gens_)
    if (!contains(g)) return false;
  return true;
}

std::string MonomialIdeal::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << ring_->monomial_string(gens_[i]);
  }
  os << "]";
  return os.str();
}

MonomialIdeal add(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimal_generators(std::move(gens), a.ring());
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(sum(g, h));
  return minimal_generators(std::move(gens), a.ring());
}

MonomialIdeal power(const MonomialIdeal& a, int n) {
  if (n < 0) throw input_error("power: exponent must be nonnegative");
  MonomialIdeal r = MonomialIdeal::unit(a.ring());
  for (int i = 0; i < n; ++i) r = multiply(r, a);
  return r;
}

MonomialIdeal colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  if (b.is_zero()) throw domain_error("colon by the zero ideal");
  // (I : J) = intersection over generators g of J of (I+q : g); quotient
  // generators never constrain since q stays inside I+q.
  std::vector<ExponentVector> lifted = a.generators();
  for (const auto& g : a.ring()->quotient_generators()) lifted.push_back(g);
  bool first = true;
  MonomialIdeal result = MonomialIdeal::unit(a.ring());
  for (const auto& g : b.generators()) {
    std::vector<ExponentVector> shifted;
    shifted.reserve(lifted.size());
    for (const auto& h : lifted) shifted.push_back(colon_shift(h, g));
    MonomialIdeal part = minimal_generators(std::move(shifted), a.ring());
    result = first ? part : intersect(result, part);
    first = false;
  }
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<ExponentVector> gens;
  gens.reserve(a.generators().size() * b.generators().size());
  for (const auto& g : a.generators())
    for (const auto& h : b.generators()) gens.push_back(join(g, h));
  return minimal_generators(std::move(gens), a.ring());
}

bool is_m_primary(const MonomialIdeal& a) {
  const auto& ring = *a.ring();
  for (int i = 0; i < ring.variable_count(); ++i) {
    if (ring.variable_nilpotent(i)) continue;
    if (!pure_power_exponent(a, i).has_value()) return false;
  }
  return true;
}

std::optional<int> pure_power_exponent(const MonomialIdeal& a, int axis) {
  std::optional<int> best;
  auto consider = [&](const ExponentVector& g) {
    for (size_t i = 0; i < g.size(); ++i)
      if (g[i] > 0 && static_cast<int>(i) != axis) return;
    int e = g[axis];
    if (!best || e < *best) best = e;
  };
  for (const auto& g : a.generators()) consider(g);
  for (const auto& g : a.ring()->quotient_generators()) consider(g);
  return best;
}

namespace {

// Count standard monomials inside the box by depth-first descent with two
// prunings: a generator already fully satisfied kills the whole subtree, an
// empty candidate list makes the whole subtree standard.
struct BoxCounter {
  const std::vector<ExponentVector>* gens;
  std::vector<int> bounds;
  int v;

  unsigned long long count() {
    std::vector<const ExponentVector*> active;
    active.reserve(gens->size());
    for (const auto& g : *gens) active.push_back(&g);
    std::vector<int> point(v, 0);
    return descend(0, active, point);
  }

  unsigned long long subtree_size(int depth) const {
    unsigned long long s = 1;
    for (int i = depth; i < v; ++i) s *= static_cast<unsigned>(bounds[i]);
    return s;
  }

  unsigned long long descend(int depth,
                             const std::vector<const ExponentVector*>& active,
                             std::vector<int>& point) {
    if (active.empty()) return subtree_size(depth);
    if (depth == v) return 0; // some generator divides the point
    unsigned long long total = 0;
    std::vector<const ExponentVector*> next;
    next.reserve(active.size());
    for (int e = 0; e < bounds[depth]; ++e) {
      point[depth] = e;
      next.clear();
      bool divided = false;
      for (const auto* g : active) {
        if ((*g)[depth] <= e) {
          bool rest_zero = true;
          for (int i = depth + 1; i < v; ++i)
            if ((*g)[i] > 0) {
              rest_zero = false;
              break;
            }
          if (rest_zero) {
            divided = true;
            break;
          }
          next.push_back(g);
        }
      }
      if (divided) continue;
      total += descend(depth + 1, next, point);
    }
    return total;
  }
};

} // namespace

Int colength(const MonomialIdeal& a) {
  const auto& ring = *a.ring();
  const int v = ring.variable_count();
  std::vector<int> bounds(v);
  for (int i = 0; i < v; ++i) {
    auto b = pure_power_exponent(a, i);
    if (!b) throw domain_error("infinite colength: ideal is not m-primary");
    bounds[i] = *b;
  }
  unsigned long long box = 1;
  for (int b : bounds) {
    box *= static_cast<unsigned long long>(b);
    if (box > 200'000'000ull)
      throw unsupported_error("colength box too large");
  }
  if (box == 0) return 0;
  std::vector<ExponentVector> gens = a.generators();
  for (const auto& g : ring.quotient_generators()) gens.push_back(g);
  BoxCounter counter{&gens, bounds, v};
  return Int(counter.count());
}

} // namespace filtralab
