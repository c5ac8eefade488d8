#pragma once

// The outer Hopf algebra Λ in the Schur basis.

#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "charhopf/lr.hpp"
#include "charhopf/symfunc.hpp"
#include "charhopf/tensor.hpp"

namespace charhopf {

/// Outer (pointwise) product, bilinear in the LR coefficients.
inline SymFunc outer_product(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [lambda, a] : f.terms())
    for (const auto& [mu, b] : g.terms()) {
      const Integer ab = a * b;
      for (const auto& [nu, c] : lr_product(lambda, mu)) out.add(nu, ab * c);
    }
  return out;
}

inline SymFunc operator*(const SymFunc& f, const SymFunc& g) { return outer_product(f, g); }

/// Outer product keeping only weights ≤ max_degree. Terms are pruned
/// before expansion, which is exact because the product is graded.
inline SymFunc outer_product(const SymFunc& f, const SymFunc& g, int max_degree) {
  SymFunc out;
  for (const auto& [lambda, a] : f.terms()) {
    if (lambda.weight() > max_degree) break;
    for (const auto& [mu, b] : g.terms()) {
      if (lambda.weight() + mu.weight() > max_degree) break;
      const Integer ab = a * b;
      for (const auto& [nu, c] : lr_product(lambda, mu)) out.add(nu, ab * c);
    }
  }
  return out;
}

/// Skew of f by g: the adjoint of multiplication by g under the Schur-Hall
/// product, so s_μ / s_λ = Σ_α c^μ_{λα} s_α.
inline SymFunc skew(const SymFunc& f, const SymFunc& g) {
  SymFunc out;
  for (const auto& [mu, a] : f.terms())
    for (const auto& [lambda, b] : g.terms()) {
      if (lambda.weight() > mu.weight()) break;
      const Integer ab = a * b;
      for (const auto& [alpha, c] : lr_skew(mu, lambda)) out.add(alpha, ab * c);
    }
  return out;
}

inline SymFunc antipode(const SymFunc& f) {
  SymFunc out;
  for (const auto& [p, c] : f.terms()) out.add(conjugate(p), (p.weight() % 2) ? Integer(-c) : c);
  return out;
}

/// Coefficient of s_().
inline Integer counit(const SymFunc& f) { return f.coeff(Partition{}); }

/// Schur-Hall scalar product; the Schur basis is orthonormal.
inline Integer schur_hall(const SymFunc& f, const SymFunc& g) {
  Integer total = 0;
  const auto& small = f.size() <= g.size() ? f : g;
  const auto& large = f.size() <= g.size() ? g : f;
  for (const auto& [p, c] : small.terms()) {
    auto other = large.coeff(p);
    if (other != 0) total += c * other;
  }
  return total;
}

/// Δ(s_ν) = Σ c^ν_{λμ} s_λ ⊗ s_μ.
inline TensorSF coproduct(const SymFunc& f) {
  TensorSF out(2);
  for (const auto& [nu, a] : f.terms())
    for (int k = 0; k <= nu.weight(); ++k)
      for (const auto& lambda : partitions_of(k)) {
        if (!contains(nu, lambda)) continue;
        for (const auto& [mu, c] : lr_skew(nu, lambda)) out.add({lambda, mu}, a * c);
      }
  return out;
}

/// Δ(f) − f ⊗ 1 − 1 ⊗ f.
inline TensorSF cut_coproduct(const SymFunc& f) {
  TensorSF out = coproduct(f);
  for (const auto& [p, c] : f.terms()) {
    out.add({p, Partition{}}, -c);
    out.add({Partition{}, p}, -c);
  }
  return out;
}

/// The cut coproduct of s_π as a list of pairs, each repeated according to
/// its LR multiplicity, in slot-key order.
inline std::vector<std::pair<Partition, Partition>> cut_coproduct_pairs(const Partition& pi) {
  std::vector<std::pair<Partition, Partition>> pairs;
  const TensorSF cut = cut_coproduct(SymFunc::schur(pi));
  for (const auto& [key, c] : cut.terms()) {
    if (c < 0) throw std::logic_error("cut coproduct has a negative coefficient");
    for (Integer i = 0; i < c; ++i) pairs.emplace_back(key[0], key[1]);
  }
  return pairs;
}

/// Σ_{|λ| ≤ D} s_λ ⊗ s_λ.
inline TensorSF cauchy_kernel(int degree) {
  TensorSF out(2);
  for (const auto& p : partitions_up_to(degree)) out.add({p, p}, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Slotwise machinery on tensors.

/// Applies a linear map SymFunc -> SymFunc to one slot.
template <class Map>
TensorSF map_slot(const TensorSF& t, std::size_t slot, Map&& fn) {
  TensorSF out(t.orientation());
  for (const auto& [key, c] : t.terms()) {
    SymFunc image = fn(SymFunc::schur(key[slot]));
    SlotKey k = key;
    for (const auto& [p, d] : image.terms()) {
      k[slot] = p;
      out.add(k, c * d);
    }
  }
  return out;
}

/// (Id ⊗ S) Σ s_λ ⊗ s_λ = Σ (−1)^{|λ|} s_λ ⊗ s_{λ'}.
inline TensorSF cauchy_binet_kernel(int degree) {
  return map_slot(cauchy_kernel(degree), 1, [](const SymFunc& f) { return antipode(f); });
}

/// Antipode on one slot.
inline TensorSF antipode_slot(const TensorSF& t, std::size_t slot) {
  return map_slot(t, slot, [](const SymFunc& f) { return antipode(f); });
}

/// Multiplies one slot by g (primal action), keeping that slot ≤ max_degree.
inline TensorSF multiply_slot(const TensorSF& t, std::size_t slot, const SymFunc& g, int max_degree) {
  return map_slot(t, slot, [&](const SymFunc& f) { return outer_product(f, g, max_degree); });
}

/// Skews one slot by g (dual action).
inline TensorSF skew_slot(const TensorSF& t, std::size_t slot, const SymFunc& g) {
  return map_slot(t, slot, [&](const SymFunc& f) { return skew(f, g); });
}

/// Componentwise product (a1 ⊗ a2)·(b1 ⊗ b2) = a1 b1 ⊗ a2 b2, keeping every
/// slot ≤ max_degree (pass a negative bound for no truncation).
inline TensorSF componentwise_product(const TensorSF& a, const TensorSF& b, int max_degree = -1) {
  if (a.rank() != b.rank()) throw std::invalid_argument("componentwise_product: rank mismatch");
  const std::size_t rank = a.rank();
  TensorSF out(a.orientation());
  SlotKey key(rank);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      bool fits = true;
      for (std::size_t i = 0; i < rank && fits; ++i)
        fits = max_degree < 0 || ka[i].weight() + kb[i].weight() <= max_degree;
      if (!fits) continue;
      const Integer c0 = ca * cb;
      auto rec = [&](auto&& self, std::size_t slot, const Integer& c) -> void {
        if (slot == rank) {
          out.add(key, c);
          return;
        }
        for (const auto& [nu, k] : lr_product(ka[slot], kb[slot])) {
          key[slot] = nu;
          self(self, slot + 1, c * k);
        }
      };
      rec(rec, 0, c0);
    }
  return out;
}

/// Concatenation a ⊗ b of tensors (ranks add).
inline TensorSF tensor_product(const TensorSF& a, const TensorSF& b) {
  std::vector<Orientation> o = a.orientation();
  o.insert(o.end(), b.orientation().begin(), b.orientation().end());
  TensorSF out(o);
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) {
      SlotKey k = ka;
      k.insert(k.end(), kb.begin(), kb.end());
      out.add(k, ca * cb);
    }
  return out;
}

/// Multiplies every slot together: m(a1 ⊗ ... ⊗ ak) = a1 ... ak.
inline SymFunc multiply_slots(const TensorSF& t, int max_degree = -1) {
  SymFunc out;
  for (const auto& [key, c] : t.terms()) {
    SymFunc acc = SymFunc::schur(key[0], c);
    for (std::size_t i = 1; i < key.size(); ++i)
      acc = max_degree < 0 ? outer_product(acc, SymFunc::schur(key[i]))
                           : outer_product(acc, SymFunc::schur(key[i]), max_degree);
    out += acc;
  }
  return out;
}

/// Applies the coproduct to one slot, producing a tensor of rank + 1.
inline TensorSF coproduct_slot(const TensorSF& t, std::size_t slot) {
  std::vector<Orientation> o = t.orientation();
  o.insert(o.begin() + slot + 1, o[slot]);
  TensorSF out(o);
  for (const auto& [key, c] : t.terms()) {
    const TensorSF d_slot = coproduct(SymFunc::schur(key[slot]));
    for (const auto& [pair, d] : d_slot.terms()) {
      SlotKey k = key;
      k[slot] = pair[0];
      k.insert(k.begin() + slot + 1, pair[1]);
      out.add(k, c * d);
    }
  }
  return out;
}

/// Applies the counit to one slot, producing a tensor of rank − 1 (rank must
/// be at least 2).
inline TensorSF counit_slot(const TensorSF& t, std::size_t slot) {
  if (t.rank() < 2) throw std::invalid_argument("counit_slot: rank must be at least 2");
  std::vector<Orientation> o = t.orientation();
  o.erase(o.begin() + slot);
  TensorSF out(o);
  for (const auto& [key, c] : t.terms()) {
    if (!key[slot].empty()) continue;
    SlotKey k = key;
    k.erase(k.begin() + slot);
    out.add(k, c);
  }
  return out;
}

/// Swaps two slots, orientations included.
inline TensorSF swap_slots(const TensorSF& t, std::size_t i, std::size_t j) {
  std::vector<Orientation> o = t.orientation();
  std::swap(o[i], o[j]);
  TensorSF out(o);
  for (const auto& [key, c] : t.terms()) {
    SlotKey k = key;
    std::swap(k[i], k[j]);
    out.add(k, c);
  }
  return out;
}

/// Slot-by-slot Schur-Hall pairing of two tensors of equal rank.
inline Integer schur_hall(const TensorSF& a, const TensorSF& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("schur_hall: rank mismatch");
  Integer total = 0;
  for (const auto& [key, c] : a.terms()) {
    auto other = b.coeff(key);
    if (other != 0) total += c * other;
  }
  return total;
}

}  // namespace charhopf
