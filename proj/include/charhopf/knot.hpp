#pragma once

// Crossings, caps, cups and twists, and the knot/link invariant of a braid
// closure.
//
// Diagrams are read top to bottom. A crossing takes the pair (x, y) on
// adjacent strands to (y ∘ a_(2), x ∘ a_(1)) where a = r_π for an over
// crossing and r_π⁻¹ for an under crossing, and ∘ is multiplication on a
// Λ slot and skewing on a Λ* slot. Orientations travel with their strands.

#include <stdexcept>
#include <string>
#include <vector>

#include "charhopf/braid.hpp"
#include "charhopf/pi_deform.hpp"

namespace charhopf {

enum class Chirality { over, under };

struct CrossingKind {
  Chirality chirality = Chirality::over;
  Orientation left = Orientation::primal;
  Orientation right = Orientation::primal;

  friend bool operator==(const CrossingKind&, const CrossingKind&) = default;
};

inline std::vector<CrossingKind> all_crossing_kinds() {
  std::vector<CrossingKind> out;
  for (auto ch : {Chirality::over, Chirality::under})
    for (auto l : {Orientation::primal, Orientation::dual})
      for (auto r : {Orientation::primal, Orientation::dual}) out.push_back({ch, l, r});
  return out;
}

/// Applies the crossing to slots (i, i+1) of t.
inline TensorSF crossing_action_at(const PiContext& ctx, const CrossingKind& kind, const TensorSF& t, std::size_t i,
                                   int degree) {
  if (t.orientation(i) != kind.left || t.orientation(i + 1) != kind.right)
    throw std::invalid_argument(std::string("crossing expects orientations (") + to_string(kind.left) + ", " +
                                to_string(kind.right) + ") but got (" + to_string(t.orientation(i)) + ", " +
                                to_string(t.orientation(i + 1)) + ")");
  return braid_at(ctx, t, i, kind.chirality == Chirality::under, degree);
}

inline TensorSF crossing_action(const PiContext& ctx, const CrossingKind& kind, const TensorSF& t, int degree) {
  if (t.rank() != 2) throw std::invalid_argument("crossing_action: rank-2 tensor required");
  return crossing_action_at(ctx, kind, t, 0, degree);
}

/// b: 1 ↦ Σ_{|σ| ≤ D} σ ⊗ σ*.
inline TensorSF cap_b(int degree) {
  TensorSF out(std::vector<Orientation>{Orientation::primal, Orientation::dual});
  for (const auto& p : partitions_up_to(degree)) out.add({p, p}, 1);
  return out;
}

/// b̄: 1 ↦ Σ_{|ρ| ≤ D} ρ* ⊗ ρ.
inline TensorSF cap_bbar(const PiContext&, int degree) {
  TensorSF out(std::vector<Orientation>{Orientation::dual, Orientation::primal});
  for (const auto& p : partitions_up_to(degree)) out.add({p, p}, 1);
  return out;
}

/// Pairs slots i and j (one primal, one dual) and removes them.
inline TensorSF contract(const TensorSF& t, std::size_t i, std::size_t j) {
  if (i == j || t.orientation(i) == t.orientation(j))
    throw std::invalid_argument("contract: slots must be distinct with opposite orientations");
  std::vector<Orientation> o;
  for (std::size_t s = 0; s < t.rank(); ++s)
    if (s != i && s != j) o.push_back(t.orientation(s));
  if (o.empty()) o.push_back(Orientation::primal);
  TensorSF out(o);
  for (const auto& [key, c] : t.terms()) {
    if (key[i] != key[j]) continue;
    SlotKey k;
    for (std::size_t s = 0; s < key.size(); ++s)
      if (s != i && s != j) k.push_back(key[s]);
    if (k.empty()) k.push_back(Partition{});
    out.add(k, c);
  }
  return out;
}

namespace detail {

inline Integer scalar_of(const TensorSF& t) {
  Integer total = 0;
  for (const auto& [key, c] : t.terms()) total += c;
  return total;
}

}  // namespace detail

/// d: λ* ⊗ μ ↦ ⟨λ|μ⟩.
inline Integer cup_d(const TensorSF& t) {
  if (t.rank() != 2 || t.orientation(0) != Orientation::dual || t.orientation(1) != Orientation::primal)
    throw std::invalid_argument("cup_d expects orientations (dual, primal)");
  return detail::scalar_of(contract(t, 0, 1));
}

/// d̄: λ ⊗ μ* ↦ ⟨μ|λ⟩.
inline Integer cup_dbar(const PiContext&, const TensorSF& t) {
  if (t.rank() != 2 || t.orientation(0) != Orientation::primal || t.orientation(1) != Orientation::dual)
    throw std::invalid_argument("cup_dbar expects orientations (primal, dual)");
  return detail::scalar_of(contract(t, 0, 1));
}

/// θ_π^power: multiplication by Q_π^power, truncated at degree.
inline SymFunc twist(const PiContext& ctx, const SymFunc& f, int power, int degree) {
  if (power == 0) return f.truncate(degree);
  return outer_product(f, ctx.q_power(power, degree), degree);
}

/// Q_π^{w_i} in slot i, times (r_π^{±1})^{|w_ij|} in slots (i, j); a knot
/// gives the rank-1 tensor Q_π^w.
inline TensorSF invariant_closed_form(const PiContext& ctx, const BraidWord& b, int degree) {
  const LinkStats st = link_stats(b);
  const std::size_t k = st.components();
  std::vector<SymFunc> diag;
  for (int w : st.component_writhes) diag.push_back(ctx.q_power(w, degree));
  TensorSF out = tensor(diag);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) {
      const int lk = st.linking_matrix[i][j];
      if (lk == 0) continue;
      const TensorSF& kernel = lk > 0 ? ctx.r_kernel(degree) : ctx.r_kernel_inverse(degree);
      TensorSF placed(k);
      for (const auto& [key, c] : kernel.terms()) {
        SlotKey full(k);
        full[i] = key[0];
        full[j] = key[1];
        placed.add(full, c);
      }
      for (int n = 0; n < (lk > 0 ? lk : -lk); ++n) out = componentwise_product(out, placed, degree);
    }
  return out;
}

/// Evaluates the 1-1 tangle obtained by cutting the closure of a knot braid
/// open at the top of strand 1. Strand 1 carries the seed; caps create
/// Σσ ⊗ σ* for each other strand; braid letters act by crossings; the
/// bottoms of strands 2..m are closed against their dual partners.
///
/// The result is exact in every grade ≤ degree: along the single component
/// strand values only grow, so every cap label has weight at most that of
/// the output.
inline SymFunc invariant_direct(const PiContext& ctx, const BraidWord& b, const SymFunc& seed, int degree) {
  const LinkStats st = link_stats(b);
  if (st.components() != 1)
    throw std::invalid_argument("invariant_direct handles knots only; this braid closes to a " +
                                std::to_string(st.components()) + "-component link (use the closed form)");
  const std::size_t m = static_cast<std::size_t>(b.strands());

  // Layout: [seed, σ_2, ..., σ_m, σ_m*, ..., σ_2*].
  TensorSF state = as_tensor(seed.truncate(degree));
  for (std::size_t s = 1; s < m; ++s) {
    const TensorSF cap = cap_b(degree);
    std::vector<Orientation> o = state.orientation();
    o.insert(o.begin() + s, Orientation::primal);
    o.insert(o.begin() + s + 1, Orientation::dual);
    TensorSF next(o);
    for (const auto& [key, c] : state.terms())
      for (const auto& [ck, cc] : cap.terms()) {
        SlotKey k = key;
        k.insert(k.begin() + s, ck[0]);
        k.insert(k.begin() + s + 1, ck[1]);
        next.add(k, c * cc);
      }
    state = std::move(next);
  }

  for (int l : b.letters()) {
    const CrossingKind kind{l > 0 ? Chirality::over : Chirality::under, Orientation::primal, Orientation::primal};
    state = crossing_action_at(ctx, kind, state, static_cast<std::size_t>(std::abs(l) - 1), degree);
  }

  // Close bottom position s against σ_s*, innermost pair first, so the
  // partner always sits at slot s + 1.
  for (std::size_t s = m - 1; s >= 1; --s) state = contract(state, s, s + 1);
  return as_symfunc(state);
}

}  // namespace charhopf
