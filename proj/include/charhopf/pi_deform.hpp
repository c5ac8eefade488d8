#pragma once

// The π-deformed structure on Λ.
//
// With (A_k, B_k), k = 1..p, the pairs of the cut coproduct Δ′(s_π), the
// generalised Cauchy kernel is
//
//   r_π = Σ_α Π_k α_k[A_k] ⊗ Π_k α_k[B_k],
//
// summed over p-tuples α of partitions. Each summand (a "leg pair") is
// homogeneous, so truncating a slot at D just drops whole tuples.

#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "charhopf/io.hpp"
#include "charhopf/plethysm.hpp"
#include "charhopf/schur_ring.hpp"

namespace charhopf {

/// One α-tuple of the kernel expansion.
struct KernelLeg {
  std::vector<Partition> alpha;
  SymFunc first;          // Π α_k[A_k]
  SymFunc second;         // Π α_k[B_k]
  SymFunc first_inverse;  // Π S(α_k)[A_k]
  int first_weight = 0;
  int second_weight = 0;
};

struct CheckReport {
  bool ok = true;
  long long checked = 0;
  std::string counterexample;

  void fail(std::string what) {
    if (ok) counterexample = std::move(what);
    ok = false;
  }
};

class PiContext {
 public:
  explicit PiContext(Partition pi)
      : pi_(std::move(pi)), pairs_(checked_pairs(pi_)), state_(std::make_shared<State>()) {}

  const Partition& pi() const noexcept { return pi_; }
  const std::vector<std::pair<Partition, Partition>>& pairs() const noexcept { return pairs_; }
  std::size_t p() const noexcept { return pairs_.size(); }

  /// All leg pairs with both slot weights ≤ degree.
  const std::vector<KernelLeg>& legs(int degree) const {
    return cached(state_->legs, degree, [&] { return compute_legs(degree); });
  }

  const TensorSF& r_kernel(int degree) const {
    return cached(state_->r, degree, [&] {
      TensorSF out(2);
      for (const auto& leg : legs(degree)) add_pure(out, leg.first, leg.second);
      return out;
    });
  }

  /// Σ_α Π S(α_k)[A_k] ⊗ Π α_k[B_k], the componentwise inverse of r_π.
  const TensorSF& r_kernel_inverse(int degree) const {
    return cached(state_->rinv, degree, [&] {
      TensorSF out(2);
      for (const auto& leg : legs(degree)) add_pure(out, leg.first_inverse, leg.second);
      return out;
    });
  }

  const SymFunc& q_scalar(int degree) const {
    return cached(state_->q, degree, [&] { return multiply_slots(r_kernel(degree), degree); });
  }

  /// Q_π⁻¹ by the antipode route m∘r_π⁻¹, checked against graded inversion of
  /// Q_π; a mismatch throws std::logic_error.
  const SymFunc& q_scalar_inverse(int degree) const {
    return cached(state_->qinv, degree, [&] {
      SymFunc antipode_route = multiply_slots(r_kernel_inverse(degree), degree);
      SymFunc inversion_route = graded_inverse(q_scalar(degree), degree);
      if (antipode_route != inversion_route)
        throw std::logic_error("Q_pi inverse routes disagree at degree " + std::to_string(degree) + ": " +
                               to_string(antipode_route) + " vs " + to_string(inversion_route));
      return antipode_route;
    });
  }

  /// Q_π^n truncated at degree; negative n uses Q_π⁻¹.
  SymFunc q_power(int n, int degree) const {
    const SymFunc& base = n >= 0 ? q_scalar(degree) : q_scalar_inverse(degree);
    SymFunc out = SymFunc::one();
    for (int i = 0; i < (n >= 0 ? n : -n); ++i) out = outer_product(out, base, degree);
    return out;
  }

  /// Inverse of a series with constant term 1, exact in grades ≤ degree.
  static SymFunc graded_inverse(const SymFunc& f, int degree) {
    if (f.coeff(Partition{}) != 1) throw std::invalid_argument("graded_inverse: constant term must be 1");
    std::vector<SymFunc> grades(degree + 1), inv(degree + 1);
    for (int n = 0; n <= degree; ++n) grades[n] = f.grade(n);
    inv[0] = SymFunc::one();
    for (int n = 1; n <= degree; ++n)
      for (int j = 1; j <= n; ++j) inv[n] -= grades[j] * inv[n - j];
    SymFunc out;
    for (const auto& g : inv) out += g;
    return out;
  }

 private:
  struct State {
    std::mutex mtx;
    std::map<int, std::vector<KernelLeg>> legs;
    std::map<int, TensorSF> r, rinv;
    std::map<int, SymFunc> q, qinv;
  };

  template <class V, class Compute>
  const V& cached(std::map<int, V>& cache, int degree, Compute&& compute) const {
    if (degree < 0) throw std::invalid_argument("degree must be non-negative");
    {
      std::lock_guard lock(state_->mtx);
      auto it = cache.find(degree);
      if (it != cache.end()) return it->second;
    }
    V value = compute();
    std::lock_guard lock(state_->mtx);
    return cache.try_emplace(degree, std::move(value)).first->second;
  }

  static std::vector<std::pair<Partition, Partition>> checked_pairs(const Partition& pi) {
    if (pi.empty()) throw std::invalid_argument("PiContext: π must be a nonzero partition");
    return cut_coproduct_pairs(pi);
  }

  static void add_pure(TensorSF& out, const SymFunc& a, const SymFunc& b) {
    for (const auto& [pa, ca] : a.terms())
      for (const auto& [pb, cb] : b.terms()) out.add({pa, pb}, ca * cb);
  }

  // Tuples are visited lexicographically in (|α_1|, ..., |α_p|), reverse-lex
  // within each weight.
  std::vector<KernelLeg> compute_legs(int degree) const {
    std::vector<KernelLeg> out;
    KernelLeg cur;
    cur.first = cur.second = cur.first_inverse = SymFunc::one();
    auto rec = [&](auto&& self, std::size_t k, const KernelLeg& acc) -> void {
      if (k == pairs_.size()) {
        out.push_back(acc);
        return;
      }
      const auto& [a, b] = pairs_[k];
      for (int n = 0;; ++n) {
        const int w1 = acc.first_weight + n * a.weight();
        const int w2 = acc.second_weight + n * b.weight();
        if (w1 > degree || w2 > degree) break;
        for (const auto& alpha : partitions_of(n)) {
          KernelLeg next;
          next.alpha = acc.alpha;
          next.alpha.push_back(alpha);
          next.first = acc.first * schur_plethysm(alpha, a);
          next.second = acc.second * schur_plethysm(alpha, b);
          next.first_inverse = acc.first_inverse * antipode_plethysm(alpha, a);
          next.first_weight = w1;
          next.second_weight = w2;
          self(self, k + 1, next);
        }
      }
    };
    rec(rec, 0, cur);
    return out;
  }

  // S(s_α)[g] = (−1)^{|α|} s_{α'}[g].
  static SymFunc antipode_plethysm(const Partition& alpha, const Partition& g) {
    SymFunc out = schur_plethysm(conjugate(alpha), g);
    if (alpha.weight() % 2) out *= Integer(-1);
    return out;
  }

  Partition pi_;
  std::vector<std::pair<Partition, Partition>> pairs_;
  std::shared_ptr<State> state_;
};

// ---------------------------------------------------------------------------
// Products and operators

/// f ⊙ g = Σ_α (f / Π α_k[A_k]) · (g / Π α_k[B_k]). The sum is finite.
inline SymFunc pi_product(const PiContext& ctx, const SymFunc& f, const SymFunc& g) {
  if (f.is_zero() || g.is_zero()) return {};
  const int df = f.degree(), dg = g.degree();
  SymFunc out;
  for (const auto& leg : ctx.legs(std::max(df, dg))) {
    if (leg.first_weight > df || leg.second_weight > dg) continue;
    SymFunc a = skew(f, leg.first);
    if (a.is_zero()) continue;
    SymFunc b = skew(g, leg.second);
    if (b.is_zero()) continue;
    out += a * b;
  }
  return out;
}

namespace detail {

inline SymFunc act(Orientation o, const Partition& x, const SymFunc& leg, int degree) {
  return o == Orientation::primal ? outer_product(SymFunc::schur(x), leg, degree) : skew(SymFunc::schur(x), leg);
}

}  // namespace detail

/// Acts on slots i and j of t by the legs of a kernel: slot i by the first
/// leg, slot j by the second. Primal slots multiply (truncated at degree),
/// dual slots skew.
inline TensorSF apply_legs(const TensorSF& t, std::size_t i, std::size_t j, const std::vector<KernelLeg>& legs,
                           bool inverse, int degree) {
  TensorSF out(t.orientation());
  const Orientation oi = t.orientation(i), oj = t.orientation(j);
  for (const auto& [key, c] : t.terms())
    for (const auto& leg : legs) {
      if (oi == Orientation::primal && key[i].weight() + leg.first_weight > degree) continue;
      if (oj == Orientation::primal && key[j].weight() + leg.second_weight > degree) continue;
      const SymFunc a = detail::act(oi, key[i], inverse ? leg.first_inverse : leg.first, degree);
      if (a.is_zero()) continue;
      const SymFunc b = detail::act(oj, key[j], leg.second, degree);
      SlotKey k = key;
      for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) {
          k[i] = pa;
          k[j] = pb;
          out.add(k, c * ca * cb);
        }
    }
  return out;
}

/// R_π(f ⊗ g) = Σ_α f·Π α_k[A_k] ⊗ g·Π α_k[B_k], slots truncated at degree.
inline TensorSF r_matrix(const PiContext& ctx, const TensorSF& t, int degree) {
  if (t.rank() != 2) throw std::invalid_argument("r_matrix: rank-2 tensor required");
  return apply_legs(t, 0, 1, ctx.legs(degree), false, degree);
}

/// Δ_π = R_π ∘ Δ.
inline TensorSF deformed_coproduct(const PiContext& ctx, const SymFunc& f, int degree) {
  return r_matrix(ctx, coproduct(f.truncate(degree)), degree);
}

/// c^π = sw ∘ R_π on slots (i, i+1) of t; inverse uses the legs of r_π⁻¹.
inline TensorSF braid_at(const PiContext& ctx, const TensorSF& t, std::size_t i, bool inverse, int degree) {
  return apply_legs(swap_slots(t, i, i + 1), i, i + 1, ctx.legs(degree), inverse, degree);
}

inline TensorSF braid(const PiContext& ctx, const TensorSF& t, bool inverse, int degree) {
  if (t.rank() != 2) throw std::invalid_argument("braid: rank-2 tensor required");
  return braid_at(ctx, t, 0, inverse, degree);
}

// ---------------------------------------------------------------------------
// Axiom checks

namespace detail {

inline std::string key_string(const std::vector<Partition>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " (x) " : "") + ("s" + to_string(parts[i]));
  return s;
}

inline void compare(CheckReport& rep, const std::string& label, const TensorSF& lhs, const TensorSF& rhs) {
  ++rep.checked;
  if (lhs != rhs) rep.fail(label + ":\n  lhs = " + to_string(lhs) + "\n  rhs = " + to_string(rhs));
}

inline void compare(CheckReport& rep, const std::string& label, const SymFunc& lhs, const SymFunc& rhs) {
  ++rep.checked;
  if (lhs != rhs) rep.fail(label + ":\n  lhs = " + to_string(lhs) + "\n  rhs = " + to_string(rhs));
}

inline std::vector<std::vector<Partition>> basis_triples(int max_total, int max_each) {
  std::vector<std::vector<Partition>> out;
  const auto all = partitions_up_to(max_each);
  for (const auto& a : all)
    for (const auto& b : all)
      for (const auto& c : all)
        if (max_total < 0 || a.weight() + b.weight() + c.weight() <= max_total) out.push_back({a, b, c});
  return out;
}

}  // namespace detail

/// c12 c23 c12 = c23 c12 c23 on every basis triple of total weight ≤ degree,
/// with per-slot truncation at degree.
inline CheckReport check_yang_baxter(const PiContext& ctx, int degree) {
  CheckReport rep;
  for (const auto& triple : detail::basis_triples(degree, degree)) {
    TensorSF t(3);
    t.add(triple, 1);
    auto lhs = braid_at(ctx, braid_at(ctx, braid_at(ctx, t, 0, false, degree), 1, false, degree), 0, false, degree);
    auto rhs = braid_at(ctx, braid_at(ctx, braid_at(ctx, t, 1, false, degree), 0, false, degree), 1, false, degree);
    detail::compare(rep, "braid relation on " + detail::key_string(triple), lhs, rhs);
  }
  return rep;
}

/// The cochain σ(f, g) = Σ_α ⟨f|Π α_k[A_k]⟩⟨g|Π α_k[B_k]⟩ on basis elements.
inline Integer cochain(const PiContext& ctx, const Partition& f, const Partition& g) {
  return ctx.r_kernel(std::max(f.weight(), g.weight())).coeff({f, g});
}

/// The scalar 2-cocycle identity
///   Σ σ(g1, h1) σ(f, g2 h2) = Σ σ(f1, g1) σ(f2 g2, h)
/// and associativity of ⊙, on every basis triple with each weight ≤ W.
inline CheckReport check_cocycle(const PiContext& ctx, int max_weight) {
  CheckReport rep;
  auto sigma_right = [&](const Partition& f, const SymFunc& x) {
    Integer total = 0;
    for (const auto& [p, c] : x.terms()) total += c * cochain(ctx, f, p);
    return total;
  };
  auto sigma_left = [&](const SymFunc& x, const Partition& h) {
    Integer total = 0;
    for (const auto& [p, c] : x.terms()) total += c * cochain(ctx, p, h);
    return total;
  };
  for (const auto& triple : detail::basis_triples(-1, max_weight)) {
    const auto& f = triple[0];
    const auto& g = triple[1];
    const auto& h = triple[2];
    const TensorSF dg = coproduct(SymFunc::schur(g));
    Integer lhs = 0, rhs = 0;
    const TensorSF dh = coproduct(SymFunc::schur(h));
    for (const auto& [kg, cg] : dg.terms())
      for (const auto& [kh, ch] : dh.terms()) {
        const Integer s = cochain(ctx, kg[0], kh[0]);
        if (s != 0) lhs += cg * ch * s * sigma_right(f, SymFunc::schur(kg[1]) * SymFunc::schur(kh[1]));
      }
    const TensorSF df = coproduct(SymFunc::schur(f));
    for (const auto& [kf, cf] : df.terms())
      for (const auto& [kg, cg] : dg.terms()) {
        const Integer s = cochain(ctx, kf[0], kg[0]);
        if (s != 0) rhs += cf * cg * s * sigma_left(SymFunc::schur(kf[1]) * SymFunc::schur(kg[1]), h);
      }
    ++rep.checked;
    if (lhs != rhs)
      rep.fail("2-cocycle identity on " + detail::key_string(triple) + ": " + lhs.str() + " vs " + rhs.str());

    const SymFunc sf = SymFunc::schur(f), sg = SymFunc::schur(g), sh = SymFunc::schur(h);
    detail::compare(rep, "associativity on " + detail::key_string(triple), pi_product(ctx, pi_product(ctx, sf, sg), sh),
                    pi_product(ctx, sf, pi_product(ctx, sg, sh)));
  }
  return rep;
}

/// (ε⊗Id) r_π = 1 = (Id⊗ε) r_π.
inline CheckReport check_normalization(const PiContext& ctx, int degree) {
  CheckReport rep;
  const TensorSF& r = ctx.r_kernel(degree);
  const TensorSF one = as_tensor(SymFunc::one());
  detail::compare(rep, "(eps (x) Id) r", counit_slot(r, 0), one);
  detail::compare(rep, "(Id (x) eps) r", counit_slot(r, 1), one);
  return rep;
}

/// (Id⊗Δ) r = r13 r12 and (Δ⊗Id) r = r13 r23, compared on all terms of
/// combined degree ≤ degree.
inline CheckReport check_hexagons(const PiContext& ctx, int degree) {
  CheckReport rep;
  const TensorSF& r = ctx.r_kernel(degree);
  const TensorSF one = as_tensor(SymFunc::one());
  const TensorSF r12 = tensor_product(r, one);
  const TensorSF r23 = tensor_product(one, r);
  const TensorSF r13 = swap_slots(r12, 1, 2);
  detail::compare(rep, "(Id (x) Delta) r = r12 r13", coproduct_slot(r, 1).truncate_total(degree),
                  componentwise_product(r12, r13).truncate_total(degree));
  detail::compare(rep, "(Delta (x) Id) r = r13 r23", coproduct_slot(r, 0).truncate_total(degree),
                  componentwise_product(r13, r23).truncate_total(degree));
  return rep;
}

/// (S⊗Id) r = r⁻¹, (S⊗S) r = r and (Id⊗S) r⁻¹ = r, each slot ≤ degree.
inline CheckReport check_antipode_relations(const PiContext& ctx, int degree) {
  CheckReport rep;
  const TensorSF& r = ctx.r_kernel(degree);
  const TensorSF& rinv = ctx.r_kernel_inverse(degree);
  detail::compare(rep, "(S (x) Id) r = r^-1", antipode_slot(r, 0), rinv);
  detail::compare(rep, "(S (x) S) r = r", antipode_slot(antipode_slot(r, 0), 1), r);
  detail::compare(rep, "(Id (x) S) r^-1 = r", antipode_slot(rinv, 1), r);
  return rep;
}

/// r⁻¹ · r = 1 ⊗ 1 componentwise, each slot ≤ degree.
inline CheckReport check_kernel_inverse(const PiContext& ctx, int degree) {
  CheckReport rep;
  detail::compare(rep, "r^-1 r = 1 (x) 1", componentwise_product(ctx.r_kernel_inverse(degree), ctx.r_kernel(degree), degree),
                  tensor(SymFunc::one(), SymFunc::one()));
  return rep;
}

}  // namespace charhopf
