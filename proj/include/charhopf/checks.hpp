#pragma once

// Exhaustive verification of the Hopf algebra axioms of Λ on a truncated
// Schur basis.

#include <string>

#include "charhopf/pi_deform.hpp"

namespace charhopf {

/// Counit, coassociativity, cocommutativity, antipode convolution and S∘S = Id
/// on every s_λ with |λ| ≤ max_weight; the bialgebra law Δ(fg) = Δ(f)Δ(g) on
/// all pairs with |f|, |g| ≤ max_pair_weight.
inline CheckReport check_hopf(int max_weight, int max_pair_weight) {
  CheckReport rep;
  for (const auto& lambda : partitions_up_to(max_weight)) {
    const SymFunc f = SymFunc::schur(lambda);
    const std::string at = " on s" + to_string(lambda);
    const TensorSF d = coproduct(f);
    const TensorSF eps_unit = as_tensor(SymFunc(counit(f)));
    detail::compare(rep, "(eps (x) Id) Delta = Id" + at, counit_slot(d, 0), as_tensor(f));
    detail::compare(rep, "(Id (x) eps) Delta = Id" + at, counit_slot(d, 1), as_tensor(f));
    detail::compare(rep, "coassociativity" + at, coproduct_slot(d, 0), coproduct_slot(d, 1));
    detail::compare(rep, "cocommutativity" + at, swap_slots(d, 0, 1), d);
    detail::compare(rep, "m (S (x) Id) Delta = eps" + at, as_tensor(multiply_slots(antipode_slot(d, 0))), eps_unit);
    detail::compare(rep, "m (Id (x) S) Delta = eps" + at, as_tensor(multiply_slots(antipode_slot(d, 1))), eps_unit);
    detail::compare(rep, "S S = Id" + at, antipode(antipode(f)), f);
  }
  const auto pair_basis = partitions_up_to(max_pair_weight);
  for (const auto& lambda : pair_basis)
    for (const auto& mu : pair_basis) {
      const SymFunc f = SymFunc::schur(lambda), g = SymFunc::schur(mu);
      detail::compare(rep, "Delta(fg) = Delta(f) Delta(g) on s" + to_string(lambda) + ", s" + to_string(mu),
                      coproduct(f * g), componentwise_product(coproduct(f), coproduct(g)));
    }
  return rep;
}

}  // namespace charhopf
