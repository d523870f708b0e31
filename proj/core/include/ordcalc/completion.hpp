#ifndef ORDCALC_COMPLETION_HPP
#define ORDCALC_COMPLETION_HPP

#include <vector>

#include "ordcalc/dynamics.hpp"

namespace ordcalc {

  // Down-closed, directed, round and nonempty. Entries nonempty,
  // down_closed, directed, round.
  AxiomReport check_round_ideal(WSemigroup const& s, Subset const& d);
  bool        is_round_ideal(WSemigroup const& s, Subset const& d);

  // Every round ideal of s, ordered by subset_less. On a finite carrier
  // these are the sets u^≺ with u ≺ u.
  std::vector<Subset> round_ideals(WSemigroup const& s);

  struct Completion {
    WSemigroup          semigroup;  // round ideals under inclusion, ≺ = ≪
    WMorphism           gamma;      // a ↦ a^≺
    std::vector<Subset> ideals;     // element of the completion -> round ideal

    // npos when d is not one of the round ideals
    std::size_t index_of(Subset const& d) const;
  };

  Completion complete(WSemigroup const& s);

  // D ≪ E iff D ⊆ e^≺ for some e ∈ E; throws std::invalid_argument when the
  // sets live on a different base
  bool waybelow(Completion const& c, Subset const& d, Subset const& e);
  bool waybelow(Completion const& c, std::size_t d, std::size_t e);

  // gamma_morphism, embedding (γa ≪ γb iff a ≤_≺∘≺ b), strict_embedding
  // (a ≺ b iff γa ≪ γb, only when ≺ = ≤_≺∘≺), dense, waybelow_generic,
  // additive_round, cu.*
  AxiomReport completion_check(WSemigroup const& s);

  // γ(γ(S)) ≅ γ(S) through the map γ of the completion
  AxiomReport idempotence_check(WSemigroup const& s);

  // γ(I) = {D : D ⊆ I}
  Subset completion_ideal(Completion const& c, Subset const& i);

  // I ↦ γ(I) is a lattice isomorphism Lat_W(S) → Lat_Cu(γ(S)) with
  // γ(S)/γ(I) ≅ γ(S/I) for every closed ideal. With an action, the
  // restriction to invariant ideals is checked too. Entries: bijection,
  // order, quotients, and invariant when g is given.
  AxiomReport lattice_transfer(WSemigroup const&  s,
                               GroupAction const* g      = nullptr,
                               std::size_t        budget = enumeration_budget());

  // the action on γ(S) by D ↦ gD
  GroupAction completion_action(Completion const& c, GroupAction const& g);

  // γ(S/G) ≅ γ(γ(S)/G), compared through S
  AxiomReport dyn_compat(WSemigroup const& s, GroupAction const& g);

  // Classes of eventually periodic ≺-increasing sequences (prefix and period
  // bounded as given) under (a_n) ≾ (b_n) iff every a_n ≺ some b_m,
  // compared with round ideals through (a_n) ↦ ⋃ a_n^≺. Entries:
  // well_defined, order, onto, injective.
  AxiomReport sequence_encoding_check(WSemigroup const& s, std::size_t max_prefix, std::size_t max_period);

}  // namespace ordcalc

#endif
