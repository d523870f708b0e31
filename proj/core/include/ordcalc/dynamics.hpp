#ifndef ORDCALC_DYNAMICS_HPP
#define ORDCALC_DYNAMICS_HPP

#include <vector>

#include "ordcalc/ideals.hpp"

namespace ordcalc {

  using Permutation = std::vector<std::size_t>;

  // g∘h, acting as (gh)a = g(ha)
  Permutation compose(Permutation const& g, Permutation const& h);
  Permutation inverse(Permutation const& g);

  struct GroupAction {
    std::vector<Permutation> generators;
    std::vector<Permutation> elements;  // elements[0] is the identity

    std::size_t order() const noexcept {
      return elements.size();
    }
  };

  inline constexpr std::size_t default_group_bound = 10'000;

  // Closes the generators under composition and checks every element is an
  // automorphism preserving ≺. Throws PreconditionError (witness: a
  // permutation index and one or two elements) or BudgetExceeded.
  GroupAction validate_action(WSemigroup const&               s,
                              std::vector<Permutation> const& generators,
                              std::size_t                     bound = default_group_bound);
  GroupAction trivial_action(WSemigroup const& s);
  // entries: permutation, preserves_prec, additive, zero, identity, closed
  AxiomReport check_action(WSemigroup const& s, GroupAction const& g);

  // Permutes the coordinates of a product of equal factors, each of the
  // given size: coordinate i of a moves to coordinate sigma[i].
  Permutation permute_coordinates(std::size_t factor_size, Permutation const& sigma);

  // a ≈ b iff a = gb for some g in the group
  Relation orbit_relation(WSemigroup const& s, GroupAction const& g);

  // the normal pair generated by ≈_G
  Pair dyn_pair(WSemigroup const& s, GroupAction const& g);
  // a ≤ b iff every c ≺ a has c ≺ b, or c ≺ Σd_j and Σg_j d_j ≺ b
  Relation dyn_one_step_order(WSemigroup const& s, GroupAction const& g);
  // entries: orbit_continuous, contains_orbit, contains_minimal, one_step
  // (compared only when s has almost refinement)
  AxiomReport dyn_pair_check(WSemigroup const& s, GroupAction const& g);

  QuotientResult dyn_quotient(WSemigroup const& s, GroupAction const& g);

  // f(ga) = f(a) for every generator; returns the first (generator, a) that fails
  std::optional<Edge> invariance_failure(WMorphism const& f, GroupAction const& g);

  // f_G : S/G -> T/α_T. Throws PreconditionError unless f is an invariant
  // W-morphism.
  Factorization dynamical_factor(WMorphism const& f, GroupAction const& g);
  // entries: projection_invariant, factors, commutes, h.*, order_preserving,
  // unique
  AxiomReport universal_property_check(WMorphism const& f, GroupAction const& g);

  bool is_invariant(GroupAction const& g, Subset const& members);
  // closed ideals with gI = I
  std::vector<Ideal> invariant_closed_ideals(WSemigroup const& s,
                                             GroupAction const& g,
                                             std::size_t        budget = enumeration_budget());
  // {z : every z' ≺ z has z' ≺ g_1 a + ... + g_n a}
  Ideal g_principal(WSemigroup const& s, GroupAction const& g, std::size_t a);
  // I_G(a) = S for every a outside closure({0})
  bool is_minimal_action(WSemigroup const& s, GroupAction const& g);

  // The action induced on S/I for an invariant closed ideal I.
  GroupAction induced_action(QuotientResult const& q, GroupAction const& g);

  // Throws PreconditionError unless i is an invariant closed ideal. Entries:
  // image_closed, preimage, lattice, two_stage, principal, minimal_iff_simple.
  AxiomReport dyn_ideal_compat_check(WSemigroup const& s,
                                     GroupAction const& g,
                                     Subset const&      i,
                                     std::size_t        budget = enumeration_budget());

}  // namespace ordcalc

#endif
