#ifndef ORDCALC_IDEALS_HPP
#define ORDCALC_IDEALS_HPP

#include <optional>
#include <vector>

#include "ordcalc/budget.hpp"
#include "ordcalc/quotients.hpp"

namespace ordcalc {

  struct Ideal {
    Subset members;
    bool   closed = false;

    bool contains(std::size_t a) const {
      return members[a];
    }
    bool operator==(Ideal const& other) const {
      return members == other.members;
    }
  };

  // zero, sums, ≺-hereditary; entries contains_zero, additive, hereditary
  AxiomReport check_ideal(WSemigroup const& s, Subset const& members);
  bool        is_ideal(WSemigroup const& s, Subset const& members);
  // a^≺ ⊆ I implies a ∈ I
  bool is_closed_set(WSemigroup const& s, Subset const& members);

  // smallest ideal containing xs
  Ideal generated_ideal(WSemigroup const& s, Subset const& xs);
  // {a : a^≺ ⊆ I}; throws PreconditionError unless i is an ideal
  Ideal closure(WSemigroup const& s, Subset const& i);
  // smallest closed ideal containing xs
  Ideal generated_closed_ideal(WSemigroup const& s, Subset const& xs);

  // Every ideal (or closed ideal) ordered by size, then members. Throws
  // BudgetExceeded when |S| exceeds the budget.
  std::vector<Ideal> enumerate_ideals(WSemigroup const& s,
                                      bool              closed_only,
                                      std::size_t       budget = enumeration_budget());

  // {b : every b' ≺ b has b' ≺ n·a for some n ≥ 0}
  Ideal principal(WSemigroup const& s, std::size_t a);
  bool  is_order_unit(WSemigroup const& s, std::size_t a);
  // every element outside the least closed ideal closure({0}) is an order
  // unit, i.e. the only closed ideals are closure({0}) and S
  bool is_simple(WSemigroup const& s);

  // (≺, ≤_I) with a ≤_I b iff every x ≺ a has x ≺ b + y for some y ∈ I
  Pair pair_of_ideal(WSemigroup const& s, Subset const& i);
  // {a : a ≤ 0}; throws PreconditionError unless p is admissible
  Ideal ideal_of_pair(WSemigroup const& s, Pair const& p);

  // a ≤ b + y for some y ∈ I, on the order ≤_≺
  Relation ideal_order(WSemigroup const& s, Subset const& i);

  struct GaloisOptions {
    // order used in the hypothesis ≺∘≤ ⊆ ≺; ≤_≺ when empty
    std::optional<Relation> order;
    // further pairs tested alongside the minimal pair, the top pair and the
    // pairs of every ideal
    std::vector<Pair> pairs;
    std::size_t       budget = enumeration_budget();
  };

  // Hypothesis entries hyp.O1, hyp.prec_order, hyp.way_below; when one
  // fails the remaining entries are skipped. Then: roundtrip (ψφ(I) = I on
  // closed ideals), ideal_pairs (φ(I) admissible normal left-closed),
  // counit (φψ(α) ≤ α on normal left-closed pairs), adjunction (I ⊆ I_α iff
  // α_I ≤ α), lattice.prequotient, lattice.quotient, ideal_quotient.
  AxiomReport galois_check(WSemigroup const& s, GaloisOptions const& options = {});

}  // namespace ordcalc

#endif
