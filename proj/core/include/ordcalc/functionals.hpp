#ifndef ORDCALC_FUNCTIONALS_HPP
#define ORDCALC_FUNCTIONALS_HPP

#include <array>
#include <optional>
#include <vector>

#include "ordcalc/completion.hpp"
#include "ordcalc/linear.hpp"

namespace ordcalc {

  // Finite on `finite`, ∞ elsewhere. values has one entry per element;
  // entries outside `finite` are ignored.
  struct ExtState {
    Subset finite;
    Vector values;

    std::optional<Rational> value(std::size_t a) const {
      if (!finite.test(a))
        return std::nullopt;
      return values[a];
    }
    bool operator==(ExtState const& other) const;
  };

  // the state that is 0 on j and ∞ off it
  ExtState zero_state(Subset const& j);

  // entries: shape, zero, nonnegative, finite_ideal, additive, monotone
  AxiomReport check_state(WSemigroup const& s, ExtState const& l);
  // state entries plus closed, ties (λ(a) = λ(c(a))), regular
  // (λ(a) = max over a' ≺ a)
  AxiomReport check_w_functional(WSemigroup const& s, ExtState const& l);
  bool        is_w_functional(WSemigroup const& s, ExtState const& l);

  // λ̄(a) = max_{a' ≺ a} λ(a')
  ExtState regularize(WSemigroup const& s, ExtState const& l);

  // Values of W-functionals finite exactly on the closed ideal j: zero,
  // additivity, monotonicity, ties to the cofinal element, invariance under
  // g. Variables are indexed by members(j).
  LinearSystem functional_system(WSemigroup const& s, Subset const& j, GroupAction const* g = nullptr);

  // A (g-invariant) W-functional with λ(b) = 1 and λ(a) ≥ 1, searched over
  // the (invariant) closed ideals containing b.
  std::optional<ExtState> separate(WSemigroup const&  s,
                                   std::size_t        a,
                                   std::size_t        b,
                                   GroupAction const* g      = nullptr,
                                   std::size_t        budget = enumeration_budget());

  // Extreme W-functionals: for each (invariant) closed ideal J, λ_J when the
  // cone of finite parts is {0}, else one state per vertex of the slice where
  // the values sum to 1.
  std::vector<ExtState> enumerate_functionals(WSemigroup const&  s,
                                              GroupAction const* g      = nullptr,
                                              std::size_t        budget = enumeration_budget());

  // Vertices of {λ ∈ Fun_W(S) finite everywhere : λ(u) = 1}.
  std::vector<ExtState> normalized_vertices(WSemigroup const& s, std::size_t u, GroupAction const* g = nullptr);

  struct AUResult {
    bool                                      holds = true;
    std::optional<std::array<std::size_t, 3>> witness;  // a, b, k
  };

  // (k+1)a ≺ kb for some k ≥ 1 implies a^≺ ⊆ b^≺. k runs until the pair
  // ((k+1)a, kb) repeats.
  AUResult almost_unperforated(WSemigroup const& s);

  struct ComparisonResult {
    bool                                      state_based   = true;
    bool                                      au_quotient   = true;
    bool                                      au_completion = true;
    std::optional<Edge>                       state_witness;  // a ∈ I_G(b), a ≰^G b, nothing separates
    std::optional<std::array<std::size_t, 3>> quotient_witness;
    std::optional<std::array<std::size_t, 3>> completion_witness;
    AxiomReport                               report;  // agree, states_valid
  };

  ComparisonResult dyn_strict_comparison(WSemigroup const&  s,
                                         GroupAction const& g,
                                         std::size_t        budget = enumeration_budget());

  // Throws PreconditionError unless u is an order unit of s. Entries:
  // gamma.full, gamma.normalized, quotient.full, quotient.normalized
  AxiomReport functional_transfer_check(WSemigroup const&  s,
                                        GroupAction const& g,
                                        std::size_t        u,
                                        std::size_t        budget = enumeration_budget());

  // {a : every a' ≪ a has (k+1)a' ≤ ka for some k ≥ 1}. Throws
  // PreconditionError unless c passes the Cu axioms.
  Subset soft_elements(WSemigroup const& c);

  // f : S → T an invariant W-morphism into a Cu-semigroup. With
  // φ : γ(S/G) → T induced by f, checks that for soft a, b with a ∈ I(b),
  // φ(a) ≤ φ(b) implies a ≤ b. Entries pre.* and conclusion (skipped when a
  // precondition fails); pullback surjectivity is checked on enumerated
  // extreme functionals only.
  AxiomReport soft_embedding_harness(WSemigroup const&  s,
                                     GroupAction const& g,
                                     WMorphism const&   f,
                                     std::size_t        budget = enumeration_budget());

}  // namespace ordcalc

#endif
