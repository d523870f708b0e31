#ifndef ORDCALC_GENPAIR_HPP
#define ORDCALC_GENPAIR_HPP

#include <array>

#include "ordcalc/pairs.hpp"

namespace ordcalc {

  // ≺ ∪ ≺∘(R∘≺)^n for n ≥ 1, computed as (≺∘R)* ∘ ≺.
  Relation chain_relation(Relation const& prec, Relation const& r);

  // a ≤ b iff every c ≺ a has (c, b) in `reach`.
  Relation order_from_reach(Relation const& prec, Relation const& reach);

  // Relation-level generation over any dense transitive `prec`. Throws
  // PreconditionError (witness: a failing pair) unless r is left
  // prec-continuous.
  Pair generate_prenormal(Relation const& prec, Relation const& r);
  Pair generate_prenormal(WSemigroup const& s, Relation const& r);
  // (R + id)_+ followed by generate_prenormal
  Pair generate_normal(WSemigroup const& s, Relation const& r);

  // (≤∘≺∘≤, ≤) for a pair (≺, ≤)
  Pair extension(Pair const& p);

  // Rules of the least-fixpoint characterization.
  enum class Rule { transitive, closure, additive };
  using RuleOrder = std::array<Rule, 3>;
  inline constexpr RuleOrder default_rule_order{Rule::transitive, Rule::closure, Rule::additive};

  // Least preorder containing ≤_≺ and r that is closed under the closure
  // rule and, when `additive`, under sums of pairs. Rules are applied one
  // pass at a time in `order` until nothing changes. No continuity
  // assumption is made.
  Relation fixpoint_oracle(Relation const&     prec,
                           FiniteMonoid const* m,
                           Relation const&     r,
                           bool                additive,
                           RuleOrder const&    order = default_rule_order);
  Relation fixpoint_oracle(WSemigroup const& s,
                           Relation const&   r,
                           bool              additive,
                           RuleOrder const&  order = default_rule_order);

  // a ≤ b iff every c ≺ a has c ≺ b or (c, b) ∈ ≺∘step∘≺. With `pure`, the
  // first alternative is dropped.
  Relation one_step_order(Relation const& prec, Relation const& step, bool pure = false);

  // Single-step forms of ≤^R and of the normal order. Preconditions: r left
  // continuous and almost transitive; for the normal form also almost
  // (1,2)- and (2,1)-refinement of r and almost refinement of s. Unmet
  // preconditions raise PreconditionError.
  Relation one_step_form(WSemigroup const& s, Relation const& r);
  Relation one_step_normal_form(WSemigroup const& s, Relation const& r);

  // Compares the single-step forms with the chain form without enforcing
  // preconditions. Entries: left_continuous, almost_transitive,
  // almost_refinement (normal only), agrees, and pure_agrees when id ⊆ r.
  AxiomReport one_step_comparison(WSemigroup const& s, Relation const& r, bool normal);

}  // namespace ordcalc

#endif
