#ifndef ORDCALC_PAIRS_HPP
#define ORDCALC_PAIRS_HPP

#include <optional>
#include <string>

#include "ordcalc/errors.hpp"
#include "ordcalc/relation.hpp"
#include "ordcalc/report.hpp"
#include "ordcalc/wsemigroup.hpp"

namespace ordcalc {

  // (≼, ≤): a transitive relation and a preorder on one carrier.
  struct Pair {
    Relation aux;
    Relation order;

    bool operator==(Pair const& other) const = default;
  };

  struct PairProfile {
    bool admissible  = false;
    bool prenormal   = false;
    bool left_closed = false;
    bool normal      = false;
    bool auxiliary   = false;
    // one entry per elementary condition, each failure carrying the
    // lexicographically smallest offending pair
    AxiomReport details;
  };

  // Flags relative to the relation `ambient` (normally the ≺ of s). The
  // monoid is only consulted for the normal flag and may be null.
  PairProfile classify_pair(Relation const& ambient, FiniteMonoid const* m, Pair const& p);
  PairProfile classify_pair(WSemigroup const& s, Pair const& p);

  // (≺, ≤_≺)
  Pair minimal_pair(WSemigroup const& s);

  // a^{≤∘≼} ⊆ b^{≤∘≼}
  Relation downset_order(Pair const& p);

  struct PairOrderFailure {
    int  condition;  // 1, 2 or 3
    Edge witness;
  };
  // nullopt when p1 ≤ p2. Throws PreconditionError if either pair is not
  // admissible.
  std::optional<PairOrderFailure> pair_order_failure(WSemigroup const& s, Pair const& p1, Pair const& p2);
  bool pair_leq(WSemigroup const& s, Pair const& p1, Pair const& p2);

  // Conditions (i)-(v) characterizing pull-backs of dense transitive
  // relations, each evaluated on its own, plus an "agree" entry.
  AxiomReport pullback_battery(WSemigroup const& s, Relation const& aux2);

  // ≼ is ≺-prenormal: transitive, ≺ ⊆ ≼ and ≼ = ≼∘≺.
  bool is_prenormal_relation(Relation const& aux, Relation const& prec);

  // Transfer of prenormality and closedness between (≺, ≤) and (≼, ≤), and
  // the four-way characterization of prenormal closed pairs (≺, ≤). The
  // existential conditions range over ≤∘≺∘≤, ≼ and ≤∘≼∘≤. Individual
  // conditions may fail; consistency is recorded in base_admissible,
  // prenormal_transfer, closed_transfer and characterization.agree.
  AxiomReport prenormal_transfer_check(WSemigroup const& s, Pair const& p);

}  // namespace ordcalc

#endif
