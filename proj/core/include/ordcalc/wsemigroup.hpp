#ifndef ORDCALC_WSEMIGROUP_HPP
#define ORDCALC_WSEMIGROUP_HPP

#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "ordcalc/monoid.hpp"
#include "ordcalc/relation.hpp"
#include "ordcalc/report.hpp"

namespace ordcalc {

  inline constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  // A finite commutative monoid with a distinguished relation prec (written ≺).
  // Construction only checks shapes; the W-axioms are checked by check_w_axioms.
  class WSemigroup {
   public:
    WSemigroup() = default;
    WSemigroup(FiniteMonoid m, Relation prec);

    std::size_t size() const noexcept {
      return _monoid.size();
    }
    std::size_t zero() const noexcept {
      return _monoid.zero();
    }
    std::size_t add(std::size_t a, std::size_t b) const {
      return _monoid.add(a, b);
    }
    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }
    Relation const& prec() const noexcept {
      return _prec;
    }
    bool precedes(std::size_t a, std::size_t b) const {
      return _prec.contains(a, b);
    }
    // a^≺ = {x : x ≺ a}
    Subset const& below(std::size_t a) const {
      return _below[a];
    }
    // {x : a ≺ x}
    Subset const& above(std::size_t a) const {
      return _prec.row(a);
    }
    // ≤_≺
    Relation const& leq() const noexcept {
      return _leq;
    }
    // Smallest c with c ≺ a, c ≺ c and a^≺ ⊆ c^≺; npos when none exists.
    std::size_t cofinal(std::size_t a) const {
      return _cofinal[a];
    }

    bool operator==(WSemigroup const& other) const {
      return _monoid == other._monoid && _prec == other._prec;
    }

   private:
    FiniteMonoid             _monoid;
    Relation                 _prec;
    Relation                 _leq;
    std::vector<Subset>      _below;
    std::vector<std::size_t> _cofinal;
  };

  // Same monoid, different relation.
  WSemigroup with_prec(WSemigroup const& s, Relation prec);

  struct WMorphism {
    WSemigroup               source;
    WSemigroup               target;
    std::vector<std::size_t> map;

    std::size_t operator()(std::size_t a) const {
      return map[a];
    }
  };

  WMorphism identity_morphism(WSemigroup const& s);
  WMorphism compose(WMorphism const& f, WMorphism const& g);  // g after f

  // transitivity, zero below all, W1 (finite form), W3, W4
  AxiomReport check_w_axioms(WSemigroup const& s);
  // W2 for an explicit pair: a is a leq-supremum of {x : x prec a}
  AxiomReport check_w2(Relation const& prec, Relation const& leq);
  // O1-O4 on the finite carrier ordered by ≤_≺ with ≪ computed from that order
  AxiomReport check_cu_axioms(WSemigroup const& s);
  AxiomReport check_morphism(WMorphism const& f);

  // Compact containment of a finite preorder: a ≪ b iff every increasing
  // sequence whose supremum dominates b eventually dominates a.
  Relation way_below(Relation const& leq);

  // W1 through the existence of a ≺-cycle in a^≺ that is cofinal; this
  // searches closed walks directly and is used to cross-check cofinal().
  bool w1_by_cycles(WSemigroup const& s, std::size_t a);

  // a'_i ≺ a_i and a1 + a2 ≺ b1 + b2 give x_ij with a'_i ≺ x_i1 + x_i2 and
  // x_1j + x_2j ≺ b_j
  std::optional<RefinementWitness> almost_refinement_failure(WSemigroup const& s);
  bool has_almost_refinement(WSemigroup const& s);

}  // namespace ordcalc

#endif
