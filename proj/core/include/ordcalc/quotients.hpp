#ifndef ORDCALC_QUOTIENTS_HPP
#define ORDCALC_QUOTIENTS_HPP

#include <vector>

#include "ordcalc/genpair.hpp"
#include "ordcalc/iso.hpp"

namespace ordcalc {

  struct QuotientResult {
    WSemigroup               quotient;
    WMorphism                projection;
    std::vector<std::size_t> class_of;        // element -> class
    std::vector<std::size_t> representative;  // class -> least element
  };

  // Same carrier with ≤∘≼. Throws PreconditionError unless p is normal and
  // admissible over s.
  WSemigroup prequotient(WSemigroup const& s, Pair const& p);

  // Antisymmetrization of the prequotient. Classes are numbered by their
  // least element.
  QuotientResult quotient(WSemigroup const& s, Pair const& p);

  // (≺_S, ≤_f) with a ≤_f b iff f(a)^≺ ⊆ f(b)^≺ in the target.
  Pair kernel(WMorphism const& f);

  class NoFactorization : public std::runtime_error {
   public:
    NoFactorization(int condition, Edge witness);
    int condition() const noexcept {
      return _condition;
    }
    Edge witness() const noexcept {
      return _witness;
    }

   private:
    int  _condition;
    Edge _witness;
  };

  struct Factorization {
    WMorphism      h;          // S/α -> T/α_T
    QuotientResult source;     // S/α
    QuotientResult target;     // T/α_T
    bool           embedding;  // h reflects the order
    AxiomReport    checks;     // morphism axioms of h and commutation
  };

  // Throws NoFactorization when p ≤ ker(f) fails, with the first violated
  // condition of the pair order.
  Factorization factor_through(WMorphism const& f, Pair const& p);

  // For each seed, α' is the normal pair generated by seed ∪ ≤ (its
  // extension when the generated pair is not above p). Checks the pair
  // induced on the prequotient, the two-stage/one-stage isomorphism, the
  // inverse construction and injectivity across seeds.
  AxiomReport correspondence_check(WSemigroup const& s, Pair const& p, std::vector<Relation> const& seeds);

  // (≤'∘≼', ≤') seen on the prequotient by p
  Pair induced_on_prequotient(Pair const& outer);

}  // namespace ordcalc

#endif
