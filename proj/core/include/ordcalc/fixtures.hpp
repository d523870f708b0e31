#ifndef ORDCALC_FIXTURES_HPP
#define ORDCALC_FIXTURES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "ordcalc/wsemigroup.hpp"

namespace ordcalc {

  struct Poset {
    std::size_t       points = 0;
    std::vector<Edge> less;  // generating strict relations, closed transitively
  };

  Poset antichain(std::size_t n);
  Poset chain(std::size_t n);

  struct Named {
    WSemigroup               semigroup;
    std::vector<std::string> names;
  };

  // {0..k}, saturating addition, ≺ = ≤
  Named nbar(std::size_t k);
  // {0..k, inf}, sums above k become inf, ≺ = ≤
  Named ninf(std::size_t k);
  // down-sets of p under union, ≺ = ⊆
  Named lattice(Poset const& p);
  // componentwise, first factor most significant
  Named product(std::vector<Named> const& factors);
  // every element x gets a companion x' with the same approximants but not
  // itself an approximant: (s,f) ≺ (t,g) iff f = 0 and s ≺ t
  Named doubled(Named const& base);

  // Textual specs: NBAR(k), NINF(k), LAT(n; a<b, ...), PROD(spec, ...),
  // DUP(spec). Throws std::invalid_argument on malformed input.
  Named make_fixture(std::string const& spec);

  // Index of the element with the given componentwise coordinates in a
  // product of factors with the given sizes.
  std::size_t product_index(std::vector<std::size_t> const& sizes,
                            std::vector<std::size_t> const& coords);

}  // namespace ordcalc

#endif
