#ifndef ORDCALC_CORPUS_HPP
#define ORDCALC_CORPUS_HPP

#include <random>
#include <string>
#include <vector>

#include "ordcalc/dynamics.hpp"

namespace ordcalc {

  // Fixture specs used across the acceptance suite, smallest first.
  std::vector<std::string> fixture_corpus(std::size_t max_size = 64);

  struct NamedMorphism {
    std::string name;
    WMorphism   f;
  };

  // identities, truncated addition NBAR(k)² → NBAR(k), truncations,
  // projections, DUP collapse and embedding, NINF maps, lattice join
  std::vector<NamedMorphism> morphism_corpus();

  // (x, y) ↦ min(x + y, k)
  WMorphism truncated_addition(std::size_t k);

  struct ActionCase {
    std::string              spec;
    std::size_t              side = 0;  // factor size; 0 for the trivial action
    std::vector<Permutation> sigmas;    // coordinate permutations

    WSemigroup  semigroup() const;
    GroupAction action(WSemigroup const& s) const;
    std::string name() const;
  };

  std::vector<ActionCase> action_corpus();

  // ≺∘R∘≺ for a random R of the given density; always left ≺-continuous
  Relation random_seed(WSemigroup const& s, std::mt19937_64& rng, double density);

}  // namespace ordcalc

#endif
