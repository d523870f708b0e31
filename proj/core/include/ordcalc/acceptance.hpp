#ifndef ORDCALC_ACCEPTANCE_HPP
#define ORDCALC_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ordcalc/corpus.hpp"

namespace ordcalc {

  // Thresholds of the acceptance suite.
  namespace limits {
    inline constexpr double      oracle_seconds      = 60.0;
    inline constexpr double      flagship_seconds    = 10.0;
    inline constexpr double      suite_seconds       = 300.0;
    inline constexpr std::size_t oracle_max_size     = 9;
    inline constexpr std::size_t oracle_seeds        = 200;
    inline constexpr std::size_t enlarged_pairs      = 100;
    inline constexpr std::size_t min_morphisms       = 20;
    inline constexpr std::size_t min_action_cases    = 12;
    inline constexpr std::size_t galois_max_size     = 12;
    inline constexpr std::size_t sequence_max_size   = 7;
    inline constexpr std::size_t ideal_budget        = 64;
    inline constexpr std::size_t pairs_per_morphism  = 15;
  }  // namespace limits

  // Something a criterion asserts exists; revalidate() recomputes it from
  // the fixture alone.
  //  au: (k+1)a ≺ kb and a^≺ ⊄ b^≺ in the fixture (elements a, b, k)
  //  au_quotient: the same in S/G
  //  strict_comparison: a ∈ I_G(b), a ≰ b in S/G, and nothing separates
  struct Witness {
    std::string              kind;
    ActionCase               source;
    std::vector<std::size_t> elements;
  };

  bool revalidate(Witness const& w);

  // (k+1)a ≺ kb while a ≰ b
  bool is_au_violation(WSemigroup const& s, std::size_t a, std::size_t b, std::size_t k);

  struct CriterionResult {
    int                  id = 0;
    std::string          title;
    bool                 passed = false;
    std::string          detail;
    double               seconds = 0;
    std::vector<Witness> witnesses;
  };

  struct AcceptanceOptions {
    std::uint64_t seed = 20261016;
  };

  // criteria 1..9
  CriterionResult run_criterion(int id, AcceptanceOptions const& options = {});

  std::string format_result(CriterionResult const& r);

}  // namespace ordcalc

#endif
