#ifndef ORDCALC_ISO_HPP
#define ORDCALC_ISO_HPP

#include <optional>
#include <string>
#include <vector>

#include "ordcalc/wsemigroup.hpp"

namespace ordcalc {

  // Bijection preserving zero, addition and ≺ in both directions.
  bool is_isomorphism(WSemigroup const& a, WSemigroup const& b, std::vector<std::size_t> const& map);

  struct IsoResult {
    std::optional<std::vector<std::size_t>> map;
    // "canonical" when element invariants decide the question, "search"
    // when backtracking (at most 16 elements) was needed, "budget" when the
    // question was left open
    std::string method;
  };

  IsoResult find_isomorphism(WSemigroup const& a, WSemigroup const& b, std::size_t node_budget = 2'000'000);

  // Given surjections pa: S -> A and pb: S -> B, the map pa(x) |-> pb(x);
  // nullopt when it is not well defined or some element of A is not hit.
  std::optional<std::vector<std::size_t>> induced_map(std::vector<std::size_t> const& pa,
                                                      std::vector<std::size_t> const& pb,
                                                      std::size_t                     a_size);

}  // namespace ordcalc

#endif
