#include "ordcalc/budget.hpp"

#include <cstdlib>

namespace ordcalc {

  std::size_t enumeration_budget() {
    constexpr std::size_t fallback = 20;
    char const*           env      = std::getenv("ORDCALC_BUDGET");
    if (env == nullptr || *env == '\0')
      return fallback;
    char*              end   = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (*end != '\0' || value == 0)
      return fallback;
    return static_cast<std::size_t>(value);
  }

  BudgetExceeded::BudgetExceeded(std::string const& what, std::size_t size, std::size_t budget)
      : std::runtime_error(what + ": carrier of size " + std::to_string(size) + " exceeds the enumeration budget " +
                           std::to_string(budget)),
        _size(size),
        _budget(budget) {}

  void require_budget(std::string const& what, std::size_t size, std::size_t budget) {
    if (size > budget)
      throw BudgetExceeded(what, size, budget);
  }

}  // namespace ordcalc
