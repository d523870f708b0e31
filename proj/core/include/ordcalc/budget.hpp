#ifndef ORDCALC_BUDGET_HPP
#define ORDCALC_BUDGET_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ordcalc {

  // Largest carrier the exhaustive enumerations accept: ORDCALC_BUDGET when
  // set to a positive integer, else 20.
  std::size_t enumeration_budget();

  class BudgetExceeded : public std::runtime_error {
   public:
    BudgetExceeded(std::string const& what, std::size_t size, std::size_t budget);
    std::size_t size() const noexcept {
      return _size;
    }
    std::size_t budget() const noexcept {
      return _budget;
    }

   private:
    std::size_t _size;
    std::size_t _budget;
  };

  // throws BudgetExceeded when size > budget
  void require_budget(std::string const& what, std::size_t size, std::size_t budget);

}  // namespace ordcalc

#endif
