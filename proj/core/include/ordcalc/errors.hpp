#ifndef ORDCALC_ERRORS_HPP
#define ORDCALC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordcalc {

  // An input violated a documented precondition. The witness, when present,
  // names elements that exhibit the violation.
  class PreconditionError : public std::invalid_argument {
   public:
    PreconditionError(std::string const& what, std::vector<std::size_t> witness = {})
        : std::invalid_argument(what), _witness(std::move(witness)) {}

    std::vector<std::size_t> const& witness() const noexcept {
      return _witness;
    }

   private:
    std::vector<std::size_t> _witness;
  };

}  // namespace ordcalc

#endif
