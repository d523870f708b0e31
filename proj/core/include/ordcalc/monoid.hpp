#ifndef ORDCALC_MONOID_HPP
#define ORDCALC_MONOID_HPP

#include <cstddef>
#include <vector>

namespace ordcalc {

  class AxiomReport;

  // Finite commutative monoid given by its addition table.
  class FiniteMonoid {
   public:
    FiniteMonoid() = default;
    // table is row-major, size n * n; throws std::invalid_argument on shape errors
    FiniteMonoid(std::size_t n, std::size_t zero, std::vector<std::size_t> table);

    std::size_t size() const noexcept {
      return _n;
    }
    std::size_t zero() const noexcept {
      return _zero;
    }
    std::size_t add(std::size_t a, std::size_t b) const {
      return _table[a * _n + b];
    }
    // k * a, with 0 * a = zero
    std::size_t multiple(std::size_t k, std::size_t a) const;

    std::vector<std::size_t> const& table() const noexcept {
      return _table;
    }

    bool operator==(FiniteMonoid const& other) const = default;

   private:
    std::size_t              _n    = 0;
    std::size_t              _zero = 0;
    std::vector<std::size_t> _table;
  };

  // Identity, commutativity and associativity, each with a witness on failure.
  AxiomReport check_monoid(FiniteMonoid const& m);

}  // namespace ordcalc

#endif
