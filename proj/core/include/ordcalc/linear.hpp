#ifndef ORDCALC_LINEAR_HPP
#define ORDCALC_LINEAR_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace ordcalc {

  using Rational = mpq_class;
  using Vector   = std::vector<Rational>;

  enum class Sense { le, ge, eq };

  struct Constraint {
    Vector   coeffs;
    Sense    sense = Sense::le;
    Rational rhs;
  };

  class LinearSystem {
   public:
    explicit LinearSystem(std::size_t vars = 0) : _vars(vars) {}

    std::size_t vars() const noexcept {
      return _vars;
    }
    std::vector<Constraint> const& constraints() const noexcept {
      return _rows;
    }

    // throws std::invalid_argument on a coefficient vector of the wrong size
    void add(Vector coeffs, Sense sense, Rational rhs);
    // sparse helper: sum of c * x_i over the given terms
    void add_terms(std::vector<std::pair<std::size_t, Rational>> const& terms, Sense sense, Rational rhs);

    bool satisfied_by(Vector const& x) const;

   private:
    std::size_t             _vars;
    std::vector<Constraint> _rows;
  };

  // x = base + Σ t_k directions[k] describes the solutions of the equalities
  struct AffineHull {
    Vector              base;
    std::vector<Vector> directions;
  };

  // nullopt when the equalities are inconsistent
  std::optional<AffineHull> solve_equalities(LinearSystem const& sys);

  // Fourier–Motzkin elimination over the affine hull of the equalities, with
  // back substitution for a witness point. Throws BudgetExceeded when the
  // number of rows passes row_cap.
  std::optional<Vector> fourier_motzkin(LinearSystem const& sys, std::size_t row_cap = 20'000);

  // phase one of the simplex method with Bland's rule, free variables split
  std::optional<Vector> simplex_feasible(LinearSystem const& sys);

  // Fourier–Motzkin for at most 40 free parameters, simplex beyond that or
  // when elimination blows up.
  std::optional<Vector> feasible_point(LinearSystem const& sys);

  // Every vertex of the polyhedron, by solving each choice of tight rows in
  // the affine hull. A polyhedron containing a line has none. Throws
  // BudgetExceeded beyond `budget` row choices.
  std::vector<Vector> vertices(LinearSystem const& sys, std::size_t budget = 2'000'000);

}  // namespace ordcalc

#endif
