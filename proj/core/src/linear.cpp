#include "ordcalc/linear.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "ordcalc/budget.hpp"

namespace ordcalc {

  namespace {

    // a·t ≤ b after substituting the affine hull
    struct Row {
      Vector   a;
      Rational b;
    };

    // scale so the first nonzero coefficient is ±1
    void normalize(Row& r) {
      for (auto const& c : r.a)
        if (c != 0) {
          Rational s = abs(c);
          for (auto& x : r.a)
            x /= s;
          r.b /= s;
          return;
        }
    }

    bool all_zero(Vector const& a) {
      for (auto const& c : a)
        if (c != 0)
          return false;
      return true;
    }

    // tightest rhs per normalized direction; false when some row reads 0 ≤ b < 0
    bool insert_row(std::map<Vector, Rational>& rows, Row r) {
      normalize(r);
      if (all_zero(r.a))
        return r.b >= 0;
      auto [it, fresh] = rows.emplace(r.a, r.b);
      if (!fresh && r.b < it->second)
        it->second = r.b;
      return true;
    }

    Vector point_of(AffineHull const& h, Vector const& t) {
      Vector x = h.base;
      for (std::size_t k = 0; k < t.size(); ++k)
        if (t[k] != 0)
          for (std::size_t i = 0; i < x.size(); ++i)
            x[i] += t[k] * h.directions[k][i];
      return x;
    }

    // inequalities in hull coordinates; nullopt when one reduces to 0 ≤ b < 0
    std::optional<std::map<Vector, Rational>> reduce(LinearSystem const& sys, AffineHull const& h) {
      std::map<Vector, Rational> rows;
      std::size_t const          d = h.directions.size();
      for (auto const& c : sys.constraints()) {
        if (c.sense == Sense::eq)
          continue;
        Rational const sign = c.sense == Sense::le ? 1 : -1;
        Row            r{Vector(d), sign * c.rhs};
        for (std::size_t i = 0; i < sys.vars(); ++i) {
          if (c.coeffs[i] == 0)
            continue;
          r.b -= sign * c.coeffs[i] * h.base[i];
          for (std::size_t k = 0; k < d; ++k)
            r.a[k] += sign * c.coeffs[i] * h.directions[k][i];
        }
        if (!insert_row(rows, std::move(r)))
          return std::nullopt;
      }
      return rows;
    }

    // unique solution of a square system, nullopt when singular
    std::optional<Vector> solve_square(std::vector<Vector> m, Vector rhs) {
      std::size_t const n = rhs.size();
      for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col] == 0)
          ++piv;
        if (piv == n)
          return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == col || m[r][col] == 0)
            continue;
          Rational f = m[r][col] / m[col][col];
          for (std::size_t c = col; c < n; ++c)
            m[r][c] -= f * m[col][c];
          rhs[r] -= f * rhs[col];
        }
      }
      Vector x(n);
      for (std::size_t i = 0; i < n; ++i)
        x[i] = rhs[i] / m[i][i];
      return x;
    }

  }  // namespace

  void LinearSystem::add(Vector coeffs, Sense sense, Rational rhs) {
    if (coeffs.size() != _vars)
      throw std::invalid_argument("coefficient vector has the wrong size");
    _rows.push_back({std::move(coeffs), sense, std::move(rhs)});
  }

  void LinearSystem::add_terms(std::vector<std::pair<std::size_t, Rational>> const& terms, Sense sense, Rational rhs) {
    Vector coeffs(_vars);
    for (auto const& [i, c] : terms) {
      if (i >= _vars)
        throw std::invalid_argument("variable index out of range");
      coeffs[i] += c;
    }
    add(std::move(coeffs), sense, std::move(rhs));
  }

  bool LinearSystem::satisfied_by(Vector const& x) const {
    if (x.size() != _vars)
      return false;
    for (auto const& c : _rows) {
      Rational lhs = 0;
      for (std::size_t i = 0; i < _vars; ++i)
        lhs += c.coeffs[i] * x[i];
      if ((c.sense == Sense::le && lhs > c.rhs) || (c.sense == Sense::ge && lhs < c.rhs) ||
          (c.sense == Sense::eq && lhs != c.rhs))
        return false;
    }
    return true;
  }

  std::optional<AffineHull> solve_equalities(LinearSystem const& sys) {
    std::size_t const   n = sys.vars();
    std::vector<Vector> m;
    for (auto const& c : sys.constraints())
      if (c.sense == Sense::eq) {
        Vector row = c.coeffs;
        row.push_back(c.rhs);
        m.push_back(std::move(row));
      }

    // reduced row echelon form
    std::vector<std::size_t> pivots;
    std::size_t              r = 0;
    for (std::size_t col = 0; col < n && r < m.size(); ++col) {
      std::size_t piv = r;
      while (piv < m.size() && m[piv][col] == 0)
        ++piv;
      if (piv == m.size())
        continue;
      std::swap(m[piv], m[r]);
      Rational lead = m[r][col];
      for (auto& x : m[r])
        x /= lead;
      for (std::size_t o = 0; o < m.size(); ++o) {
        if (o == r || m[o][col] == 0)
          continue;
        Rational f = m[o][col];
        for (std::size_t c = col; c <= n; ++c)
          m[o][c] -= f * m[r][c];
      }
      pivots.push_back(col);
      ++r;
    }
    for (std::size_t o = r; o < m.size(); ++o)
      if (m[o][n] != 0)
        return std::nullopt;

    AffineHull        h{Vector(n), {}};
    std::vector<bool> is_pivot(n, false);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
      is_pivot[pivots[k]] = true;
      h.base[pivots[k]]   = m[k][n];
    }
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f])
        continue;
      Vector dir(n);
      dir[f] = 1;
      for (std::size_t k = 0; k < pivots.size(); ++k)
        dir[pivots[k]] = -m[k][f];
      h.directions.push_back(std::move(dir));
    }
    return h;
  }

  std::optional<Vector> fourier_motzkin(LinearSystem const& sys, std::size_t row_cap) {
    auto hull = solve_equalities(sys);
    if (!hull)
      return std::nullopt;
    auto reduced = reduce(sys, *hull);
    if (!reduced)
      return std::nullopt;
    std::size_t const d = hull->directions.size();

    std::map<Vector, Rational> rows = std::move(*reduced);
    std::vector<std::vector<Row>> stage(d);
    for (std::size_t j = d; j-- > 0;) {
      std::vector<Row>           pos, neg;
      std::map<Vector, Rational> next;
      for (auto const& [a, b] : rows) {
        if (a[j] > 0)
          pos.push_back({a, b});
        else if (a[j] < 0)
          neg.push_back({a, b});
        else
          next.emplace(a, b);
      }
      for (auto const& p : pos)
        for (auto const& q : neg) {
          Rational const fp = 1 / p.a[j];
          Rational const fq = -1 / q.a[j];
          Row            r{Vector(d), p.b * fp + q.b * fq};
          for (std::size_t i = 0; i < j; ++i)
            r.a[i] = p.a[i] * fp + q.a[i] * fq;
          if (!insert_row(next, std::move(r)))
            return std::nullopt;
          if (next.size() > row_cap)
            throw BudgetExceeded("Fourier–Motzkin rows", next.size(), row_cap);
        }
      stage[j] = std::move(pos);
      stage[j].insert(stage[j].end(), neg.begin(), neg.end());
      rows = std::move(next);
    }

    Vector t(d);
    for (std::size_t j = 0; j < d; ++j) {
      std::optional<Rational> lo, hi;
      for (auto const& r : stage[j]) {
        Rational rest = r.b;
        for (std::size_t i = 0; i < j; ++i)
          rest -= r.a[i] * t[i];
        Rational bound = rest / r.a[j];
        if (r.a[j] > 0)
          hi = hi ? std::min(*hi, bound) : bound;
        else
          lo = lo ? std::max(*lo, bound) : bound;
      }
      t[j] = lo ? *lo : hi ? *hi : Rational(0);
    }
    return point_of(*hull, t);
  }

  std::optional<Vector> simplex_feasible(LinearSystem const& sys) {
    std::size_t const n = sys.vars();
    auto const&       cs = sys.constraints();
    std::size_t const m  = cs.size();
    std::size_t       slacks = 0;
    for (auto const& c : cs)
      slacks += c.sense != Sense::eq;
    // columns: x+ (n), x- (n), slacks, artificials (m), rhs
    std::size_t const art  = 2 * n + slacks;
    std::size_t const cols = art + m;
    std::vector<Vector> t(m, Vector(cols + 1));
    std::size_t         s = 2 * n;
    for (std::size_t r = 0; r < m; ++r) {
      auto const& c = cs[r];
      for (std::size_t i = 0; i < n; ++i) {
        t[r][i]     = c.coeffs[i];
        t[r][n + i] = -c.coeffs[i];
      }
      if (c.sense == Sense::le)
        t[r][s++] = 1;
      else if (c.sense == Sense::ge)
        t[r][s++] = -1;
      t[r][cols] = c.rhs;
      if (c.rhs < 0)
        for (auto& x : t[r])
          x = -x;
      t[r][art + r] = 1;
    }
    std::vector<std::size_t> basis(m);
    for (std::size_t r = 0; r < m; ++r)
      basis[r] = art + r;

    // reduced costs of Σ artificials
    Vector z(cols + 1);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c <= cols; ++c)
        if (c < art || c == cols)
          z[c] -= t[r][c];

    while (true) {
      std::size_t enter = cols;
      for (std::size_t c = 0; c < cols && enter == cols; ++c)
        if (z[c] < 0)
          enter = c;
      if (enter == cols)
        break;
      std::size_t             leave = m;
      std::optional<Rational> best;
      for (std::size_t r = 0; r < m; ++r) {
        if (t[r][enter] <= 0)
          continue;
        Rational ratio = t[r][cols] / t[r][enter];
        if (!best || ratio < *best || (ratio == *best && basis[r] < basis[leave])) {
          best  = ratio;
          leave = r;
        }
      }
      if (leave == m)
        break;  // unbounded direction cannot lower a nonnegative objective
      Rational piv = t[leave][enter];
      for (auto& x : t[leave])
        x /= piv;
      for (std::size_t r = 0; r < m; ++r) {
        if (r == leave || t[r][enter] == 0)
          continue;
        Rational f = t[r][enter];
        for (std::size_t c = 0; c <= cols; ++c)
          t[r][c] -= f * t[leave][c];
      }
      if (z[enter] != 0) {
        Rational f = z[enter];
        for (std::size_t c = 0; c <= cols; ++c)
          z[c] -= f * t[leave][c];
      }
      basis[leave] = enter;
    }
    if (z[cols] != 0)
      return std::nullopt;

    Vector x(n);
    for (std::size_t r = 0; r < m; ++r) {
      if (basis[r] < n)
        x[basis[r]] += t[r][cols];
      else if (basis[r] < 2 * n)
        x[basis[r] - n] -= t[r][cols];
    }
    return x;
  }

  std::optional<Vector> feasible_point(LinearSystem const& sys) {
    auto hull = solve_equalities(sys);
    if (!hull)
      return std::nullopt;
    if (hull->directions.size() <= 40) {
      try {
        return fourier_motzkin(sys);
      } catch (BudgetExceeded const&) {
      }
    }
    return simplex_feasible(sys);
  }

  std::vector<Vector> vertices(LinearSystem const& sys, std::size_t budget) {
    auto hull = solve_equalities(sys);
    if (!hull)
      return {};
    auto reduced = reduce(sys, *hull);
    if (!reduced)
      return {};
    std::size_t const d = hull->directions.size();
    std::vector<Row>  rows;
    for (auto const& [a, b] : *reduced)
      rows.push_back({a, b});
    std::size_t const m = rows.size();
    if (d == 0)
      return {hull->base};
    if (m < d)
      return {};

    // C(m, d) with saturation
    std::size_t choices = 1;
    for (std::size_t k = 1; k <= d && choices <= budget; ++k)
      choices = choices * (m - d + k) / k;
    if (choices > budget)
      throw BudgetExceeded("vertex enumeration row choices", choices, budget);

    auto inside = [&](Vector const& t) {
      for (auto const& r : rows) {
        Rational lhs = 0;
        for (std::size_t i = 0; i < d; ++i)
          lhs += r.a[i] * t[i];
        if (lhs > r.b)
          return false;
      }
      return true;
    };

    std::set<Vector>         found;
    std::vector<std::size_t> pick(d);
    for (std::size_t i = 0; i < d; ++i)
      pick[i] = i;
    while (true) {
      std::vector<Vector> a;
      Vector              b;
      for (auto i : pick) {
        a.push_back(rows[i].a);
        b.push_back(rows[i].b);
      }
      if (auto t = solve_square(std::move(a), std::move(b)); t && inside(*t))
        found.insert(point_of(*hull, *t));
      std::size_t k = d;
      while (k > 0 && pick[k - 1] == m - d + k - 1)
        --k;
      if (k == 0)
        break;
      ++pick[k - 1];
      for (std::size_t i = k; i < d; ++i)
        pick[i] = pick[i - 1] + 1;
    }
    return {found.begin(), found.end()};
  }

}  // namespace ordcalc
