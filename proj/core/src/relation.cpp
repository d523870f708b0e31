#include "ordcalc/relation.hpp"

#include <algorithm>
#include <stdexcept>

#include "ordcalc/report.hpp"

namespace ordcalc {

  namespace {
    void require_same(Relation const& a, Relation const& b) {
      if (a.size() != b.size())
        throw std::invalid_argument("relation size mismatch");
    }

    void require_carrier(Relation const& r, FiniteMonoid const& m) {
      if (r.size() != m.size())
        throw std::invalid_argument("relation not sized to the monoid carrier");
    }
  }  // namespace

  std::vector<std::size_t> members(Subset const& s) {
    std::vector<std::size_t> out;
    out.reserve(s.count());
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
      out.push_back(i);
    return out;
  }

  Subset make_subset(std::size_t n, std::vector<std::size_t> const& xs) {
    Subset s(n);
    for (auto x : xs)
      s.set(x);
    return s;
  }

  bool subset_less(Subset const& a, Subset const& b) {
    if (a.count() != b.count())
      return a.count() < b.count();
    return members(a) < members(b);
  }

  Relation::Relation(std::size_t n) : _rows(n, Subset(n)) {}

  Relation Relation::identity(std::size_t n) {
    Relation r(n);
    for (std::size_t a = 0; a < n; ++a)
      r.add(a, a);
    return r;
  }

  Relation Relation::full(std::size_t n) {
    Relation r(n);
    for (auto& row : r._rows)
      row.set();
    return r;
  }

  Relation Relation::from_pairs(std::size_t n, std::vector<Edge> const& pairs) {
    Relation r(n);
    for (auto [a, b] : pairs) {
      if (a >= n || b >= n)
        throw std::out_of_range("pair outside the carrier");
      r.add(a, b);
    }
    return r;
  }

  Subset Relation::column(std::size_t b) const {
    Subset out(size());
    for (std::size_t a = 0; a < size(); ++a)
      if (_rows[a][b])
        out.set(a);
    return out;
  }

  Relation Relation::transpose() const {
    Relation t(size());
    for (std::size_t a = 0; a < size(); ++a)
      for (auto b = _rows[a].find_first(); b != Subset::npos; b = _rows[a].find_next(b))
        t.add(b, a);
    return t;
  }

  std::vector<Edge> Relation::pairs() const {
    std::vector<Edge> out;
    for (std::size_t a = 0; a < size(); ++a)
      for (auto b = _rows[a].find_first(); b != Subset::npos; b = _rows[a].find_next(b))
        out.emplace_back(a, b);
    return out;
  }

  std::size_t Relation::count() const {
    std::size_t c = 0;
    for (auto const& row : _rows)
      c += row.count();
    return c;
  }

  bool Relation::empty() const {
    return std::all_of(_rows.begin(), _rows.end(), [](Subset const& r) { return r.none(); });
  }

  bool Relation::is_subset_of(Relation const& other) const {
    require_same(*this, other);
    for (std::size_t a = 0; a < size(); ++a)
      if (!_rows[a].is_subset_of(other._rows[a]))
        return false;
    return true;
  }

  bool Relation::is_reflexive() const {
    for (std::size_t a = 0; a < size(); ++a)
      if (!_rows[a][a])
        return false;
    return true;
  }

  bool Relation::is_symmetric() const {
    return *this == transpose();
  }

  bool Relation::is_antisymmetric() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (auto b = _rows[a].find_first(); b != Subset::npos; b = _rows[a].find_next(b))
        if (b != a && _rows[b][a])
          return false;
    return true;
  }

  bool Relation::is_transitive() const {
    return compose(*this, *this).is_subset_of(*this);
  }

  Relation& Relation::operator|=(Relation const& other) {
    require_same(*this, other);
    for (std::size_t a = 0; a < size(); ++a)
      _rows[a] |= other._rows[a];
    return *this;
  }

  Relation& Relation::operator&=(Relation const& other) {
    require_same(*this, other);
    for (std::size_t a = 0; a < size(); ++a)
      _rows[a] &= other._rows[a];
    return *this;
  }

  Relation operator|(Relation lhs, Relation const& rhs) {
    return lhs |= rhs;
  }

  Relation operator&(Relation lhs, Relation const& rhs) {
    return lhs &= rhs;
  }

  std::optional<Edge> first_missing(Relation const& lhs, Relation const& rhs) {
    require_same(lhs, rhs);
    for (std::size_t a = 0; a < lhs.size(); ++a) {
      Subset diff = lhs.row(a) - rhs.row(a);
      if (diff.any())
        return Edge{a, diff.find_first()};
    }
    return std::nullopt;
  }

  Relation compose(Relation const& r1, Relation const& r2) {
    require_same(r1, r2);
    Relation out(r1.size());
    for (std::size_t a = 0; a < r1.size(); ++a) {
      auto const& mid = r1.row(a);
      for (auto c = mid.find_first(); c != Subset::npos; c = mid.find_next(c))
        out.row(a) |= r2.row(c);
    }
    return out;
  }

  Relation compose(std::vector<Relation const*> const& chain) {
    if (chain.empty())
      throw std::invalid_argument("empty composition");
    Relation out = *chain.back();
    for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it)
      out = compose(**it, out);
    return out;
  }

  Relation transitive_closure(Relation const& r) {
    Relation out = r;
    std::size_t n = r.size();
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t a = 0; a < n; ++a)
        if (out.contains(a, k))
          out.row(a) |= out.row(k);
    return out;
  }

  Relation preorder_closure(Relation const& r) {
    return transitive_closure(r | Relation::identity(r.size()));
  }

  bool is_dense(Relation const& r) {
    return r.is_subset_of(compose(r, r));
  }

  Relation induced_preorder(Relation const& prec) {
    std::size_t n    = prec.size();
    Relation    cols = prec.transpose();
    Relation    out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (cols.row(a).is_subset_of(cols.row(b)))
          out.add(a, b);
    return out;
  }

  Subset down_closure(Relation const& r, Subset const& xs) {
    Subset out(r.size());
    for (std::size_t a = 0; a < r.size(); ++a)
      if (r.row(a).intersects(xs))
        out.set(a);
    return out;
  }

  Subset up_closure(Relation const& r, Subset const& xs) {
    Subset out(r.size());
    for (auto x = xs.find_first(); x != Subset::npos; x = xs.find_next(x))
      out |= r.row(x);
    return out;
  }

  Relation sum(Relation const& r1, Relation const& r2, FiniteMonoid const& m) {
    require_same(r1, r2);
    require_carrier(r1, m);
    std::size_t n = m.size();
    Relation    out(n);
    for (std::size_t a = 0; a < n; ++a) {
      if (r1.row(a).none())
        continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (r2.row(c).none())
          continue;
        auto& row = out.row(m.add(a, c));
        for (auto b = r1.row(a).find_first(); b != Subset::npos; b = r1.row(a).find_next(b))
          for (auto d = r2.row(c).find_first(); d != Subset::npos; d = r2.row(c).find_next(d))
            row.set(m.add(b, d));
      }
    }
    return out;
  }

  Relation additive_closure(Relation const& r, FiniteMonoid const& m) {
    require_carrier(r, m);
    // Semi-naive: only sums involving a freshly added pair can be new.
    Relation          out   = r;
    std::vector<Edge> fresh = r.pairs();
    std::size_t const cap   = m.size() * m.size() + 1;
    for (std::size_t round = 0; !fresh.empty(); ++round) {
      if (round > cap)
        throw std::logic_error("additive_closure did not stabilize");
      auto              known = out.pairs();
      std::vector<Edge> next;
      for (auto [a, b] : fresh)
        for (auto [c, d] : known) {
          auto x = m.add(a, c), y = m.add(b, d);
          if (!out.contains(x, y)) {
            out.add(x, y);
            next.emplace_back(x, y);
          }
        }
      fresh = std::move(next);
    }
    return out;
  }

  bool is_additive(Relation const& r, FiniteMonoid const& m) {
    return sum(r, r, m).is_subset_of(r);
  }

  Subset set_sum(Subset const& xs, Subset const& ys, FiniteMonoid const& m) {
    Subset out(m.size());
    for (auto x = xs.find_first(); x != Subset::npos; x = xs.find_next(x))
      for (auto y = ys.find_first(); y != Subset::npos; y = ys.find_next(y))
        out.set(m.add(x, y));
    return out;
  }

  bool is_auxiliary(Relation const& r, Relation const& leq) {
    return r.is_subset_of(leq) && compose({&leq, &r, &leq}).is_subset_of(r);
  }

  std::optional<Edge> left_continuity_failure(Relation const& r, Relation const& prec) {
    return first_missing(compose(prec, r), compose({&prec, &r, &prec}));
  }

  std::optional<Edge> almost_transitivity_failure(Relation const& r, Relation const& prec) {
    auto q = compose({&prec, &r, &prec});
    return first_missing(compose({&q, &r, &prec}), q);
  }

  bool RelationProfile::almost_refinement() const {
    if (refinement.empty())
      return false;
    return std::all_of(refinement.begin(), refinement.end(), [](auto const& kv) { return kv.second; });
  }

  RelationProfile classify(Relation const&        r,
                           Relation const&        prec,
                           Relation const&        leq,
                           FiniteMonoid const*    m,
                           ClassifyOptions const& opts) {
    require_same(r, prec);
    require_same(r, leq);
    RelationProfile p;
    p.transitive                  = r.is_transitive();
    p.dense                       = is_dense(r);
    p.auxiliary                   = is_auxiliary(r, leq);
    p.left_continuity_witness     = left_continuity_failure(r, prec);
    p.left_continuous             = !p.left_continuity_witness;
    p.almost_transitivity_witness = almost_transitivity_failure(r, prec);
    p.almost_transitive           = !p.almost_transitivity_witness;
    if (m != nullptr) {
      require_carrier(r, *m);
      if (opts.additive_flags)
        p.additive = is_additive(r, *m);
      if (opts.refinement_flags) {
        auto q = compose({&prec, &r, &prec});
        for (std::size_t i = 1; i <= opts.max_refinement; ++i)
          for (std::size_t j = 1; j <= opts.max_refinement; ++j)
            p.refinement[{i, j}] = !refinement_failure(prec, q, q, *m, i, j);
      }
    }
    return p;
  }

}  // namespace ordcalc
