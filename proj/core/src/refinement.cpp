#include <map>
#include <stdexcept>

#include "ordcalc/relation.hpp"

namespace ordcalc {

  namespace {

    // Tuples over {0..n-1} of a fixed length, enumerated lexicographically
    // with the last coordinate fastest.
    bool next_tuple(std::vector<std::size_t>& t, std::size_t n) {
      for (std::size_t p = t.size(); p-- > 0;) {
        if (++t[p] < n)
          return true;
        t[p] = 0;
      }
      return false;
    }

    std::size_t flat(std::vector<std::size_t> const& t, std::size_t n) {
      std::size_t i = 0;
      for (auto x : t)
        i = i * n + x;
      return i;
    }

    struct Context {
      Relation const&     prec;
      Relation const&     link;
      FiniteMonoid const& m;
      std::size_t         n;

      // {a : a ≺ x for some x in xs}
      Subset down(Subset const& xs) const {
        return down_closure(prec, xs);
      }
      // {x : x link y for some y in ys}
      Subset link_down(Subset const& ys) const {
        return down_closure(link, ys);
      }
      Subset zero_set() const {
        Subset z(n);
        z.set(m.zero());
        return z;
      }
      Subset below(std::size_t b) const {
        return prec.column(b);
      }
    };

    // Conclusion sets, indexed by the flattened lower tuple.
    using Marks = std::vector<char>;

    void mark_product(Marks& marks, std::vector<Subset> const& factors, std::size_t n) {
      std::vector<std::vector<std::size_t>> lists;
      for (auto const& f : factors) {
        lists.push_back(members(f));
        if (lists.back().empty())
          return;
      }
      std::vector<std::size_t> idx(factors.size(), 0);
      while (true) {
        std::size_t i = 0;
        for (std::size_t r = 0; r < factors.size(); ++r)
          i = i * n + lists[r][idx[r]];
        marks[i] = 1;
        std::size_t p = factors.size();
        while (p-- > 0) {
          if (++idx[p] < lists[p].size())
            break;
          idx[p] = 0;
        }
        if (p == static_cast<std::size_t>(-1))
          return;
      }
    }

    Marks conclusion_one_row(Context const& cx, std::vector<std::size_t> const& upper) {
      Subset acc = cx.zero_set();
      for (auto b : upper)
        acc = set_sum(acc, cx.link_down(cx.below(b)), cx.m);
      Marks out(cx.n, 0);
      for (auto x : members(cx.down(acc)))
        out[x] = 1;
      return out;
    }

    // rows = 2, any single column
    Marks conclusion_two_rows_one_col(Context const& cx, std::size_t b) {
      Marks out(cx.n * cx.n, 0);
      for (std::size_t y1 = 0; y1 < cx.n; ++y1) {
        Subset partners(cx.n);
        for (std::size_t y2 = 0; y2 < cx.n; ++y2)
          if (cx.prec.contains(cx.m.add(y1, y2), b))
            partners.set(y2);
        if (partners.none())
          continue;
        Subset first  = cx.down(cx.link_down(make_subset(cx.n, {y1})));
        Subset second = cx.down(cx.link_down(partners));
        mark_product(out, {first, second}, cx.n);
      }
      return out;
    }

    class TwoByTwo {
     public:
      explicit TwoByTwo(Context const& cx) : _cx(cx) {
        // partner sets {y' : y + y' ≺ b}, pushed through link, interned
        _partner.assign(cx.n, std::vector<std::size_t>(cx.n, 0));
        for (std::size_t y = 0; y < cx.n; ++y)
          for (std::size_t b = 0; b < cx.n; ++b) {
            Subset partners(cx.n);
            for (std::size_t y2 = 0; y2 < cx.n; ++y2)
              if (cx.prec.contains(cx.m.add(y, y2), b))
                partners.set(y2);
            _partner[y][b] = intern(partners.none() ? partners : cx.link_down(partners));
          }
        _single.resize(cx.n);
        for (std::size_t y = 0; y < cx.n; ++y)
          _single[y] = cx.link_down(make_subset(cx.n, {y}));
      }

      Marks conclusion(std::size_t b1, std::size_t b2) {
        Marks out(_cx.n * _cx.n, 0);
        for (std::size_t y11 = 0; y11 < _cx.n; ++y11) {
          auto i1 = _partner[y11][b1];
          if (_pool[i1].none())
            continue;
          for (std::size_t y12 = 0; y12 < _cx.n; ++y12) {
            auto i2 = _partner[y12][b2];
            if (_pool[i2].none())
              continue;
            Subset const& second = reach(i1, i2);
            Subset first = _cx.down(set_sum(_single[y11], _single[y12], _cx.m));
            mark_product(out, {first, second}, _cx.n);
          }
        }
        return out;
      }

     private:
      std::size_t intern(Subset const& s) {
        auto it = _ids.find(s);
        if (it != _ids.end())
          return it->second;
        _pool.push_back(s);
        _ids.emplace(s, _pool.size() - 1);
        return _pool.size() - 1;
      }

      Subset const& reach(std::size_t i1, std::size_t i2) {
        auto key = std::make_pair(i1, i2);
        auto it  = _reach.find(key);
        if (it == _reach.end())
          it = _reach.emplace(key, _cx.down(set_sum(_pool[i1], _pool[i2], _cx.m))).first;
        return it->second;
      }

      Context const&                                        _cx;
      std::vector<std::vector<std::size_t>>                 _partner;
      std::vector<Subset>                                   _single;
      std::vector<Subset>                                   _pool;
      std::map<Subset, std::size_t>                         _ids;
      std::map<std::pair<std::size_t, std::size_t>, Subset> _reach;
    };

    // Any shape: enumerate y matrices column by column.
    Marks conclusion_generic(Context const&                  cx,
                             std::size_t                     rows,
                             std::vector<std::size_t> const& upper) {
      std::size_t const                                  cols = upper.size();
      std::vector<std::vector<std::vector<std::size_t>>> options(cols);
      for (std::size_t j = 0; j < cols; ++j) {
        std::vector<std::size_t> t(rows, 0);
        do {
          std::size_t s = cx.m.zero();
          for (auto y : t)
            s = cx.m.add(s, y);
          if (cx.prec.contains(s, upper[j]))
            options[j].push_back(t);
        } while (next_tuple(t, cx.n));
        if (options[j].empty())
          return Marks(flat(std::vector<std::size_t>(rows, cx.n - 1), cx.n) + 1, 0);
      }
      std::size_t total = 1;
      for (std::size_t r = 0; r < rows; ++r)
        total *= cx.n;
      Marks                    out(total, 0);
      std::vector<std::size_t> pick(cols, 0);
      while (true) {
        std::vector<Subset> factors;
        for (std::size_t r = 0; r < rows; ++r) {
          Subset acc = cx.zero_set();
          for (std::size_t j = 0; j < cols; ++j)
            acc = set_sum(acc, cx.link_down(make_subset(cx.n, {options[j][pick[j]][r]})), cx.m);
          factors.push_back(cx.down(acc));
        }
        mark_product(out, factors, cx.n);
        std::size_t p = cols;
        while (p-- > 0) {
          if (++pick[p] < options[p].size())
            break;
          pick[p] = 0;
        }
        if (p == static_cast<std::size_t>(-1))
          break;
      }
      return out;
    }

  }  // namespace

  std::optional<RefinementWitness> refinement_failure(Relation const&     prec,
                                                      Relation const&     hyp,
                                                      Relation const&     link,
                                                      FiniteMonoid const& m,
                                                      std::size_t         rows,
                                                      std::size_t         cols) {
    std::size_t const n = m.size();
    if (prec.size() != n || hyp.size() != n || link.size() != n)
      throw std::invalid_argument("relation size mismatch");
    if (rows == 0 || cols == 0)
      throw std::invalid_argument("refinement shape must be positive");
    Context cx{prec, link, m, n};

    // For each lower tuple, the set of sums b reachable from some a ≻ lower.
    std::vector<Subset>      hyp_targets;
    std::vector<std::size_t> lower(rows, 0);
    do {
      Subset acc = cx.zero_set();
      for (auto l : lower)
        acc = set_sum(acc, prec.row(l), m);
      hyp_targets.push_back(up_closure(hyp, acc));
    } while (next_tuple(lower, n));

    std::optional<TwoByTwo>  two;
    std::vector<std::size_t> upper(cols, 0);
    do {
      std::size_t sb = m.zero();
      for (auto b : upper)
        sb = m.add(sb, b);
      bool needed = false;
      for (auto const& t : hyp_targets)
        needed = needed || t[sb];
      if (!needed)
        continue;

      Marks marks;
      if (rows == 1)
        marks = conclusion_one_row(cx, upper);
      else if (rows == 2 && cols == 1)
        marks = conclusion_two_rows_one_col(cx, upper[0]);
      else if (rows == 2 && cols == 2) {
        if (!two)
          two.emplace(cx);
        marks = two->conclusion(upper[0], upper[1]);
      } else
        marks = conclusion_generic(cx, rows, upper);

      std::vector<std::size_t> low(rows, 0);
      std::size_t              i = 0;
      do {
        if (hyp_targets[i][sb] && !marks[i])
          return RefinementWitness{low, upper};
        ++i;
      } while (next_tuple(low, n));
    } while (next_tuple(upper, n));
    return std::nullopt;
  }

}  // namespace ordcalc
