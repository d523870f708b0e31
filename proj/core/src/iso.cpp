#include "ordcalc/iso.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace ordcalc {

  namespace {

    constexpr std::size_t search_limit = 16;

    using Invariant = std::vector<std::size_t>;

    // Properties preserved by every isomorphism, refined once by the
    // invariants of the elements below.
    std::vector<Invariant> invariants(WSemigroup const& s) {
      std::size_t const      n = s.size();
      std::vector<Invariant> base(n);
      for (std::size_t a = 0; a < n; ++a) {
        // index and period of the cyclic submonoid generated by a
        std::vector<std::size_t> seen(n, npos);
        std::size_t              x = s.zero(), step = 0;
        while (seen[x] == npos) {
          seen[x] = step++;
          x       = s.add(x, a);
        }
        std::size_t absorbed = 0, fixed = 0;
        for (std::size_t b = 0; b < n; ++b) {
          absorbed += s.add(a, b) == a;
          fixed += s.add(a, b) == b;
        }
        base[a] = {a == s.zero(), s.precedes(a, a), s.below(a).count(), s.above(a).count(),
                   s.leq().column(a).count(), seen[x], step - seen[x], absorbed, fixed};
      }
      std::vector<Invariant> out(n);
      for (std::size_t a = 0; a < n; ++a) {
        std::vector<Invariant> down;
        for (std::size_t x = 0; x < n; ++x)
          if (s.precedes(x, a))
            down.push_back(base[x]);
        std::sort(down.begin(), down.end());
        out[a] = base[a];
        for (auto const& d : down)
          out[a].insert(out[a].end(), d.begin(), d.end());
        out[a].push_back(npos);
      }
      return out;
    }

    class Search {
     public:
      Search(WSemigroup const& a, WSemigroup const& b, std::vector<Invariant> const& ia,
             std::vector<Invariant> const& ib, std::size_t budget)
          : _a(a), _b(b), _ia(ia), _ib(ib), _budget(budget), _map(a.size(), npos), _used(b.size(), 0) {}

      std::optional<std::vector<std::size_t>> run() {
        if (extend(0))
          return _map;
        return std::nullopt;
      }

      bool exhausted() const {
        return _nodes > _budget;
      }

     private:
      bool consistent(std::size_t x) const {
        std::size_t const y = _map[x];
        for (std::size_t z = 0; z <= x; ++z) {
          std::size_t const w = _map[z];
          if (_a.precedes(x, z) != _b.precedes(y, w) || _a.precedes(z, x) != _b.precedes(w, y))
            return false;
          std::size_t const sum = _a.add(x, z);
          if (_map[sum] != npos && _map[sum] != _b.add(y, w))
            return false;
        }
        // sums already assigned whose image is now determined
        for (std::size_t u = 0; u <= x; ++u)
          for (std::size_t v = 0; v <= x; ++v) {
            std::size_t const sum = _a.add(u, v);
            if (sum == x && _b.add(_map[u], _map[v]) != y)
              return false;
          }
        return true;
      }

      bool extend(std::size_t x) {
        if (x == _a.size())
          return true;
        if (++_nodes > _budget)
          return false;
        for (std::size_t y = 0; y < _b.size(); ++y) {
          if (_used[y] || _ia[x] != _ib[y])
            continue;
          _map[x]  = y;
          _used[y] = 1;
          if (consistent(x) && extend(x + 1))
            return true;
          _map[x]  = npos;
          _used[y] = 0;
          if (exhausted())
            return false;
        }
        return false;
      }

      WSemigroup const&             _a;
      WSemigroup const&             _b;
      std::vector<Invariant> const& _ia;
      std::vector<Invariant> const& _ib;
      std::size_t                   _budget;
      std::size_t                   _nodes = 0;
      std::vector<std::size_t>      _map;
      std::vector<char>             _used;
    };

  }  // namespace

  bool is_isomorphism(WSemigroup const& a, WSemigroup const& b, std::vector<std::size_t> const& map) {
    std::size_t const n = a.size();
    if (b.size() != n || map.size() != n)
      return false;
    std::vector<char> hit(n, 0);
    for (auto y : map) {
      if (y >= n || hit[y])
        return false;
      hit[y] = 1;
    }
    if (map[a.zero()] != b.zero())
      return false;
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t z = 0; z < n; ++z)
        if (map[a.add(x, z)] != b.add(map[x], map[z]) || a.precedes(x, z) != b.precedes(map[x], map[z]))
          return false;
    return true;
  }

  IsoResult find_isomorphism(WSemigroup const& a, WSemigroup const& b, std::size_t node_budget) {
    if (a.size() != b.size())
      return {std::nullopt, "canonical"};
    auto ia = invariants(a);
    auto ib = invariants(b);
    {
      auto sa = ia, sb = ib;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb)
        return {std::nullopt, "canonical"};
      if (std::adjacent_find(sa.begin(), sa.end()) == sa.end()) {
        std::map<Invariant, std::size_t> where;
        for (std::size_t y = 0; y < b.size(); ++y)
          where[ib[y]] = y;
        std::vector<std::size_t> map(a.size());
        for (std::size_t x = 0; x < a.size(); ++x)
          map[x] = where[ia[x]];
        if (is_isomorphism(a, b, map))
          return {map, "canonical"};
        return {std::nullopt, "canonical"};
      }
    }
    if (a.size() > search_limit)
      return {std::nullopt, "budget"};
    Search search(a, b, ia, ib, node_budget);
    auto   found = search.run();
    if (!found && search.exhausted())
      return {std::nullopt, "budget"};
    return {found, "search"};
  }

  std::optional<std::vector<std::size_t>> induced_map(std::vector<std::size_t> const& pa,
                                                      std::vector<std::size_t> const& pb,
                                                      std::size_t                     a_size) {
    if (pa.size() != pb.size())
      return std::nullopt;
    std::vector<std::size_t> out(a_size, npos);
    for (std::size_t x = 0; x < pa.size(); ++x) {
      if (pa[x] >= a_size)
        return std::nullopt;
      if (out[pa[x]] != npos && out[pa[x]] != pb[x])
        return std::nullopt;
      out[pa[x]] = pb[x];
    }
    if (std::find(out.begin(), out.end(), npos) != out.end())
      return std::nullopt;
    return out;
  }

}  // namespace ordcalc
