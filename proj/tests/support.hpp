// Independent brute-force oracles shared by the unit tests. Nothing here
// calls into the library algorithms it is used to check.
#ifndef ORDCALC_TESTS_SUPPORT_HPP
#define ORDCALC_TESTS_SUPPORT_HPP

#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "ordcalc/fixtures.hpp"
#include "ordcalc/relation.hpp"
#include "ordcalc/wsemigroup.hpp"

namespace oracle {

  using ordcalc::Relation;
  using ordcalc::WSemigroup;

  inline Relation compose(Relation const& r1, Relation const& r2) {
    std::size_t n = r1.size();
    Relation    out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (r1.contains(a, c) && r2.contains(c, b)) {
            out.add(a, b);
            break;
          }
    return out;
  }

  inline bool subset(Relation const& r1, Relation const& r2) {
    for (std::size_t a = 0; a < r1.size(); ++a)
      for (std::size_t b = 0; b < r1.size(); ++b)
        if (r1.contains(a, b) && !r2.contains(a, b))
          return false;
    return true;
  }

  inline Relation unite(Relation r1, Relation const& r2) {
    for (std::size_t a = 0; a < r1.size(); ++a)
      for (std::size_t b = 0; b < r1.size(); ++b)
        if (r2.contains(a, b))
          r1.add(a, b);
    return r1;
  }

  // reflexive-transitive closure by iterating r <- r ∪ r∘r from the identity
  inline Relation closure(Relation const& r) {
    Relation cur = unite(Relation::identity(r.size()), r);
    while (true) {
      Relation next = unite(cur, oracle::compose(cur, cur));
      if (next == cur)
        return cur;
      cur = next;
    }
  }

  inline Relation sum(Relation const& r1, Relation const& r2, WSemigroup const& s) {
    Relation out(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        for (std::size_t c = 0; c < s.size(); ++c)
          for (std::size_t d = 0; d < s.size(); ++d)
            if (r1.contains(a, b) && r2.contains(c, d))
              out.add(s.add(a, c), s.add(b, d));
    return out;
  }

  inline Relation additive_closure(Relation const& r, WSemigroup const& s) {
    Relation cur = r;
    while (true) {
      Relation next = unite(cur, oracle::sum(cur, cur, s));
      if (next == cur)
        return cur;
      cur = next;
    }
  }

  // a ≤ b iff {x : x ≺ a} ⊆ {x : x ≺ b}, evaluated entry by entry
  inline Relation induced(Relation const& prec) {
    std::size_t n = prec.size();
    Relation    out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        bool ok = true;
        for (std::size_t x = 0; x < n && ok; ++x)
          if (prec.contains(x, a) && !prec.contains(x, b))
            ok = false;
        if (ok)
          out.add(a, b);
      }
    return out;
  }

  inline Relation random_relation(std::size_t n, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    Relation                    r(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (coin(rng))
          r.add(a, b);
    return r;
  }

  inline std::set<std::size_t> to_set(ordcalc::Subset const& s) {
    std::set<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i])
        out.insert(i);
    return out;
  }

}  // namespace oracle

#endif
