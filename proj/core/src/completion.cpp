#include "ordcalc/completion.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

#include "ordcalc/iso.hpp"

namespace ordcalc {

  namespace {

    struct SubsetLess {
      bool operator()(Subset const& a, Subset const& b) const {
        return subset_less(a, b);
      }
    };

    std::string key(Subset const& d) {
      std::string out;
      boost::to_string(d, out);
      return out;
    }

    // {x : x ≺ d + e for some d ∈ D, e ∈ E}
    Subset raw_sum(WSemigroup const& s, Subset const& d, Subset const& e) {
      Subset out(s.size());
      for (auto x = d.find_first(); x != Subset::npos; x = d.find_next(x))
        for (auto y = e.find_first(); y != Subset::npos; y = e.find_next(y))
          out |= s.below(s.add(x, y));
      return out;
    }

    bool raw_waybelow(WSemigroup const& s, Subset const& d, Subset const& e) {
      for (auto x = e.find_first(); x != Subset::npos; x = e.find_next(x))
        if (d.is_subset_of(s.below(x)))
          return true;
      return false;
    }

    Subset image_of(Permutation const& p, Subset const& d) {
      Subset out(d.size());
      for (auto x = d.find_first(); x != Subset::npos; x = d.find_next(x))
        out.set(p[x]);
      return out;
    }

    Relation inclusion(std::vector<Subset> const& sets) {
      Relation out(sets.size());
      for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
          if (sets[i].is_subset_of(sets[j]))
            out.add(i, j);
      return out;
    }

  }  // namespace

  AxiomReport check_round_ideal(WSemigroup const& s, Subset const& d) {
    if (d.size() != s.size())
      throw std::invalid_argument("set and carrier differ in size");
    AxiomReport r;
    r.expect("nonempty", d.any());
    std::vector<std::size_t> const xs = members(d);

    std::vector<std::size_t> w;
    for (auto x : xs)
      if (!s.below(x).is_subset_of(d)) {
        w = {x};
        break;
      }
    r.expect("down_closed", w.empty(), w);

    w.clear();
    for (std::size_t i = 0; i < xs.size() && w.empty(); ++i)
      for (std::size_t j = i + 1; j < xs.size() && w.empty(); ++j)
        if (!(s.above(xs[i]) & s.above(xs[j]) & d).any())
          w = {xs[i], xs[j]};
    r.expect("directed", w.empty(), w);

    w.clear();
    for (auto x : xs)
      if (!(s.above(x) & d).any()) {
        w = {x};
        break;
      }
    r.expect("round", w.empty(), w);
    return r;
  }

  bool is_round_ideal(WSemigroup const& s, Subset const& d) {
    return check_round_ideal(s, d).ok();
  }

  std::vector<Subset> round_ideals(WSemigroup const& s) {
    std::set<Subset, SubsetLess> found;
    for (std::size_t u = 0; u < s.size(); ++u)
      if (s.precedes(u, u))
        found.insert(s.below(u));
    return {found.begin(), found.end()};
  }

  std::size_t Completion::index_of(Subset const& d) const {
    auto it = std::lower_bound(ideals.begin(), ideals.end(), d, SubsetLess{});
    if (it == ideals.end() || *it != d)
      return npos;
    return static_cast<std::size_t>(it - ideals.begin());
  }

  Completion complete(WSemigroup const& s) {
    Completion c;
    c.ideals            = round_ideals(s);
    std::size_t const m = c.ideals.size();

    std::vector<std::size_t> table(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t k = c.index_of(raw_sum(s, c.ideals[i], c.ideals[j]));
        if (k == npos)
          throw std::logic_error("sum of round ideals is not a round ideal");
        table[i * m + j] = k;
      }

    std::vector<std::size_t> gamma(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      gamma[a] = c.index_of(s.below(a));
      if (gamma[a] == npos)
        throw std::logic_error("a^≺ is not a round ideal");
    }

    Relation prec(m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        if (raw_waybelow(s, c.ideals[i], c.ideals[j]))
          prec.add(i, j);

    c.semigroup = WSemigroup(FiniteMonoid(m, gamma[s.zero()], std::move(table)), std::move(prec));
    c.gamma     = WMorphism{s, c.semigroup, std::move(gamma)};
    return c;
  }

  bool waybelow(Completion const& c, Subset const& d, Subset const& e) {
    std::size_t const n = c.gamma.source.size();
    if (d.size() != n || e.size() != n)
      throw std::invalid_argument("round ideals over a different base");
    if (c.index_of(d) == npos || c.index_of(e) == npos)
      throw PreconditionError("not a round ideal");
    return raw_waybelow(c.gamma.source, d, e);
  }

  bool waybelow(Completion const& c, std::size_t d, std::size_t e) {
    if (d >= c.ideals.size() || e >= c.ideals.size())
      throw std::invalid_argument("element outside the completion");
    return waybelow(c, c.ideals[d], c.ideals[e]);
  }

  AxiomReport completion_check(WSemigroup const& s) {
    AxiomReport       r;
    auto const        c    = complete(s);
    auto const&       t    = c.semigroup;
    std::size_t const n    = s.size();
    std::size_t const m    = t.size();
    Relation const    lp   = compose(induced_preorder(s.prec()), s.prec());

    r.merge(check_morphism(c.gamma), "gamma");

    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b)
        if (t.precedes(c.gamma(a), c.gamma(b)) != lp.contains(a, b))
          w = {a, b};
    r.expect("embedding", w.empty(), w, "γa ≪ γb differs from a ≤_≺∘≺ b");

    if (lp == s.prec()) {
      w.clear();
      for (std::size_t a = 0; a < n && w.empty(); ++a)
        for (std::size_t b = 0; b < n && w.empty(); ++b)
          if (t.precedes(c.gamma(a), c.gamma(b)) != s.precedes(a, b))
            w = {a, b};
      r.expect("strict_embedding", w.empty(), w);
    } else {
      r.skip("strict_embedding", "≺ differs from ≤_≺∘≺");
    }

    w.clear();
    for (std::size_t i = 0; i < m && w.empty(); ++i)
      for (std::size_t j = 0; j < m && w.empty(); ++j) {
        if (!t.precedes(i, j))
          continue;
        bool found = false;
        for (std::size_t a = 0; a < n && !found; ++a)
          found = c.ideals[i].is_subset_of(c.ideals[c.gamma(a)]) && c.ideals[c.gamma(a)].is_subset_of(c.ideals[j]);
        if (!found)
          w = {i, j};
      }
    r.expect("dense", w.empty(), w);

    auto const generic = first_missing(way_below(inclusion(c.ideals)), t.prec());
    auto const extra   = first_missing(t.prec(), way_below(inclusion(c.ideals)));
    w.clear();
    if (generic)
      w = {generic->first, generic->second};
    else if (extra)
      w = {extra->first, extra->second};
    r.expect("waybelow_generic", w.empty(), w);

    w.clear();
    for (std::size_t i = 0; i < m && w.empty(); ++i)
      for (std::size_t j = 0; j < m && w.empty(); ++j) {
        Subset const d = raw_sum(s, c.ideals[i], c.ideals[j]);
        if (!is_round_ideal(s, d) || d != c.ideals[t.add(i, j)])
          w = {i, j};
      }
    r.expect("additive_round", w.empty(), w);

    r.merge(check_w_axioms(t), "w");
    r.merge(check_cu_axioms(t), "cu");
    return r;
  }

  AxiomReport idempotence_check(WSemigroup const& s) {
    AxiomReport r;
    auto const  c  = complete(s);
    auto const  cc = complete(c.semigroup);
    r.expect("size", c.semigroup.size() == cc.semigroup.size(), {},
             std::to_string(c.semigroup.size()) + " vs " + std::to_string(cc.semigroup.size()));
    r.expect("gamma_iso", is_isomorphism(c.semigroup, cc.semigroup, cc.gamma.map));
    return r;
  }

  Subset completion_ideal(Completion const& c, Subset const& i) {
    if (i.size() != c.gamma.source.size())
      throw std::invalid_argument("set and carrier differ in size");
    Subset out(c.ideals.size());
    for (std::size_t d = 0; d < c.ideals.size(); ++d)
      if (c.ideals[d].is_subset_of(i))
        out.set(d);
    return out;
  }

  GroupAction completion_action(Completion const& c, GroupAction const& g) {
    std::vector<Permutation> gens;
    for (auto const& p : g.generators) {
      if (p.size() != c.gamma.source.size())
        throw std::invalid_argument("permutation and carrier differ in size");
      Permutation q(c.ideals.size());
      for (std::size_t i = 0; i < q.size(); ++i) {
        q[i] = c.index_of(image_of(p, c.ideals[i]));
        if (q[i] == npos)
          throw PreconditionError("image of a round ideal is not round", {i});
      }
      gens.push_back(std::move(q));
    }
    return validate_action(c.semigroup, gens);
  }

  AxiomReport lattice_transfer(WSemigroup const& s, GroupAction const* g, std::size_t budget) {
    AxiomReport r;
    auto const  c  = complete(s);
    auto const  lw = enumerate_ideals(s, true, budget);
    auto const  lc = enumerate_ideals(c.semigroup, true, budget);

    std::vector<Subset> images;
    for (auto const& i : lw)
      images.push_back(completion_ideal(c, i.members));

    std::vector<std::size_t> w;
    std::vector<bool>        hit(lc.size(), false);
    for (std::size_t k = 0; k < images.size() && w.empty(); ++k) {
      auto it = std::find_if(lc.begin(), lc.end(), [&](Ideal const& j) { return j.members == images[k]; });
      if (it == lc.end() || hit[it - lc.begin()])
        w = {k};
      else
        hit[it - lc.begin()] = true;
    }
    for (std::size_t k = 0; k < lc.size() && w.empty(); ++k)
      if (!hit[k])
        w = {k};
    r.expect("bijection", w.empty() && lw.size() == lc.size(), w,
             std::to_string(lw.size()) + " closed ideals, " + std::to_string(lc.size()) + " on the completion");

    w.clear();
    for (std::size_t i = 0; i < lw.size() && w.empty(); ++i)
      for (std::size_t j = 0; j < lw.size() && w.empty(); ++j)
        if (lw[i].members.is_subset_of(lw[j].members) != images[i].is_subset_of(images[j]))
          w = {i, j};
    r.expect("order", w.empty(), w);

    w.clear();
    std::string detail;
    for (std::size_t k = 0; k < lw.size() && w.empty(); ++k) {
      try {
        auto const               q1 = quotient(s, pair_of_ideal(s, lw[k].members));
        auto const               a  = complete(q1.quotient);
        auto const               q2 = quotient(c.semigroup, pair_of_ideal(c.semigroup, images[k]));
        std::vector<std::size_t> pa(s.size()), pb(s.size());
        for (std::size_t x = 0; x < s.size(); ++x) {
          pa[x] = q2.class_of[c.gamma(x)];
          pb[x] = a.gamma(q1.class_of[x]);
        }
        auto map = induced_map(pa, pb, q2.quotient.size());
        if (!map || !is_isomorphism(q2.quotient, a.semigroup, *map))
          w = {k};
      } catch (PreconditionError const& e) {
        w      = {k};
        detail = e.what();
      }
    }
    r.expect("quotients", w.empty(), w, detail);

    if (g != nullptr) {
      auto const h = completion_action(c, *g);
      w.clear();
      for (std::size_t k = 0; k < lw.size() && w.empty(); ++k)
        if (is_invariant(*g, lw[k].members) != is_invariant(h, images[k]))
          w = {k};
      r.expect("invariant", w.empty(), w);
    }
    return r;
  }

  AxiomReport dyn_compat(WSemigroup const& s, GroupAction const& g) {
    AxiomReport r;
    auto const  c = complete(s);
    auto const  h = completion_action(c, g);

    std::vector<std::size_t> w;
    for (std::size_t k = 0; k < g.generators.size() && w.empty(); ++k)
      for (std::size_t a = 0; a < s.size() && w.empty(); ++a)
        if (h.generators[k][c.gamma(a)] != c.gamma(g.generators[k][a]))
          w = {k, a};
    r.expect("equivariant", w.empty(), w);

    auto const qa = dyn_quotient(s, g);
    auto const a  = complete(qa.quotient);
    auto const qb = dyn_quotient(c.semigroup, h);
    auto const b  = complete(qb.quotient);

    std::vector<std::size_t> pa(s.size()), pb(s.size());
    for (std::size_t x = 0; x < s.size(); ++x) {
      pa[x] = a.gamma(qa.class_of[x]);
      pb[x] = b.gamma(qb.class_of[c.gamma(x)]);
    }
    auto map = induced_map(pa, pb, a.semigroup.size());
    if (map && is_isomorphism(a.semigroup, b.semigroup, *map)) {
      r.pass("iso", "canonical class map");
    } else {
      auto found = find_isomorphism(a.semigroup, b.semigroup);
      r.fail("iso", {}, found.map ? "class map fails, abstract isomorphism exists" : "no isomorphism (" + found.method + ")");
    }
    return r;
  }

  AxiomReport sequence_encoding_check(WSemigroup const& s, std::size_t max_prefix, std::size_t max_period) {
    if (max_period == 0)
      throw std::invalid_argument("period must be positive");
    require_budget("sequence enumeration", s.size(), enumeration_budget());
    std::size_t const n = s.size();
    Relation const    below = s.prec().transpose();

    // element sets of eventually periodic sequences, as prefix ∪ cycle
    std::set<Subset, SubsetLess> seqs;
    for (std::size_t c1 = 0; c1 < n; ++c1) {
      std::set<std::tuple<std::size_t, std::size_t, std::string>> seen;
      std::vector<Subset>                                         cycles;
      std::vector<std::tuple<std::size_t, std::size_t, Subset>>   stack{{c1, 1, make_subset(n, {c1})}};
      while (!stack.empty()) {
        auto [cur, len, set] = stack.back();
        stack.pop_back();
        if (!seen.insert({cur, len, key(set)}).second)
          continue;
        if (s.precedes(cur, c1))
          cycles.push_back(set);
        if (len == max_period)
          continue;
        for (auto y = s.above(cur).find_first(); y != Subset::npos; y = s.above(cur).find_next(y)) {
          Subset next = set;
          next.set(y);
          stack.emplace_back(y, len + 1, std::move(next));
        }
      }
      if (cycles.empty())
        continue;

      // prefixes p_1 ≺ ... ≺ p_k ≺ c1, grown backwards
      std::vector<Subset> prefixes{Subset(n)};
      seen.clear();
      for (auto p = below.row(c1).find_first(); max_prefix > 0 && p != Subset::npos; p = below.row(c1).find_next(p))
        stack.emplace_back(p, 1, make_subset(n, {p}));
      while (!stack.empty()) {
        auto [first, len, set] = stack.back();
        stack.pop_back();
        if (!seen.insert({first, len, key(set)}).second)
          continue;
        prefixes.push_back(set);
        if (len == max_prefix)
          continue;
        for (auto y = below.row(first).find_first(); y != Subset::npos; y = below.row(first).find_next(y)) {
          Subset next = set;
          next.set(y);
          stack.emplace_back(y, len + 1, std::move(next));
        }
      }
      for (auto const& cyc : cycles)
        for (auto const& pre : prefixes)
          seqs.insert(cyc | pre);
    }

    std::vector<Subset> sets(seqs.begin(), seqs.end()), unions;
    for (auto const& a : sets) {
      Subset u(n);
      for (auto x = a.find_first(); x != Subset::npos; x = a.find_next(x))
        u |= s.below(x);
      unions.push_back(u);
    }
    auto leq = [&](Subset const& a, Subset const& b) {
      for (auto x = a.find_first(); x != Subset::npos; x = a.find_next(x))
        if (!(s.above(x) & b).any())
          return false;
      return true;
    };

    AxiomReport              r;
    std::vector<std::size_t> w, wd, inj, ord;
    for (std::size_t i = 0; i < sets.size() && w.empty(); ++i)
      if (!is_round_ideal(s, unions[i]))
        w = {i};
    r.expect("image_round", w.empty(), w);
    for (std::size_t i = 0; i < sets.size(); ++i)
      for (std::size_t j = 0; j < sets.size(); ++j) {
        bool const le    = leq(sets[i], sets[j]);
        bool const equiv = le && leq(sets[j], sets[i]);
        bool const same  = unions[i] == unions[j];
        if (wd.empty() && equiv && !same)
          wd = {i, j};
        if (inj.empty() && same && !equiv)
          inj = {i, j};
        if (ord.empty() && le != unions[i].is_subset_of(unions[j]))
          ord = {i, j};
      }
    r.expect("well_defined", wd.empty(), wd);
    r.expect("injective", inj.empty(), inj);
    r.expect("order", ord.empty(), ord);

    auto const ideals = round_ideals(s);
    w.clear();
    for (std::size_t k = 0; k < ideals.size() && w.empty(); ++k)
      if (std::find(unions.begin(), unions.end(), ideals[k]) == unions.end())
        w = {k};
    r.expect("onto", w.empty(), w, w.empty() ? std::to_string(sets.size()) + " sequence classes enumerated"
                                             : "round ideal realized by no sequence");
    return r;
  }

}  // namespace ordcalc
