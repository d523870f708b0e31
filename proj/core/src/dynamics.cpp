#include "ordcalc/dynamics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ordcalc/fixtures.hpp"

namespace ordcalc {

  namespace {

    Permutation identity_permutation(std::size_t n) {
      Permutation id(n);
      for (std::size_t i = 0; i < n; ++i)
        id[i] = i;
      return id;
    }

    // first failure among the action axioms for one permutation, as
    // (check name, witness elements)
    std::optional<std::pair<std::string, std::vector<std::size_t>>> permutation_failure(WSemigroup const& s,
                                                                                        Permutation const& g) {
      std::size_t const n = s.size();
      if (g.size() != n)
        return std::pair{std::string("permutation"), std::vector<std::size_t>{}};
      std::vector<char> hit(n, 0);
      for (std::size_t a = 0; a < n; ++a) {
        if (g[a] >= n || hit[g[a]])
          return std::pair{std::string("permutation"), std::vector<std::size_t>{a}};
        hit[g[a]] = 1;
      }
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (g[s.add(a, b)] != s.add(g[a], g[b]))
            return std::pair{std::string("additive"), std::vector<std::size_t>{a, b}};
      if (g[s.zero()] != s.zero())
        return std::pair{std::string("zero"), std::vector<std::size_t>{s.zero()}};
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (s.precedes(a, b) && !s.precedes(g[a], g[b]))
            return std::pair{std::string("preserves_prec"), std::vector<std::size_t>{a, b}};
      return std::nullopt;
    }

    Subset image(Subset const& xs, std::vector<std::size_t> const& map, std::size_t size) {
      Subset out(size);
      for (std::size_t a = xs.find_first(); a != Subset::npos; a = xs.find_next(a))
        out[map[a]] = true;
      return out;
    }

    Subset preimage(Subset const& ys, std::vector<std::size_t> const& map) {
      Subset out(map.size());
      for (std::size_t a = 0; a < map.size(); ++a)
        out[a] = ys[map[a]];
      return out;
    }

  }  // namespace

  Permutation compose(Permutation const& g, Permutation const& h) {
    Permutation out(h.size());
    for (std::size_t a = 0; a < h.size(); ++a)
      out[a] = g[h[a]];
    return out;
  }

  Permutation inverse(Permutation const& g) {
    Permutation out(g.size());
    for (std::size_t a = 0; a < g.size(); ++a)
      out[g[a]] = a;
    return out;
  }

  GroupAction validate_action(WSemigroup const& s, std::vector<Permutation> const& generators, std::size_t bound) {
    for (std::size_t i = 0; i < generators.size(); ++i)
      if (auto fail = permutation_failure(s, generators[i])) {
        std::vector<std::size_t> w{i};
        w.insert(w.end(), fail->second.begin(), fail->second.end());
        throw PreconditionError("generator " + std::to_string(i) + " fails " + fail->first, w);
      }
    GroupAction out;
    out.generators = generators;
    std::set<Permutation> seen;
    out.elements.push_back(identity_permutation(s.size()));
    seen.insert(out.elements.front());
    for (std::size_t k = 0; k < out.elements.size(); ++k)
      for (auto const& h : generators) {
        Permutation gh = compose(out.elements[k], h);
        if (seen.insert(gh).second) {
          out.elements.push_back(std::move(gh));
          require_budget("group closure", out.elements.size(), bound);
        }
      }
    return out;
  }

  GroupAction trivial_action(WSemigroup const& s) {
    return {{}, {identity_permutation(s.size())}};
  }

  AxiomReport check_action(WSemigroup const& s, GroupAction const& g) {
    AxiomReport r;
    std::map<std::string, std::vector<std::size_t>> failures;
    for (std::size_t i = 0; i < g.elements.size(); ++i)
      if (auto fail = permutation_failure(s, g.elements[i]))
        if (!failures.count(fail->first)) {
          std::vector<std::size_t> w{i};
          w.insert(w.end(), fail->second.begin(), fail->second.end());
          failures[fail->first] = w;
        }
    for (auto name : {"permutation", "preserves_prec", "additive", "zero"})
      r.expect(name, !failures.count(name), failures.count(name) ? failures[name] : std::vector<std::size_t>{});
    r.expect("identity", !g.elements.empty() && g.elements.front() == identity_permutation(s.size()));
    std::set<Permutation> all(g.elements.begin(), g.elements.end());
    bool                  closed = all.size() == g.elements.size();
    for (auto const& a : g.elements)
      for (auto const& b : g.elements)
        closed = closed && all.count(compose(a, b));
    for (auto const& h : g.generators)
      closed = closed && all.count(h);
    r.expect("closed", closed);
    return r;
  }

  Permutation permute_coordinates(std::size_t factor_size, Permutation const& sigma) {
    std::size_t const        n = sigma.size();
    std::vector<std::size_t> sizes(n, factor_size);
    std::size_t              total = 1;
    for (std::size_t i = 0; i < n; ++i)
      total *= factor_size;
    Permutation out(total);
    std::vector<std::size_t> coords(n, 0), moved(n);
    for (std::size_t a = 0; a < total; ++a) {
      for (std::size_t i = 0; i < n; ++i)
        moved[sigma[i]] = coords[i];
      out[product_index(sizes, coords)] = product_index(sizes, moved);
      // odometer, last coordinate fastest
      for (std::size_t i = n; i-- > 0;) {
        if (++coords[i] < factor_size)
          break;
        coords[i] = 0;
      }
    }
    return out;
  }

  Relation orbit_relation(WSemigroup const& s, GroupAction const& g) {
    Relation r(s.size());
    for (auto const& h : g.elements)
      for (std::size_t b = 0; b < s.size(); ++b)
        r.add(h[b], b);
    return r;
  }

  Pair dyn_pair(WSemigroup const& s, GroupAction const& g) {
    return generate_normal(s, orbit_relation(s, g));
  }

  Relation dyn_one_step_order(WSemigroup const& s, GroupAction const& g) {
    // pairs (Σ d_j, Σ g_j d_j)
    Relation moves = additive_closure(orbit_relation(s, g), s.monoid());
    return one_step_order(s.prec(), moves);
  }

  AxiomReport dyn_pair_check(WSemigroup const& s, GroupAction const& g) {
    AxiomReport    r;
    Relation const orbit = orbit_relation(s, g);
    auto           cont  = left_continuity_failure(orbit, s.prec());
    r.expect("orbit_continuous", !cont, cont ? std::vector<std::size_t>{cont->first, cont->second}
                                              : std::vector<std::size_t>{});
    if (cont) {
      for (auto name : {"contains_orbit", "contains_minimal", "one_step"})
        r.skip(name, "orbit relation is not left continuous");
      return r;
    }
    Pair const p = dyn_pair(s, g);
    auto       e = first_missing(orbit, p.order);
    r.expect("contains_orbit", !e, e ? std::vector<std::size_t>{e->first, e->second} : std::vector<std::size_t>{});
    e = first_missing(s.leq(), p.order);
    r.expect("contains_minimal", !e, e ? std::vector<std::size_t>{e->first, e->second} : std::vector<std::size_t>{});
    if (has_almost_refinement(s)) {
      Relation const one = dyn_one_step_order(s, g);
      auto           d   = first_missing(one, p.order);
      if (!d)
        d = first_missing(p.order, one);
      r.expect("one_step", !d, d ? std::vector<std::size_t>{d->first, d->second} : std::vector<std::size_t>{});
    } else {
      r.skip("one_step", "no almost refinement");
    }
    return r;
  }

  QuotientResult dyn_quotient(WSemigroup const& s, GroupAction const& g) {
    return quotient(s, dyn_pair(s, g));
  }

  std::optional<Edge> invariance_failure(WMorphism const& f, GroupAction const& g) {
    for (std::size_t i = 0; i < g.generators.size(); ++i)
      for (std::size_t a = 0; a < f.source.size(); ++a)
        if (f(g.generators[i][a]) != f(a))
          return Edge{i, a};
    return std::nullopt;
  }

  Factorization dynamical_factor(WMorphism const& f, GroupAction const& g) {
    if (auto e = invariance_failure(f, g))
      throw PreconditionError("morphism is not invariant", {e->first, e->second});
    return factor_through(f, dyn_pair(f.source, g));
  }

  AxiomReport universal_property_check(WMorphism const& f, GroupAction const& g) {
    if (auto e = invariance_failure(f, g))
      throw PreconditionError("morphism is not invariant", {e->first, e->second});
    if (auto m = check_morphism(f); !m.ok())
      throw PreconditionError("not a W-morphism (" + m.first_failure()->name + ")", m.first_failure()->witness);
    AxiomReport r;
    auto const  q = dyn_quotient(f.source, g);
    bool        inv = true;
    for (auto const& h : g.elements)
      for (std::size_t a = 0; a < f.source.size(); ++a)
        inv = inv && q.class_of[h[a]] == q.class_of[a];
    r.expect("projection_invariant", inv);
    try {
      auto fac = dynamical_factor(f, g);
      r.pass("factors");
      for (auto const& c : fac.checks.checks())
        r.add(c);
      bool monotone = true;
      for (std::size_t c = 0; c < fac.h.source.size(); ++c)
        for (std::size_t d = 0; d < fac.h.source.size(); ++d)
          if (fac.h.source.leq().contains(c, d))
            monotone = monotone && fac.h.target.leq().contains(fac.h(c), fac.h(d));
      r.expect("order_preserving", monotone);
      // π_G is onto, so a map on classes with the commuting square is forced
      std::vector<std::size_t> down(f.source.size());
      for (std::size_t a = 0; a < f.source.size(); ++a)
        down[a] = fac.target.class_of[f(a)];
      auto forced = induced_map(q.class_of, down, q.quotient.size());
      r.expect("unique", forced && *forced == fac.h.map);
    } catch (NoFactorization const& e) {
      r.fail("factors", {e.witness().first, e.witness().second}, e.what());
    }
    return r;
  }

  bool is_invariant(GroupAction const& g, Subset const& members) {
    for (auto const& h : g.generators)
      for (std::size_t a = members.find_first(); a != Subset::npos; a = members.find_next(a))
        if (!members[h[a]])
          return false;
    return true;
  }

  std::vector<Ideal> invariant_closed_ideals(WSemigroup const& s, GroupAction const& g, std::size_t budget) {
    auto all = enumerate_ideals(s, true, budget);
    all.erase(std::remove_if(all.begin(), all.end(), [&](Ideal const& i) { return !is_invariant(g, i.members); }),
              all.end());
    return all;
  }

  Ideal g_principal(WSemigroup const& s, GroupAction const& g, std::size_t a) {
    if (a >= s.size())
      throw std::out_of_range("element out of range");
    // submonoid generated by the orbit of a
    Subset sums(s.size());
    sums[s.zero()] = true;
    Subset orbit(s.size());
    for (auto const& h : g.elements)
      orbit[h[a]] = true;
    while (true) {
      Subset next = sums | set_sum(sums, orbit, s.monoid());
      if (next == sums)
        break;
      sums = std::move(next);
    }
    Subset reach(s.size());
    for (std::size_t m = sums.find_first(); m != Subset::npos; m = sums.find_next(m))
      reach |= s.below(m);
    Subset members(s.size());
    for (std::size_t z = 0; z < s.size(); ++z)
      members[z] = s.below(z).is_subset_of(reach);
    bool closed = is_closed_set(s, members);
    return {std::move(members), closed};
  }

  bool is_minimal_action(WSemigroup const& s, GroupAction const& g) {
    Subset const least = g_principal(s, g, s.zero()).members;
    for (std::size_t a = 0; a < s.size(); ++a)
      if (!least[a] && !g_principal(s, g, a).members.all())
        return false;
    return true;
  }

  GroupAction induced_action(QuotientResult const& q, GroupAction const& g) {
    std::vector<Permutation> gens;
    for (auto const& h : g.generators) {
      Permutation p(q.quotient.size());
      for (std::size_t c = 0; c < p.size(); ++c)
        p[c] = q.class_of[h[q.representative[c]]];
      for (std::size_t a = 0; a < h.size(); ++a)
        if (p[q.class_of[a]] != q.class_of[h[a]])
          throw PreconditionError("action does not pass to the quotient", {a});
      gens.push_back(std::move(p));
    }
    return validate_action(q.quotient, gens);
  }

  AxiomReport dyn_ideal_compat_check(WSemigroup const& s, GroupAction const& g, Subset const& i, std::size_t budget) {
    if (!is_ideal(s, i) || !is_closed_set(s, i))
      throw PreconditionError("not a closed ideal");
    if (!is_invariant(g, i))
      throw PreconditionError("ideal is not invariant");
    AxiomReport       r;
    auto const        q  = dyn_quotient(s, g);
    auto const&       sg = q.quotient;
    Subset const      ig = image(i, q.class_of, sg.size());

    bool const closed_image = is_ideal(sg, ig) && is_closed_set(sg, ig);
    r.expect("image_closed", closed_image);
    r.expect("preimage", preimage(ig, q.class_of) == i);

    std::set<Subset, decltype(&subset_less)> up(&subset_less), down(&subset_less);
    for (auto const& j : invariant_closed_ideals(s, g, budget))
      up.insert(image(j.members, q.class_of, sg.size()));
    bool back = true;
    for (auto const& k : enumerate_ideals(sg, true, budget)) {
      down.insert(k.members);
      Subset pre = preimage(k.members, q.class_of);
      back       = back && is_ideal(s, pre) && is_closed_set(s, pre) && is_invariant(g, pre);
    }
    r.expect("lattice", up == down && back);

    if (closed_image) {
      // (S/G)/(I/G) against (S/I)/G, both read through S
      auto const               left = quotient(sg, pair_of_ideal(sg, ig));
      auto const               si   = quotient(s, pair_of_ideal(s, i));
      auto const               right = dyn_quotient(si.quotient, induced_action(si, g));
      std::vector<std::size_t> via_left(s.size()), via_right(s.size());
      for (std::size_t a = 0; a < s.size(); ++a) {
        via_left[a]  = left.class_of[q.class_of[a]];
        via_right[a] = right.class_of[si.class_of[a]];
      }
      auto phi = induced_map(via_left, via_right, left.quotient.size());
      r.expect("two_stage", phi && is_isomorphism(left.quotient, right.quotient, *phi));
    } else {
      r.skip("two_stage", "image is not a closed ideal");
    }

    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < s.size() && w.empty(); ++a)
      if (image(g_principal(s, g, a).members, q.class_of, sg.size()) != principal(sg, q.class_of[a]).members)
        w = {a};
    r.expect("principal", w.empty(), w, "π_G(I_G(a)) differs from I([a])");
    r.expect("minimal_iff_simple", is_minimal_action(s, g) == is_simple(sg));
    return r;
  }

}  // namespace ordcalc
