#include "ordcalc/ideals.hpp"

#include <algorithm>
#include <set>

namespace ordcalc {

  namespace {

    Subset members_below(WSemigroup const& s, Subset const& u) {
      // {a : a^≺ ⊆ u}
      Subset out(s.size());
      for (std::size_t a = 0; a < s.size(); ++a)
        out[a] = s.below(a).is_subset_of(u);
      return out;
    }

    Ideal make_ideal(WSemigroup const& s, Subset members) {
      bool closed = is_closed_set(s, members);
      return {std::move(members), closed};
    }

    void require_ideal(WSemigroup const& s, Subset const& i) {
      if (i.size() != s.size())
        throw std::invalid_argument("subset and carrier differ in size");
      auto r = check_ideal(s, i);
      if (!r.ok())
        throw PreconditionError("not an ideal (" + r.first_failure()->name + ")", r.first_failure()->witness);
    }

    std::vector<std::size_t> first_mismatch(Subset const& a, Subset const& b) {
      for (std::size_t x = 0; x < a.size(); ++x)
        if (a[x] != b[x])
          return {x};
      return {};
    }

    // closed ideals as member sets
    std::vector<Subset> closed_sets(WSemigroup const& s, std::size_t budget) {
      std::vector<Subset> out;
      for (auto& i : enumerate_ideals(s, true, budget))
        out.push_back(std::move(i.members));
      return out;
    }

  }  // namespace

  AxiomReport check_ideal(WSemigroup const& s, Subset const& members) {
    AxiomReport r;
    r.expect("contains_zero", members[s.zero()], {s.zero()});
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < s.size() && w.empty(); ++a)
      for (std::size_t b = 0; b < s.size() && w.empty(); ++b)
        if (members[a] && members[b] && !members[s.add(a, b)])
          w = {a, b};
    r.expect("additive", w.empty(), w);
    w.clear();
    for (std::size_t b = 0; b < s.size() && w.empty(); ++b)
      if (members[b] && !s.below(b).is_subset_of(members))
        w = {(s.below(b) - members).find_first(), b};
    r.expect("hereditary", w.empty(), w, "a ≺ b with b inside and a outside");
    return r;
  }

  bool is_ideal(WSemigroup const& s, Subset const& members) {
    return members.size() == s.size() && check_ideal(s, members).ok();
  }

  bool is_closed_set(WSemigroup const& s, Subset const& members) {
    return members_below(s, members).is_subset_of(members);
  }

  Ideal generated_ideal(WSemigroup const& s, Subset const& xs) {
    if (xs.size() != s.size())
      throw std::invalid_argument("subset and carrier differ in size");
    Subset cur = xs;
    cur[s.zero()] = true;
    while (true) {
      Subset next = cur;
      for (std::size_t b = cur.find_first(); b != Subset::npos; b = cur.find_next(b))
        next |= s.below(b);
      next |= set_sum(next, next, s.monoid());
      if (next == cur)
        return make_ideal(s, std::move(cur));
      cur = std::move(next);
    }
  }

  Ideal closure(WSemigroup const& s, Subset const& i) {
    require_ideal(s, i);
    return make_ideal(s, members_below(s, i));
  }

  Ideal generated_closed_ideal(WSemigroup const& s, Subset const& xs) {
    Ideal cur = generated_ideal(s, xs);
    while (!cur.closed)
      cur = generated_ideal(s, members_below(s, cur.members));
    return cur;
  }

  std::vector<Ideal> enumerate_ideals(WSemigroup const& s, bool closed_only, std::size_t budget) {
    require_budget("ideal enumeration", s.size(), budget);
    auto generate = [&](Subset const& xs) {
      return closed_only ? generated_closed_ideal(s, xs) : generated_ideal(s, xs);
    };
    std::set<Subset, decltype(&subset_less)> seen(&subset_less);
    std::vector<Subset>                      frontier{generate(Subset(s.size())).members};
    seen.insert(frontier.front());
    while (!frontier.empty()) {
      Subset j = std::move(frontier.back());
      frontier.pop_back();
      for (std::size_t a = 0; a < s.size(); ++a) {
        if (j[a])
          continue;
        Subset xs = j;
        xs[a]     = true;
        Subset k  = generate(xs).members;
        if (seen.insert(k).second)
          frontier.push_back(std::move(k));
      }
    }
    std::vector<Ideal> out;
    for (auto const& m : seen)
      out.push_back(make_ideal(s, m));
    return out;
  }

  Ideal principal(WSemigroup const& s, std::size_t a) {
    if (a >= s.size())
      throw std::out_of_range("element out of range");
    Subset multiples(s.size());
    for (std::size_t x = s.zero(); !multiples[x]; x = s.add(x, a))
      multiples[x] = true;
    Subset reach(s.size());
    for (std::size_t m = multiples.find_first(); m != Subset::npos; m = multiples.find_next(m))
      reach |= s.below(m);
    return make_ideal(s, members_below(s, reach));
  }

  bool is_order_unit(WSemigroup const& s, std::size_t a) {
    return principal(s, a).members.all();
  }

  bool is_simple(WSemigroup const& s) {
    Subset const least = principal(s, s.zero()).members;
    for (std::size_t a = 0; a < s.size(); ++a)
      if (!least[a] && !is_order_unit(s, a))
        return false;
    return true;
  }

  Pair pair_of_ideal(WSemigroup const& s, Subset const& i) {
    require_ideal(s, i);
    std::size_t const n = s.size();
    // reach[b] = ⋃_{y ∈ I} (b + y)^≺
    std::vector<Subset> reach(n, Subset(n));
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t y = i.find_first(); y != Subset::npos; y = i.find_next(y))
        reach[b] |= s.below(s.add(b, y));
    Relation leq(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (s.below(a).is_subset_of(reach[b]))
          leq.add(a, b);
    return {s.prec(), leq};
  }

  Ideal ideal_of_pair(WSemigroup const& s, Pair const& p) {
    auto prof = classify_pair(s, p);
    if (!prof.admissible)
      throw PreconditionError("pair is not admissible", prof.details.find("admissible")->witness);
    return make_ideal(s, p.order.column(s.zero()));
  }

  Relation ideal_order(WSemigroup const& s, Subset const& i) {
    require_ideal(s, i);
    Relation out(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        for (std::size_t y = i.find_first(); y != Subset::npos; y = i.find_next(y))
          if (s.leq().contains(a, s.add(b, y))) {
            out.add(a, b);
            break;
          }
    return out;
  }

  AxiomReport galois_check(WSemigroup const& s, GaloisOptions const& options) {
    require_budget("galois check", s.size(), options.budget);
    AxiomReport     r;
    Relation const& leq   = options.order ? *options.order : s.leq();
    bool const      o1    = s.leq().is_reflexive() && s.leq().is_transitive();
    auto const      inner = first_missing(compose(s.prec(), leq), s.prec());
    auto const      wb    = first_missing(s.prec(), way_below(s.leq()));
    r.expect("hyp.O1", o1, {}, "increasing sequences of a finite preorder stabilise up to equivalence");
    r.expect("hyp.prec_order", !inner, inner ? std::vector<std::size_t>{inner->first, inner->second}
                                             : std::vector<std::size_t>{});
    r.expect("hyp.way_below", !wb, wb ? std::vector<std::size_t>{wb->first, wb->second}
                                      : std::vector<std::size_t>{});
    char const* names[] = {"roundtrip",           "ideal_pairs",      "counit",        "adjunction",
                           "lattice.prequotient", "lattice.quotient", "ideal_quotient"};
    if (!o1 || inner || wb) {
      for (auto name : names)
        r.skip(name, "hypotheses fail");
      return r;
    }

    std::size_t const n      = s.size();
    auto const        closed = enumerate_ideals(s, true, options.budget);

    std::vector<std::size_t> w;
    for (auto const& i : closed)
      if (w.empty() && !(ideal_of_pair(s, pair_of_ideal(s, i.members)) == i))
        w = first_mismatch(ideal_of_pair(s, pair_of_ideal(s, i.members)).members, i.members);
    r.expect("roundtrip", w.empty(), w, "I_{α_I} differs from I at this element");

    std::vector<Pair> pairs{minimal_pair(s), {s.prec(), Relation::full(n)}};
    w.clear();
    for (auto const& i : enumerate_ideals(s, false, options.budget)) {
      auto p    = pair_of_ideal(s, i.members);
      auto prof = classify_pair(s, p);
      if (w.empty() && !(prof.admissible && prof.normal && (!i.closed || prof.left_closed)))
        w = {i.members.find_first()};
      pairs.push_back(std::move(p));
    }
    r.expect("ideal_pairs", w.empty(), w);
    for (auto const& p : options.pairs)
      pairs.push_back(p);

    // φψ(α) ≤ α on normal left-closed pairs; I ⊆ I_α iff α_I ≤ α where
    // α is left-closed or ≺∘≤_α ⊆ ≺
    bool counit = true, adjunction = true;
    for (auto const& p : pairs) {
      if (p.aux != s.prec())
        continue;
      auto prof = classify_pair(s, p);
      if (!prof.admissible || !prof.normal)
        continue;
      auto ip = ideal_of_pair(s, p);
      if (prof.left_closed) {
        counit = counit && ip.closed && pair_leq(s, pair_of_ideal(s, ip.members), p);
      }
      if (!prof.left_closed && first_missing(compose(s.prec(), p.order), s.prec()))
        continue;
      for (auto const& i : closed)
        adjunction =
            adjunction && i.members.is_subset_of(ip.members) == pair_leq(s, pair_of_ideal(s, i.members), p);
    }
    r.expect("counit", counit);
    r.expect("adjunction", adjunction);

    auto const same = closed_sets(s, options.budget);
    auto const pre  = closed_sets(with_prec(s, compose(s.leq(), s.prec())), options.budget);
    r.expect("lattice.prequotient", pre == same);

    auto const               q = quotient(s, minimal_pair(s));
    std::vector<Subset>      lifted;
    for (auto const& c : closed_sets(q.quotient, options.budget)) {
      Subset m(n);
      for (std::size_t a = 0; a < n; ++a)
        m[a] = c[q.class_of[a]];
      lifted.push_back(std::move(m));
    }
    std::sort(lifted.begin(), lifted.end(), &subset_less);
    r.expect("lattice.quotient", lifted == same);

    if (s.prec() == s.leq()) {
      bool agree = true;
      for (auto const& i : closed)
        agree = agree && ideal_order(s, i.members) == pair_of_ideal(s, i.members).order;
      r.expect("ideal_quotient", agree);
    } else {
      r.skip("ideal_quotient", "≺ differs from ≤_≺, no Cu quotient to compare with");
    }
    return r;
  }

}  // namespace ordcalc
