#include "ordcalc/genpair.hpp"

#include <stdexcept>

namespace ordcalc {

  namespace {

    void require_left_continuous(Relation const& r, Relation const& prec) {
      if (r.size() != prec.size())
        throw std::invalid_argument("relation and carrier differ in size");
      if (auto e = left_continuity_failure(r, prec))
        throw PreconditionError("seed relation is not left continuous", {e->first, e->second});
    }

    Relation plus_identity_closure(WSemigroup const& s, Relation const& r) {
      return additive_closure(sum(r, Relation::identity(s.size()), s.monoid()), s.monoid());
    }

    bool has_seed_refinement(WSemigroup const& s, Relation const& r) {
      auto q = compose({&s.prec(), &r, &s.prec()});
      for (auto [m, n] : {Edge{1, 1}, Edge{1, 2}, Edge{2, 1}})
        if (refinement_failure(s.prec(), q, q, s.monoid(), m, n))
          return false;
      return true;
    }

  }  // namespace

  Relation chain_relation(Relation const& prec, Relation const& r) {
    Relation reach = preorder_closure(compose(prec, r));
    return compose(reach, prec);
  }

  Relation order_from_reach(Relation const& prec, Relation const& reach) {
    std::size_t const n     = prec.size();
    Relation const    below = prec.transpose();
    Relation const    into  = reach.transpose();
    Relation          out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (below.row(a).is_subset_of(into.row(b)))
          out.add(a, b);
    return out;
  }

  Pair generate_prenormal(Relation const& prec, Relation const& r) {
    require_left_continuous(r, prec);
    return {prec, order_from_reach(prec, chain_relation(prec, r))};
  }

  Pair generate_prenormal(WSemigroup const& s, Relation const& r) {
    return generate_prenormal(s.prec(), r);
  }

  Pair generate_normal(WSemigroup const& s, Relation const& r) {
    require_left_continuous(r, s.prec());
    return generate_prenormal(s.prec(), plus_identity_closure(s, r));
  }

  Pair extension(Pair const& p) {
    return {compose({&p.order, &p.aux, &p.order}), p.order};
  }

  Relation fixpoint_oracle(Relation const&     prec,
                           FiniteMonoid const* m,
                           Relation const&     r,
                           bool                additive,
                           RuleOrder const&    order) {
    if (r.size() != prec.size())
      throw std::invalid_argument("relation and carrier differ in size");
    if (additive && m == nullptr)
      throw std::invalid_argument("additive rule needs a monoid");
    std::size_t const n     = prec.size();
    Relation const    below = prec.transpose();
    Relation          cur   = induced_preorder(prec) | r;

    auto apply = [&](Rule rule) {
      switch (rule) {
        case Rule::transitive:
          cur = transitive_closure(cur);
          break;
        case Rule::closure: {
          // add (a, b) once every c ≺ a already has c ≤ b
          Relation const into = cur.transpose();
          Relation       next = cur;
          for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
              if (below.row(a).is_subset_of(into.row(b)))
                next.add(a, b);
          cur = std::move(next);
          break;
        }
        case Rule::additive:
          if (additive)
            cur |= sum(cur, cur, *m);
          break;
      }
    };

    while (true) {
      Relation before = cur;
      for (Rule rule : order)
        apply(rule);
      if (cur == before)
        return cur;
    }
  }

  Relation fixpoint_oracle(WSemigroup const& s, Relation const& r, bool additive, RuleOrder const& order) {
    return fixpoint_oracle(s.prec(), &s.monoid(), r, additive, order);
  }

  Relation one_step_order(Relation const& prec, Relation const& step, bool pure) {
    Relation reach = compose({&prec, &step, &prec});
    if (!pure)
      reach |= prec;
    return order_from_reach(prec, reach);
  }

  Relation one_step_form(WSemigroup const& s, Relation const& r) {
    require_left_continuous(r, s.prec());
    if (auto e = almost_transitivity_failure(r, s.prec()))
      throw PreconditionError("seed relation is not almost transitive", {e->first, e->second});
    return one_step_order(s.prec(), r);
  }

  Relation one_step_normal_form(WSemigroup const& s, Relation const& r) {
    require_left_continuous(r, s.prec());
    if (auto e = almost_transitivity_failure(r, s.prec()))
      throw PreconditionError("seed relation is not almost transitive", {e->first, e->second});
    if (!has_seed_refinement(s, r))
      throw PreconditionError("seed relation lacks almost refinement");
    if (auto w = almost_refinement_failure(s))
      throw PreconditionError("semigroup lacks almost refinement", w->upper);
    return one_step_order(s.prec(), plus_identity_closure(s, r));
  }

  AxiomReport one_step_comparison(WSemigroup const& s, Relation const& r, bool normal) {
    AxiomReport out;
    auto        cont = left_continuity_failure(r, s.prec());
    out.expect("left_continuous", !cont, cont ? std::vector<std::size_t>{cont->first, cont->second}
                                              : std::vector<std::size_t>{});
    auto at = almost_transitivity_failure(r, s.prec());
    out.expect("almost_transitive", !at, at ? std::vector<std::size_t>{at->first, at->second}
                                            : std::vector<std::size_t>{});
    Relation step = r;
    if (normal) {
      out.expect("almost_refinement", has_seed_refinement(s, r) && has_almost_refinement(s));
      step = plus_identity_closure(s, r);
    }
    // the chain form itself needs continuity of the step relation
    if (left_continuity_failure(step, s.prec())) {
      out.skip("agrees", "step relation is not left continuous");
      return out;
    }
    Relation chain = generate_prenormal(s.prec(), step).order;
    auto     diff  = first_missing(chain, one_step_order(s.prec(), step));
    if (!diff)
      diff = first_missing(one_step_order(s.prec(), step), chain);
    out.expect("agrees", !diff, diff ? std::vector<std::size_t>{diff->first, diff->second}
                                     : std::vector<std::size_t>{});
    if (Relation::identity(s.size()).is_subset_of(step)) {
      bool same = one_step_order(s.prec(), step, true) == chain;
      out.expect("pure_agrees", same);
    }
    return out;
  }

}  // namespace ordcalc
