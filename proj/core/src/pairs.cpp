#include "ordcalc/pairs.hpp"

#include <stdexcept>

namespace ordcalc {

  namespace {

    std::vector<std::size_t> edge_witness(std::optional<Edge> const& e) {
      if (!e)
        return {};
      return {e->first, e->second};
    }

    // first pair in the symmetric difference
    std::optional<Edge> first_difference(Relation const& r1, Relation const& r2) {
      auto a = first_missing(r1, r2);
      auto b = first_missing(r2, r1);
      if (!a)
        return b;
      if (!b)
        return a;
      return std::min(*a, *b);
    }

    void require_sizes(Relation const& ambient, Pair const& p) {
      if (p.aux.size() != ambient.size() || p.order.size() != ambient.size())
        throw std::invalid_argument("pair and carrier differ in size");
    }

    std::optional<Edge> transitivity_failure(Relation const& r) {
      return first_missing(compose(r, r), r);
    }

    std::optional<Edge> admissible_failure(Pair const& p) {
      return first_missing(downset_order(p), p.order);
    }

    // (∀c ≺ a: (c, b) ∈ ≺∘≤) ⇒ (a, b) ∈ ≤_≺∘≤
    std::optional<Edge> left_closed_failure(Relation const& prec, Relation const& order) {
      std::size_t const n     = prec.size();
      Relation const    below = prec.transpose();
      Relation const    po    = compose(prec, order).transpose();
      Relation const    rhs   = compose(induced_preorder(prec), order);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (below.row(a).is_subset_of(po.row(b)) && !rhs.contains(a, b))
            return Edge{a, b};
      return std::nullopt;
    }

    std::optional<Edge> auxiliary_failure(Pair const& p) {
      if (auto e = first_missing(p.aux, p.order))
        return e;
      return first_missing(compose({&p.order, &p.aux, &p.order}), p.aux);
    }

  }  // namespace

  Relation downset_order(Pair const& p) {
    return induced_preorder(compose(p.order, p.aux));
  }

  bool is_prenormal_relation(Relation const& aux, Relation const& prec) {
    return aux.is_transitive() && prec.is_subset_of(aux) && compose(aux, prec) == aux;
  }

  PairProfile classify_pair(Relation const& ambient, FiniteMonoid const* m, Pair const& p) {
    require_sizes(ambient, p);
    if (m != nullptr && m->size() != ambient.size())
      throw std::invalid_argument("monoid and carrier differ in size");
    PairProfile  out;
    AxiomReport& r = out.details;

    bool const preorder = p.order.is_reflexive() && p.order.is_transitive();
    r.expect("order_preorder", preorder, edge_witness(transitivity_failure(p.order)));

    auto adm       = admissible_failure(p);
    out.admissible = preorder && !adm;
    r.expect("admissible", !adm, edge_witness(adm), "a^{≤∘≼} ⊆ b^{≤∘≼} without a ≤ b");

    auto trans = transitivity_failure(p.aux);
    r.expect("aux_transitive", !trans, edge_witness(trans));
    auto weaker = first_missing(ambient, p.aux);
    r.expect("aux_weaker", !weaker, edge_witness(weaker), "a ≺ b without a ≼ b");
    auto absorbs = first_difference(p.aux, compose(p.aux, ambient));
    r.expect("aux_absorbs", !absorbs, edge_witness(absorbs), "≼ and ≼∘≺ differ at (a, b)");
    auto cont = left_continuity_failure(p.order, ambient);
    r.expect("order_left_continuous", !cont, edge_witness(cont));
    out.prenormal = !trans && !weaker && !absorbs && !cont;

    auto closed     = left_closed_failure(ambient, p.order);
    out.left_closed = !closed;
    r.expect("left_closed", !closed, edge_witness(closed));

    if (m != nullptr) {
      bool aux_add   = is_additive(p.aux, *m);
      bool order_add = is_additive(p.order, *m);
      r.expect("aux_additive", aux_add);
      r.expect("order_additive", order_add);
      out.normal = out.prenormal && aux_add && order_add;
    } else {
      r.skip("aux_additive", "no monoid");
      r.skip("order_additive", "no monoid");
    }

    auto aux       = auxiliary_failure(p);
    out.auxiliary  = !aux;
    r.expect("auxiliary", !aux, edge_witness(aux));
    return out;
  }

  PairProfile classify_pair(WSemigroup const& s, Pair const& p) {
    return classify_pair(s.prec(), &s.monoid(), p);
  }

  Pair minimal_pair(WSemigroup const& s) {
    return {s.prec(), s.leq()};
  }

  std::optional<PairOrderFailure> pair_order_failure(WSemigroup const& s, Pair const& p1, Pair const& p2) {
    require_sizes(s.prec(), p1);
    require_sizes(s.prec(), p2);
    for (auto const* p : {&p1, &p2})
      if (auto e = admissible_failure(*p))
        throw PreconditionError("pair is not admissible", {e->first, e->second});
    if (auto e = first_missing(p1.aux, p2.aux))
      return PairOrderFailure{1, *e};
    if (auto e = first_missing(downset_order(p1), downset_order(p2)))
      return PairOrderFailure{2, *e};
    if (auto e = first_missing(p1.order, p2.order))
      return PairOrderFailure{3, *e};
    return std::nullopt;
  }

  bool pair_leq(WSemigroup const& s, Pair const& p1, Pair const& p2) {
    return !pair_order_failure(s, p1, p2);
  }

  AxiomReport pullback_battery(WSemigroup const& s, Relation const& aux2) {
    if (aux2.size() != s.size())
      throw std::invalid_argument("relation and carrier differ in size");
    Relation const& prec = s.prec();
    std::size_t const n  = s.size();
    AxiomReport       r;

    bool const trans  = aux2.is_transitive();
    bool const weaker = prec.is_subset_of(aux2);

    // (i) the identity into (S, ≼) is monotone and continuous, and ≼ is a
    // dense transitive relation on the target
    bool i = false;
    {
      WMorphism id{s, with_prec(s, aux2), identity_morphism(s).map};
      auto      m = check_morphism(id);
      i           = trans && is_dense(aux2) && m.passed("monotone") && m.passed("continuous");
    }

    // (ii) dense, transitive, identity monotone and continuous: each x ≼ a
    // factors as x ≼ a' ≺ a
    bool ii = trans && weaker && is_dense(aux2);
    for (std::size_t x = 0; x < n && ii; ++x)
      for (std::size_t a = 0; a < n && ii; ++a) {
        if (!aux2.contains(x, a))
          continue;
        bool found = false;
        for (std::size_t a1 = 0; a1 < n && !found; ++a1)
          found = prec.contains(a1, a) && aux2.contains(x, a1);
        ii = found;
      }

    // (iii) a^≺ is ≼-cofinal in a^≼
    bool iii = trans && weaker;
    for (std::size_t a = 0; a < n && iii; ++a) {
      Subset const lower = prec.column(a);
      Subset const upper = aux2.column(a);
      iii                = upper.is_subset_of(down_closure(aux2, lower));
    }

    bool iv = trans && weaker && compose(aux2, prec) == aux2;
    bool v  = trans && weaker && compose({&aux2, &prec, &aux2}) == aux2 && !left_continuity_failure(aux2, prec);

    r.expect("i", i);
    r.expect("ii", ii);
    r.expect("iii", iii);
    r.expect("iv", iv);
    r.expect("v", v);
    bool agree = i == ii && ii == iii && iii == iv && iv == v;
    r.expect("agree", agree, {},
             std::string("i..v = ") + (i ? "1" : "0") + (ii ? "1" : "0") + (iii ? "1" : "0") + (iv ? "1" : "0") +
                 (v ? "1" : "0"));
    return r;
  }

  AxiomReport prenormal_transfer_check(WSemigroup const& s, Pair const& p) {
    require_sizes(s.prec(), p);
    Relation const&     prec = s.prec();
    FiniteMonoid const* m    = &s.monoid();
    if (!is_prenormal_relation(p.aux, prec))
      throw PreconditionError("first relation of the pair is not ≺-prenormal");
    if (auto e = admissible_failure(p))
      throw PreconditionError("pair is not admissible", {e->first, e->second});

    AxiomReport r;
    Pair const  base{prec, p.order};
    auto const  base_prof = classify_pair(prec, m, base);
    auto const  self_prof = classify_pair(p.aux, m, p);
    r.expect("base_admissible", base_prof.admissible);
    r.expect("prenormal_transfer", base_prof.prenormal == self_prof.prenormal, {},
             std::string("(≺,≤) ") + (base_prof.prenormal ? "prenormal" : "not prenormal") + ", (≼,≤) " +
                 (self_prof.prenormal ? "prenormal" : "not prenormal"));
    bool base_pc = base_prof.prenormal && base_prof.left_closed;
    bool self_pc = self_prof.prenormal && self_prof.left_closed;
    r.expect("closed_transfer", base_pc == self_pc);

    if (!base_prof.admissible) {
      r.skip("characterization", "(≺, ≤) is not admissible");
      return r;
    }

    Relation const& leq  = p.order;
    Relation const  wide = compose({&leq, &prec, &leq});
    auto minimal_aux     = [&](Relation const& c) {
      if (!is_dense(c))
        return false;
      auto prof = classify_pair(prec, m, {c, leq});
      return prof.admissible && prof.prenormal && prof.auxiliary && induced_preorder(c) == leq;
    };
    auto w2_aux = [&](Relation const& c) {
      if (!is_dense(c))
        return false;
      auto prof = classify_pair(prec, m, {c, leq});
      return prof.admissible && prof.prenormal && prof.auxiliary && check_w2(c, leq).ok();
    };
    std::vector<Relation> candidates{wide, p.aux, compose({&leq, &p.aux, &leq})};

    bool c1 = base_pc;
    bool c2 = minimal_aux(wide);
    bool c3 = false, c4 = false;
    for (auto const& c : candidates) {
      c3 = c3 || minimal_aux(c);
      c4 = c4 || w2_aux(c);
    }
    r.expect("characterization.i", c1);
    r.expect("characterization.ii", c2);
    r.expect("characterization.iii", c3);
    r.expect("characterization.iv", c4);
    r.expect("characterization.agree", c1 == c2 && c2 == c3 && c3 == c4);
    return r;
  }

}  // namespace ordcalc
