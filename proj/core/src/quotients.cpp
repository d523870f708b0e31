#include "ordcalc/quotients.hpp"

#include <string>

namespace ordcalc {

  namespace {

    void require_normal_admissible(Relation const& prec, FiniteMonoid const& m, Pair const& p) {
      auto prof = classify_pair(prec, &m, p);
      if (prof.admissible && prof.normal)
        return;
      std::vector<std::size_t> witness;
      std::string              what = "pair is not normal admissible";
      for (auto const& c : prof.details.checks())
        if (!c.passed && !c.skipped && c.name != "left_closed" && c.name != "auxiliary") {
          what += " (" + c.name + ")";
          witness = c.witness;
          break;
        }
      throw PreconditionError(what, witness);
    }

    std::vector<std::size_t> witness_of(Edge e) {
      return {e.first, e.second};
    }

    // a ≤ b0 and b0 ≤̃ b, then ≼' = ≤'∘≼̃
    Pair lift_from_prequotient(Pair const& base, Pair const& beta) {
      Relation leq = compose(base.order, beta.order);
      return {compose(leq, beta.aux), leq};
    }

  }  // namespace

  NoFactorization::NoFactorization(int condition, Edge witness)
      : std::runtime_error("pair is not below the kernel: condition " + std::to_string(condition) +
                           " fails at (" + std::to_string(witness.first) + ", " + std::to_string(witness.second) +
                           ")"),
        _condition(condition),
        _witness(witness) {}

  WSemigroup prequotient(WSemigroup const& s, Pair const& p) {
    require_normal_admissible(s.prec(), s.monoid(), p);
    return with_prec(s, compose(p.order, p.aux));
  }

  QuotientResult quotient(WSemigroup const& s, Pair const& p) {
    require_normal_admissible(s.prec(), s.monoid(), p);
    std::size_t const        n = s.size();
    std::vector<std::size_t> cls(n, npos), rep;
    for (std::size_t a = 0; a < n; ++a) {
      if (cls[a] != npos)
        continue;
      for (std::size_t b = a; b < n; ++b)
        if (p.order.contains(a, b) && p.order.contains(b, a))
          cls[b] = rep.size();
      rep.push_back(a);
    }
    std::size_t const k   = rep.size();
    Relation const    pre = compose(p.order, p.aux);

    std::vector<std::size_t> table(k * k);
    Relation                 prec(k);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t const ca = cls[a], cb = cls[b];
        if (pre.contains(a, b) != pre.contains(rep[ca], rep[cb]))
          throw PreconditionError("quotient relation depends on representatives", {a, b});
        if (cls[s.add(a, b)] != cls[s.add(rep[ca], rep[cb])])
          throw PreconditionError("addition is not invariant on classes", {a, b});
      }
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t d = 0; d < k; ++d) {
        table[c * k + d] = cls[s.add(rep[c], rep[d])];
        if (pre.contains(rep[c], rep[d]))
          prec.add(c, d);
      }
    WSemigroup q(FiniteMonoid(k, cls[s.zero()], std::move(table)), std::move(prec));
    WMorphism  proj{s, q, cls};
    return {std::move(q), std::move(proj), std::move(cls), std::move(rep)};
  }

  Pair kernel(WMorphism const& f) {
    auto report = check_morphism(f);
    if (!report.ok()) {
      auto const* c = report.first_failure();
      throw PreconditionError("not a W-morphism (" + c->name + ")", c->witness);
    }
    std::size_t const n = f.source.size();
    Relation          leq(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        if (f.target.below(f(a)).is_subset_of(f.target.below(f(b))))
          leq.add(a, b);
    return {f.source.prec(), leq};
  }

  Factorization factor_through(WMorphism const& f, Pair const& p) {
    require_normal_admissible(f.source.prec(), f.source.monoid(), p);
    Pair const ker = kernel(f);
    if (auto fail = pair_order_failure(f.source, p, ker))
      throw NoFactorization(fail->condition, fail->witness);

    auto src = quotient(f.source, p);
    auto tgt = quotient(f.target, minimal_pair(f.target));

    std::size_t const        k = src.quotient.size();
    std::vector<std::size_t> h(k);
    for (std::size_t c = 0; c < k; ++c)
      h[c] = tgt.class_of[f(src.representative[c])];

    AxiomReport checks;
    std::optional<std::size_t> broken;
    for (std::size_t x = 0; x < f.source.size() && !broken; ++x)
      if (h[src.class_of[x]] != tgt.class_of[f(x)])
        broken = x;
    checks.expect("commutes", !broken, broken ? std::vector<std::size_t>{*broken} : std::vector<std::size_t>{});

    WMorphism hm{src.quotient, tgt.quotient, std::move(h)};
    checks.merge(check_morphism(hm), "h");

    bool embedding = true;
    for (std::size_t c = 0; c < k && embedding; ++c)
      for (std::size_t d = 0; d < k && embedding; ++d)
        embedding = src.quotient.leq().contains(c, d) == tgt.quotient.leq().contains(hm(c), hm(d));

    return {std::move(hm), std::move(src), std::move(tgt), embedding, std::move(checks)};
  }

  Pair induced_on_prequotient(Pair const& outer) {
    return {compose(outer.order, outer.aux), outer.order};
  }

  AxiomReport correspondence_check(WSemigroup const& s, Pair const& p, std::vector<Relation> const& seeds) {
    require_normal_admissible(s.prec(), s.monoid(), p);
    WSemigroup const pre = with_prec(s, compose(p.order, p.aux));
    Pair const       base{pre.prec(), p.order};
    AxiomReport      out;

    auto above = [](WSemigroup const& x, Pair const& lo, Pair const& hi) -> std::optional<PairOrderFailure> {
      try {
        return pair_order_failure(x, lo, hi);
      } catch (PreconditionError const&) {
        return PairOrderFailure{0, {npos, npos}};
      }
    };

    std::vector<Pair> lifted, images;
    for (std::size_t i = 0; i < seeds.size(); ++i) {
      if (seeds[i].size() != s.size())
        throw std::invalid_argument("seed and carrier differ in size");
      Pair outer = generate_normal(s, seeds[i] | p.order);
      if (above(s, p, outer))
        outer = extension(outer);
      if (auto fail = above(s, p, outer))
        throw PreconditionError("seed-generated pair is not above the base pair", witness_of(fail->witness));

      AxiomReport r;
      Pair const  beta = induced_on_prequotient(outer);
      auto const  prof = classify_pair(pre, beta);
      r.expect("induced.admissible", prof.admissible);
      r.expect("induced.normal", prof.normal);
      r.expect("induced.auxiliary", prof.auxiliary, prof.details.find("auxiliary")->witness);
      auto base_fail = above(pre, base, beta);
      r.expect("induced.above_base", !base_fail,
               base_fail ? witness_of(base_fail->witness) : std::vector<std::size_t>{});

      if (prof.admissible && prof.normal) {
        WSemigroup const two_pre = with_prec(pre, compose(beta.order, beta.aux));
        WSemigroup const one_pre = with_prec(s, compose(outer.order, outer.aux));
        r.expect("prequotients_equal", two_pre == one_pre);
        auto one = quotient(s, outer);
        auto two = quotient(pre, beta);
        auto phi = induced_map(one.class_of, two.class_of, one.quotient.size());
        r.expect("two_stage_iso", phi && is_isomorphism(one.quotient, two.quotient, *phi));
      } else {
        r.skip("prequotients_equal", "induced pair is not normal admissible");
        r.skip("two_stage_iso", "induced pair is not normal admissible");
      }

      // the inverse construction recovers auxiliary pairs
      Pair const aux_outer = prof.auxiliary && classify_pair(s, outer).auxiliary ? outer : extension(outer);
      auto const aux_prof  = classify_pair(s, aux_outer);
      r.expect("extension.normal_auxiliary", aux_prof.admissible && aux_prof.normal && aux_prof.auxiliary);
      Pair const aux_beta = induced_on_prequotient(aux_outer);
      r.expect("inverse", lift_from_prequotient(p, aux_beta) == aux_outer);
      lifted.push_back(aux_outer);
      images.push_back(aux_beta);
      out.merge(r, "seed" + std::to_string(i));
    }
    bool injective = true;
    for (std::size_t i = 0; i < lifted.size(); ++i)
      for (std::size_t j = i + 1; j < lifted.size(); ++j)
        if (lifted[i] != lifted[j] && images[i] == images[j])
          injective = false;
    if (!seeds.empty())
      out.expect("injective", injective);
    return out;
  }

}  // namespace ordcalc
