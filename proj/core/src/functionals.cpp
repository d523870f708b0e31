#include "ordcalc/functionals.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace ordcalc {

  namespace {

    using Value = std::optional<Rational>;  // nullopt is ∞

    Value add(Value const& x, Value const& y) {
      if (!x || !y)
        return std::nullopt;
      return *x + *y;
    }

    bool le(Value const& x, Value const& y) {
      if (!y)
        return true;
      return x && *x <= *y;
    }

    ExtState from_values(std::vector<Value> const& vs) {
      ExtState l{Subset(vs.size()), Vector(vs.size())};
      for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i]) {
          l.finite.set(i);
          l.values[i] = *vs[i];
        }
      return l;
    }

    ExtState from_point(std::size_t n, Subset const& j, Vector const& x) {
      ExtState                 l{j, Vector(n)};
      std::vector<std::size_t> vars = members(j);
      for (std::size_t k = 0; k < vars.size(); ++k)
        l.values[vars[k]] = x[k];
      return l;
    }

    std::vector<Ideal> locus_candidates(WSemigroup const& s, GroupAction const* g, std::size_t budget) {
      return g ? invariant_closed_ideals(s, *g, budget) : enumerate_ideals(s, true, budget);
    }

    std::optional<ExtState> separate_over(WSemigroup const&         s,
                                          std::vector<Ideal> const& loci,
                                          std::size_t               a,
                                          std::size_t               b,
                                          GroupAction const*        g) {
      for (auto const& j : loci) {
        if (!j.contains(b))
          continue;
        LinearSystem             sys  = functional_system(s, j.members, g);
        std::vector<std::size_t> vars = members(j.members);
        auto pos = [&](std::size_t x) { return static_cast<std::size_t>(std::find(vars.begin(), vars.end(), x) - vars.begin()); };
        sys.add_terms({{pos(b), Rational(1)}}, Sense::eq, 1);
        if (j.contains(a))
          sys.add_terms({{pos(a), Rational(1)}}, Sense::ge, 1);
        if (auto x = feasible_point(sys)) {
          ExtState l = from_point(s.size(), j.members, *x);
          if (!check_w_functional(s, l).ok())
            throw std::logic_error("separating state fails validation");
          return l;
        }
      }
      return std::nullopt;
    }

    // first k ≥ 1 with ((k+1)x, ky) in `rel`, found before the pair repeats
    std::optional<std::size_t> first_multiple(WSemigroup const& s, Relation const& rel, std::size_t x, std::size_t y) {
      std::set<std::pair<std::size_t, std::size_t>> seen;
      std::pair<std::size_t, std::size_t>           p{s.add(x, x), y};
      for (std::size_t k = 1; seen.insert(p).second; ++k) {
        if (rel.contains(p.first, p.second))
          return k;
        p = {s.add(p.first, x), s.add(p.second, y)};
      }
      return std::nullopt;
    }

    // bijection between two finite families given by maps both ways
    void transfer_entry(AxiomReport&                                        r,
                        std::string const&                                  name,
                        std::vector<ExtState> const&                        from,
                        std::vector<ExtState> const&                        to,
                        std::function<ExtState(ExtState const&)> const&     fwd,
                        std::function<ExtState(ExtState const&)> const&     back) {
      auto in = [](std::vector<ExtState> const& xs, ExtState const& x) {
        return std::find(xs.begin(), xs.end(), x) != xs.end();
      };
      std::vector<std::size_t> w;
      std::string              why;
      for (std::size_t i = 0; i < from.size() && w.empty(); ++i) {
        ExtState const y = fwd(from[i]);
        if (!in(to, y))
          w = {i}, why = "image outside the target";
        else if (!(back(y) == from[i]))
          w = {i}, why = "round trip differs";
      }
      for (std::size_t i = 0; i < to.size() && w.empty(); ++i) {
        ExtState const x = back(to[i]);
        if (!in(from, x))
          w = {i}, why = "preimage outside the source";
        else if (!(fwd(x) == to[i]))
          w = {i}, why = "round trip differs";
      }
      if (w.empty() && from.size() != to.size())
        why = "sizes differ";
      r.expect(name, w.empty() && from.size() == to.size(), w,
               why.empty() ? std::to_string(from.size()) + " functionals" : why);
    }

    bool is_cu(WSemigroup const& c) {
      return check_cu_axioms(c).ok() && c.prec() == way_below(c.leq());
    }

  }  // namespace

  bool ExtState::operator==(ExtState const& other) const {
    if (finite != other.finite)
      return false;
    for (auto a = finite.find_first(); a != Subset::npos; a = finite.find_next(a))
      if (values[a] != other.values[a])
        return false;
    return true;
  }

  ExtState zero_state(Subset const& j) {
    return {j, Vector(j.size())};
  }

  AxiomReport check_state(WSemigroup const& s, ExtState const& l) {
    AxiomReport       r;
    std::size_t const n = s.size();
    bool const        shape = l.finite.size() == n && l.values.size() == n;
    r.expect("shape", shape);
    if (!shape)
      return r;
    r.expect("zero", l.finite.test(s.zero()) && l.values[s.zero()] == 0);

    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      if (l.finite.test(a) && l.values[a] < 0)
        w = {a};
    r.expect("nonnegative", w.empty(), w);

    Relation const& leq = s.leq();
    w.clear();
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b) {
        bool const fa = l.finite.test(a), fb = l.finite.test(b);
        if ((fa && fb && !l.finite.test(s.add(a, b))) || (leq.contains(a, b) && fb && !fa))
          w = {a, b};
      }
    r.expect("finite_ideal", l.finite.test(s.zero()) && w.empty(), w);

    w.clear();
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b)
        if (l.value(s.add(a, b)) != add(l.value(a), l.value(b)))
          w = {a, b};
    r.expect("additive", w.empty(), w);

    w.clear();
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = 0; b < n && w.empty(); ++b)
        if (leq.contains(a, b) && !le(l.value(a), l.value(b)))
          w = {a, b};
    r.expect("monotone", w.empty(), w);
    return r;
  }

  ExtState regularize(WSemigroup const& s, ExtState const& l) {
    std::vector<Value> vs(s.size());
    for (std::size_t a = 0; a < s.size(); ++a) {
      Value best = Rational(0);
      for (auto x = s.below(a).find_first(); x != Subset::npos && best; x = s.below(a).find_next(x)) {
        Value v = l.value(x);
        if (!v || *v > *best)
          best = v;
      }
      vs[a] = best;
    }
    return from_values(vs);
  }

  AxiomReport check_w_functional(WSemigroup const& s, ExtState const& l) {
    AxiomReport r = check_state(s, l);
    if (!r.passed("shape"))
      return r;
    r.expect("closed", is_closed_set(s, l.finite));
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < s.size() && w.empty(); ++a)
      if (l.value(a) != l.value(s.cofinal(a)))
        w = {a, s.cofinal(a)};
    r.expect("ties", w.empty(), w);
    r.expect("regular", regularize(s, l) == l);
    return r;
  }

  bool is_w_functional(WSemigroup const& s, ExtState const& l) {
    return check_w_functional(s, l).ok();
  }

  LinearSystem functional_system(WSemigroup const& s, Subset const& j, GroupAction const* g) {
    if (j.size() != s.size())
      throw std::invalid_argument("subset and carrier differ in size");
    if (!is_ideal(s, j) || !is_closed_set(s, j))
      throw PreconditionError("finite locus is not a closed ideal");
    if (g && !is_invariant(*g, j))
      throw PreconditionError("finite locus is not invariant");

    std::vector<std::size_t> const vars = members(j);
    std::vector<std::size_t>       pos(s.size(), npos);
    for (std::size_t k = 0; k < vars.size(); ++k)
      pos[vars[k]] = k;
    Relation const& leq = s.leq();

    LinearSystem sys(vars.size());
    sys.add_terms({{pos[s.zero()], Rational(1)}}, Sense::eq, 0);
    for (auto a : vars) {
      sys.add_terms({{pos[a], Rational(1)}}, Sense::ge, 0);
      if (s.cofinal(a) != a)
        sys.add_terms({{pos[a], Rational(1)}, {pos[s.cofinal(a)], Rational(-1)}}, Sense::eq, 0);
      if (g)
        for (auto const& p : g->generators)
          if (p[a] != a)
            sys.add_terms({{pos[a], Rational(1)}, {pos[p[a]], Rational(-1)}}, Sense::eq, 0);
      for (auto b : vars) {
        if (b >= a)
          sys.add_terms({{pos[a], Rational(1)}, {pos[b], Rational(1)}, {pos[s.add(a, b)], Rational(-1)}}, Sense::eq, 0);
        if (a != b && leq.contains(a, b))
          sys.add_terms({{pos[a], Rational(1)}, {pos[b], Rational(-1)}}, Sense::le, 0);
      }
    }
    return sys;
  }

  std::optional<ExtState> separate(WSemigroup const&  s,
                                   std::size_t        a,
                                   std::size_t        b,
                                   GroupAction const* g,
                                   std::size_t        budget) {
    if (a >= s.size() || b >= s.size())
      throw std::out_of_range("element out of range");
    return separate_over(s, locus_candidates(s, g, budget), a, b, g);
  }

  std::vector<ExtState> enumerate_functionals(WSemigroup const& s, GroupAction const* g, std::size_t budget) {
    std::vector<ExtState> out;
    for (auto const& j : locus_candidates(s, g, budget)) {
      LinearSystem slice = functional_system(s, j.members, g);
      std::vector<std::pair<std::size_t, Rational>> total;
      for (std::size_t v = 0; v < slice.vars(); ++v)
        total.emplace_back(v, 1);
      slice.add_terms(total, Sense::eq, 1);
      if (!feasible_point(slice)) {
        out.push_back(zero_state(j.members));
        continue;
      }
      for (auto const& x : vertices(slice))
        out.push_back(from_point(s.size(), j.members, x));
    }
    return out;
  }

  std::vector<ExtState> normalized_vertices(WSemigroup const& s, std::size_t u, GroupAction const* g) {
    if (u >= s.size())
      throw std::out_of_range("element out of range");
    Subset all(s.size());
    all.set();
    LinearSystem sys = functional_system(s, all, g);
    sys.add_terms({{u, Rational(1)}}, Sense::eq, 1);
    std::vector<ExtState> out;
    for (auto const& x : vertices(sys))
      out.push_back(from_point(s.size(), all, x));
    return out;
  }

  AUResult almost_unperforated(WSemigroup const& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (s.below(a).is_subset_of(s.below(b)))
          continue;
        if (auto k = first_multiple(s, s.prec(), a, b))
          return {false, std::array<std::size_t, 3>{a, b, *k}};
      }
    return {};
  }

  ComparisonResult dyn_strict_comparison(WSemigroup const& s, GroupAction const& g, std::size_t budget) {
    ComparisonResult out;
    auto const       q    = dyn_quotient(s, g);
    auto const&      leq  = q.quotient.leq();
    auto const       loci = invariant_closed_ideals(s, g, budget);

    std::size_t separated = 0;
    for (std::size_t b = 0; b < s.size() && !out.state_witness; ++b) {
      Subset const ib = g_principal(s, g, b).members;
      for (auto a = ib.find_first(); a != Subset::npos && !out.state_witness; a = ib.find_next(a)) {
        if (leq.contains(q.class_of[a], q.class_of[b]))
          continue;
        if (separate_over(s, loci, a, b, &g))
          ++separated;
        else
          out.state_witness = Edge{a, b};
      }
    }
    out.state_based = !out.state_witness;

    auto const au         = almost_unperforated(q.quotient);
    out.au_quotient       = au.holds;
    out.quotient_witness  = au.witness;
    auto const auc        = almost_unperforated(complete(q.quotient).semigroup);
    out.au_completion     = auc.holds;
    out.completion_witness = auc.witness;

    auto flag = [](bool x) { return x ? "1" : "0"; };
    out.report.expect("agree", out.state_based == out.au_quotient && out.au_quotient == out.au_completion, {},
                      std::string("states/AU(S/G)/AU(γ(S/G)) = ") + flag(out.state_based) + flag(out.au_quotient) +
                          flag(out.au_completion));
    out.report.pass("states_valid", std::to_string(separated) + " separating states");
    return out;
  }

  AxiomReport functional_transfer_check(WSemigroup const& s, GroupAction const& g, std::size_t u, std::size_t budget) {
    if (u >= s.size() || !is_order_unit(s, u))
      throw PreconditionError("not an order unit", {u});
    AxiomReport r;

    auto const c = complete(s);
    auto const restrict_gamma = [&](ExtState const& m) {
      std::vector<Value> vs(s.size());
      for (std::size_t a = 0; a < s.size(); ++a)
        vs[a] = m.value(c.gamma(a));
      return from_values(vs);
    };
    auto const extend = [&](ExtState const& l) {
      std::vector<Value> vs(c.ideals.size());
      for (std::size_t i = 0; i < vs.size(); ++i) {
        Value best = Rational(0);
        for (auto d = c.ideals[i].find_first(); d != Subset::npos && best; d = c.ideals[i].find_next(d)) {
          Value v = l.value(d);
          if (!v || *v > *best)
            best = v;
        }
        vs[i] = best;
      }
      return from_values(vs);
    };
    transfer_entry(r, "gamma.full", enumerate_functionals(c.semigroup, nullptr, budget),
                   enumerate_functionals(s, nullptr, budget), restrict_gamma, extend);
    transfer_entry(r, "gamma.normalized", normalized_vertices(c.semigroup, c.gamma(u)), normalized_vertices(s, u),
                   restrict_gamma, extend);

    auto const q  = dyn_quotient(s, g);
    auto const qu = q.class_of[u];
    if (!is_order_unit(q.quotient, qu))
      throw PreconditionError("class of u is not an order unit", {u});
    auto const pull = [&](ExtState const& m) {
      std::vector<Value> vs(s.size());
      for (std::size_t a = 0; a < s.size(); ++a)
        vs[a] = m.value(q.class_of[a]);
      return from_values(vs);
    };
    auto const push = [&](ExtState const& l) {
      std::vector<Value> vs(q.quotient.size());
      for (std::size_t x = 0; x < vs.size(); ++x)
        vs[x] = l.value(q.representative[x]);
      return from_values(vs);
    };
    transfer_entry(r, "quotient.full", enumerate_functionals(q.quotient, nullptr, budget),
                   enumerate_functionals(s, &g, budget), pull, push);
    transfer_entry(r, "quotient.normalized", normalized_vertices(q.quotient, qu), normalized_vertices(s, u, &g), pull,
                   push);
    return r;
  }

  Subset soft_elements(WSemigroup const& c) {
    if (!is_cu(c))
      throw PreconditionError("not a Cu-semigroup");
    Subset out(c.size());
    for (std::size_t a = 0; a < c.size(); ++a) {
      bool soft = true;
      for (auto x = c.below(a).find_first(); x != Subset::npos && soft; x = c.below(a).find_next(x))
        soft = first_multiple(c, c.leq(), x, a).has_value();
      out[a] = soft;
    }
    return out;
  }

  AxiomReport soft_embedding_harness(WSemigroup const&  s,
                                     GroupAction const& g,
                                     WMorphism const&   f,
                                     std::size_t        budget) {
    AxiomReport r;
    auto const& t = f.target;
    r.expect("pre.morphism", f.source == s && check_morphism(f).ok());
    auto inv = invariance_failure(f, g);
    r.expect("pre.invariant", !inv, inv ? std::vector<std::size_t>{inv->first, inv->second} : std::vector<std::size_t>{});
    r.expect("pre.cu_target", is_cu(t));

    auto const q = dyn_quotient(s, g);
    auto const c = complete(q.quotient);
    auto const m = c.semigroup.size();

    // φ(γ[x]) = f(x)
    std::vector<std::size_t> phi(m, npos);
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < s.size() && w.empty(); ++a) {
      std::size_t const i = c.gamma(q.class_of[a]);
      if (phi[i] == npos)
        phi[i] = f(a);
      else if (!t.leq().contains(phi[i], f(a)) || !t.leq().contains(f(a), phi[i]))
        w = {a};
    }
    r.expect("pre.phi_defined", w.empty(), w);

    auto const au = almost_unperforated(c.semigroup);
    r.expect("pre.au", au.holds,
             au.witness ? std::vector<std::size_t>{(*au.witness)[0], (*au.witness)[1], (*au.witness)[2]}
                        : std::vector<std::size_t>{});

    bool surjective = false;
    if (r.passed("pre.phi_defined")) {
      auto const on_c = enumerate_functionals(c.semigroup, nullptr, budget);
      auto const on_t = enumerate_functionals(t, nullptr, budget);
      std::vector<ExtState> pulled;
      for (auto const& mu : on_t) {
        std::vector<Value> vs(m);
        for (std::size_t i = 0; i < m; ++i)
          vs[i] = mu.value(phi[i]);
        pulled.push_back(from_values(vs));
      }
      surjective = std::all_of(on_c.begin(), on_c.end(), [&](ExtState const& nu) {
        return std::find(pulled.begin(), pulled.end(), nu) != pulled.end();
      });
    }
    r.expect("pre.pullback_surjective", surjective, {}, "checked on extreme functionals only");

    for (auto const& ck : r.checks())
      if (!ck.passed) {
        r.skip("conclusion", "precondition " + ck.name + " unmet");
        return r;
      }

    Subset const soft = soft_elements(c.semigroup);
    w.clear();
    for (std::size_t b = 0; b < m && w.empty(); ++b) {
      if (!soft.test(b))
        continue;
      Subset const ib = principal(c.semigroup, b).members;
      for (std::size_t a = 0; a < m && w.empty(); ++a)
        if (soft.test(a) && ib.test(a) && t.leq().contains(phi[a], phi[b]) && !c.semigroup.leq().contains(a, b))
          w = {a, b};
    }
    r.expect("conclusion", w.empty(), w);
    return r;
  }

}  // namespace ordcalc
