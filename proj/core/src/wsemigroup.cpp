#include "ordcalc/wsemigroup.hpp"

#include <sstream>
#include <stdexcept>

namespace ordcalc {

  // ---------------------------------------------------------------- reports

  void AxiomReport::add(Check c) {
    _checks.push_back(std::move(c));
  }

  void AxiomReport::pass(std::string name, std::string detail) {
    _checks.push_back({std::move(name), true, false, {}, std::move(detail)});
  }

  void AxiomReport::fail(std::string name, std::vector<std::size_t> witness, std::string detail) {
    _checks.push_back({std::move(name), false, false, std::move(witness), std::move(detail)});
  }

  void AxiomReport::skip(std::string name, std::string reason) {
    _checks.push_back({std::move(name), true, true, {}, std::move(reason)});
  }

  void AxiomReport::expect(std::string              name,
                           bool                     ok,
                           std::vector<std::size_t> witness,
                           std::string              detail) {
    if (ok)
      pass(std::move(name));
    else
      fail(std::move(name), std::move(witness), std::move(detail));
  }

  void AxiomReport::merge(AxiomReport const& other, std::string const& prefix) {
    for (auto c : other._checks) {
      if (!prefix.empty())
        c.name = prefix + "." + c.name;
      _checks.push_back(std::move(c));
    }
  }

  bool AxiomReport::ok() const {
    return first_failure() == nullptr;
  }

  bool AxiomReport::passed(std::string const& name) const {
    auto c = find(name);
    if (c == nullptr)
      throw std::out_of_range("no check named " + name);
    return c->passed;
  }

  Check const* AxiomReport::find(std::string const& name) const {
    for (auto const& c : _checks)
      if (c.name == name)
        return &c;
    return nullptr;
  }

  Check const* AxiomReport::first_failure() const {
    for (auto const& c : _checks)
      if (!c.passed)
        return &c;
    return nullptr;
  }

  std::string AxiomReport::summary() const {
    std::ostringstream os;
    for (auto const& c : _checks) {
      os << (c.skipped ? "skip " : c.passed ? "pass " : "FAIL ") << c.name;
      if (!c.witness.empty()) {
        os << " [";
        for (std::size_t i = 0; i < c.witness.size(); ++i)
          os << (i ? "," : "") << c.witness[i];
        os << "]";
      }
      if (!c.detail.empty())
        os << " " << c.detail;
      os << "\n";
    }
    return os.str();
  }

  // ----------------------------------------------------------------- monoid

  FiniteMonoid::FiniteMonoid(std::size_t n, std::size_t zero, std::vector<std::size_t> table)
      : _n(n), _zero(zero), _table(std::move(table)) {
    if (n == 0)
      throw std::invalid_argument("empty carrier");
    if (zero >= n)
      throw std::invalid_argument("zero outside the carrier");
    if (_table.size() != n * n)
      throw std::invalid_argument("addition table has the wrong shape");
    for (auto x : _table)
      if (x >= n)
        throw std::invalid_argument("addition table entry outside the carrier");
  }

  std::size_t FiniteMonoid::multiple(std::size_t k, std::size_t a) const {
    std::size_t out = _zero;
    for (std::size_t i = 0; i < k; ++i)
      out = add(out, a);
    return out;
  }

  AxiomReport check_monoid(FiniteMonoid const& m) {
    AxiomReport r;
    std::size_t n = m.size();
    {
      std::vector<std::size_t> w;
      for (std::size_t a = 0; a < n && w.empty(); ++a)
        if (m.add(m.zero(), a) != a)
          w = {a};
      r.expect("identity", w.empty(), w);
    }
    {
      std::vector<std::size_t> w;
      for (std::size_t a = 0; a < n && w.empty(); ++a)
        for (std::size_t b = a + 1; b < n && w.empty(); ++b)
          if (m.add(a, b) != m.add(b, a))
            w = {a, b};
      r.expect("commutative", w.empty(), w);
    }
    {
      std::vector<std::size_t> w;
      for (std::size_t a = 0; a < n && w.empty(); ++a)
        for (std::size_t b = 0; b < n && w.empty(); ++b)
          for (std::size_t c = 0; c < n && w.empty(); ++c)
            if (m.add(m.add(a, b), c) != m.add(a, m.add(b, c)))
              w = {a, b, c};
      r.expect("associative", w.empty(), w);
    }
    return r;
  }

  // ------------------------------------------------------------- WSemigroup

  WSemigroup::WSemigroup(FiniteMonoid m, Relation prec) : _monoid(std::move(m)), _prec(std::move(prec)) {
    if (_prec.size() != _monoid.size())
      throw std::invalid_argument("relation not sized to the monoid carrier");
    std::size_t n = size();
    Relation    t = _prec.transpose();
    _below.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      _below[a] = t.row(a);
    _leq = induced_preorder(_prec);
    _cofinal.assign(n, npos);
    for (std::size_t a = 0; a < n; ++a)
      for (auto c = _below[a].find_first(); c != Subset::npos; c = _below[a].find_next(c))
        if (_prec.contains(c, c) && _below[a].is_subset_of(_below[c])) {
          _cofinal[a] = c;
          break;
        }
  }

  WSemigroup with_prec(WSemigroup const& s, Relation prec) {
    return WSemigroup(s.monoid(), std::move(prec));
  }

  WMorphism identity_morphism(WSemigroup const& s) {
    std::vector<std::size_t> map(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      map[a] = a;
    return {s, s, std::move(map)};
  }

  WMorphism compose(WMorphism const& f, WMorphism const& g) {
    if (f.target.size() != g.source.size())
      throw std::invalid_argument("morphisms do not compose");
    std::vector<std::size_t> map(f.source.size());
    for (std::size_t a = 0; a < map.size(); ++a)
      map[a] = g(f(a));
    return {f.source, g.target, std::move(map)};
  }

  AxiomReport check_w_axioms(WSemigroup const& s) {
    AxiomReport r;
    std::size_t n = s.size();
    auto const& p = s.prec();

    {
      std::vector<std::size_t> w;
      for (std::size_t a = 0; a < n && w.empty(); ++a)
        for (auto c : members(p.row(a))) {
          Subset bad = p.row(c) - p.row(a);
          if (bad.any()) {
            w = {a, c, bad.find_first()};
            break;
          }
        }
      r.expect("transitive", w.empty(), w, "a ≺ c ≺ b without a ≺ b");
    }
    {
      std::vector<std::size_t> w;
      for (std::size_t a = 0; a < n && w.empty(); ++a)
        if (!p.contains(s.zero(), a))
          w = {a};
      r.expect("zero_below_all", w.empty(), w);
    }
    {
      std::vector<std::size_t> w;
      for (std::size_t a = 0; a < n && w.empty(); ++a)
        if (s.cofinal(a) == npos)
          w = {a};
      r.expect("W1", w.empty(), w, "no c ≺ a with c ≺ c and a^≺ ⊆ c^≺");
    }
    {
      std::vector<std::size_t> w;
      auto                     pairs = p.pairs();
      for (auto [a, b] : pairs) {
        for (auto [c, d] : pairs)
          if (!p.contains(s.add(a, c), s.add(b, d))) {
            w = {a, b, c, d};
            break;
          }
        if (!w.empty())
          break;
      }
      r.expect("W3", w.empty(), w, "a ≺ b, c ≺ d but a+c ⊀ b+d");
    }
    {
      std::vector<std::size_t> w;
      for (std::size_t b = 0; b < n && w.empty(); ++b)
        for (std::size_t c = 0; c < n && w.empty(); ++c) {
          Subset reach = down_closure(p, set_sum(s.below(b), s.below(c), s.monoid()));
          Subset bad   = s.below(s.add(b, c)) - reach;
          if (bad.any())
            w = {bad.find_first(), b, c};
        }
      r.expect("W4", w.empty(), w, "a ≺ b+c with no b' ≺ b, c' ≺ c, a ≺ b'+c'");
    }
    return r;
  }

  AxiomReport check_w2(Relation const& prec, Relation const& leq) {
    AxiomReport r;
    std::size_t n = prec.size();
    Relation    t = prec.transpose();
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      // upper bounds of a^≺
      Subset bounds(n);
      bounds.set();
      for (auto x : members(t.row(a)))
        bounds &= leq.row(x);
      if (!bounds[a]) {
        w = {a, a};
        break;
      }
      Subset bad = bounds - leq.row(a);
      if (bad.any())
        w = {a, bad.find_first()};
    }
    r.expect("W2", w.empty(), w, "a is not the supremum of a^≺ (a, offending bound)");
    return r;
  }

  Relation way_below(Relation const& leq) {
    std::size_t n = leq.size();
    Relation    out(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        // eventually-constant sequences with supremum s dominating b
        bool ok = true;
        for (std::size_t s = 0; s < n && ok; ++s)
          if (leq.contains(b, s) && !leq.contains(a, s))
            ok = false;
        if (ok)
          out.add(a, b);
      }
    return out;
  }

  AxiomReport check_cu_axioms(WSemigroup const& s) {
    AxiomReport r;
    std::size_t n   = s.size();
    auto const& leq = s.leq();
    auto const& m   = s.monoid();

    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = a + 1; b < n && w.empty(); ++b)
        if (leq.contains(a, b) && leq.contains(b, a))
          w = {a, b};
    if (w.empty())
      for (std::size_t a = 0; a < n && w.empty(); ++a)
        if (!leq.contains(s.zero(), a))
          w = {s.zero(), a};
    if (w.empty())
      if (auto e = first_missing(sum(leq, leq, m), leq))
        w = {e->first, e->second};
    r.expect("positively_ordered", w.empty(), w);
    if (!w.empty()) {
      for (auto name : {"O1", "O2", "O3", "O4"})
        r.skip(name, "order is not a positively ordered monoid");
      return r;
    }

    // O1: increasing sequences stabilise, so their eventual value is the
    // supremum; this needs the strict part of ≤ to be acyclic.
    Relation strict = leq;
    for (std::size_t a = 0; a < n; ++a)
      strict.remove(a, a);
    Relation  sc = transitive_closure(strict);
    w.clear();
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      if (sc.contains(a, a))
        w = {a};
    r.expect("O1", w.empty() && leq.is_transitive(), w);

    Relation wb = way_below(leq);
    w.clear();
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      if (!wb.contains(a, a))
        w = {a};
    r.expect("O2", w.empty(), w, "a is not the supremum of a ≪-increasing sequence");

    w.clear();
    if (auto e = first_missing(sum(wb, wb, m), wb))
      w = {e->first, e->second};
    r.expect("O3", w.empty(), w);

    w.clear();
    if (auto e = first_missing(sum(leq, leq, m), leq))
      w = {e->first, e->second};
    r.expect("O4", w.empty(), w);
    return r;
  }

  AxiomReport check_morphism(WMorphism const& f) {
    AxiomReport r;
    auto const& s = f.source;
    auto const& t = f.target;
    if (f.map.size() != s.size()) {
      r.fail("shape", {f.map.size(), s.size()}, "map length differs from source size");
      return r;
    }
    for (auto x : f.map)
      if (x >= t.size()) {
        r.fail("shape", {x}, "image outside the target");
        return r;
      }
    std::size_t              n = s.size();
    std::vector<std::size_t> w;
    for (std::size_t a = 0; a < n && w.empty(); ++a)
      for (std::size_t b = a; b < n && w.empty(); ++b)
        if (f(s.add(a, b)) != t.add(f(a), f(b)))
          w = {a, b};
    r.expect("additive", w.empty(), w);
    r.expect("zero", f(s.zero()) == t.zero(), {s.zero()});
    w.clear();
    for (auto [a, b] : s.prec().pairs())
      if (!t.precedes(f(a), f(b))) {
        w = {a, b};
        break;
      }
    r.expect("monotone", w.empty(), w);
    w.clear();
    for (std::size_t a = 0; a < n && w.empty(); ++a) {
      // images of approximants of a, pushed down in the target
      Subset reach(t.size());
      for (auto x : members(s.below(a)))
        reach |= t.below(f(x));
      Subset bad = t.below(f(a)) - reach;
      if (bad.any())
        w = {a, bad.find_first()};
    }
    r.expect("continuous", w.empty(), w, "y ≺ f(a) with no a' ≺ a, y ≺ f(a') (a, y)");
    return r;
  }

  bool w1_by_cycles(WSemigroup const& s, std::size_t a) {
    std::size_t  n    = s.size();
    Subset const dom  = s.below(a);
    Relation     edge(n);
    for (auto x : members(dom))
      edge.row(x) = s.above(x) & dom;
    Relation reach = transitive_closure(edge);
    for (auto v : members(dom)) {
      if (!reach.contains(v, v))
        continue;
      Subset cycle(n);
      for (auto u : members(dom))
        if (reach.contains(v, u) && reach.contains(u, v))
          cycle.set(u);
      if (dom.is_subset_of(down_closure(s.prec(), cycle)))
        return true;
    }
    return false;
  }

  std::optional<RefinementWitness> almost_refinement_failure(WSemigroup const& s) {
    return refinement_failure(s.prec(), s.prec(), Relation::identity(s.size()), s.monoid(), 2, 2);
  }

  bool has_almost_refinement(WSemigroup const& s) {
    return !almost_refinement_failure(s);
  }

}  // namespace ordcalc
