#include <algorithm>
#include <numeric>
#include <random>

#include "catch_amalgamated.hpp"
#include "support.hpp"

#include "ordcalc/fixtures.hpp"
#include "ordcalc/quotients.hpp"

using namespace ordcalc;

namespace {

  std::vector<std::string> const fixtures = {
      "NBAR(0)", "NBAR(1)", "NBAR(2)", "NBAR(5)", "NINF(1)", "NINF(3)", "LAT(2)", "LAT(3)", "LAT(3; 0<1)",
      "LAT(3; 0<2, 1<2)", "PROD(NBAR(1),NBAR(1))", "PROD(NBAR(2),NBAR(2))", "PROD(NBAR(1),NBAR(2))",
      "PROD(NBAR(1),NBAR(1),NBAR(1))", "DUP(NBAR(1))", "DUP(NBAR(2))", "DUP(LAT(2))"};

  bool column_subset(Relation const& r, std::size_t a, std::size_t b) {
    for (std::size_t x = 0; x < r.size(); ++x)
      if (r.contains(x, a) && !r.contains(x, b))
        return false;
    return true;
  }

  WMorphism morphism(WSemigroup const& s, WSemigroup const& t, std::vector<std::size_t> map) {
    return {s, t, std::move(map)};
  }

  WMorphism addition(std::size_t k) {
    auto                     sq = product({nbar(k), nbar(k)}).semigroup;
    std::vector<std::size_t> map(sq.size());
    for (std::size_t x = 0; x <= k; ++x)
      for (std::size_t y = 0; y <= k; ++y)
        map[product_index({k + 1, k + 1}, {x, y})] = std::min(x + y, k);
    return morphism(sq, nbar(k).semigroup, map);
  }

  // hand-built morphisms; each is confirmed by check_morphism in the tests
  std::vector<WMorphism> morphisms() {
    std::vector<WMorphism> out;
    for (auto const& spec : fixtures)
      out.push_back(identity_morphism(make_fixture(spec).semigroup));
    for (std::size_t k : {1, 2, 3})
      out.push_back(addition(k));
    for (std::size_t k : {2, 4})
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> map(k + 1);
        for (std::size_t x = 0; x <= k; ++x)
          map[x] = std::min(x, j);
        out.push_back(morphism(nbar(k).semigroup, nbar(j).semigroup, map));
      }
    {
      auto                     pr = product({nbar(1), nbar(2)}).semigroup;
      std::vector<std::size_t> first(pr.size()), second(pr.size());
      for (std::size_t x = 0; x <= 1; ++x)
        for (std::size_t y = 0; y <= 2; ++y) {
          first[product_index({2, 3}, {x, y})]  = x;
          second[product_index({2, 3}, {x, y})] = y;
        }
      out.push_back(morphism(pr, nbar(1).semigroup, first));
      out.push_back(morphism(pr, nbar(2).semigroup, second));
    }
    for (auto spec : {"NBAR(1)", "NBAR(2)", "LAT(2)"}) {
      auto base = make_fixture(spec);
      auto dup  = doubled(base).semigroup;
      // DUP elements are (x, flag) with the flag least significant
      std::vector<std::size_t> collapse(dup.size()), embed(base.semigroup.size());
      for (std::size_t x = 0; x < base.semigroup.size(); ++x) {
        collapse[2 * x] = collapse[2 * x + 1] = x;
        embed[x]                              = 2 * x;
      }
      out.push_back(morphism(dup, base.semigroup, collapse));
      out.push_back(morphism(base.semigroup, dup, embed));
    }
    // NINF(1) and NBAR(2) are both {0, 1, 1+1}
    out.push_back(morphism(ninf(1).semigroup, nbar(2).semigroup, {0, 1, 2}));
    out.push_back(morphism(ninf(3).semigroup, ninf(1).semigroup, {0, 1, 2, 2, 2}));
    return out;
  }

  // ≤-equivalence classes numbered by least element
  std::vector<std::size_t> brute_classes(Relation const& leq) {
    std::size_t const        n = leq.size();
    std::vector<std::size_t> cls(n, npos);
    std::size_t              next = 0;
    for (std::size_t a = 0; a < n; ++a) {
      if (cls[a] != npos)
        continue;
      for (std::size_t b = a; b < n; ++b)
        if (leq.contains(a, b) && leq.contains(b, a))
          cls[b] = next;
      ++next;
    }
    return cls;
  }

  Pair ideal_pair(WSemigroup const& s, std::vector<std::size_t> const& ideal) {
    Relation leq(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        bool ok = true;
        for (std::size_t x = 0; x < s.size() && ok; ++x) {
          if (!s.precedes(x, a))
            continue;
          bool found = false;
          for (auto y : ideal)
            found = found || s.precedes(x, s.add(b, y));
          ok = found;
        }
        if (ok)
          leq.add(a, b);
      }
    return {s.prec(), leq};
  }

  // x ≺ b + y for some y in the ideal
  Relation ideal_prerelation(WSemigroup const& s, std::vector<std::size_t> const& ideal) {
    Relation out(s.size());
    for (std::size_t x = 0; x < s.size(); ++x)
      for (std::size_t b = 0; b < s.size(); ++b)
        for (auto y : ideal)
          if (s.precedes(x, s.add(b, y)))
            out.add(x, b);
    return out;
  }

  Relation swap_relation(std::size_t k) {
    Relation r((k + 1) * (k + 1));
    for (std::size_t x = 0; x <= k; ++x)
      for (std::size_t y = 0; y <= k; ++y)
        r.add(product_index({k + 1, k + 1}, {x, y}), product_index({k + 1, k + 1}, {y, x}));
    return r;
  }

  Relation random_seed(WSemigroup const& s, std::mt19937_64& rng, double density) {
    auto r = oracle::random_relation(s.size(), density, rng);
    return oracle::compose(oracle::compose(s.prec(), r), s.prec());
  }

  void require_result_invariants(WSemigroup const& s, Pair const& p, QuotientResult const& q) {
    auto cls = brute_classes(p.order);
    REQUIRE(q.class_of == cls);
    std::size_t const classes = *std::max_element(cls.begin(), cls.end()) + 1;
    REQUIRE(q.quotient.size() == classes);
    REQUIRE(q.representative.size() == classes);
    for (std::size_t c = 0; c < classes; ++c) {
      REQUIRE(q.class_of[q.representative[c]] == c);
      REQUIRE(q.projection(q.representative[c]) == c);
    }
    REQUIRE(q.projection.map == q.class_of);
    INFO(check_morphism(q.projection).summary());
    REQUIRE(check_morphism(q.projection).ok());
    INFO(check_w_axioms(q.quotient).summary());
    REQUIRE(check_w_axioms(q.quotient).ok());
    // [a] ≺ [b] iff a ≤∘≼ b, read through any representatives
    Relation pre = oracle::compose(p.order, p.aux);
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        REQUIRE(q.quotient.precedes(cls[a], cls[b]) == pre.contains(a, b));
        REQUIRE(q.quotient.add(cls[a], cls[b]) == cls[s.add(a, b)]);
      }
    REQUIRE(q.quotient.zero() == cls[s.zero()]);
  }

}  // namespace

TEST_CASE("hand-built morphisms are valid", "[quotients]") {
  for (auto const& f : morphisms()) {
    INFO(check_morphism(f).summary());
    REQUIRE(check_morphism(f).ok());
  }
}

TEST_CASE("prequotient relation", "[quotients]") {
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    INFO(spec);
    auto pq = prequotient(s, minimal_pair(s));
    REQUIRE(pq.monoid() == s.monoid());
    REQUIRE(pq.prec() == oracle::compose(oracle::induced(s.prec()), s.prec()));
    REQUIRE(check_w_axioms(pq).ok());
  }
  for (std::size_t k : {0, 1, 3, 6}) {
    auto const& s = nbar(k).semigroup;
    REQUIRE(prequotient(s, minimal_pair(s)).prec() == oracle::induced(s.prec()));
  }
  // ideal pairs
  auto const& sq = product({nbar(2), nbar(2)}).semigroup;
  std::vector<std::size_t> axis;
  for (std::size_t x = 0; x <= 2; ++x)
    axis.push_back(product_index({3, 3}, {x, 0}));
  for (auto const& ideal : {std::vector<std::size_t>{0}, axis}) {
    auto p = ideal_pair(sq, ideal);
    REQUIRE(prequotient(sq, p).prec() == oracle::compose(p.order, sq.prec()));
    REQUIRE(prequotient(sq, p).prec() == ideal_prerelation(sq, ideal));
  }
}

TEST_CASE("prequotient rejects pairs that are not normal admissible", "[quotients]") {
  auto const& s = nbar(2).semigroup;
  REQUIRE_THROWS_AS(prequotient(s, {s.prec(), Relation::identity(3)}), PreconditionError);
  REQUIRE_THROWS_AS(quotient(s, {Relation::identity(3), s.leq()}), PreconditionError);
  REQUIRE_THROWS_AS(prequotient(s, {s.prec(), Relation(2)}), std::invalid_argument);
}

TEST_CASE("quotient examples", "[quotients]") {
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    INFO(spec);
    auto top = quotient(s, {s.prec(), Relation::full(s.size())});
    REQUIRE(top.quotient.size() == 1);
    REQUIRE(top.quotient.precedes(0, 0));

    auto minimal = quotient(s, minimal_pair(s));
    if (s.leq().is_antisymmetric()) {
      std::vector<std::size_t> id(s.size());
      std::iota(id.begin(), id.end(), 0);
      REQUIRE(minimal.class_of == id);
      REQUIRE(minimal.quotient.monoid() == s.monoid());
      REQUIRE(is_isomorphism(minimal.quotient, prequotient(s, minimal_pair(s)), id));
      REQUIRE(find_isomorphism(minimal.quotient, prequotient(s, minimal_pair(s))).map);
    }
    require_result_invariants(s, minimal_pair(s), minimal);
  }
  auto const& s = nbar(2).semigroup;
  auto        q = quotient(s, generate_normal(s, Relation::from_pairs(3, {{2, 0}})));
  REQUIRE(q.quotient.size() == 1);
}

TEST_CASE("quotients by generated pairs match brute classes", "[quotients]") {
  std::mt19937_64 rng(7);
  std::size_t     collapsed = 0;
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    for (int i = 0; i < 30; ++i) {
      INFO(spec << " #" << i);
      Pair p = generate_normal(s, random_seed(s, rng, 0.05));
      auto q = quotient(s, p);
      require_result_invariants(s, p, q);
      if (q.quotient.size() < s.size() && q.quotient.size() > 1)
        ++collapsed;
      // the extended pair has the same classes
      auto qe = quotient(s, extension(p));
      REQUIRE(qe.class_of == q.class_of);
      require_result_invariants(s, extension(p), qe);
    }
  }
  REQUIRE(collapsed > 20);
}

TEST_CASE("kernel examples", "[quotients]") {
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    REQUIRE(kernel(identity_morphism(s)) == minimal_pair(s));
  }
  for (std::size_t k : {1, 2, 3}) {
    auto f  = addition(k);
    auto kp = kernel(f);
    REQUIRE(kp.aux == f.source.prec());
    for (std::size_t x = 0; x <= k; ++x)
      for (std::size_t y = 0; y <= k; ++y)
        for (std::size_t u = 0; u <= k; ++u)
          for (std::size_t v = 0; v <= k; ++v) {
            auto a = product_index({k + 1, k + 1}, {x, y});
            auto b = product_index({k + 1, k + 1}, {u, v});
            REQUIRE(kp.order.contains(a, b) == (std::min(x + y, k) <= std::min(u + v, k)));
          }
  }
  auto const& s = nbar(2).semigroup;
  WMorphism   bad{s, s, {0, 2, 1}};
  REQUIRE_THROWS_AS(kernel(bad), PreconditionError);
}

TEST_CASE("kernels are admissible normal closed pairs above the minimal pair", "[quotients]") {
  for (auto const& f : morphisms()) {
    auto kp = kernel(f);
    for (std::size_t a = 0; a < f.source.size(); ++a)
      for (std::size_t b = 0; b < f.source.size(); ++b)
        REQUIRE(kp.order.contains(a, b) == column_subset(f.target.prec(), f(a), f(b)));
    REQUIRE(oracle::subset(f.source.leq(), kp.order));
    auto prof = classify_pair(f.source, kp);
    INFO(prof.details.summary());
    REQUIRE(prof.admissible);
    REQUIRE(prof.normal);
    REQUIRE(prof.left_closed);
  }
}

TEST_CASE("flagship factorization through addition", "[quotients]") {
  for (std::size_t k : {1, 2, 3, 4}) {
    auto f  = addition(k);
    auto sq = f.source;
    Pair dyn = generate_normal(sq, swap_relation(k));
    REQUIRE(dyn == kernel(f));
    auto fac = factor_through(f, dyn);
    INFO(fac.checks.summary());
    REQUIRE(fac.checks.ok());
    REQUIRE(fac.embedding);
    REQUIRE(fac.source.quotient.size() == k + 1);
    // h is a bijection onto NBAR(k) here
    auto sorted = fac.h.map;
    std::sort(sorted.begin(), sorted.end());
    REQUIRE(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    for (std::size_t a = 0; a < sq.size(); ++a)
      REQUIRE(fac.h(fac.source.class_of[a]) == fac.target.class_of[f(a)]);
  }
}

TEST_CASE("factorization through the minimal pair and its failures", "[quotients]") {
  for (auto const& f : morphisms()) {
    auto fac = factor_through(f, minimal_pair(f.source));
    INFO(fac.checks.summary());
    REQUIRE(fac.checks.ok());
    REQUIRE(fac.embedding == (minimal_pair(f.source) == kernel(f)));

    auto fk = factor_through(f, kernel(f));
    REQUIRE(fk.checks.ok());
    REQUIRE(fk.embedding);
    // order embedding of S/ker(f), checked entrywise
    for (std::size_t a = 0; a < f.source.size(); ++a)
      for (std::size_t b = 0; b < f.source.size(); ++b)
        REQUIRE(fk.target.quotient.leq().contains(fk.h(fk.source.class_of[a]), fk.h(fk.source.class_of[b])) ==
                kernel(f).order.contains(a, b));
  }
  auto const& s   = nbar(2).semigroup;
  Pair        top = {s.prec(), Relation::full(3)};
  try {
    factor_through(identity_morphism(s), top);
    FAIL("expected NoFactorization");
  } catch (NoFactorization const& e) {
    REQUIRE(e.condition() == 2);
    REQUIRE_FALSE(kernel(identity_morphism(s)).order.contains(e.witness().first, e.witness().second));
  }
}

TEST_CASE("generated pairs factor exactly when below the kernel", "[quotients]") {
  std::mt19937_64 rng(11);
  std::size_t     factored = 0, refused = 0;
  for (auto const& f : morphisms()) {
    for (int i = 0; i < 15; ++i) {
      Pair p     = generate_normal(f.source, random_seed(f.source, rng, 0.04));
      bool below = oracle::subset(p.order, kernel(f).order);
      if (below) {
        auto fac = factor_through(f, p);
        REQUIRE(fac.checks.ok());
        REQUIRE(fac.embedding == (p.order == kernel(f).order));
        ++factored;
      } else {
        REQUIRE_THROWS_AS(factor_through(f, p), NoFactorization);
        ++refused;
      }
    }
  }
  REQUIRE(factored > 20);
  REQUIRE(refused > 20);
}

TEST_CASE("projections factor through their own pair as embeddings", "[quotients]") {
  std::mt19937_64 rng(13);
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    for (int i = 0; i < 10; ++i) {
      Pair p  = generate_normal(s, random_seed(s, rng, 0.05));
      auto q  = quotient(s, p);
      REQUIRE(kernel(q.projection).order == p.order);
      auto fac = factor_through(q.projection, p);
      REQUIRE(fac.checks.ok());
      REQUIRE(fac.embedding);
    }
  }
}

TEST_CASE("isomorphism search", "[quotients]") {
  std::mt19937_64 rng(17);
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    std::size_t n = s.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> table(n * n);
    Relation                 prec(n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        table[perm[a] * n + perm[b]] = perm[s.add(a, b)];
        if (s.precedes(a, b))
          prec.add(perm[a], perm[b]);
      }
    WSemigroup t(FiniteMonoid(n, perm[s.zero()], table), prec);
    REQUIRE(is_isomorphism(s, t, perm));
    auto found = find_isomorphism(s, t);
    INFO(spec << " " << found.method);
    REQUIRE(found.map);
    REQUIRE(is_isomorphism(s, t, *found.map));
  }
  // a chain with idempotent addition against a chain with saturating addition
  auto chain4 = lattice(chain(3)).semigroup;
  REQUIRE(chain4.size() == 4);
  REQUIRE_FALSE(find_isomorphism(nbar(3).semigroup, chain4).map);
  REQUIRE_FALSE(find_isomorphism(nbar(3).semigroup, nbar(2).semigroup).map);
  REQUIRE(find_isomorphism(ninf(1).semigroup, nbar(2).semigroup).map);
  // same monoid, different relation
  auto const& s = nbar(2).semigroup;
  REQUIRE_FALSE(find_isomorphism(s, with_prec(s, Relation::full(3))).map);
  // LAT(2) has a symmetry, so the canonical pass cannot decide it alone
  auto l2 = make_fixture("LAT(2)").semigroup;
  auto r  = find_isomorphism(l2, l2);
  REQUIRE(r.map);
  REQUIRE(r.method == "search");
  REQUIRE(find_isomorphism(nbar(4).semigroup, nbar(4).semigroup).method == "canonical");
}

TEST_CASE("induced maps through a common source", "[quotients]") {
  REQUIRE(induced_map({0, 0, 1}, {1, 1, 0}, 2) == std::vector<std::size_t>{1, 0});
  REQUIRE_FALSE(induced_map({0, 0, 1}, {0, 1, 1}, 2));
  REQUIRE_FALSE(induced_map({0, 0, 0}, {0, 0, 0}, 2));
}

TEST_CASE("correspondence examples", "[quotients]") {
  auto const& s = nbar(2).semigroup;
  REQUIRE(correspondence_check(s, minimal_pair(s), {}).ok());
  REQUIRE(correspondence_check(s, minimal_pair(s), {}).checks().empty());

  // α' = α: the induced pair is (≼_α, ≤)
  for (auto const& spec : fixtures) {
    auto const& x = make_fixture(spec).semigroup;
    Pair        p = minimal_pair(x);
    REQUIRE(induced_on_prequotient(p) == Pair{prequotient(x, p).prec(), p.order});
    auto r = correspondence_check(x, p, {Relation(x.size())});
    INFO(spec << "\n" << r.summary());
    REQUIRE(r.ok());
  }
  // minimal pair then the swap pair, in one and in two stages
  for (std::size_t k : {1, 2, 3}) {
    auto const& sq = addition(k).source;
    auto        r  = correspondence_check(sq, minimal_pair(sq), {swap_relation(k)});
    INFO(r.summary());
    REQUIRE(r.ok());
    Pair dyn = generate_normal(sq, swap_relation(k));
    auto one = quotient(sq, dyn);
    auto pre = prequotient(sq, minimal_pair(sq));
    auto two = quotient(pre, induced_on_prequotient(dyn));
    REQUIRE(one.class_of == two.class_of);
    auto map = induced_map(one.class_of, two.class_of, one.quotient.size());
    REQUIRE(map);
    REQUIRE(is_isomorphism(one.quotient, two.quotient, *map));
  }
}

TEST_CASE("two-stage quotients agree with one-stage quotients on towers", "[quotients]") {
  std::mt19937_64 rng(19);
  std::size_t     nontrivial = 0;
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    if (s.size() > 16)
      continue;
    for (int i = 0; i < 12; ++i) {
      Pair                  p = generate_normal(s, random_seed(s, rng, 0.03));
      std::vector<Relation> seeds;
      for (int j = 0; j < 3; ++j)
        seeds.push_back(random_seed(s, rng, 0.04));
      auto r = correspondence_check(s, p, seeds);
      INFO(spec << " #" << i << "\n" << r.summary());
      REQUIRE(r.ok());
      if (quotient(s, p).quotient.size() > 1 && p != minimal_pair(s))
        ++nontrivial;
    }
  }
  REQUIRE(nontrivial > 10);
}

TEST_CASE("correspondence reports its precondition failures", "[quotients]") {
  auto const& s = nbar(2).semigroup;
  REQUIRE_THROWS_AS(correspondence_check(s, {s.prec(), Relation::identity(3)}, {}), PreconditionError);
}
