#include <algorithm>
#include <cstdlib>
#include <random>

#include "catch_amalgamated.hpp"
#include "support.hpp"

#include "ordcalc/fixtures.hpp"
#include "ordcalc/ideals.hpp"

using namespace ordcalc;

namespace {

  std::vector<std::string> const fixtures = {
      "NBAR(0)", "NBAR(1)", "NBAR(2)", "NBAR(5)", "NINF(1)", "NINF(3)", "LAT(2)", "LAT(3)", "LAT(3; 0<1)",
      "LAT(3; 0<2, 1<2)", "PROD(NBAR(1),NBAR(1))", "PROD(NBAR(2),NBAR(2))", "PROD(NBAR(1),NBAR(2))",
      "PROD(NBAR(1),NBAR(1),NBAR(1))", "PROD(LAT(2),LAT(2))", "DUP(NBAR(1))", "DUP(NBAR(2))", "DUP(LAT(2))"};

  using Set = std::vector<bool>;

  Set to_set(Subset const& s) {
    Set out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      out[i] = s[i];
    return out;
  }

  bool brute_is_ideal(WSemigroup const& s, Set const& i) {
    if (!i[s.zero()])
      return false;
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        if (i[a] && i[b] && !i[s.add(a, b)])
          return false;
        if (s.precedes(a, b) && i[b] && !i[a])
          return false;
      }
    return true;
  }

  bool brute_is_closed(WSemigroup const& s, Set const& i) {
    for (std::size_t a = 0; a < s.size(); ++a) {
      bool inside = true;
      for (std::size_t x = 0; x < s.size(); ++x)
        if (s.precedes(x, a) && !i[x])
          inside = false;
      if (inside && !i[a])
        return false;
    }
    return true;
  }

  std::vector<Set> brute_ideals(WSemigroup const& s, bool closed_only) {
    std::size_t const n = s.size();
    std::vector<Set>  out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      Set i(n);
      for (std::size_t a = 0; a < n; ++a)
        i[a] = (mask >> a) & 1;
      if (brute_is_ideal(s, i) && (!closed_only || brute_is_closed(s, i)))
        out.push_back(i);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Set> sorted_sets(std::vector<Ideal> const& ideals) {
    std::vector<Set> out;
    for (auto const& i : ideals)
      out.push_back(to_set(i.members));
    std::sort(out.begin(), out.end());
    return out;
  }

  Set intersect(Set a, Set const& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      a[i] = a[i] && b[i];
    return a;
  }

  bool set_subset(Set const& a, Set const& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && !b[i])
        return false;
    return true;
  }

  Set full(std::size_t n) {
    return Set(n, true);
  }

  // x ≺ a implies x ≺ b + y for some y in I
  Relation brute_ideal_order(WSemigroup const& s, Set const& i) {
    Relation out(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b) {
        bool ok = true;
        for (std::size_t x = 0; x < s.size() && ok; ++x) {
          if (!s.precedes(x, a))
            continue;
          bool found = false;
          for (std::size_t y = 0; y < s.size() && !found; ++y)
            found = i[y] && s.precedes(x, s.add(b, y));
          ok = found;
        }
        if (ok)
          out.add(a, b);
      }
    return out;
  }

  Subset subset_of(Set const& s) {
    Subset out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
      out[i] = s[i];
    return out;
  }

  Relation swap_relation(std::size_t side) {
    Relation r(side * side);
    for (std::size_t x = 0; x < side; ++x)
      for (std::size_t y = 0; y < side; ++y)
        r.add(product_index({side, side}, {x, y}), product_index({side, side}, {y, x}));
    return r;
  }

}  // namespace

TEST_CASE("enumeration matches the powerset scan", "[ideals]") {
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    INFO(spec);
    for (bool closed : {false, true}) {
      auto ideals = enumerate_ideals(s, closed);
      REQUIRE(sorted_sets(ideals) == brute_ideals(s, closed));
      for (auto const& i : ideals) {
        REQUIRE(check_ideal(s, i.members).ok());
        REQUIRE(i.closed == brute_is_closed(s, to_set(i.members)));
      }
      // ordered by size, then members
      for (std::size_t k = 1; k < ideals.size(); ++k)
        REQUIRE(subset_less(ideals[k - 1].members, ideals[k].members));
      // closed under intersection
      auto sets = sorted_sets(ideals);
      for (auto const& a : sets)
        for (auto const& b : sets)
          REQUIRE(std::binary_search(sets.begin(), sets.end(), intersect(a, b)));
    }
  }
}

TEST_CASE("ideal counts on small fixtures", "[ideals]") {
  // NBAR(2): {0, 1} is not closed under addition, so only {0} and S remain
  REQUIRE(enumerate_ideals(nbar(2).semigroup, true).size() == 2);
  for (std::size_t k : {0, 1, 3, 6})
    REQUIRE(enumerate_ideals(nbar(k).semigroup, true).size() == (k == 0 ? 1 : 2));
  // the antichain lattice: {∅}, ↓{0}, ↓{1}, everything
  REQUIRE(enumerate_ideals(make_fixture("LAT(2)").semigroup, true).size() == 4);
  // with ≺ reflexive every ideal is closed
  auto const& l = make_fixture("LAT(3; 0<1)").semigroup;
  REQUIRE(enumerate_ideals(l, true).size() == enumerate_ideals(l, false).size());
  auto const& d = make_fixture("DUP(NBAR(1))").semigroup;
  REQUIRE(enumerate_ideals(d, true).size() < enumerate_ideals(d, false).size());
}

TEST_CASE("zero and the whole carrier", "[ideals]") {
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    auto        n = s.size();
    auto        z = closure(s, make_subset(n, {s.zero()}));
    REQUIRE(z.closed);
    REQUIRE(closure(s, subset_of(full(n))).members.all());
    auto sets = sorted_sets(enumerate_ideals(s, true));
    REQUIRE(std::binary_search(sets.begin(), sets.end(), full(n)));
    REQUIRE(std::binary_search(sets.begin(), sets.end(), to_set(z.members)));
  }
  auto const& s = nbar(3).semigroup;
  REQUIRE(closure(s, make_subset(4, {0})).members == make_subset(4, {0}));
}

TEST_CASE("closure is a retraction onto closed ideals", "[ideals]") {
  std::size_t restored = 0;
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    auto        all = enumerate_ideals(s, false);
    for (auto const& i : all) {
      auto c = closure(s, i.members);
      REQUIRE(c.closed);
      REQUIRE(brute_is_closed(s, to_set(c.members)));
      REQUIRE(brute_is_ideal(s, to_set(c.members)));
      REQUIRE(i.members.is_subset_of(c.members));
      REQUIRE(closure(s, c.members) == c);
      REQUIRE((c == i) == i.closed);
      for (auto const& j : all)
        if (i.members.is_subset_of(j.members))
          REQUIRE(c.members.is_subset_of(closure(s, j.members).members));
      // the least closed ideal above i
      for (auto const& j : enumerate_ideals(s, true))
        if (i.members.is_subset_of(j.members))
          REQUIRE(c.members.is_subset_of(j.members));
      restored += !i.closed;
    }
  }
  REQUIRE(restored > 0);
  REQUIRE_THROWS_AS(closure(nbar(2).semigroup, make_subset(3, {0, 1})), PreconditionError);
}

TEST_CASE("principal ideals", "[ideals]") {
  for (auto const& spec : fixtures) {
    auto const& s      = make_fixture(spec).semigroup;
    auto const  closed = sorted_sets(enumerate_ideals(s, true));
    INFO(spec);
    for (std::size_t a = 0; a < s.size(); ++a) {
      Set smallest = full(s.size());
      for (auto const& i : closed)
        if (i[a])
          smallest = intersect(smallest, i);
      auto p = principal(s, a);
      REQUIRE(to_set(p.members) == smallest);
      REQUIRE(p.closed);
      REQUIRE(is_order_unit(s, a) == p.members.all());
    }
    REQUIRE(principal(s, s.zero()) == closure(s, make_subset(s.size(), {s.zero()})));
    // simple: nothing strictly between the least closed ideal and S
    REQUIRE(is_simple(s) == (closed.size() <= 2));
  }
  for (std::size_t k : {1, 2, 5})
    REQUIRE(is_simple(nbar(k).semigroup));
  auto const& sq = product({nbar(1), nbar(1)}).semigroup;
  REQUIRE_FALSE(is_simple(sq));
  auto x = product_index({2, 2}, {1, 0});
  REQUIRE(principal(sq, x).members == make_subset(4, {product_index({2, 2}, {0, 0}), x}));
}

TEST_CASE("pairs of ideals", "[ideals]") {
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    INFO(spec);
    REQUIRE(pair_of_ideal(s, make_subset(s.size(), {s.zero()})) == minimal_pair(s));
    auto top = pair_of_ideal(s, subset_of(full(s.size())));
    REQUIRE(top.order == Relation::full(s.size()));
    REQUIRE(quotient(s, top).quotient.size() == 1);
    for (auto const& i : enumerate_ideals(s, false)) {
      auto p = pair_of_ideal(s, i.members);
      REQUIRE(p.aux == s.prec());
      REQUIRE(p.order == brute_ideal_order(s, to_set(i.members)));
      auto prof = classify_pair(s, p);
      REQUIRE(prof.admissible);
      REQUIRE(prof.normal);
      if (i.closed)
        REQUIRE(prof.left_closed);
    }
  }
  auto const& sq = product({nbar(2), nbar(2)}).semigroup;
  Subset      axis(9);
  for (std::size_t x = 0; x <= 2; ++x)
    axis[product_index({3, 3}, {x, 0})] = true;
  auto p = pair_of_ideal(sq, axis);
  REQUIRE_FALSE(p.order.contains(product_index({3, 3}, {0, 2}), product_index({3, 3}, {0, 0})));
  REQUIRE(p.order.contains(product_index({3, 3}, {2, 0}), product_index({3, 3}, {0, 0})));
  REQUIRE_THROWS_AS(pair_of_ideal(nbar(2).semigroup, make_subset(3, {1})), PreconditionError);
}

TEST_CASE("ideals of pairs", "[ideals]") {
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    auto        z = ideal_of_pair(s, minimal_pair(s));
    Set         expect(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      expect[a] = s.leq().contains(a, s.zero());
    REQUIRE(to_set(z.members) == expect);
    if (s.leq().is_antisymmetric())
      REQUIRE(z.members == make_subset(s.size(), {s.zero()}));
  }
  // kernels: the preimage of what lies below zero
  auto add = [](std::size_t k) {
    auto                     sq = product({nbar(k), nbar(k)}).semigroup;
    std::vector<std::size_t> map(sq.size());
    for (std::size_t x = 0; x <= k; ++x)
      for (std::size_t y = 0; y <= k; ++y)
        map[product_index({k + 1, k + 1}, {x, y})] = std::min(x + y, k);
    return WMorphism{sq, nbar(k).semigroup, map};
  };
  for (std::size_t k : {1, 2, 3}) {
    auto f = add(k);
    REQUIRE(ideal_of_pair(f.source, kernel(f)).members == make_subset(f.source.size(), {0}));
  }
  {
    auto                     pr = product({nbar(1), nbar(2)}).semigroup;
    std::vector<std::size_t> second(pr.size());
    for (std::size_t x = 0; x <= 1; ++x)
      for (std::size_t y = 0; y <= 2; ++y)
        second[product_index({2, 3}, {x, y})] = y;
    WMorphism f{pr, nbar(2).semigroup, second};
    auto      i = ideal_of_pair(pr, kernel(f));
    for (std::size_t a = 0; a < pr.size(); ++a)
      REQUIRE(i.contains(a) == (second[a] == 0));
    REQUIRE(i.closed);
  }
  // the coordinate swap on LAT(2)² kills nothing
  auto const& l2 = product({make_fixture("LAT(2)"), make_fixture("LAT(2)")}).semigroup;
  auto        i  = ideal_of_pair(l2, generate_normal(l2, swap_relation(4)));
  REQUIRE(i.members == make_subset(16, {0}));
  auto const& s = nbar(2).semigroup;
  REQUIRE_THROWS_AS(ideal_of_pair(s, {s.prec(), Relation::identity(3)}), PreconditionError);
}

TEST_CASE("ideals and pairs form a Galois connection", "[ideals]") {
  std::mt19937_64 rng(23);
  for (auto const& spec : fixtures) {
    auto const&   s = make_fixture(spec).semigroup;
    GaloisOptions opts;
    for (int i = 0; i < 12; ++i) {
      auto r = oracle::compose(oracle::compose(s.prec(), oracle::random_relation(s.size(), 0.05, rng)), s.prec());
      opts.pairs.push_back(generate_normal(s, r));
    }
    auto report = galois_check(s, opts);
    INFO(spec << "\n" << report.summary());
    REQUIRE(report.ok());
    for (auto name : {"hyp.O1", "hyp.prec_order", "hyp.way_below", "roundtrip", "ideal_pairs", "counit",
                      "adjunction", "lattice.prequotient", "lattice.quotient"})
      REQUIRE(report.passed(name));
  }
}

TEST_CASE("Galois entries against independent evaluation", "[ideals]") {
  std::mt19937_64 rng(29);
  std::size_t     checked = 0;
  for (auto const& spec : fixtures) {
    auto const& s      = make_fixture(spec).semigroup;
    auto const  closed = enumerate_ideals(s, true);
    // round trip on closed ideals
    for (auto const& i : closed) {
      auto back = ideal_of_pair(s, pair_of_ideal(s, i.members));
      REQUIRE(back == i);
    }
    // I ⊆ I_α iff α_I ≤ α, for pairs with ≺∘≤ ⊆ ≺
    for (int t = 0; t < 10; ++t) {
      auto r = oracle::compose(oracle::compose(s.prec(), oracle::random_relation(s.size(), 0.05, rng)), s.prec());
      Pair a = generate_normal(s, r);
      if (!oracle::subset(oracle::compose(s.prec(), a.order), s.prec()))
        continue;
      auto ia = ideal_of_pair(s, a);
      for (auto const& i : closed) {
        bool inside = i.members.is_subset_of(ia.members);
        bool below  = oracle::subset(pair_of_ideal(s, i.members).order, a.order);
        REQUIRE(inside == below);
        ++checked;
      }
    }
  }
  REQUIRE(checked > 50);
}

TEST_CASE("ideal quotient agrees with the pair quotient on Cu fixtures", "[ideals]") {
  for (auto const& spec : fixtures) {
    auto const& s = make_fixture(spec).semigroup;
    if (s.prec() != s.leq())
      continue;
    for (auto const& i : enumerate_ideals(s, true)) {
      Relation cu(s.size());
      for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = 0; b < s.size(); ++b)
          for (std::size_t y = 0; y < s.size(); ++y)
            if (i.contains(y) && s.leq().contains(a, s.add(b, y)))
              cu.add(a, b);
      REQUIRE(ideal_order(s, i.members) == cu);
      REQUIRE(pair_of_ideal(s, i.members).order == cu);
    }
  }
}

TEST_CASE("quotient of a simple fixture by zero is its antisymmetrization", "[ideals]") {
  for (auto spec : {"NBAR(1)", "NBAR(4)", "NINF(2)", "DUP(NBAR(2))"}) {
    auto const& s = make_fixture(spec).semigroup;
    if (!is_simple(s))
      continue;
    auto q = quotient(s, pair_of_ideal(s, make_subset(s.size(), {s.zero()})));
    auto m = quotient(s, minimal_pair(s));
    REQUIRE(find_isomorphism(q.quotient, m.quotient).map);
  }
}

TEST_CASE("enumeration budget", "[ideals]") {
  auto const& big = make_fixture("PROD(NBAR(4),NBAR(4))").semigroup;
  REQUIRE_THROWS_AS(enumerate_ideals(big, true), BudgetExceeded);
  REQUIRE(enumerate_ideals(big, true, 25).size() == 4);
  REQUIRE_THROWS_AS(enumerate_ideals(nbar(5).semigroup, false, 3), BudgetExceeded);
  REQUIRE_THROWS_AS(galois_check(big), BudgetExceeded);
}
