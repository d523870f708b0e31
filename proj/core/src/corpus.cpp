#include "ordcalc/corpus.hpp"

#include <algorithm>

#include "ordcalc/fixtures.hpp"

namespace ordcalc {

  std::vector<std::string> fixture_corpus(std::size_t max_size) {
    static std::vector<std::string> const all = {
        "NBAR(0)", "NBAR(1)", "NBAR(2)", "NBAR(3)", "NBAR(4)", "NBAR(6)", "NINF(0)", "NINF(1)", "NINF(2)", "NINF(4)",
        "LAT(1)", "LAT(2)", "LAT(2; 0<1)", "LAT(3)", "LAT(3; 0<1)", "LAT(3; 0<1, 1<2)", "LAT(3; 0<2, 1<2)",
        "LAT(4; 0<1, 2<3)", "LAT(4; 0<1, 0<2, 1<3, 2<3)", "PROD(NBAR(1),NBAR(1))", "PROD(NBAR(1),NBAR(2))",
        "PROD(NBAR(2),NBAR(2))", "PROD(NBAR(1),NINF(1))", "PROD(NBAR(1),NBAR(1),NBAR(1))", "PROD(LAT(2),NBAR(1))",
        "PROD(LAT(2),LAT(2))", "DUP(NBAR(1))", "DUP(NBAR(2))", "DUP(NBAR(3))", "DUP(LAT(2))",
        "DUP(PROD(NBAR(1),NBAR(1)))"};
    std::vector<std::pair<std::size_t, std::string>> sized;
    for (auto const& spec : all) {
      std::size_t n = make_fixture(spec).semigroup.size();
      if (n <= max_size)
        sized.emplace_back(n, spec);
    }
    std::stable_sort(sized.begin(), sized.end(), [](auto const& x, auto const& y) { return x.first < y.first; });
    std::vector<std::string> out;
    for (auto& [n, spec] : sized)
      out.push_back(std::move(spec));
    return out;
  }

  WMorphism truncated_addition(std::size_t k) {
    auto const               sq = product({nbar(k), nbar(k)}).semigroup;
    std::vector<std::size_t> map(sq.size());
    for (std::size_t x = 0; x <= k; ++x)
      for (std::size_t y = 0; y <= k; ++y)
        map[product_index({k + 1, k + 1}, {x, y})] = std::min(x + y, k);
    return {sq, nbar(k).semigroup, map};
  }

  std::vector<NamedMorphism> morphism_corpus() {
    std::vector<NamedMorphism> out;
    for (auto spec : {"NBAR(1)", "NBAR(3)", "NINF(2)", "LAT(2)", "LAT(3; 0<1)", "PROD(NBAR(1),NBAR(2))", "DUP(NBAR(2))"})
      out.push_back({std::string("id ") + spec, identity_morphism(make_fixture(spec).semigroup)});
    for (std::size_t k : {1, 2, 3, 4})
      out.push_back({"add NBAR(" + std::to_string(k) + ")^2", truncated_addition(k)});
    for (std::size_t k : {2, 4})
      for (std::size_t j = 0; j < k; ++j) {
        std::vector<std::size_t> map(k + 1);
        for (std::size_t x = 0; x <= k; ++x)
          map[x] = std::min(x, j);
        out.push_back({"truncate NBAR(" + std::to_string(k) + ") to " + std::to_string(j),
                       {nbar(k).semigroup, nbar(j).semigroup, map}});
      }
    {
      auto const               pr = product({nbar(1), nbar(2)}).semigroup;
      std::vector<std::size_t> first(pr.size()), second(pr.size());
      for (std::size_t x = 0; x <= 1; ++x)
        for (std::size_t y = 0; y <= 2; ++y) {
          first[product_index({2, 3}, {x, y})]  = x;
          second[product_index({2, 3}, {x, y})] = y;
        }
      out.push_back({"first projection", {pr, nbar(1).semigroup, first}});
      out.push_back({"second projection", {pr, nbar(2).semigroup, second}});
    }
    for (auto spec : {"NBAR(1)", "NBAR(2)", "LAT(2)"}) {
      auto const               base = make_fixture(spec);
      auto const               dup  = doubled(base).semigroup;
      std::size_t const        n    = base.semigroup.size();
      std::vector<std::size_t> collapse(dup.size()), embed(n);
      for (std::size_t x = 0; x < n; ++x) {
        collapse[2 * x] = collapse[2 * x + 1] = x;
        embed[x]                              = 2 * x;
      }
      out.push_back({std::string("collapse DUP(") + spec + ")", {dup, base.semigroup, collapse}});
      out.push_back({std::string("embed into DUP(") + spec + ")", {base.semigroup, dup, embed}});
    }
    out.push_back({"NINF(1) to NBAR(2)", {ninf(1).semigroup, nbar(2).semigroup, {0, 1, 2}}});
    out.push_back({"NINF(3) to NINF(1)", {ninf(3).semigroup, ninf(1).semigroup, {0, 1, 2, 2, 2}}});
    {
      auto const               lat = make_fixture("LAT(2)");
      auto const               sq  = product({lat, lat}).semigroup;
      std::vector<std::size_t> join(sq.size());
      for (std::size_t x = 0; x < 4; ++x)
        for (std::size_t y = 0; y < 4; ++y)
          join[product_index({4, 4}, {x, y})] = x | y;
      out.push_back({"join LAT(2)^2", {sq, lat.semigroup, join}});
    }
    return out;
  }

  WSemigroup ActionCase::semigroup() const {
    return make_fixture(spec).semigroup;
  }

  GroupAction ActionCase::action(WSemigroup const& s) const {
    if (sigmas.empty())
      return trivial_action(s);
    std::vector<Permutation> gens;
    for (auto const& sigma : sigmas)
      gens.push_back(permute_coordinates(side, sigma));
    return validate_action(s, gens);
  }

  std::string ActionCase::name() const {
    if (sigmas.empty())
      return spec + " trivial";
    std::string out = spec + " by";
    for (auto const& sigma : sigmas) {
      out += " (";
      for (std::size_t i = 0; i < sigma.size(); ++i)
        out += (i ? "," : "") + std::to_string(sigma[i]);
      out += ")";
    }
    return out;
  }

  std::vector<ActionCase> action_corpus() {
    return {
        {"PROD(NBAR(1),NBAR(1))", 2, {{1, 0}}},
        {"PROD(NBAR(2),NBAR(2))", 3, {{1, 0}}},
        {"PROD(NBAR(3),NBAR(3))", 4, {{1, 0}}},
        {"PROD(NBAR(4),NBAR(4))", 5, {{1, 0}}},
        {"PROD(NINF(1),NINF(1))", 3, {{1, 0}}},
        {"PROD(NBAR(1),NBAR(1),NBAR(1))", 2, {{1, 2, 0}}},
        {"PROD(NBAR(1),NBAR(1),NBAR(1))", 2, {{1, 0, 2}, {0, 2, 1}}},
        {"PROD(NBAR(2),NBAR(2),NBAR(2))", 3, {{1, 2, 0}}},
        {"PROD(LAT(2),LAT(2))", 4, {{1, 0}}},
        {"PROD(LAT(2; 0<1),LAT(2; 0<1))", 3, {{1, 0}}},
        {"PROD(DUP(NBAR(1)),DUP(NBAR(1)))", 4, {{1, 0}}},
        {"NBAR(2)", 0, {}},
        {"LAT(3)", 0, {}},
        {"DUP(NBAR(2))", 0, {}},
    };
  }

  Relation random_seed(WSemigroup const& s, std::mt19937_64& rng, double density) {
    std::bernoulli_distribution coin(density);
    Relation                    r(s.size());
    for (std::size_t a = 0; a < s.size(); ++a)
      for (std::size_t b = 0; b < s.size(); ++b)
        if (coin(rng))
          r.add(a, b);
    return compose({&s.prec(), &r, &s.prec()});
  }

}  // namespace ordcalc
