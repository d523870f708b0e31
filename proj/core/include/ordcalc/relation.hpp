#ifndef ORDCALC_RELATION_HPP
#define ORDCALC_RELATION_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "ordcalc/monoid.hpp"

namespace ordcalc {

  using Subset = boost::dynamic_bitset<std::uint64_t>;
  using Edge   = std::pair<std::size_t, std::size_t>;

  std::vector<std::size_t> members(Subset const& s);
  Subset                   make_subset(std::size_t n, std::vector<std::size_t> const& xs);
  // Deterministic total order on subsets: by cardinality, then by member list.
  bool subset_less(Subset const& a, Subset const& b);

  // Binary relation on {0, ..., n-1}, one bit row per element.
  class Relation {
   public:
    Relation() = default;
    explicit Relation(std::size_t n);

    static Relation identity(std::size_t n);
    static Relation full(std::size_t n);
    static Relation from_pairs(std::size_t n, std::vector<Edge> const& pairs);

    std::size_t size() const noexcept {
      return _rows.size();
    }

    bool contains(std::size_t a, std::size_t b) const {
      return _rows[a][b];
    }
    void add(std::size_t a, std::size_t b) {
      _rows[a].set(b);
    }
    void remove(std::size_t a, std::size_t b) {
      _rows[a].reset(b);
    }

    // {b : a R b}
    Subset const& row(std::size_t a) const {
      return _rows[a];
    }
    Subset& row(std::size_t a) {
      return _rows[a];
    }
    // {a : a R b}
    Subset column(std::size_t b) const;

    Relation          transpose() const;
    std::vector<Edge> pairs() const;
    std::size_t       count() const;
    bool              empty() const;

    bool is_subset_of(Relation const& other) const;
    bool is_reflexive() const;
    bool is_symmetric() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;

    Relation& operator|=(Relation const& other);
    Relation& operator&=(Relation const& other);

    bool operator==(Relation const& other) const {
      return _rows == other._rows;
    }
    bool operator!=(Relation const& other) const {
      return !(*this == other);
    }

   private:
    std::vector<Subset> _rows;
  };

  Relation operator|(Relation lhs, Relation const& rhs);
  Relation operator&(Relation lhs, Relation const& rhs);

  // Lexicographically smallest pair of lhs missing from rhs.
  std::optional<Edge> first_missing(Relation const& lhs, Relation const& rhs);

  Relation compose(Relation const& r1, Relation const& r2);
  Relation compose(std::vector<Relation const*> const& chain);
  Relation transitive_closure(Relation const& r);
  Relation preorder_closure(Relation const& r);
  bool     is_dense(Relation const& r);

  // a <= b iff every x with x r a also has x r b.
  Relation induced_preorder(Relation const& prec);
  // Union of r-down-sets of the members of xs: {x : x r y for some y in xs}.
  Subset down_closure(Relation const& r, Subset const& xs);
  Subset up_closure(Relation const& r, Subset const& xs);

  Relation sum(Relation const& r1, Relation const& r2, FiniteMonoid const& m);
  Relation additive_closure(Relation const& r, FiniteMonoid const& m);
  bool     is_additive(Relation const& r, FiniteMonoid const& m);
  // {x + y : x in xs, y in ys}
  Subset set_sum(Subset const& xs, Subset const& ys, FiniteMonoid const& m);

  // Almost refinement across sums, tested on tuples of bounded length. With
  // (m, n) fixed, the property reads: whenever a'_i prec a_i (i < m) and
  // (sum a_i, sum b_j) lies in hyp, there are x_ij link y_ij with
  // a'_i prec sum_j x_ij and sum_i y_ij prec b_j.
  struct RefinementWitness {
    std::vector<std::size_t> lower;  // a'_1 .. a'_m
    std::vector<std::size_t> upper;  // b_1 .. b_n
  };
  std::optional<RefinementWitness> refinement_failure(Relation const&     prec,
                                                      Relation const&     hyp,
                                                      Relation const&     link,
                                                      FiniteMonoid const& m,
                                                      std::size_t         rows,
                                                      std::size_t         cols);

  struct ClassifyOptions {
    bool        additive_flags    = true;
    std::size_t max_refinement    = 2;
    bool        refinement_flags  = true;
  };

  struct RelationProfile {
    bool transitive           = false;
    bool dense                = false;
    bool additive             = false;
    bool auxiliary            = false;
    bool left_continuous      = false;
    bool almost_transitive    = false;
    // keyed by (m, n)
    std::map<std::pair<std::size_t, std::size_t>, bool> refinement;
    std::optional<Edge> left_continuity_witness;
    std::optional<Edge> almost_transitivity_witness;

    bool almost_refinement() const;
  };

  RelationProfile classify(Relation const&        r,
                           Relation const&        prec,
                           Relation const&        leq,
                           FiniteMonoid const*    m,
                           ClassifyOptions const& opts = {});

  // prec o r <= prec o r o prec
  std::optional<Edge> left_continuity_failure(Relation const& r, Relation const& prec);
  // prec o r o prec o r o prec <= prec o r o prec
  std::optional<Edge> almost_transitivity_failure(Relation const& r, Relation const& prec);

  // r <= leq and leq o r o leq <= r
  bool is_auxiliary(Relation const& r, Relation const& leq);

}  // namespace ordcalc

#endif
