#include "ordcalc/fixtures.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>

namespace ordcalc {

  namespace {
    Named build(std::size_t                                          n,
                std::size_t                                          zero,
                std::function<std::size_t(std::size_t, std::size_t)> add,
                std::function<bool(std::size_t, std::size_t)>        prec,
                std::vector<std::string>                             names) {
      std::vector<std::size_t> table(n * n);
      Relation                 p(n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          table[a * n + b] = add(a, b);
          if (prec(a, b))
            p.add(a, b);
        }
      return {WSemigroup(FiniteMonoid(n, zero, std::move(table)), std::move(p)), std::move(names)};
    }
  }  // namespace

  Poset antichain(std::size_t n) {
    return {n, {}};
  }

  Poset chain(std::size_t n) {
    Poset p{n, {}};
    for (std::size_t i = 0; i + 1 < n; ++i)
      p.less.emplace_back(i, i + 1);
    return p;
  }

  Named nbar(std::size_t k) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= k; ++i)
      names.push_back(std::to_string(i));
    return build(
        k + 1, 0, [k](std::size_t a, std::size_t b) { return std::min(a + b, k); },
        [](std::size_t a, std::size_t b) { return a <= b; }, std::move(names));
  }

  Named ninf(std::size_t k) {
    std::size_t const        inf = k + 1;
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= k; ++i)
      names.push_back(std::to_string(i));
    names.emplace_back("inf");
    return build(
        k + 2, 0,
        [k, inf](std::size_t a, std::size_t b) { return (a == inf || b == inf || a + b > k) ? inf : a + b; },
        [](std::size_t a, std::size_t b) { return a <= b; }, std::move(names));
  }

  Named lattice(Poset const& p) {
    if (p.points > 20)
      throw std::invalid_argument("poset too large for down-set enumeration");
    Relation order(p.points);
    for (auto [a, b] : p.less) {
      if (a >= p.points || b >= p.points)
        throw std::invalid_argument("poset relation outside the point set");
      order.add(a, b);
    }
    order = preorder_closure(order);
    if (!order.is_antisymmetric())
      throw std::invalid_argument("poset relations contain a cycle");

    std::vector<unsigned long>            masks;
    std::map<unsigned long, std::size_t> index;
    for (unsigned long mask = 0; mask < (1ul << p.points); ++mask) {
      bool down = true;
      for (std::size_t x = 0; x < p.points && down; ++x)
        if (mask >> x & 1ul)
          for (std::size_t y = 0; y < p.points; ++y)
            if (order.contains(y, x) && !(mask >> y & 1ul))
              down = false;
      if (down) {
        index[mask] = masks.size();
        masks.push_back(mask);
      }
    }
    std::vector<std::string> names;
    for (auto mask : masks) {
      std::string s = "{";
      bool        first = true;
      for (std::size_t x = 0; x < p.points; ++x)
        if (mask >> x & 1ul) {
          s += (first ? "" : ",") + std::to_string(x);
          first = false;
        }
      names.push_back(s + "}");
    }
    return build(
        masks.size(), 0, [&](std::size_t a, std::size_t b) { return index.at(masks[a] | masks[b]); },
        [&](std::size_t a, std::size_t b) { return (masks[a] & ~masks[b]) == 0; }, std::move(names));
  }

  std::size_t product_index(std::vector<std::size_t> const& sizes,
                            std::vector<std::size_t> const& coords) {
    std::size_t i = 0;
    for (std::size_t f = 0; f < sizes.size(); ++f)
      i = i * sizes[f] + coords[f];
    return i;
  }

  Named product(std::vector<Named> const& factors) {
    if (factors.empty())
      throw std::invalid_argument("empty product");
    std::vector<std::size_t> sizes;
    std::size_t              n = 1;
    for (auto const& f : factors) {
      sizes.push_back(f.semigroup.size());
      n *= f.semigroup.size();
    }
    auto coords = [&](std::size_t i) {
      std::vector<std::size_t> c(sizes.size());
      for (std::size_t f = sizes.size(); f-- > 0;) {
        c[f] = i % sizes[f];
        i /= sizes[f];
      }
      return c;
    };
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
      auto        c = coords(i);
      std::string s = "(";
      for (std::size_t f = 0; f < c.size(); ++f)
        s += (f ? "," : "") + factors[f].names[c[f]];
      names.push_back(s + ")");
    }
    std::vector<std::size_t> zero;
    for (auto const& f : factors)
      zero.push_back(f.semigroup.zero());
    return build(
        n, product_index(sizes, zero),
        [&](std::size_t a, std::size_t b) {
          auto ca = coords(a), cb = coords(b);
          for (std::size_t f = 0; f < ca.size(); ++f)
            ca[f] = factors[f].semigroup.add(ca[f], cb[f]);
          return product_index(sizes, ca);
        },
        [&](std::size_t a, std::size_t b) {
          auto ca = coords(a), cb = coords(b);
          for (std::size_t f = 0; f < ca.size(); ++f)
            if (!factors[f].semigroup.precedes(ca[f], cb[f]))
              return false;
          return true;
        },
        std::move(names));
  }

  Named doubled(Named const& base) {
    auto const&              s = base.semigroup;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < s.size(); ++i) {
      names.push_back(base.names[i]);
      names.push_back(base.names[i] + "'");
    }
    return build(
        2 * s.size(), 2 * s.zero(),
        [&](std::size_t a, std::size_t b) { return 2 * s.add(a / 2, b / 2) + ((a | b) & 1); },
        [&](std::size_t a, std::size_t b) { return (a & 1) == 0 && s.precedes(a / 2, b / 2); },
        std::move(names));
  }

  namespace {
    class SpecParser {
     public:
      explicit SpecParser(std::string const& text) : _t(text) {}

      Named parse_all() {
        Named out = parse();
        skip();
        if (_i != _t.size())
          error("trailing characters");
        return out;
      }

     private:
      [[noreturn]] void error(std::string const& what) const {
        throw std::invalid_argument("fixture spec '" + _t + "': " + what);
      }

      void skip() {
        while (_i < _t.size() && std::isspace(static_cast<unsigned char>(_t[_i])))
          ++_i;
      }

      bool eat(char c) {
        skip();
        if (_i < _t.size() && _t[_i] == c) {
          ++_i;
          return true;
        }
        return false;
      }

      void expect(char c) {
        if (!eat(c))
          error(std::string("expected '") + c + "'");
      }

      std::size_t number() {
        skip();
        std::size_t start = _i;
        while (_i < _t.size() && std::isdigit(static_cast<unsigned char>(_t[_i])))
          ++_i;
        if (start == _i)
          error("expected a number");
        return std::stoul(_t.substr(start, _i - start));
      }

      std::string word() {
        skip();
        std::size_t start = _i;
        while (_i < _t.size() && std::isalpha(static_cast<unsigned char>(_t[_i])))
          ++_i;
        return _t.substr(start, _i - start);
      }

      Named parse() {
        std::string kind = word();
        expect('(');
        Named out;
        if (kind == "NBAR" || kind == "NINF") {
          std::size_t k = number();
          out           = kind == "NBAR" ? nbar(k) : ninf(k);
        } else if (kind == "LAT") {
          Poset p{number(), {}};
          if (eat(';')) {
            skip();
            while (_i < _t.size() && _t[_i] != ')') {
              std::size_t a = number();
              expect('<');
              std::size_t b = number();
              p.less.emplace_back(a, b);
              if (!eat(','))
                break;
            }
          }
          out = lattice(p);
        } else if (kind == "PROD") {
          std::vector<Named> factors{parse()};
          while (eat(','))
            factors.push_back(parse());
          out = product(factors);
        } else if (kind == "DUP") {
          out = doubled(parse());
        } else {
          error("unknown fixture kind '" + kind + "'");
        }
        expect(')');
        return out;
      }

      std::string const& _t;
      std::size_t        _i = 0;
    };
  }  // namespace

  Named make_fixture(std::string const& spec) {
    return SpecParser(spec).parse_all();
  }

}  // namespace ordcalc
