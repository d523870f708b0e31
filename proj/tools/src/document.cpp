#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "ordcalc/cli.hpp"
#include "ordcalc/fixtures.hpp"

namespace ordcalc::cli {

  namespace {

    [[noreturn]] void fail(std::string code, std::string const& msg) {
      throw CliError(std::move(code), msg);
    }

    struct Fields {
      char const*              kind;
      std::vector<std::string> required;
    };

    std::map<std::string, Fields> const schema = {
        {"semigroup", {"semigroup", {"elements", "zero", "add", "prec"}}},
        {"relation", {"relation", {"on", "pairs"}}},
        {"action", {"action", {"on", "generators"}}},
        {"morphism", {"morphism", {"from", "to", "map"}}},
        {"pair", {"pair", {"on", "aux", "order"}}},
        {"report", {"report", {}}},
    };

    std::string infer_kind(Json const& j) {
      if (j.contains("kind")) {
        if (!j["kind"].is_string())
          fail("E_SCHEMA", "\"kind\" must be a string");
        auto k = j["kind"].get<std::string>();
        if (!schema.count(k))
          fail("E_KIND", "unknown document kind \"" + k + "\"");
        return k;
      }
      for (auto const& [key, kind] : std::vector<NamePair>{{"elements", "semigroup"},
                                                           {"pairs", "relation"},
                                                           {"generators", "action"},
                                                           {"map", "morphism"},
                                                           {"aux", "pair"}})
        if (j.contains(key))
          return kind;
      fail("E_KIND", "cannot tell the document kind");
    }

    std::string string_at(Json const& j, std::string const& key) {
      if (!j[key].is_string())
        fail("E_SCHEMA", "\"" + key + "\" must be a string");
      return j[key].get<std::string>();
    }

    std::vector<std::string> strings(Json const& j, std::string const& what) {
      if (!j.is_array())
        fail("E_SCHEMA", what + " must be an array of strings");
      std::vector<std::string> out;
      for (auto const& x : j) {
        if (!x.is_string())
          fail("E_SCHEMA", what + " must be an array of strings");
        out.push_back(x.get<std::string>());
      }
      return out;
    }

    std::vector<NamePair> name_pairs(Json const& j, std::string const& what) {
      if (!j.is_array())
        fail("E_SCHEMA", "\"" + what + "\" must be an array of pairs");
      std::vector<NamePair> out;
      for (auto const& p : j) {
        auto xs = strings(p, "each entry of \"" + what + "\"");
        if (xs.size() != 2)
          fail("E_SCHEMA", "each entry of \"" + what + "\" must have two names");
        out.emplace_back(xs[0], xs[1]);
      }
      return out;
    }

    NameMap name_map(Json const& j, std::string const& what) {
      if (!j.is_object())
        fail("E_SCHEMA", what + " must be an object of names");
      NameMap out;
      for (auto const& [k, v] : j.items()) {
        if (!v.is_string())
          fail("E_SCHEMA", what + " must map names to names");
        out.emplace_back(k, v.get<std::string>());
      }
      return out;
    }

    SemigroupDoc semigroup_doc(Json const& j) {
      SemigroupDoc d;
      d.elements = strings(j["elements"], "\"elements\"");
      std::set<std::string> names(d.elements.begin(), d.elements.end());
      if (names.size() != d.elements.size())
        fail("E_NAME", "duplicate element name");
      if (d.elements.empty())
        fail("E_SCHEMA", "a semigroup needs at least one element");
      auto known = [&](std::string const& n, std::string const& where) {
        if (!names.count(n))
          fail("E_NAME", "unknown element \"" + n + "\" in " + where);
      };
      d.zero = string_at(j, "zero");
      known(d.zero, "\"zero\"");
      if (!j["add"].is_array())
        fail("E_SCHEMA", "\"add\" must be an array of rows");
      if (j["add"].size() != d.elements.size())
        fail("E_ADD_SHAPE", "\"add\" has " + std::to_string(j["add"].size()) + " rows, expected " +
                                std::to_string(d.elements.size()));
      for (auto const& row : j["add"]) {
        d.add.push_back(strings(row, "each row of \"add\""));
        if (d.add.back().size() != d.elements.size())
          fail("E_ADD_SHAPE", "row " + std::to_string(d.add.size() - 1) + " of \"add\" has " +
                                  std::to_string(d.add.back().size()) + " entries");
        for (auto const& x : d.add.back())
          known(x, "\"add\"");
      }
      d.prec = name_pairs(j["prec"], "prec");
      for (auto const& [a, b] : d.prec) {
        known(a, "\"prec\"");
        known(b, "\"prec\"");
      }
      return d;
    }

    Json pairs_json(std::vector<NamePair> const& ps) {
      Json out = Json::array();
      for (auto const& [a, b] : ps)
        out.push_back(Json::array({a, b}));
      return out;
    }

    Json map_json(NameMap const& m) {
      Json out = Json::object();
      for (auto const& [a, b] : m)
        out[a] = b;
      return out;
    }

    std::string field(std::string const& key, Json const& value, bool last = false) {
      return "  " + Json(key).dump() + ": " + value.dump() + (last ? "\n" : ",\n");
    }

    std::string rows(std::string const& key, std::vector<Json> const& rs, bool last = false) {
      std::string out = "  " + Json(key).dump() + ": [";
      if (rs.empty())
        out += "]";
      else {
        out += "\n";
        for (std::size_t i = 0; i < rs.size(); ++i)
          out += "    " + rs[i].dump() + (i + 1 < rs.size() ? ",\n" : "\n");
        out += "  ]";
      }
      return out + (last ? "\n" : ",\n");
    }

    std::string text(std::string const& kind, std::string const& body) {
      return "{\n" + field("kind", kind) + body + "}\n";
    }

  }  // namespace

  std::string kind_of(Document const& d) {
    static char const* const kinds[] = {"semigroup", "relation", "action", "morphism", "pair", "report"};
    return kinds[d.index()];
  }

  Document parse(std::string_view input) {
    Json j;
    try {
      j = Json::parse(input);
    } catch (Json::parse_error const& e) {
      fail("E_JSON", e.what());
    }
    if (!j.is_object())
      fail("E_SCHEMA", "a document is a JSON object");
    std::string const kind = infer_kind(j);
    if (kind == "report")
      return ReportDoc{j};
    auto const& fields = schema.at(kind);
    for (auto const& [key, value] : j.items())
      if (key != "kind" && std::find(fields.required.begin(), fields.required.end(), key) == fields.required.end())
        fail("E_UNKNOWN_FIELD", "unknown field \"" + key + "\" in a " + kind + " document");
    for (auto const& key : fields.required)
      if (!j.contains(key))
        fail("E_SCHEMA", "missing field \"" + key + "\" in a " + kind + " document");

    if (kind == "semigroup")
      return semigroup_doc(j);
    if (kind == "relation")
      return RelationDoc{string_at(j, "on"), name_pairs(j["pairs"], "pairs")};
    if (kind == "action") {
      ActionDoc d{string_at(j, "on"), {}};
      if (!j["generators"].is_array())
        fail("E_SCHEMA", "\"generators\" must be an array");
      for (auto const& g : j["generators"])
        d.generators.push_back(name_map(g, "a generator"));
      return d;
    }
    if (kind == "morphism")
      return MorphismDoc{string_at(j, "from"), string_at(j, "to"), name_map(j["map"], "\"map\"")};
    return PairDoc{string_at(j, "on"), name_pairs(j["aux"], "aux"), name_pairs(j["order"], "order")};
  }

  std::string serialize(Document const& doc) {
    if (auto const* d = std::get_if<SemigroupDoc>(&doc)) {
      std::vector<Json> add;
      for (auto const& row : d->add)
        add.push_back(row);
      return text("semigroup", field("elements", d->elements) + field("zero", d->zero) + rows("add", add) +
                                   field("prec", pairs_json(d->prec), true));
    }
    if (auto const* d = std::get_if<RelationDoc>(&doc))
      return text("relation", field("on", d->on) + field("pairs", pairs_json(d->pairs), true));
    if (auto const* d = std::get_if<ActionDoc>(&doc)) {
      std::vector<Json> gens;
      for (auto const& g : d->generators)
        gens.push_back(map_json(g));
      return text("action", field("on", d->on) + rows("generators", gens, true));
    }
    if (auto const* d = std::get_if<MorphismDoc>(&doc))
      return text("morphism", field("from", d->from) + field("to", d->to) + field("map", map_json(d->map), true));
    if (auto const* d = std::get_if<PairDoc>(&doc))
      return text("pair", field("on", d->on) + field("aux", pairs_json(d->aux)) +
                              field("order", pairs_json(d->order), true));
    return std::get<ReportDoc>(doc).body.dump(2) + "\n";
  }

  Document read_document(std::string const& path) {
    std::ifstream in(path);
    if (!in)
      fail("E_USAGE", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
      return parse(buf.str());
    } catch (CliError const& e) {
      throw CliError(e.code(), path + ": " + e.what());
    }
  }

  std::size_t Bound::index(std::string const& name) const {
    auto it = std::find(names.begin(), names.end(), name);
    if (it == names.end())
      fail("E_NAME", "unknown element \"" + name + "\"");
    return static_cast<std::size_t>(it - names.begin());
  }

  Bound bind(SemigroupDoc const& d) {
    Bound b{{}, d.elements};
    std::size_t const        n = d.elements.size();
    std::vector<std::size_t> table;
    table.reserve(n * n);
    if (d.add.size() != n)
      fail("E_ADD_SHAPE", "addition table has the wrong number of rows");
    for (auto const& row : d.add) {
      if (row.size() != n)
        fail("E_ADD_SHAPE", "addition table row has the wrong length");
      for (auto const& x : row)
        table.push_back(b.index(x));
    }
    Relation prec(n);
    for (auto const& [x, y] : d.prec)
      prec.add(b.index(x), b.index(y));
    b.semigroup = WSemigroup(FiniteMonoid(n, b.index(d.zero), std::move(table)), std::move(prec));
    return b;
  }

  SemigroupDoc document_of(WSemigroup const& s, std::vector<std::string> const& names) {
    SemigroupDoc d{names, names[s.zero()], {}, {}};
    for (std::size_t a = 0; a < s.size(); ++a) {
      d.add.emplace_back();
      for (std::size_t b = 0; b < s.size(); ++b)
        d.add.back().push_back(names[s.add(a, b)]);
    }
    for (auto const& [a, b] : s.prec().pairs())
      d.prec.emplace_back(names[a], names[b]);
    return d;
  }

  Relation bind(Bound const& s, std::vector<NamePair> const& pairs) {
    Relation r(s.semigroup.size());
    for (auto const& [a, b] : pairs)
      r.add(s.index(a), s.index(b));
    return r;
  }

  GroupAction bind(Bound const& s, ActionDoc const& d) {
    std::vector<Permutation> gens;
    for (auto const& g : d.generators) {
      Permutation p(s.semigroup.size(), npos);
      for (auto const& [a, b] : g) {
        auto const i = s.index(a);
        if (p[i] != npos)
          fail("E_SCHEMA", "generator maps \"" + a + "\" twice");
        p[i] = s.index(b);
      }
      std::vector<bool> hit(p.size());
      for (auto x : p) {
        if (x == npos)
          fail("E_SCHEMA", "generator is not defined everywhere");
        if (hit[x])
          fail("E_SCHEMA", "generator is not a bijection");
        hit[x] = true;
      }
      gens.push_back(std::move(p));
    }
    return validate_action(s.semigroup, gens);
  }

  Pair bind(Bound const& s, PairDoc const& d) {
    return {bind(s, d.aux), bind(s, d.order)};
  }

  PairDoc document_of(Bound const& s, Pair const& p, std::string const& on) {
    PairDoc d{on, {}, {}};
    for (auto const& [a, b] : p.aux.pairs())
      d.aux.emplace_back(s.names[a], s.names[b]);
    for (auto const& [a, b] : p.order.pairs())
      d.order.emplace_back(s.names[a], s.names[b]);
    return d;
  }

  Bound resolve(std::string const& ref, std::string const& base_dir) {
    namespace fs = std::filesystem;
    fs::path const p = fs::path(ref).is_absolute() ? fs::path(ref) : fs::path(base_dir) / ref;
    if (fs::is_regular_file(p)) {
      auto const doc = read_document(p.string());
      if (auto const* s = std::get_if<SemigroupDoc>(&doc))
        return bind(*s);
      fail("E_KIND", p.string() + " is a " + kind_of(doc) + " document, not a semigroup");
    }
    try {
      auto n = make_fixture(ref);
      return {std::move(n.semigroup), std::move(n.names)};
    } catch (std::invalid_argument const&) {
      fail("E_REF", "\"" + ref + "\" is neither a file nor a fixture spec");
    }
  }

}  // namespace ordcalc::cli
