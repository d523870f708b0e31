#ifndef ORDCALC_CLI_HPP
#define ORDCALC_CLI_HPP

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "ordcalc/acceptance.hpp"
#include "ordcalc/dynamics.hpp"
#include "ordcalc/pairs.hpp"
#include "ordcalc/wsemigroup.hpp"

namespace ordcalc::cli {

  using Json = nlohmann::ordered_json;

  // Error codes: E_JSON, E_SCHEMA, E_UNKNOWN_FIELD, E_KIND, E_ADD_SHAPE,
  // E_NAME, E_REF, E_USAGE.
  class CliError : public std::runtime_error {
   public:
    CliError(std::string code, std::string const& message)
        : std::runtime_error(message), _code(std::move(code)) {}
    std::string const& code() const noexcept {
      return _code;
    }

   private:
    std::string _code;
  };

  using NamePair = std::pair<std::string, std::string>;
  using NameMap  = std::vector<NamePair>;  // file order is kept

  struct SemigroupDoc {
    std::vector<std::string>              elements;
    std::string                           zero;
    std::vector<std::vector<std::string>> add;
    std::vector<NamePair>                 prec;

    bool operator==(SemigroupDoc const&) const = default;
  };

  // "on", "from" and "to" hold a reference: a path relative to the referring
  // file, or a fixture spec such as NBAR(2).
  struct RelationDoc {
    std::string           on;
    std::vector<NamePair> pairs;
    bool operator==(RelationDoc const&) const = default;
  };

  struct ActionDoc {
    std::string          on;
    std::vector<NameMap> generators;
    bool operator==(ActionDoc const&) const = default;
  };

  struct MorphismDoc {
    std::string from;
    std::string to;
    NameMap     map;
    bool operator==(MorphismDoc const&) const = default;
  };

  struct PairDoc {
    std::string           on;
    std::vector<NamePair> aux;
    std::vector<NamePair> order;
    bool operator==(PairDoc const&) const = default;
  };

  struct ReportDoc {
    Json body;
    bool operator==(ReportDoc const&) const = default;
  };

  using Document = std::variant<SemigroupDoc, RelationDoc, ActionDoc, MorphismDoc, PairDoc, ReportDoc>;

  std::string kind_of(Document const& d);

  // Throws CliError. Without a "kind" field the kind is inferred from the keys.
  Document    parse(std::string_view text);
  std::string serialize(Document const& d);

  Document read_document(std::string const& path);

  // Binding names to indices.
  struct Bound {
    WSemigroup               semigroup;
    std::vector<std::string> names;

    std::size_t index(std::string const& name) const;  // E_NAME
  };
  Bound        bind(SemigroupDoc const& d);  // shape errors only; axioms are not checked
  SemigroupDoc document_of(WSemigroup const& s, std::vector<std::string> const& names);
  Relation     bind(Bound const& s, std::vector<NamePair> const& pairs);
  GroupAction  bind(Bound const& s, ActionDoc const& d);  // generators validated
  Pair         bind(Bound const& s, PairDoc const& d);
  PairDoc      document_of(Bound const& s, Pair const& p, std::string const& on);

  // Loads a reference relative to base_dir; paths win over fixture specs.
  Bound resolve(std::string const& ref, std::string const& base_dir);

  // Exit codes: 0 pass, 1 property failure, 2 usage or input error.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  // Witness records as emitted by `check`.
  Json    witness_json(Witness const& w);
  Witness witness_from_json(Json const& j);

  // `check --suite all`, fixture round trips and witness re-validation.
  CriterionResult run_cli_criterion(std::string const& fixture_dir);

}  // namespace ordcalc::cli

#endif
