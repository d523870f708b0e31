#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "ordcalc/budget.hpp"
#include "ordcalc/cli.hpp"
#include "ordcalc/completion.hpp"
#include "ordcalc/errors.hpp"
#include "ordcalc/fixtures.hpp"
#include "ordcalc/functionals.hpp"
#include "ordcalc/genpair.hpp"
#include "ordcalc/ideals.hpp"
#include "ordcalc/iso.hpp"
#include "ordcalc/quotients.hpp"

namespace ordcalc::cli {

  namespace fs = std::filesystem;

  namespace {

    [[noreturn]] void fail(std::string code, std::string const& msg) {
      throw CliError(std::move(code), msg);
    }

    std::string parent_of(std::string const& path) {
      return fs::path(path).parent_path().string();
    }

    template <typename T>
    T load(std::string const& path, char const* kind) {
      auto doc = read_document(path);
      if (auto* d = std::get_if<T>(&doc))
        return std::move(*d);
      fail("E_KIND", path + " is a " + kind_of(doc) + " document, expected " + kind);
    }

    Bound load_semigroup(std::string const& path) {
      return bind(load<SemigroupDoc>(path, "semigroup"));
    }

    // the semigroup a document refers to must be the one given on the command line
    void same_carrier(Bound const& s, std::string const& ref, std::string const& doc_path) {
      auto const other = resolve(ref, parent_of(doc_path));
      if (!(other.semigroup == s.semigroup) || other.names != s.names)
        fail("E_REF", doc_path + " refers to \"" + ref + "\", a different semigroup");
    }

    GroupAction load_action(Bound const& s, std::string const& path) {
      auto const d = load<ActionDoc>(path, "action");
      same_carrier(s, d.on, path);
      return bind(s, d);
    }

    Json report(std::string const& command) {
      Json j;
      j["kind"]    = "report";
      j["command"] = command;
      return j;
    }

    Json checks_json(AxiomReport const& r) {
      Json out = Json::array();
      for (auto const& c : r.checks()) {
        Json e;
        e["name"]   = c.name;
        e["passed"] = c.passed;
        if (c.skipped)
          e["skipped"] = true;
        if (!c.witness.empty())
          e["witness"] = c.witness;
        if (!c.detail.empty())
          e["detail"] = c.detail;
        out.push_back(std::move(e));
      }
      return out;
    }

    Json semigroup_json(SemigroupDoc const& d) {
      return Json::parse(serialize(d));
    }

    std::vector<std::string> names_of(Bound const& s, Subset const& xs) {
      std::vector<std::string> out;
      for (auto a : members(xs))
        out.push_back(s.names[a]);
      return out;
    }

    // classes are named after their least element
    Json quotient_json(Bound const& s, QuotientResult const& q, Json j) {
      std::vector<std::string> names;
      for (auto r : q.representative)
        names.push_back(s.names[r]);
      j["quotient"] = semigroup_json(document_of(q.quotient, names));
      Json classes  = Json::object();
      for (std::size_t a = 0; a < s.names.size(); ++a)
        classes[s.names[a]] = names[q.class_of[a]];
      j["class_of"] = std::move(classes);
      return j;
    }

    Json state_json(Bound const& s, ExtState const& l) {
      Json out = Json::object();
      for (std::size_t a = 0; a < s.names.size(); ++a) {
        auto v           = l.value(a);
        out[s.names[a]] = v ? v->get_str() : std::string("inf");
      }
      return out;
    }

    int emit(std::ostream& out, Json const& j, bool ok) {
      out << serialize(ReportDoc{j});
      return ok ? 0 : 1;
    }

    // ---- subcommands

    int cmd_validate(std::string const& path, std::ostream& out) {
      auto const doc = read_document(path);
      Json       j   = report("validate");
      j["document"]  = kind_of(doc);
      bool ok        = true;
      std::visit(
          [&](auto const& d) {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, SemigroupDoc>) {
              auto const b = bind(d);
              auto const m = check_monoid(b.semigroup.monoid());
              auto const w = check_w_axioms(b.semigroup);
              ok           = m.ok() && w.ok();
              j["monoid"]  = checks_json(m);
              j["w"]       = checks_json(w);
            } else if constexpr (std::is_same_v<T, RelationDoc>) {
              auto const s = resolve(d.on, parent_of(path));
              j["pairs"]   = bind(s, d.pairs).count();
            } else if constexpr (std::is_same_v<T, ActionDoc>) {
              auto const s = resolve(d.on, parent_of(path));
              try {
                auto const g     = bind(s, d);
                auto const c     = check_action(s.semigroup, g);
                ok               = c.ok();
                j["group_order"] = g.order();
                j["checks"]      = checks_json(c);
              } catch (PreconditionError const& e) {
                ok         = false;
                j["error"] = e.what();
                j["witness"] = e.witness();
              }
            } else if constexpr (std::is_same_v<T, MorphismDoc>) {
              auto const src = resolve(d.from, parent_of(path));
              auto const tgt = resolve(d.to, parent_of(path));
              WMorphism  f{src.semigroup, tgt.semigroup, std::vector<std::size_t>(src.names.size(), npos)};
              for (auto const& [a, b] : d.map) {
                auto const i = src.index(a);
                if (f.map[i] != npos)
                  fail("E_SCHEMA", "morphism maps \"" + a + "\" twice");
                f.map[i] = tgt.index(b);
              }
              if (std::count(f.map.begin(), f.map.end(), npos))
                fail("E_SCHEMA", "morphism is not defined everywhere");
              auto const c = check_morphism(f);
              ok           = c.ok();
              j["checks"]  = checks_json(c);
            } else if constexpr (std::is_same_v<T, PairDoc>) {
              auto const s    = resolve(d.on, parent_of(path));
              auto const prof = classify_pair(s.semigroup, bind(s, d));
              ok              = prof.normal && prof.left_closed && prof.admissible;
              j["admissible"]  = prof.admissible;
              j["prenormal"]   = prof.prenormal;
              j["left_closed"] = prof.left_closed;
              j["normal"]      = prof.normal;
              j["auxiliary"]   = prof.auxiliary;
              j["checks"]      = checks_json(prof.details);
            }
          },
          doc);
      j["ok"] = ok;
      return emit(out, j, ok);
    }

    int cmd_gen(std::string const& sg, std::string const& seed, std::ostream& out) {
      auto const s = load_semigroup(sg);
      auto const r = load<RelationDoc>(seed, "relation");
      same_carrier(s, r.on, seed);
      out << serialize(document_of(s, generate_normal(s.semigroup, bind(s, r.pairs)), r.on));
      return 0;
    }

    int cmd_quotient(std::string const& sg, std::string const& pair_file, std::string const& ideal, std::ostream& out) {
      auto const s = load_semigroup(sg);
      Json       j = report("quotient");
      Pair       p;
      if (pair_file.empty() && ideal.empty())
        fail("E_USAGE", "quotient needs --pair or --ideal");
      if (!pair_file.empty()) {
        auto const d = load<PairDoc>(pair_file, "pair");
        same_carrier(s, d.on, pair_file);
        p = bind(s, d);
      } else {
        Subset             gens(s.names.size());
        std::istringstream in(ideal);
        for (std::string name; std::getline(in, name, ',');)
          gens.set(s.index(name));
        auto const i = generated_closed_ideal(s.semigroup, gens);
        j["ideal"]   = names_of(s, i.members);
        p            = pair_of_ideal(s.semigroup, i.members);
      }
      j       = quotient_json(s, quotient(s.semigroup, p), std::move(j));
      j["ok"] = true;
      return emit(out, j, true);
    }

    int cmd_dyn_quotient(std::string const& sg, std::string const& action, std::ostream& out) {
      auto const s     = load_semigroup(sg);
      auto const g     = load_action(s, action);
      Json       j     = report("dyn-quotient");
      j["group_order"] = g.order();
      j                = quotient_json(s, dyn_quotient(s.semigroup, g), std::move(j));
      j["ok"]          = true;
      return emit(out, j, true);
    }

    int cmd_ideals(std::string const& sg, bool all, bool invariant, std::string const& action, std::ostream& out) {
      auto const s = load_semigroup(sg);
      if (invariant && action.empty())
        fail("E_USAGE", "--invariant needs --action");
      std::vector<Ideal> ideals;
      if (invariant)
        ideals = invariant_closed_ideals(s.semigroup, load_action(s, action));
      else
        ideals = enumerate_ideals(s.semigroup, !all);
      Json j    = report("ideals");
      Json list = Json::array();
      for (auto const& i : ideals) {
        Json e;
        e["members"] = names_of(s, i.members);
        e["closed"]  = i.closed;
        list.push_back(std::move(e));
      }
      j["ideals"] = std::move(list);
      j["ok"]     = true;
      return emit(out, j, true);
    }

    int cmd_complete(std::string const& sg, std::ostream& out) {
      auto const s = load_semigroup(sg);
      auto const c = complete(s.semigroup);
      std::vector<std::string> names;
      for (auto const& d : c.ideals) {
        std::string n = "{";
        for (auto const& x : names_of(s, d))
          n += (n.size() > 1 ? "," : "") + x;
        names.push_back(n + "}");
      }
      Json j          = report("complete");
      j["completion"] = semigroup_json(document_of(c.semigroup, names));
      Json gamma      = Json::object();
      for (std::size_t a = 0; a < s.names.size(); ++a)
        gamma[s.names[a]] = names[c.gamma(a)];
      j["gamma"]      = std::move(gamma);
      auto const chk  = completion_check(s.semigroup);
      j["checks"]     = checks_json(chk);
      j["ok"]         = chk.ok();
      return emit(out, j, chk.ok());
    }

    int cmd_functionals(std::string const& sg, std::string const& unit, std::string const& action, std::ostream& out) {
      auto const                 s = load_semigroup(sg);
      std::optional<GroupAction> g;
      if (!action.empty())
        g = load_action(s, action);
      Json j    = report("functionals");
      Json list = Json::array();
      for (auto const& l : enumerate_functionals(s.semigroup, g ? &*g : nullptr))
        list.push_back(state_json(s, l));
      j["functionals"] = std::move(list);
      if (!unit.empty()) {
        auto const u = s.index(unit);
        if (!is_order_unit(s.semigroup, u))
          throw PreconditionError("\"" + unit + "\" is not an order unit", {u});
        Json norm = Json::array();
        for (auto const& l : normalized_vertices(s.semigroup, u, g ? &*g : nullptr))
          norm.push_back(state_json(s, l));
        j["normalized"] = std::move(norm);
      }
      j["ok"] = true;
      return emit(out, j, true);
    }

    Json au_witness(std::vector<std::string> const& names, std::array<std::size_t, 3> const& w) {
      Json out;
      out["a"] = names[w[0]];
      out["b"] = names[w[1]];
      out["k"] = w[2];
      return out;
    }

    int cmd_compare(std::string const& sg, std::string const& mode, std::string const& action, std::ostream& out) {
      auto const s = load_semigroup(sg);
      Json       j = report("compare");
      j["mode"]    = mode;
      auto const g = action.empty() ? trivial_action(s.semigroup) : load_action(s, action);
      if (mode == "au") {
        // with an action, AU of the dynamical quotient
        auto const                q     = dyn_quotient(s.semigroup, g);
        bool const                plain = action.empty();
        std::vector<std::string> names;
        for (auto r : q.representative)
          names.push_back(s.names[r]);
        auto const au = almost_unperforated(plain ? s.semigroup : q.quotient);
        j["holds"]    = au.holds;
        if (au.witness)
          j["witness"] = au_witness(plain ? s.names : names, *au.witness);
        j["ok"] = au.holds;
        return emit(out, j, au.holds);
      }
      auto const c       = dyn_strict_comparison(s.semigroup, g);
      auto const q       = dyn_quotient(s.semigroup, g);
      std::vector<std::string> qnames;
      for (auto r : q.representative)
        qnames.push_back(s.names[r]);
      j["state_based"]   = c.state_based;
      j["au_quotient"]   = c.au_quotient;
      j["au_completion"] = c.au_completion;
      j["agree"]         = c.report.passed("agree");
      if (c.state_witness) {
        Json w;
        w["a"]                 = s.names[c.state_witness->first];
        w["b"]                 = s.names[c.state_witness->second];
        j["state_witness"]     = w;
      }
      if (c.quotient_witness)
        j["quotient_witness"] = au_witness(qnames, *c.quotient_witness);
      if (c.completion_witness)
        j["completion_witness"] = (*c.completion_witness);
      j["checks"] = checks_json(c.report);
      bool const ok = c.state_based && c.report.ok();
      j["ok"]       = ok;
      return emit(out, j, ok);
    }

    std::map<std::string, int> const suites = {
        {"oracle", 1},     {"minimality", 2}, {"fundamental", 3}, {"flagship", 4}, {"galois", 5},
        {"dyn-ideals", 6}, {"completion", 7}, {"comparison", 8},  {"transfer", 9}};

    std::vector<int> suite_ids(std::string const& name) {
      if (name == "all")
        return {1, 2, 3, 4, 5, 6, 7, 8, 9};
      if (auto it = suites.find(name); it != suites.end())
        return {it->second};
      if (name.size() == 1 && name[0] >= '1' && name[0] <= '9')
        return {name[0] - '0'};
      fail("E_USAGE", "unknown suite \"" + name + "\"");
    }

    std::vector<fs::path> fixture_files(std::string const& dir) {
      std::vector<fs::path> files;
      for (auto const& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json")
          files.push_back(e.path());
      std::sort(files.begin(), files.end());
      return files;
    }

    bool round_trips(fs::path const& p) {
      std::ifstream      in(p);
      std::ostringstream text;
      text << in.rdbuf();
      try {
        return serialize(parse(text.str())) == text.str();
      } catch (CliError const&) {
        return false;
      }
    }

    int cmd_check(std::string const& suite, std::string const& fixtures, std::uint64_t seed, std::ostream& out,
                  std::ostream& err) {
      auto const        ids   = suite_ids(suite);
      auto const        start = std::chrono::steady_clock::now();
      AcceptanceOptions opts;
      opts.seed = seed;
      Json        j       = report("check");
      j["suite"]          = suite;
      bool        ok      = true;
      std::size_t emitted = 0, valid = 0;
      Json        list    = Json::array();
      for (int id : ids) {
        auto const r = run_criterion(id, opts);
        err << format_result(r) << std::endl;
        Json c;
        c["id"]     = r.id;
        c["title"]  = r.title;
        c["passed"] = r.passed;
        c["detail"] = r.detail;
        Json ws     = Json::array();
        for (auto const& w : r.witnesses) {
          ws.push_back(witness_json(w));
          ++emitted;
          valid += revalidate(witness_from_json(ws.back()));
        }
        c["witnesses"] = std::move(ws);
        list.push_back(std::move(c));
        ok = ok && r.passed;
      }
      j["criteria"]          = std::move(list);
      j["witnesses_emitted"] = emitted;
      j["witnesses_valid"]   = valid;
      ok                     = ok && valid == emitted;
      if (!fixtures.empty()) {
        Json files = Json::array();
        for (auto const& p : fixture_files(fixtures)) {
          Json f;
          f["file"]       = p.filename().string();
          f["round_trip"] = round_trips(p);
          ok              = ok && f["round_trip"].get<bool>();
          files.push_back(std::move(f));
        }
        j["fixtures"] = std::move(files);
      }
      double const seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      err << "suite " << suite << ": " << seconds << " s" << std::endl;
      if (suite == "all" && seconds >= limits::suite_seconds) {
        ok               = false;
        j["over_budget"] = true;
      }
      j["ok"] = ok;
      return emit(out, j, ok);
    }

    int cmd_fixture(std::string const& spec, std::ostream& out) {
      Named n;
      try {
        n = make_fixture(spec);
      } catch (std::invalid_argument const& e) {
        fail("E_USAGE", e.what());
      }
      out << serialize(document_of(n.semigroup, n.names));
      return 0;
    }

  }  // namespace

  Json witness_json(Witness const& w) {
    Json j;
    j["kind"] = w.kind;
    Json src;
    src["spec"]     = w.source.spec;
    src["side"]     = w.source.side;
    src["sigmas"]   = w.source.sigmas;
    j["source"]     = std::move(src);
    j["elements"]   = w.elements;
    return j;
  }

  Witness witness_from_json(Json const& j) {
    try {
      Witness w;
      w.kind          = j.at("kind").get<std::string>();
      w.source.spec   = j.at("source").at("spec").get<std::string>();
      w.source.side   = j.at("source").at("side").get<std::size_t>();
      w.source.sigmas = j.at("source").at("sigmas").get<std::vector<Permutation>>();
      w.elements      = j.at("elements").get<std::vector<std::size_t>>();
      return w;
    } catch (Json::exception const& e) {
      fail("E_SCHEMA", std::string("malformed witness: ") + e.what());
    }
  }

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite W-semigroup engine", "ordcalc"};
    app.require_subcommand(1);

    std::string file, seed_file, pair_file, ideal, action, unit, mode, suite, fixtures, spec;
    bool        all = false, invariant = false;
    std::uint64_t seed = AcceptanceOptions{}.seed;

    auto* validate = app.add_subcommand("validate", "check a document against the axioms");
    validate->add_option("file", file)->required();

    auto* gen = app.add_subcommand("gen", "generate the normal pair of a seed relation");
    gen->add_option("semigroup", file)->required();
    gen->add_option("--seed", seed_file)->required();

    auto* quot = app.add_subcommand("quotient", "quotient by a pair or by a closed ideal");
    quot->add_option("semigroup", file)->required();
    auto* by_pair  = quot->add_option("--pair", pair_file);
    auto* by_ideal = quot->add_option("--ideal", ideal, "comma separated generators");
    by_pair->excludes(by_ideal);

    auto* dynq = app.add_subcommand("dyn-quotient", "quotient by a group action");
    dynq->add_option("semigroup", file)->required();
    dynq->add_option("--action", action)->required();

    auto* ids = app.add_subcommand("ideals", "list closed ideals");
    ids->add_option("semigroup", file)->required();
    ids->add_flag("--all", all, "include ideals that are not closed");
    ids->add_flag("--invariant", invariant);
    ids->add_option("--action", action);

    auto* comp = app.add_subcommand("complete", "round-ideal completion");
    comp->add_option("semigroup", file)->required();

    auto* fun = app.add_subcommand("functionals", "extreme functionals");
    fun->add_option("semigroup", file)->required();
    fun->add_option("--unit", unit);
    fun->add_option("--action", action);

    auto* cmp = app.add_subcommand("compare", "almost unperforation or dynamical strict comparison");
    cmp->add_option("semigroup", file)->required();
    cmp->add_option("--mode", mode)->required()->check(CLI::IsMember({"au", "dsc"}));
    cmp->add_option("--action", action);

    auto* chk = app.add_subcommand("check", "run acceptance suites");
    chk->add_option("--suite", suite)->required();
    chk->add_option("--fixtures", fixtures, "directory of fixture files to round-trip")->check(CLI::ExistingDirectory);
    chk->add_option("--seed", seed);

    auto* fix = app.add_subcommand("fixture", "print a built-in fixture as a document");
    fix->add_option("spec", spec)->required();

    std::vector<std::string> argv_store{"ordcalc"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char const*> argv;
    for (auto const& a : argv_store)
      argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return 2;
    }

    try {
      if (*validate)
        return cmd_validate(file, out);
      if (*gen)
        return cmd_gen(file, seed_file, out);
      if (*quot)
        return cmd_quotient(file, pair_file, ideal, out);
      if (*dynq)
        return cmd_dyn_quotient(file, action, out);
      if (*ids)
        return cmd_ideals(file, all, invariant, action, out);
      if (*comp)
        return cmd_complete(file, out);
      if (*fun)
        return cmd_functionals(file, unit, action, out);
      if (*cmp)
        return cmd_compare(file, mode, action, out);
      if (*chk)
        return cmd_check(suite, fixtures, seed, out, err);
      return cmd_fixture(spec, out);
    } catch (CliError const& e) {
      err << "error " << e.code() << ": " << e.what() << std::endl;
      return 2;
    } catch (PreconditionError const& e) {
      Json j       = report(app.get_subcommands().front()->get_name());
      j["error"]   = e.what();
      j["witness"] = e.witness();
      j["ok"]      = false;
      err << "precondition failed: " << e.what() << std::endl;
      return emit(out, j, false);
    } catch (BudgetExceeded const& e) {
      err << "error E_BUDGET: " << e.what() << " (raise ORDCALC_BUDGET)" << std::endl;
      return 2;
    } catch (std::exception const& e) {
      err << "error: " << e.what() << std::endl;
      return 2;
    }
  }

  CriterionResult run_cli_criterion(std::string const& fixture_dir) {
    auto const      start = std::chrono::steady_clock::now();
    CriterionResult r{10, "command line", true, {}, 0, {}};
    std::vector<std::string> problems;
    auto expect = [&](bool ok, std::string const& what) {
      if (!ok)
        problems.push_back(what);
    };
    auto path = [&](char const* name) { return (fs::path(fixture_dir) / name).string(); };

    try {
      std::ostringstream out, err;
      auto const         t0   = std::chrono::steady_clock::now();
      int const          code = run({"check", "--suite", "all", "--fixtures", fixture_dir}, out, err);
      double const suite_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      expect(code == 0, "check --suite all exited with " + std::to_string(code));
      expect(suite_s < limits::suite_seconds, "check --suite all over the time budget");

      auto const  j       = Json::parse(out.str());
      std::size_t witnesses = 0;
      for (auto const& c : j["criteria"])
        for (auto const& w : c["witnesses"]) {
          ++witnesses;
          expect(revalidate(witness_from_json(w)), "witness does not re-validate: " + w.dump());
        }
      expect(witnesses > 0, "no witnesses emitted");

      std::size_t files = 0;
      for (auto const& p : fixture_files(fixture_dir)) {
        ++files;
        expect(round_trips(p), p.filename().string() + " does not round-trip");
        auto const doc = read_document(p.string());
        if (std::holds_alternative<SemigroupDoc>(doc)) {
          std::ostringstream o, e;
          expect(run({"validate", p.string()}, o, e) == 0, "validate " + p.filename().string());
        }
      }

      std::ostringstream o1, e1;
      int const          au = run({"compare", path("nbar2.json"), "--mode", "au"}, o1, e1);
      auto const         aj = Json::parse(o1.str());
      auto const         s  = resolve("nbar2.json", fixture_dir);
      expect(au == 1 && aj["witness"]["a"] == "2" && aj["witness"]["b"] == "1" && aj["witness"]["k"] == 2,
             "compare --mode au on NBAR(2)");
      expect(is_au_violation(s.semigroup, s.index(aj["witness"]["a"].get<std::string>()),
                             s.index(aj["witness"]["b"].get<std::string>()), aj["witness"]["k"].get<std::size_t>()),
             "AU witness does not re-validate");

      std::ostringstream o2, e2;
      int const  dq = run({"dyn-quotient", path("nbar2sq.json"), "--action", path("swap.json")}, o2, e2);
      auto const q  = bind(std::get<SemigroupDoc>(parse(Json::parse(o2.str())["quotient"].dump())));
      expect(dq == 0 && q.semigroup.size() == 3 && find_isomorphism(q.semigroup, nbar(2).semigroup).map,
             "dyn-quotient of NBAR(2)^2 by the swap");

      std::ostringstream o3, e3;
      run({"check", "--suite", "all", "--fixtures", fixture_dir}, o3, e3);
      expect(o3.str() == out.str(), "check report differs between runs");

      r.detail = std::to_string(files) + " fixture files, " + std::to_string(witnesses) + " witnesses, suite " +
                 std::to_string(static_cast<int>(suite_s * 1000)) + " ms";
    } catch (std::exception const& e) {
      problems.push_back(std::string("exception: ") + e.what());
    }
    r.passed = problems.empty();
    if (!problems.empty())
      r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(problems.size()) + " problems; first: " + problems[0];
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

}  // namespace ordcalc::cli
