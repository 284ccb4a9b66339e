#pragma once

// Command-line front end over the text format. run_cli is the whole
// tool; the binary's main() only forwards argv and the exit code.
//
// Exit codes: 0 all checks passed, 1 a law check failed (report on the
// output stream), 2 input error (unreadable file, parse error, missing
// names, exceeded saturation bounds). Never throws on malformed input.

#include <fstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "fincat/monoidal.hpp"
#include "fincat/presentation.hpp"
#include "fincat/yoneda.hpp"

namespace fincat {

namespace detail {

inline nlohmann::json report_json(const std::string& item, const LawReport& r) {
  nlohmann::json v = nlohmann::json::array();
  for (const Violation& x : r.violations)
    v.push_back({{"law", x.law}, {"where", x.where}, {"description", x.description}});
  return {{"item", item}, {"passed", r.passed}, {"violations", v}};
}

struct ReportSink {
  bool json = false;
  std::ostream& out;
  nlohmann::json items = nlohmann::json::array();
  bool all_passed = true;

  void add(const std::string& item, const LawReport& r) {
    all_passed = all_passed && r.passed;
    if (json) {
      items.push_back(report_json(item, r));
    } else {
      out << item << ": " << (r.passed ? "all laws hold" : r.summary()) << "\n";
    }
  }
  void note(const std::string& item, const std::string& msg) {
    if (json) {
      items.push_back({{"item", item}, {"note", msg}});
    } else {
      out << item << ": " << msg << "\n";
    }
  }
  int finish() {
    if (json) out << items.dump(2) << "\n";
    return all_passed ? 0 : 1;
  }
};

inline bool limits_agree(const LimitData& A, const LimitData& B) {
  auto m = limit_mediator(A, B.cone);
  auto n = limit_mediator(B, A.cone);
  if (!m || !n) return false;
  const FinCategory& C = A.cone.diagram.target;
  return equiv(C, compose(C, *m, *n), C.id(A.cone.apex)) &&
         equiv(C, compose(C, *n, *m), C.id(B.cone.apex));
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out) {
  CLI::App app{"finite category toolkit"};
  app.require_subcommand(1);
  std::string file, diagram_name, object_name, category_name;
  std::string left_name, right_name, unit_name, counit_name;
  SaturationConfig cfg;
  int probe_size = 3;
  bool json = false;
  auto common = [&](CLI::App* s) {
    s->add_option("file", file, "input file")->required();
    s->add_option("--max-arrows", cfg.max_arrows, "saturation class bound");
    s->add_option("--max-word-len", cfg.max_word_length, "saturation word-length bound");
    s->add_option("--probe-size", probe_size, "probe bound for universality scans");
    s->add_flag("--json", json, "machine-readable law reports");
    return s;
  };
  CLI::App* c_check = common(app.add_subcommand("check", "run all applicable law checks"));
  CLI::App* c_op = common(app.add_subcommand("op-test", "duality round-trip checks"));
  CLI::App* c_limits = common(app.add_subcommand("limits", "survey terminal/initial/products/equalizers"));
  CLI::App* c_limit = common(app.add_subcommand("limit", "constructive limit vs brute-force oracle"));
  c_limit->add_option("--diagram", diagram_name, "declared diagram/functor name")->required();
  CLI::App* c_yoneda = common(app.add_subcommand("yoneda", "representable-hom bijection checks"));
  c_yoneda->add_option("--object", object_name, "object to evaluate at")->required();
  c_yoneda->add_option("--category", category_name, "category name (optional when unique)");
  CLI::App* c_mon = common(app.add_subcommand("monoidal-check", "cartesian monoidal coherence"));
  CLI::App* c_adj = common(app.add_subcommand("adjoint-check", "triangle identities and hom bijection"));
  c_adj->add_option("--left", left_name, "left adjoint functor name")->required();
  c_adj->add_option("--right", right_name, "right adjoint functor name")->required();
  c_adj->add_option("--unit", unit_name, "unit transformation name")->required();
  c_adj->add_option("--counit", counit_name, "counit transformation name")->required();
  CLI::App* c_explain = common(app.add_subcommand("explain", "human-readable summary"));

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    out << "argument error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::ifstream in(file);
    if (!in) {
      out << "cannot open '" << file << "'\n";
      return 2;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    Document doc = parse(buf.str());
    detail::ReportSink sink{json, out};

    if (c_check->parsed()) {
      bool cats_ok = true;
      for (const Presentation& p : doc.categories) {
        try {
          elaborate_category(p, cfg);
          LawReport ok;
          sink.add("category " + p.name, ok);
        } catch (const ElaborationError& e) {
          sink.add("category " + p.name, e.report);
          cats_ok = false;
        }
      }
      if (cats_ok && (!doc.functors.empty() || !doc.nats.empty())) {
        ElaboratedDoc ed = elaborate_document(doc, cfg);
        for (const auto& [name, F] : ed.functors) sink.add("functor " + name, check_functor(F));
        for (const auto& [name, t] : ed.nats) sink.add("nat " + name, check_natural(t));
      }
      return sink.finish();
    }

    if (c_op->parsed()) {
      for (const Presentation& p : doc.categories) {
        FinCategory C = elaborate_category(p, cfg);
        LawReport r;
        if (!(op(op(C)) == C))
          r.add("op-involution", {}, "op(op(C)) is not structurally identical to C");
        if (auto t = find_terminal(C)) {
          if (!(initial_to_terminal_op(terminal_to_initial_op(*t)) == *t))
            r.add("terminal-initial-roundtrip", {t->object}, "witness round-trip changed data");
          auto i = find_initial(op(C));
          if (!i || !(*i == terminal_to_initial_op(*t)))
            r.add("terminal-initial-roundtrip", {t->object},
                  "initial witness of op(C) does not mirror the terminal witness");
        }
        if (auto i = find_initial(C))
          if (!(terminal_to_initial_op(initial_to_terminal_op(*i)) == *i))
            r.add("terminal-initial-roundtrip", {i->object}, "witness round-trip changed data");
        FinFunctor idc = id_functor(C);
        if (!(op_functor(op_functor(idc)) == idc))
          r.add("op-functor-involution", {}, "op_functor applied twice changed the functor");
        sink.add("category " + p.name, r);
      }
      return sink.finish();
    }

    if (c_limits->parsed()) {
      for (const Presentation& p : doc.categories) {
        FinCategory C = elaborate_category(p, cfg);
        std::ostringstream os;
        auto t = find_terminal(C);
        auto i = find_initial(C);
        os << "terminal " << (t ? C.objects[t->object] : std::string("absent")) << ", initial "
           << (i ? C.objects[i->object] : std::string("absent"));
        int prods = 0, pairs = 0, eqs = 0, parallels = 0;
        for (ObjIx a = 0; a < C.num_objects(); ++a)
          for (ObjIx b = a; b < C.num_objects(); ++b) {
            ++pairs;
            if (find_product(C, a, b)) ++prods;
          }
        for (ArrIx f = 0; f < C.num_arrows(); ++f)
          for (ArrIx g = f + 1; g < C.num_arrows(); ++g) {
            if (!C.parallel(f, g)) continue;
            ++parallels;
            if (find_equalizer(C, f, g)) ++eqs;
          }
        os << ", products " << prods << "/" << pairs << ", equalizers " << eqs << "/" << parallels;
        sink.note("category " + p.name, os.str());
      }
      return sink.finish();
    }

    if (c_limit->parsed()) {
      ElaboratedDoc ed = elaborate_document(doc, cfg);
      const FinFunctor& D = ed.functor_named(diagram_name);
      std::optional<LimitData> constructive;
      std::string missing;
      try {
        constructive = limit_from_products_equalizers(D);
      } catch (const MissingStructureError& e) {
        missing = e.what();
      }
      std::optional<LimitData> oracle = brute_force_limit(D);
      if (constructive && oracle) {
        if (detail::limits_agree(*constructive, *oracle)) {
          out << "constructive == oracle up to iso (apex "
              << D.target.objects[constructive->cone.apex] << ")\n";
          return 0;
        }
        out << "constructive and oracle limits disagree\n";
        return 1;
      }
      if (!constructive && oracle) {
        out << "constructive limit unavailable (" << missing << "); oracle limit exists at "
            << D.target.objects[oracle->cone.apex] << "\n";
        return 0;
      }
      if (constructive && !oracle) {
        out << "constructive limit found but the oracle found none\n";
        return 1;
      }
      out << "no limit\n";
      return 0;
    }

    if (c_yoneda->parsed()) {
      if (category_name.empty()) {
        if (doc.categories.size() != 1) {
          out << "--category required: the file declares " << doc.categories.size()
              << " categories\n";
          return 2;
        }
        category_name = doc.categories.front().name;
      }
      const Presentation* chosen = nullptr;
      for (const Presentation& p : doc.categories)
        if (p.name == category_name) chosen = &p;
      if (!chosen) {
        out << "unknown category '" << category_name << "'\n";
        return 2;
      }
      FinCategory C = elaborate_category(*chosen, cfg);
      ObjIx X = detail::label_ix(C.objects, object_name, "object");
      for (ObjIx Z = 0; Z < C.num_objects(); ++Z)
        sink.add("y(" + C.objects[Z] + ") at " + object_name,
                 yoneda_check(C, representable(C, Z), X));
      return sink.finish();
    }

    if (c_mon->parsed()) {
      for (const Presentation& p : doc.categories) {
        FinCategory C = elaborate_category(p, cfg);
        try {
          MonoidalStructure M = monoidal_from_products(C);
          sink.add("category " + p.name + " (cartesian monoidal)", check_monoidal(M));
        } catch (const MissingStructureError& e) {
          sink.note("category " + p.name, std::string("not applicable: ") + e.what());
        }
      }
      return sink.finish();
    }

    if (c_adj->parsed()) {
      ElaboratedDoc ed = elaborate_document(doc, cfg);
      Adjunction A;
      A.F = ed.functor_named(left_name);
      A.G = ed.functor_named(right_name);
      bool found_unit = false, found_counit = false;
      for (const auto& [name, t] : ed.nats) {
        if (name == unit_name) {
          A.unit = t;
          found_unit = true;
        }
        if (name == counit_name) {
          A.counit = t;
          found_counit = true;
        }
      }
      if (!found_unit || !found_counit) {
        out << "unknown transformation '" << (found_unit ? counit_name : unit_name) << "'\n";
        return 2;
      }
      sink.add("adjunction " + left_name + " -| " + right_name, check_adjunction(A));
      if (sink.all_passed)
        sink.add("hom bijection naturality",
                 check_hom_iso_natural(hom_iso_of_adjunction(A)));
      return sink.finish();
    }

    if (c_explain->parsed()) {
      for (const Presentation& p : doc.categories) {
        FinCategory C = elaborate_category(p, cfg);
        int classes = C.num_arrows() == 0
                          ? 0
                          : 1 + *std::max_element(C.eq_class.begin(), C.eq_class.end());
        bool thin = true;
        for (ObjIx a = 0; a < C.num_objects() && thin; ++a)
          for (ObjIx b = 0; b < C.num_objects() && thin; ++b)
            if (static_cast<int>(hom_class_reps(C, a, b).size()) > 1) thin = false;
        out << "category " << p.name << " ("
            << (p.mode == Presentation::Mode::table ? "table" : "presented") << "): "
            << C.num_objects() << " objects, " << C.num_arrows() << " arrows in " << classes
            << " classes" << (thin ? ", thin" : "") << "\n";
        if (auto t = find_terminal(C)) out << "  terminal object: " << C.objects[t->object] << "\n";
        if (auto i = find_initial(C)) out << "  initial object: " << C.objects[i->object] << "\n";
      }
      for (const FunctorDecl& f : doc.functors)
        out << (f.diagram ? "diagram " : "functor ") << f.name << ": " << f.source << " -> "
            << f.target << "\n";
      for (const NatDecl& n : doc.nats)
        out << "nat " << n.name << ": " << n.source << " => " << n.target << "\n";
      return 0;
    }
    out << "no subcommand\n";
    return 2;
  } catch (const ParseError& e) {
    out << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const ElaborationError& e) {
    out << e.what() << "\n";
    return 1;
  } catch (const SaturationError& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  } catch (const CatError& e) {
    out << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fincat
