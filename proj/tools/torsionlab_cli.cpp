// Command line front end. Exit codes: 0 all checks passed, 1 a mathematical
// claim failed (witnesses in the report), 2 unusable input or usage error.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "torsionlab/errors.hpp"
#include "torsionlab/json_io.hpp"

namespace {

using namespace torsionlab;

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::MalformedSpec:
    case ErrorKind::AxiomViolation:
    case ErrorKind::MissingAction:
    case ErrorKind::IncompatibleActions:
    case ErrorKind::NotAnIdeal:
    case ErrorKind::TooManyIdeals:
    case ErrorKind::NotNested:
    case ErrorKind::SearchSpaceTooLarge:
    case ErrorKind::FormulaInapplicable:
      return 2;
    default:
      return 1;
  }
}

ExtensionStrategy strategy_from_string(const std::string& s) {
  if (s == "auto") return ExtensionStrategy::Auto;
  if (s == "formula") return ExtensionStrategy::Formula;
  if (s == "search") return ExtensionStrategy::Search;
  fail(ErrorKind::MalformedSpec, "unknown strategy: " + s);
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

struct Options {
  std::string ring_path;
  std::string side = "right";
  std::string filter, filter2;
  std::string left, right, left2, right2;
  std::string module_path, module_derivation_path;
  std::string derivation_path;
  std::string strategy = "auto";
  std::vector<std::string> suites;
  int max_ideals = 16;
  bool timings = false;
};

FiniteModule bimodule_or_file(const RingPtr& R, const std::string& path) {
  if (path.empty()) {
    FiniteModule M = ring_as_bimodule(R);
    M.name = "R";
    return M;
  }
  FiniteModule M = load_module(path, R);
  if (!M.has_right() || !M.has_left())
    fail(ErrorKind::MissingAction,
         "symmetric operations need act_right and act_left");
  return M;
}

SymmetricFilter sym_filter(const SymContextPtr& ctx, const std::string& combined,
                           const std::string& left, const std::string& right) {
  if (!combined.empty()) {
    if (!left.empty() || !right.empty())
      fail(ErrorKind::MalformedSpec,
           "give either --filter or --left/--right, not both");
    return symmetric_filter_from_spec(ctx, combined);
  }
  if (left.empty() || right.empty())
    fail(ErrorKind::MalformedSpec,
         "a symmetric filter needs --left and --right (or --filter)");
  return induce_symmetric_filter(ctx,
                                 filter_from_spec(ctx->R, Side::Left, left),
                                 filter_from_spec(ctx->R, Side::Right, right));
}

int cmd_analyze(const Options& o) {
  emit(analysis_json(load_ring(o.ring_path)));
  return 0;
}

int cmd_quotient(const Options& o) {
  RingPtr R = load_ring(o.ring_path);
  Side side = side_from_string(o.side);
  GabrielFilter F = filter_from_spec(R, side, o.filter);
  if (!o.module_path.empty()) {
    FiniteModule M = load_module(o.module_path, R);
    emit(quotient_report_json(module_of_quotients(F, M), std::nullopt));
  } else {
    emit(ring_quotient_report_json(ring_of_quotients(F)));
  }
  return 0;
}

int cmd_extend(const Options& o) {
  RingPtr R = load_ring(o.ring_path);
  Side side = side_from_string(o.side);
  GabrielFilter F = filter_from_spec(R, side, o.filter);
  Derivation delta = load_derivation(o.derivation_path, R->n);
  ExtensionStrategy strat = strategy_from_string(o.strategy);
  if (!o.module_path.empty()) {
    if (o.module_derivation_path.empty())
      fail(ErrorKind::MalformedSpec, "--module also needs --module-derivation");
    FiniteModule M = load_module(o.module_path, R);
    Derivation d = load_derivation(o.module_derivation_path, M.size);
    ExtensionResult E =
        extend_derivation(module_of_quotients(F, M), delta, d, strat);
    emit(extension_report_json(E));
    return E.found && E.commutes && E.law_ok ? 0 : 1;
  }
  RingExtensionResult E = extend_ring_derivation(ring_of_quotients(F), delta, strat);
  emit(ring_extension_report_json(E));
  return E.ext.found && E.ext.commutes && E.leibniz ? 0 : 1;
}

int cmd_agree(const Options& o) {
  RingPtr R = load_ring(o.ring_path);
  Side side = side_from_string(o.side);
  GabrielFilter F1 = filter_from_spec(R, side, o.filter);
  GabrielFilter F2 = filter_from_spec(R, side, o.filter2);
  Derivation delta = load_derivation(o.derivation_path, R->n);
  FiniteModule M;
  Derivation d;
  if (!o.module_path.empty()) {
    if (o.module_derivation_path.empty())
      fail(ErrorKind::MalformedSpec, "--module also needs --module-derivation");
    M = load_module(o.module_path, R);
    d = load_derivation(o.module_derivation_path, M.size);
  } else {
    M = one_sided_ring_module(R, side);
    M.name = "R";
    d = delta;
  }
  AgreementReport A = check_agreement(module_of_quotients(F1, M),
                                      module_of_quotients(F2, M), delta, d,
                                      enumerate_derivations(*R));
  emit(agreement_report_json(A));
  return A.all_agree ? 0 : 1;
}

int cmd_census(const Options& o) {
  RunOptions opt;
  opt.max_ideals = o.max_ideals;
  emit(census_json(run_census(load_ring(o.ring_path), opt)));
  return 0;
}

int cmd_verify(const Options& o) {
  RunOptions opt;
  opt.max_ideals = o.max_ideals;
  opt.timings = o.timings;
  std::vector<SuiteReport> reps = run_verify(load_ring(o.ring_path), opt, o.suites);
  Json arr = Json::array();
  int fails = 0;
  for (const SuiteReport& r : reps) {
    arr.push_back(suite_report_json(r, o.timings));
    fails += r.fail;
  }
  emit(arr);
  return fails == 0 ? 0 : 1;
}

int cmd_sym_quotient(const Options& o) {
  RingPtr R = load_ring(o.ring_path);
  SymContextPtr ctx = make_symmetric_context(R);
  SymmetricFilter SF = sym_filter(ctx, o.filter, o.left, o.right);
  if (!o.module_path.empty()) {
    FiniteModule M = bimodule_or_file(R, o.module_path);
    emit(symmetric_quotient_report_json(symmetric_module_of_quotients(SF, M)));
  } else {
    emit(symmetric_ring_report_json(symmetric_ring_of_quotients(SF)));
  }
  return 0;
}

int cmd_sym_extend(const Options& o) {
  RingPtr R = load_ring(o.ring_path);
  SymContextPtr ctx = make_symmetric_context(R);
  SymmetricFilter SF = sym_filter(ctx, o.filter, o.left, o.right);
  Derivation delta = load_derivation(o.derivation_path, R->n);
  ExtensionStrategy strat = strategy_from_string(o.strategy);
  if (!o.module_path.empty()) {
    if (o.module_derivation_path.empty())
      fail(ErrorKind::MalformedSpec, "--module also needs --module-derivation");
    FiniteModule M = bimodule_or_file(R, o.module_path);
    Derivation d = load_derivation(o.module_derivation_path, M.size);
    SymmetricExtension E = extend_symmetric_derivation(
        symmetric_module_of_quotients(SF, M), delta, d, strat);
    emit(symmetric_extension_report_json(E));
    return E.ext.found && E.ext.commutes && E.two_sided_law ? 0 : 1;
  }
  SymmetricRingExtension E =
      extend_symmetric_ring_derivation(symmetric_ring_of_quotients(SF), delta, strat);
  Json j = symmetric_extension_report_json(E.ext);
  j["leibniz"] = E.leibniz;
  emit(j);
  return E.ext.ext.found && E.ext.ext.commutes && E.leibniz ? 0 : 1;
}

int cmd_sym_agree(const Options& o) {
  RingPtr R = load_ring(o.ring_path);
  SymContextPtr ctx = make_symmetric_context(R);
  SymmetricFilter SF1 = sym_filter(ctx, o.filter, o.left, o.right);
  SymmetricFilter SF2 = sym_filter(ctx, o.filter2, o.left2, o.right2);
  Derivation delta = load_derivation(o.derivation_path, R->n);
  FiniteModule M;
  Derivation d;
  if (!o.module_path.empty()) {
    if (o.module_derivation_path.empty())
      fail(ErrorKind::MalformedSpec, "--module also needs --module-derivation");
    M = bimodule_or_file(R, o.module_path);
    d = load_derivation(o.module_derivation_path, M.size);
  } else {
    M = bimodule_or_file(R, "");
    d = delta;
  }
  SymmetricAgreementReport A = check_symmetric_agreement(
      SF1, SF2, M, delta, d, enumerate_derivations(*R));
  emit(symmetric_agreement_report_json(A));
  return A.over_T.all_agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  if (const char* env = std::getenv("TORSIONLAB_MAX_IDEALS")) {
    int v = std::atoi(env);
    if (v > 0) o.max_ideals = v;
  }

  CLI::App app{"laboratory for torsion filters, localizations, and derivation "
               "transport over finite rings"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-ideals", o.max_ideals,
                 "bound on enumerated ideals per side")
      ->capture_default_str();

  int rc = 0;
  auto ring_opt = [&](CLI::App* c) {
    c->add_option("--ring", o.ring_path, "ring JSON file")->required();
  };
  auto side_opt = [&](CLI::App* c) {
    c->add_option("--side", o.side, "right or left")->capture_default_str();
  };

  CLI::App* analyze = app.add_subcommand("analyze", "ring structure summary");
  ring_opt(analyze);
  analyze->callback([&] { rc = cmd_analyze(o); });

  CLI::App* quotient =
      app.add_subcommand("quotient", "module or ring of quotients at a filter");
  ring_opt(quotient);
  side_opt(quotient);
  quotient->add_option("--filter", o.filter, "filter spec")->required();
  quotient->add_option("--module", o.module_path, "module JSON file");
  quotient->callback([&] { rc = cmd_quotient(o); });

  CLI::App* extend =
      app.add_subcommand("extend", "extend a derivation to the localization");
  ring_opt(extend);
  side_opt(extend);
  extend->add_option("--filter", o.filter, "filter spec")->required();
  extend->add_option("--derivation", o.derivation_path, "ring derivation JSON")
      ->required();
  extend->add_option("--module", o.module_path, "module JSON file");
  extend->add_option("--module-derivation", o.module_derivation_path,
                     "module derivation JSON");
  extend->add_option("--strategy", o.strategy, "auto, formula, or search")
      ->capture_default_str();
  extend->callback([&] { rc = cmd_extend(o); });

  CLI::App* agree =
      app.add_subcommand("agree", "compare extensions at two nested filters");
  ring_opt(agree);
  side_opt(agree);
  agree->add_option("--filter1", o.filter, "smaller filter spec")->required();
  agree->add_option("--filter2", o.filter2, "larger filter spec")->required();
  agree->add_option("--derivation", o.derivation_path, "ring derivation JSON")
      ->required();
  agree->add_option("--module", o.module_path, "module JSON file");
  agree->add_option("--module-derivation", o.module_derivation_path,
                    "module derivation JSON");
  agree->callback([&] { rc = cmd_agree(o); });

  CLI::App* census = app.add_subcommand(
      "census", "classify every enumerated filter against every derivation");
  ring_opt(census);
  census->callback([&] { rc = cmd_census(o); });

  CLI::App* verify =
      app.add_subcommand("verify", "run the property suites against a ring");
  ring_opt(verify);
  verify->add_option("--suite", o.suites, "suite name (repeatable; default all)");
  verify->add_flag("--timings", o.timings, "include wall-clock fields");
  verify->callback([&] { rc = cmd_verify(o); });

  CLI::App* sym = app.add_subcommand(
      "symmetric", "two-sided variants over the enveloping ring");
  sym->require_subcommand(1);
  sym->fallthrough();

  auto sym_filter_opts = [&](CLI::App* c) {
    c->add_option("--filter", o.filter, "symmetric filter spec");
    c->add_option("--left", o.left, "left filter spec");
    c->add_option("--right", o.right, "right filter spec");
  };

  CLI::App* symq = sym->add_subcommand("quotient", "symmetric localization");
  ring_opt(symq);
  sym_filter_opts(symq);
  symq->add_option("--module", o.module_path, "bimodule JSON file");
  symq->callback([&] { rc = cmd_sym_quotient(o); });

  CLI::App* syme =
      sym->add_subcommand("extend", "extend a derivation symmetrically");
  ring_opt(syme);
  sym_filter_opts(syme);
  syme->add_option("--derivation", o.derivation_path, "ring derivation JSON")
      ->required();
  syme->add_option("--module", o.module_path, "bimodule JSON file");
  syme->add_option("--module-derivation", o.module_derivation_path,
                   "bimodule derivation JSON");
  syme->add_option("--strategy", o.strategy, "auto, formula, or search")
      ->capture_default_str();
  syme->callback([&] { rc = cmd_sym_extend(o); });

  CLI::App* syma = sym->add_subcommand(
      "agree", "compare symmetric extensions at two nested pairs");
  ring_opt(syma);
  syma->add_option("--filter1", o.filter, "first symmetric filter spec");
  syma->add_option("--left1", o.left, "first left filter spec");
  syma->add_option("--right1", o.right, "first right filter spec");
  syma->add_option("--filter2", o.filter2, "second symmetric filter spec");
  syma->add_option("--left2", o.left2, "second left filter spec");
  syma->add_option("--right2", o.right2, "second right filter spec");
  syma->add_option("--derivation", o.derivation_path, "ring derivation JSON")
      ->required();
  syma->add_option("--module", o.module_path, "bimodule JSON file");
  syma->add_option("--module-derivation", o.module_derivation_path,
                   "bimodule derivation JSON");
  syma->callback([&] { rc = cmd_sym_agree(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const torsionlab::Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  return rc;
}
