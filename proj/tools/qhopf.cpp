// Command-line workbench: normal forms, completion, Hopf checks, cocycle
// calculus and the lemma verification suites.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qhopf/serialize.hpp"
#include "qhopf/su2.hpp"
#include "qhopf/verify.hpp"

namespace {

using namespace qhopf;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QHOPF_SEED"))
    return std::strtoull(env, nullptr, 10);
  return 0;
}

struct AlgebraArgs {
  std::string alg = "su2";
  int n = 2;
  int degree = 8;  // default completion bound
  std::string cache_dir;
};

void add_algebra_flags(CLI::App* cmd, AlgebraArgs& a, bool with_degree = true) {
  cmd->add_option("--alg", a.alg, "algebra: o+ | u+ | s1 | su2 | h")
      ->check(CLI::IsMember({"o+", "u+", "s1", "su2", "h"}));
  cmd->add_option("--n", a.n, "matrix size for o+/u+/h (default 2)");
  if (with_degree)
    cmd->add_option("--degree", a.degree,
                    "completion bound for the rewrite system (default 8)");
  cmd->add_option("--cache", a.cache_dir,
                  "directory for caching completed rewrite systems");
}

std::filesystem::path cache_file(const AlgebraArgs& a) {
  std::string base = a.alg;
  if (base == "o+") base = "oplus";
  if (base == "u+") base = "uplus";
  return std::filesystem::path(a.cache_dir) /
         (base + "-" + std::to_string(a.n) + "-" + std::to_string(a.degree) +
          ".json");
}

Presentation build_presentation(const AlgebraArgs& a) {
  if (!a.cache_dir.empty()) {
    std::filesystem::path f = cache_file(a);
    if (std::filesystem::exists(f)) {
      std::ifstream in(f);
      json j;
      in >> j;
      Presentation p = presentation_from_json(j);
      if (p.certified_degree() >= a.degree) return p;
    }
  }
  Presentation p = [&] {
    if (a.alg == "o+") return make_presentation(Preset::o_plus, a.n);
    if (a.alg == "u+") return make_presentation(Preset::u_plus, a.n);
    if (a.alg == "s1") return make_presentation(Preset::s1);
    if (a.alg == "su2") return make_presentation(Preset::su2);
    return make_hn(a.n).combined;
  }();
  p = complete(p, a.degree);
  if (!a.cache_dir.empty()) {
    std::filesystem::create_directories(a.cache_dir);
    std::ofstream out(cache_file(a));
    out << presentation_to_json(p).dump(2) << "\n";
  }
  return p;
}

int emit_report(const LemmaReport& rep, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(rep).dump(2) << "\n";
  } else {
    std::cout << rep.summary() << "\n";
    for (const CheckResult& c : rep.checks)
      if (!c.pass)
        std::cout << "  FAIL: " << c.description << " | " << c.counterexample
                  << "\n";
    for (const std::string& cav : rep.caveats) std::cout << "  note: " << cav << "\n";
  }
  return rep.pass() ? 0 : 1;
}

struct CocycleArgs {
  AlgebraArgs algebra;
  std::string inner_xi;
  std::string z_xi;
  std::string file;
};

void add_cocycle_flags(CLI::App* cmd, CocycleArgs& c) {
  add_algebra_flags(cmd, c.algebra);
  cmd->add_option("--inner-xi", c.inner_xi,
                  "inner cocycle a -> a.xi - eps(a) xi with this witness");
  cmd->add_option("--z-xi", c.z_xi,
                  "free-product cocycle c1*0 on h with c1(z) = xi");
  cmd->add_option("--cocycle", c.file, "cocycle JSON file {module, values}");
}

Cocycle build_cocycle(const CocycleArgs& args) {
  const AlgebraArgs& a = args.algebra;
  if (!args.z_xi.empty()) {
    if (a.alg != "h")
      throw ParameterError("--z-xi needs --alg h (the free product)");
    auto fp = std::make_shared<const FreeProductPresentation>(
        make_hn(a.n, a.degree));
    NCPoly xi = parse_expr(args.z_xi, fp->combined.alphabet());
    return make_z_cocycle(fp, xi);
  }
  auto pres = std::make_shared<const Presentation>(build_presentation(a));
  if (!args.inner_xi.empty()) {
    NCPoly xi = parse_expr(args.inner_xi, pres->alphabet());
    return inner_cocycle(xi, ModuleSpec{pres});
  }
  if (!args.file.empty()) {
    std::ifstream in(args.file);
    if (!in) throw ParameterError("cannot open cocycle file " + args.file);
    json j;
    in >> j;
    return cocycle_from_json(j, pres, pres);
  }
  throw ParameterError("need one of --inner-xi, --z-xi, --cocycle");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qhopf;
  CLI::App app{"exact noncommutative *-algebra workbench"};
  app.require_subcommand(1);

  // normalize
  AlgebraArgs norm_args;
  std::string norm_expr;
  bool norm_json = false;
  CLI::App* norm = app.add_subcommand("normalize", "rewrite to normal form");
  add_algebra_flags(norm, norm_args);
  norm->add_flag("--json", norm_json, "JSON output");
  norm->add_option("expr", norm_expr, "element expression")->required();

  // complete
  AlgebraArgs comp_args;
  bool comp_json = false;
  CLI::App* comp = app.add_subcommand("complete", "run overlap completion");
  add_algebra_flags(comp, comp_args);
  comp->add_flag("--json", comp_json, "JSON output");

  // dump-presentation
  AlgebraArgs dump_args;
  CLI::App* dump =
      app.add_subcommand("dump-presentation", "print the certified rewrite system");
  add_algebra_flags(dump, dump_args);

  // hopf-check
  AlgebraArgs hopf_args;
  int hopf_bound = 3, hopf_samples = 100;
  std::uint64_t hopf_seed = default_seed();
  bool hopf_json = false;
  CLI::App* hopf = app.add_subcommand("hopf-check", "counit and coassociativity");
  add_algebra_flags(hopf, hopf_args, false);
  hopf->add_option("--degree", hopf_bound, "element degree bound (default 3)");
  hopf->add_option("--samples", hopf_samples, "random samples (default 100)");
  hopf->add_option("--seed", hopf_seed, "RNG seed (default QHOPF_SEED or 0)");
  hopf->add_flag("--json", hopf_json, "JSON output");

  // cocycle eval|check|solve-inner
  CLI::App* coc = app.add_subcommand("cocycle", "1-cocycle calculus");
  coc->require_subcommand(1);
  CocycleArgs eval_args;
  std::string eval_expr;
  bool eval_json = false;
  CLI::App* ceval = coc->add_subcommand("eval", "Leibniz evaluation");
  add_cocycle_flags(ceval, eval_args);
  ceval->add_flag("--json", eval_json, "JSON output");
  ceval->add_option("expr", eval_expr, "element to evaluate on")->required();

  CocycleArgs check_args;
  bool check_json = false;
  CLI::App* ccheck = coc->add_subcommand("check", "relation consistency");
  add_cocycle_flags(ccheck, check_args);
  ccheck->add_flag("--json", check_json, "JSON output");

  CocycleArgs solve_args;
  int solve_bound = 4;
  bool solve_json = false;
  CLI::App* csolve = coc->add_subcommand("solve-inner", "search for an inner witness");
  add_cocycle_flags(csolve, solve_args);
  csolve->add_option("--bound", solve_bound, "witness degree bound (default 4)");
  csolve->add_flag("--json", solve_json, "JSON output");

  // domain-test
  int dt_samples = 1000, dt_max_alpha = 3, dt_max_gamma = 3;
  std::uint64_t dt_seed = default_seed();
  bool dt_json = false;
  CLI::App* dt = app.add_subcommand("domain-test", "zero-divisor hunt in SU_{-1}(2)");
  dt->add_option("--samples", dt_samples, "sample pairs (default 1000)");
  dt->add_option("--seed", dt_seed, "RNG seed (default QHOPF_SEED or 0)");
  dt->add_option("--max-alpha", dt_max_alpha, "degree box |i| bound");
  dt->add_option("--max-gamma", dt_max_gamma, "degree box j+k bound");
  dt->add_flag("--json", dt_json, "JSON output");

  // verify
  std::string lemma;
  int v_n = 2, v_degree = 4, v_tables = 20;
  std::uint64_t v_seed = default_seed();
  std::string v_xi = "z";
  bool v_json = false;
  CLI::App* ver = app.add_subcommand("verify", "lemma verification suites");
  ver->add_option("lemma", lemma,
                  "alpha-automorphism | c-plus-c | relate-cocycles | extension "
                  "| determination")
      ->required()
      ->check(CLI::IsMember({"alpha-automorphism", "c-plus-c", "relate-cocycles",
                             "extension", "determination"}));
  ver->add_option("--n", v_n, "matrix size (default 2)");
  ver->add_option("--seed", v_seed, "RNG seed (default QHOPF_SEED or 0)");
  ver->add_option("--degree", v_degree, "degree bound for c-plus-c (default 4)");
  ver->add_option("--tables", v_tables, "value tables for determination");
  ver->add_option("--xi", v_xi, "module element for relate-cocycles/extension");
  ver->add_flag("--json", v_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? 0 : 2;
  }

  try {
    if (*norm) {
      Presentation p = build_presentation(norm_args);
      NCPoly in = parse_expr(norm_expr, p.alphabet());
      NFResult r = normal_form_checked(in, p);
      if (!r.certified)
        std::cerr << "warning: degree exceeds the certified bound "
                  << p.certified_degree()
                  << "; reduction performed, uniqueness not certified\n";
      if (norm_json)
        std::cout << json{{"input", norm_expr},
                          {"normal_form", poly_to_json(r.value)},
                          {"text", to_string(r.value)},
                          {"certified", r.certified}}
                         .dump(2)
                  << "\n";
      else
        std::cout << to_string(r.value) << "\n";
      return 0;
    }
    if (*comp) {
      Presentation p = build_presentation(comp_args);
      if (comp_json)
        std::cout << json{{"name", p.name()},
                          {"n", p.n()},
                          {"rules", p.rules().size()},
                          {"certified_degree", p.certified_degree()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << p.name() << ": " << p.rules().size()
                  << " rules, certified to degree " << p.certified_degree()
                  << "\n";
      return 0;
    }
    if (*dump) {
      Presentation p = build_presentation(dump_args);
      std::cout << presentation_to_json(p).dump(2) << "\n";
      return 0;
    }
    if (*hopf) {
      AlgebraArgs a = hopf_args;
      a.degree = 2 * hopf_bound;
      auto pres = std::make_shared<const Presentation>(build_presentation(a));
      HopfStructure H = make_hopf(pres);
      LemmaReport wd = hopf_well_defined(H);
      LemmaReport ax = check_hopf_axioms(H, hopf_bound, hopf_samples, hopf_seed);
      if (hopf_json) {
        std::cout << json{{"well_defined", report_to_json(wd)},
                          {"axioms", report_to_json(ax)},
                          {"pass", wd.pass() && ax.pass()}}
                         .dump(2)
                  << "\n";
      } else {
        std::cout << wd.summary() << "\n" << ax.summary() << "\n";
      }
      return (wd.pass() && ax.pass()) ? 0 : 1;
    }
    if (*ceval) {
      Cocycle c = build_cocycle(eval_args);
      NCPoly in = parse_expr(eval_expr, c.domain().alphabet());
      NCPoly out = c.eval(in);
      if (eval_json)
        std::cout << json{{"input", eval_expr},
                          {"value", poly_to_json(out)},
                          {"text", to_string(out)}}
                         .dump(2)
                  << "\n";
      else
        std::cout << to_string(out) << "\n";
      return 0;
    }
    if (*ccheck) {
      Cocycle c = build_cocycle(check_args);
      return emit_report(check_relations(c), check_json);
    }
    if (*csolve) {
      Cocycle c = build_cocycle(solve_args);
      auto witness = solve_inner(c, solve_bound);
      const char* caveat =
          "no witness up to this degree is NOT a proof of non-innerness";
      if (solve_json) {
        json j{{"bound", solve_bound}, {"caveat", caveat}};
        j["witness"] = witness ? poly_to_json(*witness) : json(nullptr);
        if (witness) j["text"] = to_string(*witness);
        std::cout << j.dump(2) << "\n";
      } else if (witness) {
        std::cout << "witness: " << to_string(*witness) << "\n";
      } else {
        std::cout << "no witness of degree <= " << solve_bound << " (" << caveat
                  << ")\n";
      }
      return 0;
    }
    if (*dt) {
      LemmaReport rep =
          domain_test(dt_samples, dt_max_alpha, dt_max_gamma, dt_seed);
      return emit_report(rep, dt_json);
    }
    if (*ver) {
      Context ctx;
      LemmaReport rep;
      if (lemma == "alpha-automorphism") {
        rep = verify_alpha_automorphism(v_n, ctx);
      } else if (lemma == "c-plus-c") {
        rep = verify_c_plus_c(v_n, v_degree, ctx);
      } else if (lemma == "relate-cocycles") {
        NCPoly xi = parse_expr(v_xi, Alphabet::h(v_n));
        rep = verify_relate_cocycles(v_n, xi, ctx);
      } else if (lemma == "extension") {
        NCPoly xi = parse_expr(v_xi, Alphabet::h(v_n));
        rep = verify_extension(v_n, xi, ctx);
      } else {
        rep = verify_determination(v_n, v_seed, ctx, v_tables);
      }
      return emit_report(rep, v_json);
    }
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const AlphabetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
