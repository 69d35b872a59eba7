#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "qscov/cli.hpp"

namespace {

constexpr int kExitChecksFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

void add_common(CLI::App* sub, qscov::cli::RunConfig& cfg, std::string& out) {
  sub->add_option("--n", cfg.n, "number of variables")->required()->check(CLI::PositiveNumber);
  sub->add_option("--m", cfg.m, "order of the roots of unity")->check(CLI::PositiveNumber);
  sub->add_flag("--json", cfg.json, "emit a JSON document");
  sub->add_option("--out", out, "write output to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qscov::cli;
  RunConfig cfg;
  std::string out;

  CLI::App app{"Super-coinvariant computations for the generalized symmetric group G(n,m)"};
  app.require_subcommand(1);

  auto* basis = app.add_subcommand("basis", "list the Dyck-type monomial basis B(n,m)");
  add_common(basis, cfg, out);

  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis and standard monomials");
  add_common(groebner, cfg, out);
  groebner->add_option("--degree-bound", cfg.degree_bound, "truncation degree");

  auto* dim = app.add_subcommand("dim", "quotient dimension by one method");
  add_common(dim, cfg, out);
  dim->add_option("--method", cfg.method, "groebner | basis | harmonic")->check(CLI::IsMember(methods()));
  dim->add_option("--degree-bound", cfg.degree_bound, "truncation degree (groebner method)");

  auto* act = app.add_subcommand("act", "apply a group element to a polynomial");
  add_common(act, cfg, out);
  act->add_option("--element", cfg.element, "e.g. \"tau=3,1,2;weights=1,0,1\"")->required();
  act->add_option("--poly", cfg.poly, "e.g. \"x1^2*x2\"")->required();
  act->add_option("--action", cfg.action, "quasi | classical")->check(CLI::IsMember({"quasi", "classical"}));

  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  add_common(verify, cfg, out);
  verify->add_option("--suite", cfg.suite, "propu | ppp | main | hilbert | chevalley | action-axioms")
      ->required()
      ->check(CLI::IsMember(suites()));
  verify->add_option("--degree-bound", cfg.degree_bound, "truncation degree (main, hilbert)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    cfg.caps = qscov::Caps::from_environment();
    Report report = run(cfg);
    std::string text = render(report, cfg.json);
    if (out.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out, std::ios::binary);
      if (!f) throw std::runtime_error("cannot open " + out);
      f << text;
    }
    if (const Check* bad = report.first_failure()) {
      std::cerr << "FAIL " << bad->name << ": expected " << bad->expected.dump() << ", actual "
                << bad->actual.dump() << "\n";
      return kExitChecksFailed;
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
