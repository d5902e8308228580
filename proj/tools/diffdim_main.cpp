// Command line front end: reads a JSON job describing a difference closed
// subgroup presentation (and optionally a chain schedule), runs one of the
// analysis commands, and emits the report as a table, JSON, or CSV.
//
// Exit codes: 0 success, 1 input/schema error, 2 family or chain violation,
// 3 computation guard, 4 internal invariant failure.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>

#include "diffdim/diffdim.hpp"

namespace {

using namespace diffdim;

struct CliOptions {
  std::string input;
  bool fixtures = false;
  int max_level = -1;
  int horizon = -1;
  std::string format = "table";
  bool oracle_check = false;
  std::uint64_t seed = 1;
};

int run_one(Command cmd, const JobSpec& job, const CliOptions& cli) {
  RunOptions opts;
  opts.max_level = cli.max_level;
  opts.horizon = cli.horizon;
  opts.oracle_check = cli.oracle_check;
  RunResult res = run_command(cmd, job, opts);
  std::cout << emit(res, cli.format);
  return res.guard_tripped ? 3 : 0;
}

int run(Command cmd, const CliOptions& cli) {
  if (cli.fixtures) {
    int worst = 0;
    for (const Fixture& f : bundled_fixtures()) {
      JobSpec job = job_from_json(f.job);
      worst = std::max(worst, run_one(cmd, job, cli));
    }
    return worst;
  }
  if (cli.input.empty()) throw InputError("no input job file (or use --fixtures)");
  return run_one(cmd, load_job(cli.input), cli);
}

/// Seeded property suite over random instances; the CLI surface for the
/// corpus the acceptance tests run.
int selftest(const CliOptions& cli, int count) {
  int failures = 0;
  auto check = [&failures](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  auto corpus = make_corpus(cli.seed, count);
  bool oracle_ok = true, quotient_ok = true, degrees_ok = true;
  for (const CorpusInstance& inst : corpus) {
    const GroupDescriptor& d = inst.desc;
    GroebnerBasis gb = buchberger(d.generators);
    Staircase st = staircase_of(gb);
    std::vector<int> profile = brute_slice_profile(d.generators, d.n, 8);
    for (int i = 0; i <= 8; ++i)
      if (hilbert_function(st, d.n, d.s(), i) != profile[i]) oracle_ok = false;

    int level = std::max(default_max_level(d), gb.max_elem_order + d.n + 3);
    std::vector<Int> dims = zariski_dims(d, level);
    KernelReport ker = kernels({d, Schedule::zariski()}, level);
    for (int i = 1; i <= level; ++i)
      if (dims[i] - dims[i - 1] != ker.dims[i]) quotient_ok = false;

    DimensionPolynomial dp = dimension_polynomial(d);
    if (dp.poly.degree() > d.n) degrees_ok = false;
    if (d.n >= 2) {
      TwistedKernelReport tw = twisted_kernels({d, Schedule::zariski()}, level);
      if (tw.fitted.degree() > d.n - 1) degrees_ok = false;
    }
  }
  check("oracle equivalence (staircase count = brute elimination, i <= 8)", oracle_ok);
  check("quotient identity dim(G_i) - dim(G_{i-1}) = dim(H_i)", quotient_ok);
  check("degree bounds (closure <= n, kernel <= n-1)", degrees_ok);

  auto gen_corpus = make_generalized_corpus(cli.seed, count / 2 + 1);
  bool lemma_ok = true, axioms_ok = true;
  for (const CorpusInstance& inst : gen_corpus) {
    GeneralizedGroupSpec spec{inst.desc, inst.schedule};
    int level = property_level(spec);
    ProjectionReport pr = projections(spec, level, level + 4);
    if (pr.indicators.all_resolved && pr.chain_indicators.all_resolved)
      lemma_ok = lemma_ok && pr.lemma_bound_ok;
    axioms_ok = axioms_ok && generalized_dims(spec, level).axioms.ok;
  }
  check("chain axioms on generalized instances", axioms_ok);
  check("projection indicator bound f_i <= j_i - 1 when j_i > i", lemma_ok);

  std::cout << (failures == 0 ? "self-test passed\n" : "self-test FAILED\n");
  return failures == 0 ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dimension sequences, dimension polynomials, and chain invariants "
               "of difference algebraic groups"};
  app.require_subcommand(1);

  CliOptions cli;
  std::map<std::string, Command> commands = {
      {"dims", Command::Dims},           {"dimpoly", Command::DimPoly},
      {"stabilize", Command::Stabilize}, {"certificate", Command::Certificate},
      {"generalized", Command::Generalized}, {"projections", Command::Projections},
      {"kernels", Command::Kernels},     {"twisted", Command::Twisted},
      {"oracle-check", Command::OracleCheck}, {"report", Command::Report},
  };
  std::map<std::string, const char*> help = {
      {"dims", "dimension sequence of the chain"},
      {"dimpoly", "dimension polynomial, threshold, and invariants"},
      {"stabilize", "stabilization index with the per-level check table"},
      {"certificate", "finite difference-generation certificate"},
      {"generalized", "chain dimensions, axioms, and indicators"},
      {"projections", "projected chain with its indicators"},
      {"kernels", "kernels of the truncation maps"},
      {"twisted", "kernels re-coordinatized over n-1 endomorphisms"},
      {"oracle-check", "main path versus brute-force elimination"},
      {"report", "everything in one document"},
  };

  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, cmd] : commands) {
    CLI::App* sub = app.add_subcommand(name, help[name]);
    sub->add_option("input", cli.input, "job file (JSON)");
    sub->add_flag("--fixtures", cli.fixtures, "run over the bundled example jobs");
    sub->add_option("--max-level", cli.max_level, "highest level to compute");
    sub->add_option("--horizon", cli.horizon, "indicator search horizon");
    sub->add_option("--format", cli.format, "table | json | csv");
    sub->add_flag("--oracle-check", cli.oracle_check, "append the brute-force cross-check");
    subs.emplace_back(sub, cmd);
  }
  CLI::App* self = app.add_subcommand("selftest", "seeded random property suite");
  int count = 25;
  self->add_option("--seed", cli.seed, "corpus seed");
  self->add_option("--count", count, "instances per corpus");

  CLI11_PARSE(app, argc, argv);

  try {
    if (self->parsed()) return selftest(cli, count);
    for (const auto& [sub, cmd] : subs)
      if (sub->parsed()) return run(cmd, cli);
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const FamilyViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ComputationGuard& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const InternalError& e) {
    std::cerr << "internal error (this is a bug): " << e.what() << "\n";
    return 4;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
