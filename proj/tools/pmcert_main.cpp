// pmcert: generate, prove, verify and tamper with approximant basis
// certificates. Exit codes: 0 accept, 1 reject, 2 usage or input error,
// 3 field too small for the requested instance.

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmcert/commands.hpp"
#include "pmcert/errors.hpp"

int main(int argc, char** argv) {
  using namespace pmcert;

  CLI::App app{"Approximant basis prover and certificate verifier over F_p"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "write a random instance");
  g->add_option("--m", gen.m, "rows of F")->required()->check(CLI::PositiveNumber);
  g->add_option("--n", gen.n, "columns of F")->required();
  g->add_option("--sigma", gen.sigma, "uniform:N | random_max:N | skewed:D")->capture_default_str();
  g->add_option("--shift", gen.shift, "zero | range:A:B | staircase:H")->capture_default_str();
  g->add_option("--p", gen.modulus, "prime modulus")->capture_default_str();
  g->add_option("--seed", gen.seed)->capture_default_str();
  g->add_option("--out", gen.out, "output file (default: stdout)");

  ProveOptions prove;
  auto* p = app.add_subcommand("prove", "compute a basis and its certificate");
  p->add_option("--instance", prove.instance)->required();
  p->add_option("--basis-out", prove.basis_out)->required();
  p->add_option("--cert-out", prove.cert_out)->required();
  p->add_flag("--count-ops", prove.count_ops, "report field operation counts");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Monte-Carlo check of a basis and certificate");
  v->add_option("--instance", verify.instance)->required();
  v->add_option("--basis", verify.basis)->required();
  v->add_option("--cert", verify.cert)->required();
  v->add_option("--seed", verify.seed, "default: $APPBASCERT_SEED, else random");
  v->add_option("--s-size", verify.s_size, "sample from {0..N-1} instead of the whole field");
  v->add_flag("--zeta", verify.zeta, "projection row [1, z, z^2, ...] from a single draw");
  v->add_option("--repeat", verify.repeat, "independent runs; accept only if all accept")->capture_default_str();
  v->add_flag("--count-ops", verify.count_ops, "report field operation counts");
  v->add_option("--verdict-out", verify.verdict_out, "write the verdict document");

  TamperOptions tamper;
  auto* t = app.add_subcommand("tamper", "corrupt a basis or certificate");
  t->add_option("--instance", tamper.instance)->required();
  t->add_option("--basis", tamper.basis)->required();
  t->add_option("--cert", tamper.cert)->required();
  t->add_option("--target", tamper.target, "basis_coeff | certificate_entry | swap_rows | scale_row")
      ->capture_default_str();
  t->add_flag("--preserve-cheap-checks", tamper.preserve_cheap_checks);
  t->add_option("--row", tamper.row);
  t->add_option("--col", tamper.col);
  t->add_option("--degree", tamper.degree);
  t->add_option("--other-row", tamper.other_row);
  t->add_option("--value", tamper.value, "added value, or the factor for scale_row");
  t->add_option("--seed", tamper.seed)->capture_default_str();
  t->add_option("--basis-out", tamper.basis_out, "default: overwrite --basis");
  t->add_option("--cert-out", tamper.cert_out, "default: overwrite --cert");

  BenchOptions bench;
  std::vector<std::string> cases;
  auto* b = app.add_subcommand("bench", "operation counts of prove, certificate, verify and recomputation");
  b->add_option("--case", cases, "MxN:profile, e.g. 16x16:uniform:256")->required();
  b->add_option("--shift", bench.shift)->capture_default_str();
  b->add_option("--p", bench.modulus)->capture_default_str();
  b->add_option("--seeds", bench.seeds)->capture_default_str();
  b->add_option("--report-out", bench.report_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  if (*g) return cmd_gen(gen, std::cout, std::cerr);
  if (*p) return cmd_prove(prove, std::cout, std::cerr);
  if (*v) return cmd_verify(verify, std::cout, std::cerr);
  if (*t) return cmd_tamper(tamper, std::cout, std::cerr);
  try {
    for (const auto& c : cases) bench.cases.push_back(parse_bench_case(c));
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return cmd_bench(bench, std::cout, std::cerr);
}
