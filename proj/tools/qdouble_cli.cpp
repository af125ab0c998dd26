// Command-line front end: twisted doubles of finite groups, groupoid
// cocycle transgression, irreducible decompositions and character reports,
// all emitted as deterministic JSON.

#include <CLI11.hpp>
#include <string>

#include "qdouble/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computations with twisted groupoid algebras: loop-groupoid "
      "transgression, twisted Drinfeld doubles, irreducible decomposition "
      "and character identities."};
  app.require_subcommand(1);

  qdouble::run::RunConfig config;
  const auto add_common = [&](CLI::App* cmd, bool with_cocycle = true) {
    cmd->add_option("--group", config.group,
                    "Group file or registry spec (cyclic:n, product:a,b, "
                    "symmetric:n, dihedral:n)");
    if (with_cocycle) {
      cmd->add_option("--cocycle", config.cocycle,
                      "Cocycle file or registry spec (cocycle:z2cubed-omega, "
                      "cocycle:klein-thetaV); default: trivial 3-cocycle");
    }
    cmd->add_option("--seed", config.seed, "Seed for randomized steps");
    cmd->add_option("--out", config.out, "Output path (default: stdout)");
  };

  add_common(app.add_subcommand("check-cocycle",
                                "Verify the cocycle and normalization "
                                "conditions, reporting the first violation"));
  CLI::App* transgress = app.add_subcommand(
      "transgress", "Transgress a cocycle to the k-fold loop groupoid");
  add_common(transgress);
  transgress->add_option("--times", config.times, "Loop transgressions (1..3)")
      ->check(CLI::Range(1, 3));
  add_common(app.add_subcommand(
      "double", "Build the twisted double and cross-check its product table"));
  add_common(app.add_subcommand(
      "irreps", "Decompose the twisted algebra into irreducibles"));
  add_common(app.add_subcommand(
      "count", "Count irreducibles by every route and compare"));
  add_common(app.add_subcommand(
      "characters", "Character table, Gram matrix and covariance checks"));
  CLI::App* induce = app.add_subcommand(
      "induce", "Induce a centralizer representation up to the double");
  add_common(induce);
  induce->add_option("--at", config.at, "Group element index")->required();
  induce->add_option("--rep", config.rep, "Centralizer representation file")
      ->required();

  CLI11_PARSE(app, argc, argv);
  config.command = app.get_subcommands().front()->get_name();
  return qdouble::run::run_cli(config);
}
