#include <CLI11.hpp>
#include <iostream>

#include "commands.hpp"

using namespace hgm::cli;

int main(int argc, char** argv) {
  CLI::App app{"Rank-3 hypergeometric monodromy and reflection triangle groups"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "json";
  app.add_option("--tolerance", cfg.tolerance, "Numerical tolerance, in (0, 1e-3)")->capture_default_str();
  app.add_option("--max-denominator", cfg.max_denominator, "Largest denominator when snapping angles (>= 90)")
      ->capture_default_str();
  app.add_option("--max-braid", cfg.max_braid, "Largest braid length searched")->capture_default_str();
  app.add_option("--format", format, "json or markdown")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();

  auto* census = app.add_subcommand("census", "Verify every catalog entry");

  auto* build = app.add_subcommand("build", "Build and verify one family at one p");
  std::string family;
  std::vector<int> indices;
  int build_p = 0;
  build->add_option("family", family, "threefold | twofold | f334 | f23n | f344")->required();
  build->add_option("indices", indices, "Family indices: n m, n, or none");
  build->add_option("--p", build_p, "Reflection order")->required();

  auto* signature = app.add_subcommand("signature", "Invariant Hermitian form of a hypergeometric group");
  std::vector<std::string> alpha, beta;
  signature->add_option("--alpha", alpha, "Three rationals")->required()->expected(3);
  signature->add_option("--beta", beta, "Three rationals")->required()->expected(3);

  auto* braid = app.add_subcommand("braid", "Braid orders of a reflection triple");
  int braid_p = 0;
  std::string rho, sigma, tau;
  braid->add_option("--p", braid_p, "Reflection order")->required();
  braid->add_option("--rho", rho, "re,im")->required();
  braid->add_option("--sigma", sigma, "re,im")->required();
  braid->add_option("--tau", tau, "re,im")->required();

  auto* bh = app.add_subcommand("bh", "Identify a finite hypergeometric group inside a lattice");
  int bh_id = 0;
  bh->add_option("id", bh_id, "Row 2..12")->required();

  auto* abelianize = app.add_subcommand("abelianize", "Abelianization obstruction to two-generation");
  int ab_p = 0;
  abelianize->add_option("p", ab_p, "3, 4 or 6")->required();

  CLI11_PARSE(app, argc, argv);
  cfg.format = format == "markdown" ? Format::Markdown : Format::Json;

  try {
    if (*census) return cmd_census(cfg, std::cout);
    if (*build) return cmd_build(family, indices, build_p, cfg, std::cout);
    if (*signature) return cmd_signature(alpha, beta, cfg, std::cout);
    if (*braid) return cmd_braid(braid_p, rho, sigma, tau, cfg, std::cout);
    if (*bh) return cmd_bh(bh_id, cfg, std::cout);
    if (*abelianize) return cmd_abelianize(ab_p, cfg, std::cout);
  } catch (const hgm::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
