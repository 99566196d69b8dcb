// Command-line front end: zm-info, lattice, density and verify.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "densesol/cli.hpp"

namespace cli = densesol::cli;

int main(int argc, char** argv) {
  CLI::App app{"Subgroup lattices, solitary subgroups and density checks for finite groups"};
  app.require_subcommand(1);

  std::string format_name = "text";
  std::size_t cap = densesol::kDefaultOrderCap;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_option("--cap", cap, "Largest group order to build")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  long long m = 0, n = 0, r = 0;
  auto* zm_info = app.add_subcommand("zm-info", "Validate a ZM(m,n,r) triple and summarize the group");
  zm_info->add_option("m", m)->required();
  zm_info->add_option("n", n)->required();
  zm_info->add_option("r", r)->required();

  std::string spec;
  const char* spec_help = "zm:m,n,r | cyclic:n | dihedral:n | quaternion:k";
  auto* lattice = app.add_subcommand("lattice", "Print the subgroup lattice");
  lattice->add_option("group", spec, spec_help)->required();
  auto* density = app.add_subcommand("density", "Decide the dense solitary subgroups property");
  density->add_option("group", spec, spec_help)->required();

  std::size_t max_order = 100;
  unsigned threads = 0;
  auto* verify = app.add_subcommand("verify", "Compare the classification with brute force");
  verify->add_option("--max-order", max_order, "Largest group order swept")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--threads", threads, "Worker threads (0 = hardware concurrency)");

  // Subcommand-level flags are accepted too, e.g. `lattice zm:3,2,2 --format dot`.
  for (auto* sub : {zm_info, lattice, density, verify}) {
    sub->add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    sub->add_option("--cap", cap, "Largest group order to build")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kExitOk : cli::kExitInvalid;
  }

  const auto format = *cli::parse_output_format(format_name);
  cli::CommandResult result;
  if (*zm_info) {
    result = cli::cmd_zm_info(m, n, r, format, cap);
  } else if (*lattice) {
    result = cli::cmd_lattice(spec, format, cap);
  } else if (*density) {
    result = cli::cmd_density(spec, format, cap);
  } else {
    result = cli::cmd_verify(max_order, format, cap, threads);
  }
  std::cout << result.output;
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  return result.exit_code;
}
