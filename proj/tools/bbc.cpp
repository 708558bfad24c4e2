#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "bbc/cli.hpp"

namespace {

int finish(const bbc::CliResult& result, const std::string& out_path) {
  if (!result.error.empty()) std::cerr << result.error;
  if (!result.output.empty()) {
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path);
      if (!out) {
        std::cerr << "cannot write to '" << out_path << "'\n";
        return 2;
      }
      out << result.output;
    }
  }
  return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Explore and verify crystal graphs for Borcherds-Bozec Cartan data"};
  app.require_subcommand(1);

  bbc::CliRequest req;
  std::string out_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", req.config_path, "path to the JSON input document")->required();
    cmd->add_option("--out", out_path, "output path (default: standard output)");
  };

  CLI::App* graph = app.add_subcommand("graph", "explore a structure and emit its labelled graph");
  add_common(graph);
  graph->add_option("--target", req.target,
                    "binfty | blambda | elementary:<index> | tlambda | c | tensor spec joined with '*'")
      ->required();
  graph->add_option("--format", req.format, "dot | json")->default_val("dot");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite; exit 0 iff every check passes");
  add_common(verify);
  verify->add_option("--suite", req.suite, "axioms | embedding | assoc | sum | pi | normal | seqindep")
      ->required();
  verify->add_flag("--inject-fault", req.inject_fault,
                   "testing aid: perturb one structure so the axiom suite fails with a witness");

  CLI::App* count = app.add_subcommand("count", "tabulate node counts per weight");
  add_common(count);
  count->add_option("--target", req.target, "same grammar as graph --target")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // --help exits 0; every flag error is a config error
  }

  if (graph->parsed()) req.command = "graph";
  if (verify->parsed()) req.command = "verify";
  if (count->parsed()) req.command = "count";

  return finish(bbc::run_cli(req), out_path);
}
