#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bbc/highest_weight.hpp"

namespace bbc {

// Parsed and validated input document for a run: the Cartan datum, the
// sequence base, optional dominant weights and the exploration height.
struct JobConfig {
  DatumPtr datum;
  std::vector<int> base;
  std::optional<Weight> lambda;
  std::optional<Weight> mu;
  long long height = 0;

  Weight lambda_or_zero() const { return lambda ? *lambda : Weight(); }
};

JobConfig parse_config_text(const std::string& text);  // throws ConfigError
JobConfig load_config(const std::string& path);        // throws ConfigError

// A structure plus the canonical seed to explore it from.
struct BuiltTarget {
  CrystalPtr structure;
  Elem seed;
  std::string name;
};

// Target grammar: "binfty" | "blambda" | "elementary:<index>" | "tlambda" |
// "c" | a '*'-separated tensor of those, bracketed to the left.
BuiltTarget build_target(const JobConfig& cfg, const std::string& target);

struct CliRequest {
  std::string command;      // graph | verify | count
  std::string config_path;
  std::string target;       // graph, count
  std::string format = "dot";  // graph: dot | json
  std::string suite;        // verify
  bool inject_fault = false;  // verify: testing aid, forces a failing axiom check
};

struct CliResult {
  int exit_code = 0;       // 0 pass, 1 check failure, 2 config error
  std::string output;
  std::string error;
};

CliResult run_cli(const CliRequest& req);

}  // namespace bbc
