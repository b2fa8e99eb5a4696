#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pdo/error.hpp"

namespace pdo::frontend {

/// A dimension, named bindings evaluated in order, and one command.
struct Script {
  std::size_t dim = 0;
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string verb;
  std::vector<std::string> args;
  std::map<std::string, std::string> flags;  // "--mode=x" -> {"mode", "x"}; bare "--rank-only" -> "true"
};

/// Script file format, one statement per line ('#' starts a comment):
///   dim 2
///   L1 = D1^2 - D2^2
///   resultant L1, L2, L3 --mode=sampled:40 --seed=7
/// Arguments are comma separated; flags follow the first " --".
Script parse_script(std::string_view text);

struct VerbSpec {
  std::string name;
  std::size_t min_args;
  std::size_t max_args;  // SIZE_MAX for unbounded
  std::vector<std::string> value_flags;
  std::vector<std::string> bool_flags;
  bool needs_dim;
  std::string help;
};

const std::vector<VerbSpec>& verbs();
const VerbSpec* find_verb(std::string_view name);

struct Report {
  std::string command;
  /// Ordered labelled lines of the text rendering.
  std::vector<std::pair<std::string, std::string>> lines;
  nlohmann::json result;
  nlohmann::json provenance = nlohmann::json::object();
  double seconds = 0;
  int exit_code = 0;
};

Report run_command(const Script& s);

/// "value" alone for a single result line, else "label: value" lines.
std::string render_text(const Report& r);
/// Pretty JSON; timing is the only field that varies between runs.
std::string render_json(const Report& r);

/// 1 mathematical negative, 2 usage or parse errors, 3 invariant violation.
int exit_code_for(ErrorKind kind);

}  // namespace pdo::frontend
