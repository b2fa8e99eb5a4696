#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "pdo/error.hpp"
#include "pdo/frontend/commands.hpp"

namespace fe = pdo::frontend;

namespace {

int emit(const fe::Report& r, const std::string& format, const std::string& out_path) {
  const std::string text = format == "json" ? fe::render_json(r) : fe::render_text(r);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f) throw pdo::Error(pdo::ErrorKind::InvalidArgument, "cannot write '" + out_path + "'");
    f << text;
  }
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Commuting partial differential operators: composition, resultants, Darboux checks"};
  app.require_subcommand(1);

  std::size_t dim = 0;
  std::string format = "text";
  std::string out_path;
  std::vector<std::string> binds;
  app.add_option("--dim,-n", dim, "number of independent variables");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out,-o", out_path, "write the result to a file");
  app.add_option("--bind", binds, "NAME=EXPR, may repeat; evaluated in order");

  fe::Script script;
  std::map<std::string, std::string> value_store;
  std::map<std::string, bool> bool_store;

  for (const auto& v : fe::verbs()) {
    CLI::App* sub = app.add_subcommand(v.name, v.help);
    sub->add_option("args", script.args, "operator or polynomial expressions");
    for (const auto& f : v.value_flags) sub->add_option("--" + f, value_store[v.name + "/" + f]);
    for (const auto& f : v.bool_flags) sub->add_flag("--" + f, bool_store[v.name + "/" + f]);
    sub->callback([&, sub, name = v.name, spec = &v] {
      script.verb = name;
      for (const auto& f : spec->value_flags)
        if (sub->count("--" + f) > 0) script.flags[f] = value_store[name + "/" + f];
      for (const auto& f : spec->bool_flags)
        if (bool_store[name + "/" + f]) script.flags[f] = "true";
    });
  }

  std::string script_path;
  CLI::App* run = app.add_subcommand("run", "run a script file ('-' reads stdin)");
  run->add_option("file", script_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (!script_path.empty()) {
      std::stringstream buf;
      if (script_path == "-") {
        buf << std::cin.rdbuf();
      } else {
        std::ifstream f(script_path);
        if (!f) throw pdo::Error(pdo::ErrorKind::InvalidArgument, "cannot read '" + script_path + "'");
        buf << f.rdbuf();
      }
      fe::Script s = fe::parse_script(buf.str());
      if (s.dim == 0) s.dim = dim;
      return emit(fe::run_command(s), format, out_path);
    }
    script.dim = dim;
    for (const auto& b : binds) {
      const auto eq = b.find('=');
      if (eq == std::string::npos) throw pdo::Error(pdo::ErrorKind::InvalidArgument, "--bind expects NAME=EXPR");
      script.bindings.emplace_back(b.substr(0, eq), b.substr(eq + 1));
    }
    return emit(fe::run_command(script), format, out_path);
  } catch (const pdo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return fe::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
