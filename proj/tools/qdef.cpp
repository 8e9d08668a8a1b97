#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qdef/commands.hpp"
#include "qdef/config.hpp"

namespace {

qdef::ExampleConfig load(const std::string& preset, const std::string& path) {
  if (!preset.empty()) return qdef::load_preset(preset);
  std::ifstream in(path);
  if (!in) throw qdef::ConfigError(0, path, "cannot open file");
  std::ostringstream text;
  text << in.rdbuf();
  return qdef::parse_config(text.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks formal deformations of quantum symmetric algebras extended by finite abelian groups."};
  app.require_subcommand(1);

  std::string preset;
  std::string config_path;
  std::string format = "human";
  qdef::CommandOptions options;
  std::uint32_t degree_bound = 0;
  unsigned t_cap = 0;

  auto add_common = [&](CLI::App* sub, bool needs_config) {
    if (needs_config) {
      auto* p = sub->add_option("--preset", preset, "builtin example, e.g. motivational-q2 or general-k4-n2-a1-b1");
      auto* c = sub->add_option("--config", config_path, "path to a config file");
      p->excludes(c);
      c->excludes(p);
    }
    sub->add_option("--degree-bound", degree_bound, "largest monomial degree swept (default from config, 3)");
    sub->add_option("--t-cap", t_cap, "largest t-degree tried for non-root-of-unity q (default from config, 8)");
    sub->add_option("--format", format, "output format")->check(CLI::IsMember({"human", "machine"}));
  };

  const std::vector<std::pair<std::string, std::string>> descriptions = {
      {"validate", "check the Hopf relations and module-algebra conditions"},
      {"deform", "print the deformed relations and sweep associativity"},
      {"mu1", "print the first-order term on pairs of generators"},
      {"cocycle", "sweep the cocycle identity for the first-order term"},
      {"certify", "run the nontriviality certificate"},
  };
  for (const auto& [name, description] : descriptions) add_common(app.add_subcommand(name, description), true);
  add_common(app.add_subcommand("selftest", "run every command on the builtin presets"), false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : qdef::kExitConfigError;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  if (sub->count("--degree-bound")) options.degree_bound = degree_bound;
  if (sub->count("--t-cap")) options.t_cap = t_cap;

  qdef::CommandResult result;
  if (command == "selftest") {
    result = qdef::run_selftest(options);
  } else if (preset.empty() && config_path.empty()) {
    result = qdef::config_error_result(command, "one of --preset or --config is required");
  } else {
    try {
      result = qdef::run_command(command, load(preset, config_path), options);
    } catch (const qdef::ConfigError& e) {
      result = qdef::config_error_result(command, e.what());
    }
  }

  if (format == "machine") {
    std::cout << result.json.dump(2) << "\n";
  } else if (result.exit_code == qdef::kExitConfigError) {
    std::cerr << result.text;
  } else {
    std::cout << result.text;
  }
  return result.exit_code;
}
