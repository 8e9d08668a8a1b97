#include "qdef/commands.hpp"

#include <sstream>

#include "qdef/cohomology.hpp"
#include "qdef/deformation.hpp"

namespace qdef {

namespace {

using Json = nlohmann::ordered_json;

struct Context {
  const ExampleConfig& config;
  std::uint32_t degree_bound;
  unsigned t_cap;
};

const char* status(bool passed) { return passed ? "PASS" : "FAIL"; }

CommandResult start(const std::string& command, const Context& ctx) {
  CommandResult r;
  r.json["command"] = command;
  r.json["config"] = ctx.config.name;
  r.json["degree_bound"] = ctx.degree_bound;
  return r;
}

void finish(CommandResult& r, int code) {
  r.exit_code = code;
  r.json["exit_code"] = code;
}

CommandResult validate(const Context& ctx) {
  CommandResult r = start("validate", ctx);
  const ExampleConfig& c = ctx.config;
  HopfAction action = c.make_action();
  CheckReport report("validate " + c.name);
  report.merge(check_hq_relations(action, ctx.degree_bound));
  report.merge(check_module_algebra_general(action, ctx.degree_bound));
  if (c.is_special()) report.merge(check_special_conditions(c.algebra, c.special(), ctx.degree_bound));
  r.text = "validate " + c.name + "\n" + report.to_text() + "result: " + status(report.passed()) + "\n";
  r.json["report"] = report.to_json();
  r.json["passed"] = report.passed();
  finish(r, report.passed() ? kExitPass : kExitCheckFailed);
  return r;
}

CommandResult deform(const Context& ctx) {
  CommandResult r = start("deform", ctx);
  HopfAction action = ctx.config.make_action();
  StarProduct star(action, DeformationConfig{ctx.t_cap});
  std::ostringstream text;
  text << "deformation of " << ctx.config.name << "\n";
  try {
    Presentation p = presentation_report(star);
    text << "group: " << p.group << "\nrelations:\n";
    for (const auto& line : p.relations) text << "  " << line << "\n";
    text << "group relations:\n";
    for (const auto& line : p.group_relations) text << "  " << line << "\n";
    r.json["group"] = p.group;
    r.json["relations"] = p.relations;
    r.json["group_relations"] = p.group_relations;

    CheckReport assoc = check_associativity(star, ctx.degree_bound);
    text << assoc.to_text();
    r.json["associativity"] = assoc.to_json();
    r.json["passed"] = assoc.passed();
    text << "result: " << status(assoc.passed()) << "\n";
    finish(r, assoc.passed() ? kExitPass : kExitCheckFailed);
  } catch (const NonterminationError& ex) {
    text << "error: " << ex.what() << "\nresult: FAIL\n";
    r.json["error"] = ex.what();
    r.json["passed"] = false;
    finish(r, kExitCheckFailed);
  }
  r.text = text.str();
  return r;
}

CommandResult mu1_table(const Context& ctx) {
  CommandResult r = start("mu1", ctx);
  HopfAction action = ctx.config.make_action();
  const AlgebraSpec& alg = action.algebra();
  std::ostringstream text;
  text << "mu1(a, b) = D1(a) D2(b) on generators of " << ctx.config.name << "\n";
  Json table = Json::array();
  for (std::size_t i = 0; i < alg.num_vars(); ++i) {
    for (std::size_t j = 0; j < alg.num_vars(); ++j) {
      SmashElement value = element_mul(alg, action.d1(alg.w(i)), action.d2(alg.w(j)));
      std::string a = "w" + std::to_string(i + 1);
      std::string b = "w" + std::to_string(j + 1);
      text << "  mu1(" << a << ", " << b << ") = " << value << "\n";
      table.push_back(Json{{"a", a}, {"b", b}, {"value", value.to_string()}});
    }
  }
  r.text = text.str();
  r.json["table"] = std::move(table);
  finish(r, kExitPass);
  return r;
}

CommandResult cocycle(const Context& ctx) {
  CommandResult r = start("cocycle", ctx);
  HopfAction action = ctx.config.make_action();
  CheckReport report = cocycle_check_mu1(action, ctx.degree_bound);
  r.text = "cocycle identity for mu1 of " + ctx.config.name + " up to degree " + std::to_string(ctx.degree_bound) +
           "\n" + report.to_text() + "result: " + status(report.passed()) + "\n";
  r.json["report"] = report.to_json();
  r.json["passed"] = report.passed();
  finish(r, report.passed() ? kExitPass : kExitCheckFailed);
  return r;
}

CommandResult certify(const Context& ctx) {
  CommandResult r = start("certify", ctx);
  const ExampleConfig& c = ctx.config;
  if (!c.is_special()) {
    return config_error_result("certify", "certify needs an action of type special");
  }
  Certificate cert;
  try {
    cert = nontriviality_report(c.algebra, c.special(), ctx.degree_bound, true);
  } catch (const SpecError& ex) {
    return config_error_result("certify", ex.what());
  }
  std::string coboundary = "not run";
  if (cert.coboundary) {
    coboundary = *cert.coboundary == CoboundaryVerdict::NotCoboundary ? "not a coboundary" : "inconclusive";
  }
  const char* verdict = cert.nontrivial ? "nontrivial" : "no certificate";
  r.text = "nontriviality certificate for " + c.name + "\n" + cert.report.to_text() +
           "coboundary cross-check: " + coboundary + "\nverdict: " + verdict + "\n";
  r.json["report"] = cert.report.to_json();
  r.json["coboundary_cross_check"] = coboundary;
  r.json["verdict"] = verdict;
  r.json["passed"] = cert.nontrivial;
  finish(r, cert.nontrivial ? kExitPass : kExitCheckFailed);
  return r;
}

}  // namespace

const std::vector<std::string>& config_commands() {
  static const std::vector<std::string> commands = {"validate", "deform", "mu1", "cocycle", "certify"};
  return commands;
}

CommandResult config_error_result(const std::string& command, const std::string& message) {
  CommandResult r;
  r.text = "configuration error: " + message + "\n";
  r.json["command"] = command;
  r.json["error"] = message;
  finish(r, kExitConfigError);
  return r;
}

CommandResult run_command(const std::string& command, const ExampleConfig& config, const CommandOptions& options) {
  Context ctx{config, options.degree_bound.value_or(config.run.degree_bound), options.t_cap.value_or(config.run.t_cap)};
  try {
    if (command == "validate") return validate(ctx);
    if (command == "deform") return deform(ctx);
    if (command == "mu1") return mu1_table(ctx);
    if (command == "cocycle") return cocycle(ctx);
    if (command == "certify") return certify(ctx);
  } catch (const SpecError& ex) {
    return config_error_result(command, ex.what());
  }
  return config_error_result(command, "unknown command '" + command + "'");
}

CommandResult run_selftest(const CommandOptions& options) {
  CommandResult r;
  r.json["command"] = "selftest";
  Json runs = Json::array();
  std::ostringstream text;
  int worst = kExitPass;
  for (const auto& name : builtin_presets()) {
    ExampleConfig config = load_preset(name);
    for (const auto& command : config_commands()) {
      CommandResult sub = run_command(command, config, options);
      worst = std::max(worst, sub.exit_code);
      text << name << " " << command << ": " << (sub.exit_code == kExitPass ? "PASS" : "FAIL") << "\n";
      runs.push_back(Json{{"preset", name}, {"command", command}, {"exit_code", sub.exit_code}});
    }
  }
  text << "result: " << status(worst == kExitPass) << "\n";
  r.text = text.str();
  r.json["runs"] = std::move(runs);
  finish(r, worst);
  return r;
}

}  // namespace qdef
