#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qdef/hopf_action.hpp"
#include "qdef/smash_algebra.hpp"

namespace qdef {

/// A configuration problem: either a syntax error anchored at a line, or a
/// semantic error naming the violated invariant.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::size_t line, const std::string& key, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct RunParams {
  std::uint32_t degree_bound = 3;
  unsigned t_cap = 8;
  friend bool operator==(const RunParams&, const RunParams&) = default;
};

using ActionData = std::variant<SpecialActionSpec, GeneralActionSpec>;

struct ExampleConfig {
  std::string name;
  AlgebraSpec algebra;
  ActionData action;
  RunParams run;

  bool is_special() const { return std::holds_alternative<SpecialActionSpec>(action); }
  const SpecialActionSpec& special() const { return std::get<SpecialActionSpec>(action); }
  GeneralActionSpec general() const;
  HopfAction make_action() const { return HopfAction(algebra, general()); }

  friend bool operator==(const ExampleConfig&, const ExampleConfig&) = default;
};

/// Parses the sectioned key-value format (see README). Throws ConfigError.
ExampleConfig parse_config(std::string_view text);
/// Canonical text that parses back to an equal ExampleConfig.
std::string print_config(const ExampleConfig& config);

/// Names of the presets exercised by `selftest`.
std::vector<std::string> builtin_presets();
/// Config text for `motivational-q<n>` or `general-k<K>-n<N>-a<A>-b<B>`.
std::optional<std::string> preset_text(std::string_view name);
/// Family parameters behind a preset name.
std::optional<FamilyParams> preset_family(std::string_view name);
/// parse_config(preset_text(name)); throws ConfigError for unknown names.
ExampleConfig load_preset(std::string_view name);

}  // namespace qdef
