#pragma once

#include <random>
#include <string>

#include "qdef/config.hpp"
#include "qdef/scalar.hpp"

namespace qdef::testing {

/// Random element of Q(zeta_n) with small numerators and denominators; about
/// one sample in eight is zero.
inline Scalar random_scalar(std::mt19937_64& rng, const CyclotomicField& field) {
  std::uniform_int_distribution<std::int64_t> num(-9, 9);
  std::uniform_int_distribution<std::int64_t> den(1, 7);
  std::uniform_int_distribution<int> zero(0, 7);
  if (zero(rng) == 0) return Scalar(field, 0);
  Scalar out(field, 0);
  for (std::size_t i = 0; i < field.degree(); ++i) {
    out += Scalar(field, Rational(num(rng), den(rng))) * Scalar::zeta_power(field, static_cast<std::int64_t>(i));
  }
  return out;
}

/// Replaces the single line starting with `prefix` by `replacement`.
inline std::string replace_line(std::string text, const std::string& prefix, const std::string& replacement) {
  std::size_t pos = text.find("\n" + prefix);
  if (pos == std::string::npos) throw std::invalid_argument("no line starting with " + prefix);
  std::size_t end = text.find('\n', pos + 1);
  return text.substr(0, pos + 1) + replacement + text.substr(end);
}

inline ExampleConfig preset_with(const std::string& name, const std::string& prefix, const std::string& replacement) {
  return parse_config(replace_line(*preset_text(name), prefix, replacement));
}

}  // namespace qdef::testing
