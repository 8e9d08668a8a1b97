#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdef/hopf_action.hpp"
#include "qdef/report.hpp"

namespace qdef {

/// Raised when the deformation sum has not vanished by the configured t-degree.
class NonterminationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DeformationConfig {
  /// Largest t-degree tried when q is not a primitive root of unity.
  unsigned t_cap = 8;
};

/// Polynomial in t with coefficients in S_q(V)#G; zero coefficients are
/// never stored.
class DeformElement {
 public:
  DeformElement() = default;
  explicit DeformElement(SmashElement classical) { add(0, std::move(classical)); }

  bool is_zero() const { return components_.empty(); }
  const std::map<unsigned, SmashElement>& components() const { return components_; }
  /// Coefficient of t^d (zero when absent).
  SmashElement component(unsigned d) const;

  void add(unsigned d, const SmashElement& value);
  DeformElement operator-() const;
  DeformElement scaled(const Scalar& factor) const;
  friend DeformElement operator+(const DeformElement& a, const DeformElement& b);
  friend DeformElement operator-(const DeformElement& a, const DeformElement& b) { return a + (-b); }
  friend bool operator==(const DeformElement& a, const DeformElement& b) { return a.components_ == b.components_; }

  /// `w1*w2 - t * w3*g[(1,0)]`; "0" when zero.
  std::string to_string() const;
  /// The summands only, as a continuation of a longer sum (every term
  /// carries its joining sign).
  std::string render_tail() const;

 private:
  std::map<unsigned, SmashElement> components_;
};

/// a * b = sum_i t^i / (i)_q! D1^i(a) D2^i(b).
class StarProduct {
 public:
  explicit StarProduct(const HopfAction& action, DeformationConfig config = {});

  const HopfAction& action() const { return action_; }
  const AlgebraSpec& algebra() const { return action_.algebra(); }
  const DeformationConfig& config() const { return config_; }

  /// The deformed product of two classical elements. Stops after n terms when
  /// q is a primitive n-th root, otherwise when a D-power vanishes; throws
  /// NonterminationError past t_cap.
  DeformElement udf_pair(const SmashElement& a, const SmashElement& b) const;
  /// t-bilinear extension of udf_pair.
  DeformElement multiply(const DeformElement& a, const DeformElement& b) const;
  /// w_i * w_j - q_ij (w_j * w_i), zero-based indices.
  DeformElement deformed_relation(std::size_t i, std::size_t j) const;
  /// D1(a) D2(b), the coefficient of t.
  SmashElement mu1(const SmashElement& a, const SmashElement& b) const;

  /// 1 / (i)_q!, the weight of t^i.
  const Scalar& weight(unsigned i) const;

 private:
  const HopfAction& action_;
  DeformationConfig config_;
  mutable std::vector<Scalar> weights_;
};

struct Presentation {
  /// One line per pair i < j: `w1*w2 + w2*w1 + t * w3*g[(1,0)] = 0`.
  std::vector<std::string> relations;
  /// One line per generator and variable: `g[(1,0)]*w1 + w1*g[(1,0)] = 0`.
  std::vector<std::string> group_relations;
  /// Generator orders of G, e.g. `Z2 x Z2`.
  std::string group;
};

Presentation presentation_report(const StarProduct& star);

/// (a*b)*c = a*(b*c) for all basis monomials with |alpha| <= degree_bound.
CheckReport check_associativity(const StarProduct& star, std::uint32_t degree_bound);

}  // namespace qdef
