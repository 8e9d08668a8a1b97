#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qdef/rational.hpp"

namespace qdef {

class FieldMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The cyclotomic field Q(zeta_n), stored as Q[x]/Phi_n(x).
///
/// Instances are interned per n and live for the whole program, so scalars
/// can refer to their field by plain pointer. n = 1 gives the rationals.
class CyclotomicField {
 public:
  static const CyclotomicField& get(unsigned n);

  unsigned n() const { return n_; }
  /// phi(n), the dimension over Q.
  std::size_t degree() const { return modulus_.size() - 1; }
  /// Coefficients of Phi_n from the constant term up; monic.
  std::span<const std::int64_t> modulus() const { return modulus_; }
  /// Order of the group of roots of unity in the field, lcm(2, n).
  unsigned unit_order() const { return n_ % 2 == 0 ? n_ : 2 * n_; }
  /// x^e mod Phi_n for degree() <= e <= 2 degree() - 2.
  std::span<const std::int64_t> reduced_power(std::size_t e) const;

  CyclotomicField(const CyclotomicField&) = delete;
  CyclotomicField& operator=(const CyclotomicField&) = delete;

 private:
  explicit CyclotomicField(unsigned n);

  unsigned n_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::vector<std::int64_t>> high_powers_;
};

/// Cyclotomic integer polynomial Phi_n, constant term first.
std::vector<std::int64_t> cyclotomic_polynomial(unsigned n);
/// Euler's totient.
unsigned euler_phi(unsigned n);

/// Exact element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1).
///
/// A scalar built from a bare rational carries no field and combines with
/// scalars of any field; two scalars bound to different fields refuse to
/// combine and throw FieldMismatch.
class Scalar {
 public:
  using Coefficients = boost::container::small_vector<Rational, 4>;

  Scalar() = default;
  Scalar(Rational value);  // NOLINT(google-explicit-constructor)
  Scalar(std::int64_t value) : Scalar(Rational(value)) {}  // NOLINT(google-explicit-constructor)
  Scalar(const CyclotomicField& field, Rational value);

  static Scalar zeta_power(const CyclotomicField& field, std::int64_t exponent);
  static Scalar from_coefficients(const CyclotomicField& field, std::span<const Rational> coefficients);

  const CyclotomicField* field() const { return field_; }
  /// Power-basis coefficients with trailing zeros removed; empty for zero.
  std::span<const Rational> coefficients() const { return {coeffs_.data(), coeffs_.size()}; }
  Rational coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
  bool is_rational() const { return coeffs_.size() <= 1; }

  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(std::int64_t exponent) const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
  Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
  Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::size_t hash() const;
  /// Canonical text: increasing powers of z, lowest-term rationals,
  /// e.g. "2 - 1/2*z^3".
  std::string to_string() const;

 private:
  static const CyclotomicField* common_field(const Scalar& a, const Scalar& b);
  void trim();

  const CyclotomicField* field_ = nullptr;
  Coefficients coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& value);

/// Parses the scalar syntax: integers, `a/b`, `z`, `z^k` (k may be
/// negative), products with `*`, sums and differences, parentheses.
Scalar parse_scalar(std::string_view text, const CyclotomicField& field);

/// (i)_q = 1 + q + ... + q^(i-1); (0)_q = 0.
Scalar quantum_integer(unsigned i, const Scalar& q);
/// (i)_q! = (1)_q (2)_q ... (i)_q; (0)_q! = 1.
Scalar quantum_factorial(unsigned i, const Scalar& q);
/// True iff q^n = 1 and q^d != 1 for every proper divisor d of n.
bool is_primitive_root(const Scalar& q, unsigned n);
/// Multiplicative order of q if q is a root of unity in its field.
std::optional<unsigned> root_of_unity_order(const Scalar& q);

}  // namespace qdef

template <>
struct std::hash<qdef::Scalar> {
  std::size_t operator()(const qdef::Scalar& s) const { return s.hash(); }
};
