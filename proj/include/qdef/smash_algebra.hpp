#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "qdef/scalar.hpp"

namespace qdef {

/// Raised when algebra or action data violates a structural invariant.
class SpecError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Exponents = boost::container::small_vector<std::uint32_t, 6>;

/// Element of Z_{n_1} x ... x Z_{n_m}, exponents reduced into [0, n_j).
struct GroupElement {
  Exponents exponents;

  bool is_identity() const;
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.exponents == b.exponents; }
  friend bool operator<(const GroupElement& a, const GroupElement& b) { return a.exponents < b.exponents; }
  std::string to_string() const;
};

/// Basis element w_1^{a_1} ... w_k^{a_k} g of S_q(V)#G.
struct SmashMonomial {
  Exponents alpha;
  GroupElement g;

  std::uint32_t degree() const;
  friend bool operator==(const SmashMonomial& a, const SmashMonomial& b) {
    return a.alpha == b.alpha && a.g == b.g;
  }
  friend bool operator<(const SmashMonomial& a, const SmashMonomial& b) {
    return a.alpha < b.alpha || (a.alpha == b.alpha && a.g < b.g);
  }
  std::size_t hash() const;
  /// `w1^2*w3*g[(1,0)]`; unit exponents and the identity are omitted, the
  /// empty monomial prints as `1`.
  std::string to_string() const;
};

/// Finite linear combination of monomials in canonical form: sorted by
/// monomial, no zero coefficients. Equality is structural.
class SmashElement {
 public:
  using Term = std::pair<SmashMonomial, Scalar>;

  SmashElement() = default;
  explicit SmashElement(SmashMonomial monomial, Scalar coefficient = Scalar(1));
  /// Collects like terms and sorts; input order is irrelevant.
  static SmashElement from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  /// Coefficient of the given monomial (zero when absent).
  Scalar coefficient(const SmashMonomial& monomial) const;

  SmashElement operator-() const;
  SmashElement scaled(const Scalar& factor) const;
  friend SmashElement operator+(const SmashElement& a, const SmashElement& b);
  friend SmashElement operator-(const SmashElement& a, const SmashElement& b) { return a + (-b); }
  SmashElement& operator+=(const SmashElement& other) { return *this = *this + other; }
  SmashElement& operator-=(const SmashElement& other) { return *this = *this - other; }

  friend bool operator==(const SmashElement& a, const SmashElement& b) { return a.terms_ == b.terms_; }

  /// Terms joined in monomial order, e.g. `w1*w2 - z * w3*g[(1,0)]`.
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

std::ostream& operator<<(std::ostream& os, const SmashElement& value);

/// Renders `coefficient * body` as one summand of a sum. `first` selects the
/// leading form (`-x`) over the joined form (` - x`).
std::string render_term(const Scalar& coefficient, const std::string& body, bool first);

/// S_q(V)#G for a diagonal action of a finite abelian group
/// G = Z_{n_1} x ... x Z_{n_m} on V = span(w_1, ..., w_k).
///
/// Indices are zero-based in the API and one-based in text.
class AlgebraSpec {
 public:
  /// `qmatrix` is k x k, `characters[i][j]` is chi_i(generator_j).
  /// Throws SpecError when q_ii != 1, q_ji != q_ij^{-1}, or a character value
  /// is not a root of unity of order dividing n_j.
  AlgebraSpec(const CyclotomicField& field, std::vector<std::vector<Scalar>> qmatrix,
              std::vector<std::uint32_t> group_orders, std::vector<std::vector<Scalar>> characters);

  const CyclotomicField& field() const { return *field_; }
  std::size_t num_vars() const { return k_; }
  std::size_t num_generators() const { return orders_.size(); }
  std::span<const std::uint32_t> group_orders() const { return orders_; }
  std::size_t group_order() const;

  const Scalar& q(std::size_t i, std::size_t j) const { return qmatrix_[i][j]; }
  const Scalar& chi_generator(std::size_t i, std::size_t j) const { return characters_[i][j]; }
  /// chi_i(g).
  Scalar chi(std::size_t i, const GroupElement& g) const;
  /// prod_i chi_i(g)^{alpha_i}, the eigenvalue of g on w^alpha.
  Scalar character(const Exponents& alpha, const GroupElement& g) const;

  Scalar scalar(Rational value) const { return Scalar(*field_, std::move(value)); }
  Scalar zeta(std::int64_t exponent) const { return Scalar::zeta_power(*field_, exponent); }

  GroupElement identity() const;
  GroupElement generator(std::size_t j) const;
  /// Builds a group element from arbitrary integer exponents, reducing them.
  GroupElement group_element(std::span<const std::int64_t> exponents) const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& g) const;
  /// All elements in lexicographic exponent order.
  std::vector<GroupElement> group_elements() const;

  SmashMonomial unit_monomial() const;
  SmashMonomial variable(std::size_t i) const;
  SmashMonomial group_monomial(const GroupElement& g) const;

  SmashElement one() const { return SmashElement(unit_monomial(), scalar(1)); }
  SmashElement w(std::size_t i) const { return SmashElement(variable(i), scalar(1)); }
  SmashElement element(const GroupElement& g) const { return SmashElement(group_monomial(g), scalar(1)); }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b);

  /// Unit group of the field: zeta_N^e for N = field().unit_order().
  const Scalar& unit(std::int64_t log) const;
  /// Discrete log of a root of unity in the field, if it is one.
  std::optional<std::uint32_t> unit_log(const Scalar& value) const;
  /// log of chi_i(g) in the unit group.
  std::uint32_t chi_log(std::size_t i, const GroupElement& g) const;
  /// log of q_ij if it is a root of unity.
  std::optional<std::uint32_t> q_log(std::size_t i, std::size_t j) const;

 private:
  const CyclotomicField* field_;
  std::size_t k_;
  std::vector<std::vector<Scalar>> qmatrix_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::vector<Scalar>> characters_;

  std::uint32_t unit_order_;
  std::vector<Scalar> units_;
  std::vector<std::optional<std::uint32_t>> q_log_;
  std::vector<std::uint32_t> chi_log_;
  bool q_all_units_ = true;
};

/// Product of two basis monomials: returns (c, m) with m1 * m2 = c * m.
std::pair<Scalar, SmashMonomial> monomial_mul(const AlgebraSpec& spec, const SmashMonomial& m1,
                                              const SmashMonomial& m2);
/// Bilinear extension of monomial_mul.
SmashElement element_mul(const AlgebraSpec& spec, const SmashElement& a, const SmashElement& b);
/// The algebra automorphism a -> g(a); the group part is fixed since G is abelian.
SmashElement group_act(const AlgebraSpec& spec, const GroupElement& g, const SmashElement& a);

/// One letter of a free word in T(V)#G.
struct Letter {
  static Letter variable(std::size_t i) { return Letter{i, {}}; }
  static Letter group(GroupElement g) { return Letter{kGroup, std::move(g)}; }
  bool is_variable() const { return var != kGroup; }

  static constexpr std::size_t kGroup = static_cast<std::size_t>(-1);
  std::size_t var;
  GroupElement element;
};

/// Canonical letter decomposition of a monomial: variables in increasing
/// order, then one letter per generator power.
std::vector<Letter> letters(const AlgebraSpec& spec, const SmashMonomial& monomial);

/// Brute-force normal form of a free word: rewrites adjacent letters one
/// step at a time using w_i w_j = q_ij w_j w_i (i > j), g w_i = chi_i(g) w_i g
/// and g h = (gh), with scalars computed by plain powering.
SmashElement free_reduce_oracle(const AlgebraSpec& spec, std::span<const Letter> word);

/// All monomials w^alpha g with |alpha| <= max_degree and every g in G.
std::vector<SmashMonomial> basis_monomials(const AlgebraSpec& spec, std::uint32_t max_degree);
/// All exponent vectors alpha with |alpha| == degree, lexicographic.
std::vector<Exponents> exponent_vectors(std::size_t k, std::uint32_t degree);

/// Parses the element syntax: scalar atoms plus `w<i>`, `w<i>^e` and
/// `g[(e1,...,em)]` (exponents may be negative), combined with * + - ( ).
SmashElement parse_element(std::string_view text, const AlgebraSpec& spec);

}  // namespace qdef

template <>
struct std::hash<qdef::SmashMonomial> {
  std::size_t operator()(const qdef::SmashMonomial& m) const { return m.hash(); }
};
