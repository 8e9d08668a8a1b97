#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "qdef/report.hpp"
#include "qdef/smash_algebra.hpp"

namespace qdef {

/// Images of the Hopf generators on the algebra generators: sigma on V,
/// sigma(g) = xi(g) g on G, and D1, D2 on each w_i and each group generator.
struct GeneralActionSpec {
  Scalar q;
  std::vector<SmashElement> sigma_on_v;
  std::vector<Scalar> xi_on_gens;
  std::vector<SmashElement> d1_on_v;
  std::vector<SmashElement> d2_on_v;
  std::vector<SmashElement> d1_on_gens;
  std::vector<SmashElement> d2_on_gens;

  friend bool operator==(const GeneralActionSpec&, const GeneralActionSpec&) = default;
};

/// Diagonal sigma(w_i) = lambda_i w_i with D1(w_1) = P1 g1, D2(w_2) = P2 g2
/// and every other generator image of D1, D2 zero.
struct SpecialActionSpec {
  Scalar q;
  std::vector<Scalar> lambda;
  std::vector<Scalar> xi_on_gens;
  SmashElement p1;
  SmashElement p2;
  GroupElement g1;
  GroupElement g2;
  /// Declared q_{P_i,w_j}, indexed by j; unset entries are derived from P_i.
  std::vector<std::optional<Scalar>> qp1;
  std::vector<std::optional<Scalar>> qp2;

  GeneralActionSpec to_general(const AlgebraSpec& algebra) const;
  friend bool operator==(const SpecialActionSpec&, const SpecialActionSpec&) = default;
};

/// sigma, D1, D2 extended from generators to all of S_q(V)#G by
///   sigma(ab) = sigma(a) sigma(b)
///   D1(ab) = D1(a) sigma(b) + a D1(b)
///   D2(ab) = D2(a) b + sigma(a) D2(b)
/// folded over the canonical letters of each monomial. Results are memoized
/// per monomial, so an instance must not be shared between threads.
class HopfAction {
 public:
  enum class Op { Sigma, D1, D2 };

  struct Images {
    SmashElement sigma;
    SmashElement d1;
    SmashElement d2;
  };

  /// Running values of a left-to-right fold over a free word.
  struct FoldState {
    SmashElement value;
    SmashElement sigma;
    SmashElement d1;
    SmashElement d2;
  };

  /// Throws SpecError on size mismatches or when xi is not a homomorphism.
  HopfAction(AlgebraSpec algebra, GeneralActionSpec spec);

  const AlgebraSpec& algebra() const { return algebra_; }
  const GeneralActionSpec& spec() const { return spec_; }
  const Scalar& q() const { return spec_.q; }
  /// n when q is a primitive n-th root of unity with n >= 2.
  std::optional<unsigned> nilpotency_order() const { return nilpotency_; }

  Scalar xi(const GroupElement& g) const;

  const Images& images(const SmashMonomial& monomial) const;
  SmashElement apply(Op op, const SmashElement& a) const;
  SmashElement apply_power(Op op, unsigned times, const SmashElement& a) const;
  SmashElement sigma(const SmashElement& a) const { return apply(Op::Sigma, a); }
  SmashElement d1(const SmashElement& a) const { return apply(Op::D1, a); }
  SmashElement d2(const SmashElement& a) const { return apply(Op::D2, a); }

  /// Applies the extension rules letter by letter to an arbitrary word,
  /// without reducing it to a monomial first.
  FoldState fold(std::span<const Letter> word) const;

  std::size_t memo_size() const { return memo_.size(); }

 private:
  Images letter_images(const Letter& letter) const;

  AlgebraSpec algebra_;
  GeneralActionSpec spec_;
  std::optional<unsigned> nilpotency_;
  mutable std::unordered_map<SmashMonomial, Images> memo_;
};

/// Parameters of the family with q_{1j} = q, q_{ij} = 1 otherwise,
/// G = Z_n x Z_n, D1(w_1) = w_3^{a_1 n} ... w_k^{a_{k-2} n} s2 and
/// D2(w_2) = w_3^{b_1 n + 1} w_4^{b_2 n} ... w_k^{b_{k-2} n} s1 s2^{-1}.
/// All a_i = b_i = 0 with k = 3 is the smallest member.
struct FamilyParams {
  std::size_t k = 3;
  unsigned n = 2;
  std::vector<std::uint32_t> alpha;  // length k - 2
  std::vector<std::uint32_t> beta;   // length k - 2
};

/// Direct evaluation of the closed-form sigma, D1, D2 on a basis monomial of
/// the family, independent of HopfAction. Throws SpecError when `algebra`
/// does not have the family's shape.
HopfAction::Images closed_form_oracle(const AlgebraSpec& algebra, const Scalar& q, const FamilyParams& params,
                                      const SmashMonomial& monomial);

/// The scalar c with p w_j = c w_j p, if one exists. Zero p gives nullopt.
std::optional<Scalar> commutation_scalar(const AlgebraSpec& algebra, const SmashElement& p, std::size_t j);

/// Relations of H_q on every basis monomial with |alpha| <= degree_bound.
CheckReport check_hq_relations(const HopfAction& action, std::uint32_t degree_bound);

/// Conditions EQ1..EQ9 on generators, plus the commutation and nilpotency
/// conditions again on monomials with |alpha| <= sample_degree.
CheckReport check_module_algebra_general(const HopfAction& action, std::uint32_t sample_degree = 3);

/// Conditions EQU2..EQU9. `degree_bound` limits the nilpotency sweep.
CheckReport check_special_conditions(const AlgebraSpec& algebra, const SpecialActionSpec& spec,
                                     std::uint32_t degree_bound = 3);

}  // namespace qdef
