#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qdef/deformation.hpp"
#include "qdef/hopf_action.hpp"
#include "qdef/report.hpp"

namespace qdef {

using BilinearMap = std::function<SmashElement(const SmashElement&, const SmashElement&)>;

/// a mu(b,c) + mu(a,bc) = mu(ab,c) + mu(a,b) c on all basis monomial triples
/// with |alpha| <= degree_bound. `mu` must be bilinear; the sweep calls it on
/// single monomials and caches the results.
CheckReport cocycle_check(const AlgebraSpec& algebra, std::uint32_t degree_bound, const BilinearMap& mu,
                          const std::string& label = "cocycle");
/// cocycle_check with mu = D1(a) D2(b).
CheckReport cocycle_check_mu1(const HopfAction& action, std::uint32_t degree_bound);

/// Basis element (a (x) b (x) w_{j_1} ^ ... ^ w_{j_m}) of S^e (x) the quantum
/// exterior algebra; `wedge` has bit j set for each w_{j+1} in the wedge.
struct KoszulKey {
  Exponents left;
  Exponents right;
  std::uint32_t wedge = 0;
  friend auto operator<=>(const KoszulKey& a, const KoszulKey& b) {
    if (auto c = a.wedge <=> b.wedge; c != 0) return c;
    if (a.left != b.left) return a.left < b.left ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.right != b.right) return a.right < b.right ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const KoszulKey&, const KoszulKey&) = default;
};

/// Finite sum of Koszul basis elements; zero coefficients are never stored.
using KoszulChain = std::map<KoszulKey, Scalar>;

/// 1 (x) 1 (x) wedge.
KoszulChain koszul_generator(const AlgebraSpec& algebra, std::uint32_t wedge);
/// d_m on a generator of wedge degree m. Throws SpecError unless
/// 1 <= m <= k and the wedge has exactly m factors.
KoszulChain koszul_d(const AlgebraSpec& algebra, unsigned m, std::uint32_t wedge);
/// The S^e-linear extension of d, using (a (x) b)(x (x) y) = ax (x) yb.
KoszulChain koszul_apply(const AlgebraSpec& algebra, const KoszulChain& chain);
std::string koszul_to_string(const KoszulChain& chain);
/// True iff d_{m-1} d_m vanishes on every wedge generator of degree m.
bool koszul_square_zero(const AlgebraSpec& algebra, unsigned m);

/// 1 (x) 1 (x) w_i ^ w_j for i < j and zero otherwise (zero-based indices).
KoszulChain psi2_value(const AlgebraSpec& algebra, std::size_t i, std::size_t j);

/// A 2-cochain S_q(V) (x) S_q(V) -> S_q(V)#G, given on pairs of monomials
/// (group part trivial) and extended bilinearly.
struct Cochain2 {
  std::function<SmashElement(const SmashMonomial&, const SmashMonomial&)> on_monomials;

  SmashElement operator()(const SmashElement& a, const SmashElement& b) const;
  /// Nonzero only on (w_i, w_j), where it takes the value table[i][j].
  static Cochain2 from_generator_table(const AlgebraSpec& algebra, std::vector<std::vector<SmashElement>> table);
};

/// (1/|G|) sum_g g.gamma with (g.gamma)(a, b) = g(gamma(g^{-1} a, g^{-1} b)).
Cochain2 r2_average(const AlgebraSpec& algebra, const Cochain2& gamma);
/// gamma(a, g(b)) gh.
SmashElement theta2_extend(const AlgebraSpec& algebra, const Cochain2& gamma, const SmashElement& a,
                           const GroupElement& g, const SmashElement& b, const GroupElement& h);
/// gamma = R2(gamma) on all monomial pairs with |alpha| <= degree.
bool is_g_invariant(const AlgebraSpec& algebra, const Cochain2& gamma, std::uint32_t degree);

/// element (x) w_i^* ^ w_j^* with zero-based i < j.
struct Kappa {
  SmashElement element;
  std::size_t i = 0;
  std::size_t j = 1;
};

/// P1 g1 P2 g2 (x) w_1^* ^ w_2^*.
Kappa kappa_of(const AlgebraSpec& algebra, const SpecialActionSpec& spec);
/// (1/|G|) sum_g g(kappa(Psi2(1 (x) g^{-1}(w_i) (x) g^{-1}(w_j) (x) 1))), i < j,
/// with the dual action g(w_i^*) = chi_i(g)^{-1} w_i^*.
SmashElement kappa_evaluate(const AlgebraSpec& algebra, const Kappa& kappa, std::size_t i, std::size_t j);
/// g(element) chi_i(g)^{-1} chi_j(g)^{-1} = element for every g.
CheckReport kappa_invariance(const AlgebraSpec& algebra, const Kappa& kappa);
/// kappa_evaluate(kappa, i, j) = D1(w_i) D2(w_j) for all i < j.
CheckReport verify_mu1_identification(const HopfAction& action, const Kappa& kappa);

/// For every i: prod_j q_ij^{gamma_j} = chi_i(g), or gamma_i = -1.
bool cg_membership(const AlgebraSpec& algebra, std::span<const std::int64_t> gamma, const GroupElement& g);

enum class CoboundaryVerdict { NotCoboundary, Inconclusive };

/// Bounded search for f: V -> S_q(V)#G with
/// mu(w_i,w_j) - q_ij mu(w_j,w_i) = w_i f(w_j) + f(w_i) w_j - q_ij (w_j f(w_i) + f(w_j) w_i),
/// restricted to the graded pieces where the left side is supported. No
/// solution proves mu is not a coboundary.
CoboundaryVerdict coboundary_search(const HopfAction& action);

struct Certificate {
  CheckReport report;
  bool nontrivial = false;
  std::optional<CoboundaryVerdict> coboundary;
};

/// Sections PRE, (a)..(e). Throws SpecError when k < 3 or P1, P2 are not
/// supported on w3..wk.
Certificate nontriviality_report(const AlgebraSpec& algebra, const SpecialActionSpec& spec,
                                 std::uint32_t degree_bound, bool coboundary_check = false);

}  // namespace qdef
