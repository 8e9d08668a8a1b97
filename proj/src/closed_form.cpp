#include "qdef/hopf_action.hpp"

namespace qdef {

namespace {

void require_family(const AlgebraSpec& algebra, const FamilyParams& params) {
  if (params.k < 3 || algebra.num_vars() != params.k) throw SpecError("family needs k >= 3 variables");
  if (params.alpha.size() != params.k - 2 || params.beta.size() != params.k - 2) {
    throw SpecError("family needs k - 2 alpha and beta exponents");
  }
  if (algebra.num_generators() != 2 || algebra.group_orders()[0] != params.n ||
      algebra.group_orders()[1] != params.n) {
    throw SpecError("family needs G = Z_n x Z_n");
  }
}

}  // namespace

HopfAction::Images closed_form_oracle(const AlgebraSpec& algebra, const Scalar& q, const FamilyParams& params,
                                      const SmashMonomial& monomial) {
  require_family(algebra, params);
  const std::size_t k = params.k;
  const std::int64_t n = params.n;
  const auto& e = monomial.alpha;
  const GroupElement& g = monomial.g;

  // chi_1(g^{-1}) from the generator values, by plain powering.
  Scalar chi1_inv = algebra.scalar(1);
  for (std::size_t j = 0; j < 2; ++j) chi1_inv *= algebra.chi_generator(0, j).pow(-std::int64_t(g.exponents[j]));

  HopfAction::Images out;
  out.sigma = SmashElement(monomial, q.pow(e[0]) * chi1_inv);

  if (e[0] > 0) {
    std::int64_t rest = 0;
    for (std::size_t i = 1; i < k; ++i) rest += e[i];
    SmashMonomial m = monomial;
    m.alpha[0] -= 1;
    for (std::size_t i = 2; i < k; ++i) m.alpha[i] += params.alpha[i - 2] * n;
    const std::int64_t s2[] = {0, 1};
    m.g = algebra.multiply(algebra.group_element(s2), g);
    out.d1 = SmashElement(m, quantum_integer(e[0], q) * q.pow(rest) * chi1_inv);
  }

  if (e[1] > 0) {
    SmashMonomial m = monomial;
    m.alpha[1] -= 1;
    for (std::size_t i = 2; i < k; ++i) m.alpha[i] += params.beta[i - 2] * n + (i == 2 ? 1 : 0);
    const std::int64_t s1s2inv[] = {1, -1};
    m.g = algebra.multiply(algebra.group_element(s1s2inv), g);
    out.d2 = SmashElement(m, quantum_integer(e[1], q.inverse()) * q.pow(e[0]));
  }
  return out;
}

}  // namespace qdef
