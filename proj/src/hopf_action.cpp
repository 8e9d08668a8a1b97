#include "qdef/hopf_action.hpp"

#include "qdef/linalg.hpp"

namespace qdef {

namespace {

SmashElement mul(const AlgebraSpec& alg, const SmashElement& a, const SmashElement& b) {
  return element_mul(alg, a, b);
}

std::string var_name(std::size_t i) { return "w" + std::to_string(i + 1); }

Witness witness(std::string input, const SmashElement& lhs, const SmashElement& rhs) {
  return Witness{std::move(input), lhs.to_string(), rhs.to_string()};
}

const char* op_name(HopfAction::Op op) {
  switch (op) {
    case HopfAction::Op::Sigma:
      return "sigma";
    case HopfAction::Op::D1:
      return "D1";
    case HopfAction::Op::D2:
      return "D2";
  }
  return "?";
}

// The monomial with its last canonical letter removed, and that letter.
std::pair<SmashMonomial, Letter> split_last(const AlgebraSpec& alg, const SmashMonomial& m) {
  SmashMonomial prefix = m;
  for (std::size_t j = alg.num_generators(); j-- > 0;) {
    if (prefix.g.exponents[j] != 0) {
      --prefix.g.exponents[j];
      return {std::move(prefix), Letter::group(alg.generator(j))};
    }
  }
  for (std::size_t i = alg.num_vars(); i-- > 0;) {
    if (prefix.alpha[i] != 0) {
      --prefix.alpha[i];
      return {std::move(prefix), Letter::variable(i)};
    }
  }
  throw std::logic_error("split_last on the unit monomial");
}

std::optional<std::size_t> generator_index(const AlgebraSpec& alg, const GroupElement& g) {
  for (std::size_t j = 0; j < alg.num_generators(); ++j) {
    if (alg.group_orders()[j] > 1 && g == alg.generator(j)) return j;
  }
  return std::nullopt;
}

}  // namespace

GeneralActionSpec SpecialActionSpec::to_general(const AlgebraSpec& algebra) const {
  const std::size_t k = algebra.num_vars();
  const std::size_t m = algebra.num_generators();
  if (lambda.size() != k) throw SpecError("lambda needs one value per variable");
  if (k < 2) throw SpecError("special action needs at least two variables");
  GeneralActionSpec out;
  out.q = q;
  out.xi_on_gens = xi_on_gens;
  for (std::size_t i = 0; i < k; ++i) out.sigma_on_v.push_back(algebra.w(i).scaled(lambda[i]));
  out.d1_on_v.assign(k, SmashElement());
  out.d2_on_v.assign(k, SmashElement());
  out.d1_on_v[0] = element_mul(algebra, p1, algebra.element(g1));
  out.d2_on_v[1] = element_mul(algebra, p2, algebra.element(g2));
  out.d1_on_gens.assign(m, SmashElement());
  out.d2_on_gens.assign(m, SmashElement());
  return out;
}

HopfAction::HopfAction(AlgebraSpec algebra, GeneralActionSpec spec)
    : algebra_(std::move(algebra)), spec_(std::move(spec)) {
  const std::size_t k = algebra_.num_vars();
  const std::size_t m = algebra_.num_generators();
  if (spec_.sigma_on_v.size() != k || spec_.d1_on_v.size() != k || spec_.d2_on_v.size() != k) {
    throw SpecError("action needs one sigma, D1 and D2 image per variable");
  }
  if (spec_.xi_on_gens.size() != m || spec_.d1_on_gens.size() != m || spec_.d2_on_gens.size() != m) {
    throw SpecError("action needs one xi, D1 and D2 value per group generator");
  }
  spec_.q = algebra_.scalar(0) + spec_.q;
  if (spec_.q.is_zero()) throw SpecError("q must be nonzero");
  for (std::size_t j = 0; j < m; ++j) {
    Scalar& x = spec_.xi_on_gens[j];
    x = algebra_.scalar(0) + x;
    if (x.is_zero() || !x.pow(algebra_.group_orders()[j]).is_one()) {
      throw SpecError("xi is not a homomorphism: xi(generator " + std::to_string(j + 1) + ")^" +
                      std::to_string(algebra_.group_orders()[j]) + " != 1");
    }
  }
  if (auto order = root_of_unity_order(spec_.q); order && *order >= 2) nilpotency_ = *order;
}

Scalar HopfAction::xi(const GroupElement& g) const {
  Scalar out = algebra_.scalar(1);
  for (std::size_t j = 0; j < g.exponents.size(); ++j) {
    if (g.exponents[j] != 0) out *= spec_.xi_on_gens[j].pow(g.exponents[j]);
  }
  return out;
}

HopfAction::Images HopfAction::letter_images(const Letter& letter) const {
  if (letter.is_variable()) {
    return Images{spec_.sigma_on_v[letter.var], spec_.d1_on_v[letter.var], spec_.d2_on_v[letter.var]};
  }
  if (auto j = generator_index(algebra_, letter.element)) {
    return Images{algebra_.element(letter.element).scaled(spec_.xi_on_gens[*j]), spec_.d1_on_gens[*j],
                  spec_.d2_on_gens[*j]};
  }
  return images(algebra_.group_monomial(letter.element));
}

const HopfAction::Images& HopfAction::images(const SmashMonomial& monomial) const {
  if (auto it = memo_.find(monomial); it != memo_.end()) return it->second;
  Images out;
  if (monomial.degree() == 0 && monomial.g.is_identity()) {
    out.sigma = algebra_.one();
  } else {
    auto [prefix, last] = split_last(algebra_, monomial);
    const Images& pre = images(prefix);
    Images x = letter_images(last);
    SmashElement prefix_el(prefix, algebra_.scalar(1));
    SmashElement last_el = last.is_variable() ? algebra_.w(last.var) : algebra_.element(last.element);
    out.sigma = mul(algebra_, pre.sigma, x.sigma);
    out.d1 = mul(algebra_, pre.d1, x.sigma) + mul(algebra_, prefix_el, x.d1);
    out.d2 = mul(algebra_, pre.d2, last_el) + mul(algebra_, pre.sigma, x.d2);
  }
  return memo_.emplace(monomial, std::move(out)).first->second;
}

SmashElement HopfAction::apply(Op op, const SmashElement& a) const {
  std::vector<SmashElement::Term> terms;
  for (const auto& [m, c] : a.terms()) {
    const Images& im = images(m);
    const SmashElement& image = op == Op::Sigma ? im.sigma : op == Op::D1 ? im.d1 : im.d2;
    for (const auto& [m2, c2] : image.terms()) terms.emplace_back(m2, c * c2);
  }
  return SmashElement::from_terms(std::move(terms));
}

SmashElement HopfAction::apply_power(Op op, unsigned times, const SmashElement& a) const {
  SmashElement out = a;
  for (unsigned i = 0; i < times && !out.is_zero(); ++i) out = apply(op, out);
  return out;
}

HopfAction::FoldState HopfAction::fold(std::span<const Letter> word) const {
  FoldState s{algebra_.one(), algebra_.one(), {}, {}};
  for (const auto& letter : word) {
    Images x = letter_images(letter);
    SmashElement el = letter.is_variable() ? algebra_.w(letter.var) : algebra_.element(letter.element);
    SmashElement d1 = mul(algebra_, s.d1, x.sigma) + mul(algebra_, s.value, x.d1);
    SmashElement d2 = mul(algebra_, s.d2, el) + mul(algebra_, s.sigma, x.d2);
    s.sigma = mul(algebra_, s.sigma, x.sigma);
    s.value = mul(algebra_, s.value, el);
    s.d1 = std::move(d1);
    s.d2 = std::move(d2);
  }
  return s;
}

std::optional<Scalar> commutation_scalar(const AlgebraSpec& algebra, const SmashElement& p, std::size_t j) {
  if (p.is_zero()) return std::nullopt;
  SmashElement left = element_mul(algebra, p, algebra.w(j));
  SmashElement right = element_mul(algebra, algebra.w(j), p);
  const auto& [mono, coef] = right.terms().front();
  Scalar c = left.coefficient(mono) / coef;
  if (left == right.scaled(c)) return c;
  return std::nullopt;
}

namespace {

// qσD(a) = Dσ(a) for one operator.
void check_q_sigma(CheckReport& report, const std::string& label, const HopfAction& action, HopfAction::Op op,
                   const SmashElement& a, const std::string& input) {
  SmashElement lhs = action.sigma(action.apply(op, a)).scaled(action.q());
  SmashElement rhs = action.apply(op, action.sigma(a));
  report.expect(label, lhs == rhs, [&] { return witness(input, lhs, rhs); });
}

void check_commute(CheckReport& report, const std::string& label, const HopfAction& action, const SmashElement& a,
                   const std::string& input) {
  SmashElement lhs = action.d1(action.d2(a));
  SmashElement rhs = action.d2(action.d1(a));
  report.expect(label, lhs == rhs, [&] { return witness(input, lhs, rhs); });
}

void check_nilpotent(CheckReport& report, const std::string& label, const HopfAction& action, HopfAction::Op op,
                     const SmashElement& a, const std::string& input) {
  unsigned n = *action.nilpotency_order();
  SmashElement lhs = action.apply_power(op, n, a);
  report.expect(label, lhs.is_zero(), [&] {
    return witness(input + " " + op_name(op) + "^" + std::to_string(n), lhs, SmashElement());
  });
}

void nilpotency_entries(CheckReport& report, const std::vector<std::string>& labels, const HopfAction& action,
                        const std::vector<SmashMonomial>& basis) {
  if (!action.nilpotency_order()) {
    for (const auto& label : labels) report.entry(label).note = "q is not a primitive root of unity of order >= 2";
    return;
  }
  const AlgebraSpec& alg = action.algebra();
  for (const auto& m : basis) {
    SmashElement a(m, alg.scalar(1));
    if (labels.size() == 1) {
      check_nilpotent(report, labels[0], action, HopfAction::Op::D1, a, m.to_string());
      check_nilpotent(report, labels[0], action, HopfAction::Op::D2, a, m.to_string());
    } else {
      check_nilpotent(report, labels[0], action, HopfAction::Op::D1, a, m.to_string());
      check_nilpotent(report, labels[1], action, HopfAction::Op::D2, a, m.to_string());
    }
  }
}

// Bijectivity of sigma on V: every image lies in V and the matrix is invertible.
void check_sigma_on_v(CheckReport& report, const std::string& label, const HopfAction& action) {
  const AlgebraSpec& alg = action.algebra();
  const std::size_t k = alg.num_vars();
  ScalarMatrix matrix(k, std::vector<Scalar>(k, alg.scalar(0)));
  bool linear = true;
  for (std::size_t i = 0; i < k; ++i) {
    const SmashElement& image = action.spec().sigma_on_v[i];
    bool in_v = true;
    for (const auto& [m, c] : image.terms()) {
      if (m.degree() != 1 || !m.g.is_identity()) {
        in_v = false;
        break;
      }
      for (std::size_t r = 0; r < k; ++r) {
        if (m.alpha[r] == 1) matrix[r][i] = c;
      }
    }
    report.expect(label, in_v, [&] {
      return Witness{"sigma(" + var_name(i) + ")", image.to_string(), "an element of V"};
    });
    linear = linear && in_v;
  }
  if (linear) {
    std::size_t rank = scalar_rank(matrix);
    report.expect(label, rank == k, [&] {
      return Witness{"sigma on V", "rank " + std::to_string(rank), "rank " + std::to_string(k)};
    });
  }
  for (std::size_t j = 0; j < alg.num_generators(); ++j) {
    const Scalar& x = action.spec().xi_on_gens[j];
    report.expect(label, !x.is_zero(), [&] {
      return Witness{"xi(generator " + std::to_string(j + 1) + ")", x.to_string(), "nonzero"};
    });
  }
}

}  // namespace

CheckReport check_hq_relations(const HopfAction& action, std::uint32_t degree_bound) {
  CheckReport report("H_q relations up to degree " + std::to_string(degree_bound));
  const AlgebraSpec& alg = action.algebra();
  check_sigma_on_v(report, "sigma-bijective", action);
  auto basis = basis_monomials(alg, degree_bound);
  for (const auto& m : basis) {
    SmashElement a(m, alg.scalar(1));
    std::string input = m.to_string();
    check_commute(report, "D1D2-commute", action, a, input);
    check_q_sigma(report, "q-sigma-D1", action, HopfAction::Op::D1, a, input);
    check_q_sigma(report, "q-sigma-D2", action, HopfAction::Op::D2, a, input);
  }
  nilpotency_entries(report, {"D1-nilpotent", "D2-nilpotent"}, action, basis);
  return report;
}

CheckReport check_module_algebra_general(const HopfAction& action, std::uint32_t sample_degree) {
  CheckReport report("module-algebra conditions (general)");
  const AlgebraSpec& alg = action.algebra();
  const std::size_t k = alg.num_vars();
  const auto group = alg.group_elements();
  const auto basis = basis_monomials(alg, sample_degree);
  const HopfAction::Op ops[] = {HopfAction::Op::D1, HopfAction::Op::D2};

  // EQ1: sigma is a bijective kG-linear map on V.
  check_sigma_on_v(report, "EQ1", action);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& g : group) {
      SmashElement lhs = action.sigma(group_act(alg, g, alg.w(i)));
      SmashElement rhs = group_act(alg, g, action.sigma(alg.w(i)));
      report.expect("EQ1", lhs == rhs, [&] {
        return witness("sigma(g(" + var_name(i) + ")) vs g(sigma(" + var_name(i) + ")), g=" + g.to_string(), lhs,
                       rhs);
      });
    }
  }

  // EQ2 / EQ3: D1 D2 = D2 D1 on generators, then on sampled monomials.
  for (std::size_t i = 0; i < k; ++i) check_commute(report, "EQ2", action, alg.w(i), var_name(i));
  for (const auto& m : basis) {
    if (m.degree() > 0) check_commute(report, "EQ2", action, SmashElement(m, alg.scalar(1)), m.to_string());
  }
  for (const auto& g : group) check_commute(report, "EQ3", action, alg.element(g), g.to_string());

  // EQ4: q sigma D(w_i) = D sigma(w_i); EQ5: q sigma D(g) = xi(g) D(g).
  for (auto op : ops) {
    for (std::size_t i = 0; i < k; ++i) {
      check_q_sigma(report, "EQ4", action, op, alg.w(i), std::string(op_name(op)) + " at " + var_name(i));
    }
    for (const auto& g : group) {
      SmashElement dg = action.apply(op, alg.element(g));
      SmashElement lhs = action.sigma(dg).scaled(action.q());
      SmashElement rhs = dg.scaled(action.xi(g));
      report.expect("EQ5", lhs == rhs,
                    [&] { return witness(std::string(op_name(op)) + " at " + g.to_string(), lhs, rhs); });
    }
  }

  // EQ6: nilpotency.
  nilpotency_entries(report, {"EQ6"}, action, basis);

  // EQ7 / EQ8: the q-commutation relations are respected.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      Letter ij[] = {Letter::variable(i), Letter::variable(j)};
      Letter ji[] = {Letter::variable(j), Letter::variable(i)};
      auto left = action.fold(ij);
      auto right = action.fold(ji);
      const Scalar& qij = alg.q(i, j);
      std::string input = var_name(i) + "*" + var_name(j);
      SmashElement r1 = right.d1.scaled(qij);
      SmashElement r2 = right.d2.scaled(qij);
      report.expect("EQ7", left.d1 == r1, [&] { return witness("D1 at " + input, left.d1, r1); });
      report.expect("EQ7", left.d2 == r2, [&] { return witness("D2 at " + input, left.d2, r2); });
      SmashElement rs = right.sigma.scaled(qij);
      report.expect("EQ8", left.sigma == rs, [&] { return witness("sigma at " + input, left.sigma, rs); });
    }
  }

  // EQ9: the smash relation g(w_i) g = g w_i is respected, together with the
  // relations presenting G (generator orders and commutation).
  for (const auto& g : group) {
    for (std::size_t i = 0; i < k; ++i) {
      Letter wg[] = {Letter::variable(i), Letter::group(g)};
      Letter gw[] = {Letter::group(g), Letter::variable(i)};
      auto left = action.fold(wg);
      auto right = action.fold(gw);
      Scalar chi = alg.chi(i, g);
      std::string input = g.to_string() + " and " + var_name(i);
      SmashElement l1 = left.d1.scaled(chi);
      SmashElement l2 = left.d2.scaled(chi);
      report.expect("EQ9", l1 == right.d1, [&] { return witness("D1 at " + input, l1, right.d1); });
      report.expect("EQ9", l2 == right.d2, [&] { return witness("D2 at " + input, l2, right.d2); });
    }
  }
  for (std::size_t j = 0; j < alg.num_generators(); ++j) {
    GroupElement gen = alg.generator(j);
    std::vector<Letter> power(alg.group_orders()[j], Letter::group(gen));
    auto s = action.fold(power);
    std::string input = gen.to_string() + "^" + std::to_string(alg.group_orders()[j]);
    report.expect("EQ9", s.d1.is_zero(), [&] { return witness("D1 at " + input, s.d1, SmashElement()); });
    report.expect("EQ9", s.d2.is_zero(), [&] { return witness("D2 at " + input, s.d2, SmashElement()); });
    for (std::size_t l = j + 1; l < alg.num_generators(); ++l) {
      Letter ab[] = {Letter::group(gen), Letter::group(alg.generator(l))};
      Letter ba[] = {Letter::group(alg.generator(l)), Letter::group(gen)};
      auto x = action.fold(ab);
      auto y = action.fold(ba);
      std::string pair = gen.to_string() + "*" + alg.generator(l).to_string();
      report.expect("EQ9", x.d1 == y.d1, [&] { return witness("D1 at " + pair, x.d1, y.d1); });
      report.expect("EQ9", x.d2 == y.d2, [&] { return witness("D2 at " + pair, x.d2, y.d2); });
    }
  }
  return report;
}

CheckReport check_special_conditions(const AlgebraSpec& algebra, const SpecialActionSpec& spec,
                                     std::uint32_t degree_bound) {
  CheckReport report("module-algebra conditions (special)");
  HopfAction action(algebra, spec.to_general(algebra));
  const std::size_t k = algebra.num_vars();
  const auto group = algebra.group_elements();
  const SmashElement* ps[] = {&spec.p1, &spec.p2};
  const GroupElement* gs[] = {&spec.g1, &spec.g2};
  const std::vector<std::optional<Scalar>>* declared[] = {&spec.qp1, &spec.qp2};

  // EQU2 / EQU3: q_{P_1,w_i} = q_{1i} lambda_i^{-1} chi_i(g1^{-1}) and
  // q_{P_2,w_i} = q_{2i} lambda_i chi_i(g2^{-1}).
  for (std::size_t t = 0; t < 2; ++t) {
    const std::string label = t == 0 ? "EQU2" : "EQU3";
    const SmashElement& p = *ps[t];
    std::string pname = "P" + std::to_string(t + 1);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == t) continue;
      std::string input = "q_{" + pname + "," + var_name(i) + "}";
      if (p.is_zero()) {
        report.expect(label, true, [] { return Witness{}; });
        continue;
      }
      std::optional<Scalar> qp;
      const auto& decl = *declared[t];
      if (i < decl.size() && decl[i]) {
        qp = *decl[i];
        SmashElement lhs = element_mul(algebra, p, algebra.w(i));
        SmashElement rhs = element_mul(algebra, algebra.w(i), p).scaled(*qp);
        if (!report.expect(label, lhs == rhs, [&] { return witness(pname + "*" + var_name(i), lhs, rhs); })) {
          continue;
        }
      } else {
        qp = commutation_scalar(algebra, p, i);
        if (!report.expect(label, qp.has_value(), [&] {
              return Witness{input, "no scalar", "P w = c w P"};
            })) {
          continue;
        }
      }
      Scalar lam = t == 0 ? spec.lambda[i].inverse() : spec.lambda[i];
      Scalar expected = algebra.q(t, i) * lam * algebra.chi(i, algebra.inverse(*gs[t]));
      report.expect(label, *qp == expected,
                    [&] { return Witness{input, qp->to_string(), expected.to_string()}; });
    }
  }

  // EQU4: g1, g2 central.
  for (std::size_t t = 0; t < 2; ++t) {
    for (const auto& h : group) {
      GroupElement a = algebra.multiply(*gs[t], h);
      GroupElement b = algebra.multiply(h, *gs[t]);
      report.expect("EQU4", a == b, [&] {
        return Witness{"g" + std::to_string(t + 1) + " and " + h.to_string(), a.to_string(), b.to_string()};
      });
    }
  }

  // EQU5: g(P1) = chi_1(g) xi(g) P1; EQU6: g(P2) = chi_2(g) xi(g^{-1}) P2.
  for (const auto& g : group) {
    SmashElement lhs1 = group_act(algebra, g, spec.p1);
    SmashElement rhs1 = spec.p1.scaled(algebra.chi(0, g) * action.xi(g));
    report.expect("EQU5", lhs1 == rhs1, [&] { return witness("g=" + g.to_string(), lhs1, rhs1); });
    SmashElement lhs2 = group_act(algebra, g, spec.p2);
    SmashElement rhs2 = spec.p2.scaled(algebra.chi(1, g) * action.xi(algebra.inverse(g)));
    report.expect("EQU6", lhs2 == rhs2, [&] { return witness("g=" + g.to_string(), lhs2, rhs2); });
  }

  // EQU7: P1 in ker D2, P2 in ker D1.
  SmashElement d2p1 = action.d2(spec.p1);
  SmashElement d1p2 = action.d1(spec.p2);
  report.expect("EQU7", d2p1.is_zero(), [&] { return witness("D2(P1)", d2p1, SmashElement()); });
  report.expect("EQU7", d1p2.is_zero(), [&] { return witness("D1(P2)", d1p2, SmashElement()); });

  // EQU8: sigma(P_i) = q^{-1} lambda_i xi(g_i^{-1}) P_i.
  for (std::size_t t = 0; t < 2; ++t) {
    SmashElement lhs = action.sigma(*ps[t]);
    SmashElement rhs = ps[t]->scaled(spec.q.inverse() * spec.lambda[t] * action.xi(algebra.inverse(*gs[t])));
    report.expect("EQU8", lhs == rhs,
                  [&] { return witness("sigma(P" + std::to_string(t + 1) + ")", lhs, rhs); });
  }

  // EQU9: nilpotency.
  nilpotency_entries(report, {"EQU9"}, action, basis_monomials(algebra, degree_bound));
  return report;
}

}  // namespace qdef
