#include "qdef/cohomology.hpp"

#include <bit>
#include <map>
#include <set>

#include "qdef/linalg.hpp"

namespace qdef {

namespace {

void add_to(KoszulChain& chain, const KoszulKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = chain.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) chain.erase(it);
  }
}

Exponents unit_vector(std::size_t k, std::size_t i) {
  Exponents e(k, 0);
  e[i] = 1;
  return e;
}

// Product of two S_q(V) monomials given by exponent vectors.
std::pair<Scalar, Exponents> poly_mul(const AlgebraSpec& alg, const Exponents& a, const Exponents& b) {
  auto [c, m] = monomial_mul(alg, SmashMonomial{a, alg.identity()}, SmashMonomial{b, alg.identity()});
  return {std::move(c), std::move(m.alpha)};
}

std::string wedge_to_string(std::uint32_t wedge) {
  std::string out;
  for (std::size_t j = 0; j < 32; ++j) {
    if (wedge & (1u << j)) out += (out.empty() ? "w" : "^w") + std::to_string(j + 1);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

KoszulChain koszul_generator(const AlgebraSpec& algebra, std::uint32_t wedge) {
  const std::size_t k = algebra.num_vars();
  KoszulChain out;
  out.emplace(KoszulKey{Exponents(k, 0), Exponents(k, 0), wedge}, algebra.scalar(1));
  return out;
}

KoszulChain koszul_d(const AlgebraSpec& algebra, unsigned m, std::uint32_t wedge) {
  const std::size_t k = algebra.num_vars();
  if (m < 1 || m > k) throw SpecError("Koszul degree must satisfy 1 <= m <= k");
  if (wedge >> k != 0 || static_cast<unsigned>(std::popcount(wedge)) != m) {
    throw SpecError("wedge index does not have exactly m factors among w1..wk");
  }
  std::vector<std::size_t> j;
  for (std::size_t b = 0; b < k; ++b) {
    if (wedge & (1u << b)) j.push_back(b);
  }
  KoszulChain out;
  for (std::size_t p = 0; p < m; ++p) {
    Scalar left = algebra.scalar(1);
    for (std::size_t s = 0; s <= p; ++s) left *= algebra.q(j[s], j[p]);
    Scalar right = algebra.scalar(1);
    for (std::size_t s = p; s < m; ++s) right *= algebra.q(j[p], j[s]);
    Scalar sign = algebra.scalar(p % 2 == 0 ? 1 : -1);
    std::uint32_t rest = wedge & ~(1u << j[p]);
    add_to(out, KoszulKey{unit_vector(k, j[p]), Exponents(k, 0), rest}, sign * left);
    add_to(out, KoszulKey{Exponents(k, 0), unit_vector(k, j[p]), rest}, -(sign * right));
  }
  return out;
}

KoszulChain koszul_apply(const AlgebraSpec& algebra, const KoszulChain& chain) {
  KoszulChain out;
  std::map<std::uint32_t, KoszulChain> differentials;
  for (const auto& [key, c] : chain) {
    if (key.wedge == 0) throw SpecError("the Koszul differential is not defined on wedge degree 0");
    auto it = differentials.find(key.wedge);
    if (it == differentials.end()) {
      unsigned m = static_cast<unsigned>(std::popcount(key.wedge));
      it = differentials.emplace(key.wedge, koszul_d(algebra, m, key.wedge)).first;
    }
    for (const auto& [k2, c2] : it->second) {
      auto [cl, left] = poly_mul(algebra, key.left, k2.left);
      auto [cr, right] = poly_mul(algebra, k2.right, key.right);
      add_to(out, KoszulKey{std::move(left), std::move(right), k2.wedge}, c * c2 * cl * cr);
    }
  }
  return out;
}

std::string koszul_to_string(const KoszulChain& chain) {
  if (chain.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, c] : chain) {
    auto mono = [](const Exponents& e) {
      std::string s;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        s += (s.empty() ? "w" : "*w") + std::to_string(i + 1);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
      }
      return s.empty() ? std::string("1") : s;
    };
    std::string body = "[" + mono(key.left) + " (x) " + mono(key.right) + " (x) " + wedge_to_string(key.wedge) + "]";
    out += render_term(c, body, first);
    first = false;
  }
  return out;
}

bool koszul_square_zero(const AlgebraSpec& algebra, unsigned m) {
  const std::size_t k = algebra.num_vars();
  for (std::uint32_t wedge = 0; wedge < (1u << k); ++wedge) {
    if (static_cast<unsigned>(std::popcount(wedge)) != m) continue;
    if (!koszul_apply(algebra, koszul_d(algebra, m, wedge)).empty()) return false;
  }
  return true;
}

KoszulChain psi2_value(const AlgebraSpec& algebra, std::size_t i, std::size_t j) {
  if (i >= algebra.num_vars() || j >= algebra.num_vars()) throw SpecError("variable index out of range");
  if (i >= j) return {};
  return koszul_generator(algebra, (1u << i) | (1u << j));
}

SmashElement Cochain2::operator()(const SmashElement& a, const SmashElement& b) const {
  SmashElement out;
  for (const auto& [ma, ca] : a.terms()) {
    if (!ma.g.is_identity()) throw SpecError("cochain arguments must lie in S_q(V)");
    for (const auto& [mb, cb] : b.terms()) {
      if (!mb.g.is_identity()) throw SpecError("cochain arguments must lie in S_q(V)");
      out += on_monomials(ma, mb).scaled(ca * cb);
    }
  }
  return out;
}

Cochain2 Cochain2::from_generator_table(const AlgebraSpec& algebra, std::vector<std::vector<SmashElement>> table) {
  const std::size_t k = algebra.num_vars();
  if (table.size() != k) throw SpecError("cochain table needs k rows");
  for (const auto& row : table) {
    if (row.size() != k) throw SpecError("cochain table needs k columns");
  }
  auto index = [](const SmashMonomial& m) -> std::optional<std::size_t> {
    if (m.degree() != 1) return std::nullopt;
    for (std::size_t i = 0; i < m.alpha.size(); ++i) {
      if (m.alpha[i] == 1) return i;
    }
    return std::nullopt;
  };
  return Cochain2{[table = std::move(table), index](const SmashMonomial& a, const SmashMonomial& b) {
    auto i = index(a);
    auto j = index(b);
    if (!i || !j) return SmashElement();
    return table[*i][*j];
  }};
}

Cochain2 r2_average(const AlgebraSpec& algebra, const Cochain2& gamma) {
  return Cochain2{[algebra, gamma](const SmashMonomial& a, const SmashMonomial& b) {
    SmashElement value = gamma.on_monomials(a, b);
    if (value.is_zero()) return value;
    SmashElement sum;
    auto group = algebra.group_elements();
    for (const auto& g : group) {
      GroupElement inv = algebra.inverse(g);
      Scalar c = algebra.character(a.alpha, inv) * algebra.character(b.alpha, inv);
      sum += group_act(algebra, g, value).scaled(c);
    }
    return sum.scaled(algebra.scalar(Rational(1, static_cast<std::int64_t>(group.size()))));
  }};
}

SmashElement theta2_extend(const AlgebraSpec& algebra, const Cochain2& gamma, const SmashElement& a,
                           const GroupElement& g, const SmashElement& b, const GroupElement& h) {
  SmashElement value = gamma(a, group_act(algebra, g, b));
  return element_mul(algebra, value, algebra.element(algebra.multiply(g, h)));
}

bool is_g_invariant(const AlgebraSpec& algebra, const Cochain2& gamma, std::uint32_t degree) {
  Cochain2 averaged = r2_average(algebra, gamma);
  std::vector<SmashMonomial> monomials;
  for (std::uint32_t d = 0; d <= degree; ++d) {
    for (auto& alpha : exponent_vectors(algebra.num_vars(), d)) monomials.push_back({alpha, algebra.identity()});
  }
  for (const auto& a : monomials) {
    for (const auto& b : monomials) {
      if (!(gamma.on_monomials(a, b) == averaged.on_monomials(a, b))) return false;
    }
  }
  return true;
}

Kappa kappa_of(const AlgebraSpec& algebra, const SpecialActionSpec& spec) {
  SmashElement e = element_mul(algebra, spec.p1, algebra.element(spec.g1));
  e = element_mul(algebra, e, spec.p2);
  e = element_mul(algebra, e, algebra.element(spec.g2));
  return Kappa{std::move(e), 0, 1};
}

SmashElement kappa_evaluate(const AlgebraSpec& algebra, const Kappa& kappa, std::size_t i, std::size_t j) {
  if (i >= j || j >= algebra.num_vars()) throw SpecError("kappa is evaluated on w_i (x) w_j with i < j");
  const std::uint32_t form = (1u << kappa.i) | (1u << kappa.j);
  auto group = algebra.group_elements();
  SmashElement sum;
  for (const auto& g : group) {
    GroupElement inv = algebra.inverse(g);
    // g^{-1}(w_i) (x) g^{-1}(w_j) contributes its scalars to the wedge.
    Scalar c = algebra.chi(i, inv) * algebra.chi(j, inv);
    Scalar pairing = algebra.scalar(0);
    for (const auto& [key, coef] : psi2_value(algebra, i, j)) {
      if (key.wedge == form) pairing += coef;
    }
    if (pairing.is_zero()) continue;
    sum += group_act(algebra, g, kappa.element.scaled(c * pairing));
  }
  return sum.scaled(algebra.scalar(Rational(1, static_cast<std::int64_t>(group.size()))));
}

CheckReport kappa_invariance(const AlgebraSpec& algebra, const Kappa& kappa) {
  CheckReport report("G-invariance of kappa");
  report.entry("G-invariance");
  for (const auto& g : algebra.group_elements()) {
    Scalar dual = (algebra.chi(kappa.i, g) * algebra.chi(kappa.j, g)).inverse();
    SmashElement lhs = group_act(algebra, g, kappa.element).scaled(dual);
    report.expect("G-invariance", lhs == kappa.element, [&] {
      return Witness{"g=" + g.to_string(), lhs.to_string(), kappa.element.to_string()};
    });
  }
  return report;
}

CheckReport verify_mu1_identification(const HopfAction& action, const Kappa& kappa) {
  const AlgebraSpec& alg = action.algebra();
  CheckReport report("identification of mu1 with kappa");
  report.entry("identification");
  for (std::size_t i = 0; i < alg.num_vars(); ++i) {
    for (std::size_t j = i + 1; j < alg.num_vars(); ++j) {
      SmashElement lhs = kappa_evaluate(alg, kappa, i, j);
      SmashElement rhs = element_mul(alg, action.d1(alg.w(i)), action.d2(alg.w(j)));
      report.expect("identification", lhs == rhs, [&] {
        return Witness{"(w" + std::to_string(i + 1) + ", w" + std::to_string(j + 1) + ")", lhs.to_string(),
                       rhs.to_string()};
      });
    }
  }
  return report;
}

bool cg_membership(const AlgebraSpec& algebra, std::span<const std::int64_t> gamma, const GroupElement& g) {
  const std::size_t k = algebra.num_vars();
  if (gamma.size() != k) throw SpecError("gamma needs one entry per variable");
  for (auto x : gamma) {
    if (x < -1) throw SpecError("gamma entries must be >= -1");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (gamma[i] == -1) continue;
    Scalar product = algebra.scalar(1);
    for (std::size_t j = 0; j < k; ++j) product *= algebra.q(i, j).pow(gamma[j]);
    if (!(product == algebra.chi(i, g))) return false;
  }
  return true;
}

CoboundaryVerdict coboundary_search(const HopfAction& action) {
  const AlgebraSpec& alg = action.algebra();
  const std::size_t k = alg.num_vars();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<SmashElement> targets;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      pairs.emplace_back(i, j);
      SmashElement mij = element_mul(alg, action.d1(alg.w(i)), action.d2(alg.w(j)));
      SmashElement mji = element_mul(alg, action.d1(alg.w(j)), action.d2(alg.w(i)));
      targets.push_back(mij - mji.scaled(alg.q(i, j)));
    }
  }
  std::set<std::pair<std::uint32_t, GroupElement>> blocks;
  for (const auto& c : targets) {
    for (const auto& [m, coef] : c.terms()) blocks.emplace(m.degree(), m.g);
  }
  for (const auto& [degree, g] : blocks) {
    if (degree == 0) return CoboundaryVerdict::NotCoboundary;
    auto rows = exponent_vectors(k, degree);
    std::map<Exponents, std::size_t> row_index;
    for (std::size_t r = 0; r < rows.size(); ++r) row_index.emplace(rows[r], r);
    const std::size_t height = pairs.size() * rows.size();
    auto coordinates = [&](std::size_t p, const SmashElement& value, std::vector<Scalar>& out) {
      for (const auto& [m, coef] : value.terms()) {
        if (m.g == g && m.degree() == degree) out[p * rows.size() + row_index.at(m.alpha)] += coef;
      }
    };
    std::vector<Scalar> target(height, alg.scalar(0));
    for (std::size_t p = 0; p < pairs.size(); ++p) coordinates(p, targets[p], target);

    ScalarMatrix columns;
    for (std::size_t l = 0; l < k; ++l) {
      for (auto& alpha : exponent_vectors(k, degree - 1)) {
        SmashElement x(SmashMonomial{alpha, g}, alg.scalar(1));
        std::vector<Scalar> column(height, alg.scalar(0));
        for (std::size_t p = 0; p < pairs.size(); ++p) {
          auto [i, j] = pairs[p];
          const Scalar& qij = alg.q(i, j);
          SmashElement value;
          if (l == j) value += element_mul(alg, alg.w(i), x) - element_mul(alg, x, alg.w(i)).scaled(qij);
          if (l == i) value += element_mul(alg, x, alg.w(j)) - element_mul(alg, alg.w(j), x).scaled(qij);
          coordinates(p, value, column);
        }
        columns.push_back(std::move(column));
      }
    }
    if (!in_column_span(columns, target)) return CoboundaryVerdict::NotCoboundary;
  }
  return CoboundaryVerdict::Inconclusive;
}

Certificate nontriviality_report(const AlgebraSpec& algebra, const SpecialActionSpec& spec,
                                 std::uint32_t degree_bound, bool coboundary_check) {
  const std::size_t k = algebra.num_vars();
  if (k < 3) throw SpecError("the nontriviality certificate needs k >= 3");
  for (const SmashElement* p : {&spec.p1, &spec.p2}) {
    for (const auto& [m, c] : p->terms()) {
      if (!m.g.is_identity() || m.alpha[0] != 0 || m.alpha[1] != 0) {
        throw SpecError("P1 and P2 must lie in the subalgebra generated by w3..wk");
      }
    }
  }

  Certificate out;
  CheckReport& report = out.report;
  report = CheckReport("nontriviality certificate");

  CheckReport special = check_special_conditions(algebra, spec, degree_bound);
  std::string failing;
  for (const auto& e : special.entries()) {
    if (!e.passed) failing += (failing.empty() ? "" : ",") + e.label;
  }
  report.expect("PRE", special.passed(), [&] { return Witness{"module-algebra conditions", failing, "PASS"}; });

  HopfAction action(algebra, spec.to_general(algebra));
  Kappa kappa = kappa_of(algebra, spec);

  report.expect("(a) kappa-nonzero", !kappa.element.is_zero(),
                [&] { return Witness{"P1*g1*P2*g2", "0", "nonzero"}; });

  CheckReport inv = kappa_invariance(algebra, kappa);
  CheckEntry& b = report.entry("(b) G-invariance");
  b.cases = inv.entries().front().cases;
  b.passed = inv.passed();
  b.witness = inv.entries().front().witness;

  report.entry("(c) C_g-membership");
  GroupElement g = algebra.multiply(spec.g1, spec.g2);
  SmashElement product = element_mul(algebra, spec.p1, spec.p2);
  for (const auto& [m, c] : product.terms()) {
    std::vector<std::int64_t> gamma(m.alpha.begin(), m.alpha.end());
    gamma[0] -= 1;
    gamma[1] -= 1;
    bool member = cg_membership(algebra, gamma, g);
    report.expect("(c) C_g-membership", member, [&] {
      std::string text = "(";
      for (std::size_t i = 0; i < k; ++i) text += (i ? "," : "") + std::to_string(gamma[i]);
      return Witness{"alpha-beta=" + text + ") g=" + g.to_string(), "not in C_g", "in C_g"};
    });
  }

  CheckReport ident = verify_mu1_identification(action, kappa);
  CheckEntry& d = report.entry("(d) identification");
  d.cases = ident.entries().front().cases;
  d.passed = ident.passed();
  d.witness = ident.entries().front().witness;

  CheckReport cocycle = cocycle_check_mu1(action, degree_bound);
  CheckEntry& e = report.entry("(e) cocycle");
  e.cases = cocycle.entries().front().cases;
  e.passed = cocycle.passed();
  e.witness = cocycle.entries().front().witness;

  out.nontrivial = report.passed();
  if (coboundary_check) out.coboundary = coboundary_search(action);
  return out;
}

}  // namespace qdef
