#include <gtest/gtest.h>

#include "qdef/hopf_action.hpp"
#include "support.hpp"

namespace qdef {
namespace {

using testing::preset_with;

ExampleConfig preset(const std::string& name) { return load_preset(name); }

// The same algebra with a general action given by `action_lines`.
ExampleConfig general_config(const std::string& preset_name, const std::string& action_lines) {
  std::string text = *preset_text(preset_name);
  std::size_t begin = text.find("[action]");
  std::size_t end = text.find("[run]");
  return parse_config(text.substr(0, begin) + "[action]\ntype = general\n" + action_lines + "\n" + text.substr(end));
}

const CheckEntry& entry(const CheckReport& r, const std::string& label) {
  const CheckEntry* e = r.find(label);
  if (!e) throw std::runtime_error("missing entry " + label);
  return *e;
}

TEST(HopfAction, OperatorExamples) {
  ExampleConfig c = preset("motivational-q2");
  HopfAction act = c.make_action();
  const AlgebraSpec& alg = act.algebra();
  auto el = [&](const char* s) { return parse_element(s, alg); };
  EXPECT_EQ(act.sigma(alg.one()), alg.one());
  EXPECT_TRUE(act.d1(alg.one()).is_zero());
  EXPECT_TRUE(act.d2(alg.one()).is_zero());
  EXPECT_EQ(act.d1(alg.w(0)), el("g[(0,1)]"));
  EXPECT_TRUE(act.d1(el("w1^2")).is_zero());
  EXPECT_EQ(act.d2(alg.w(1)), el("w3*g[(1,-1)]"));
  EXPECT_EQ(act.sigma(el("g[(1,0)]")), el("-g[(1,0)]"));
  EXPECT_EQ(act.sigma(el("w1*w2*w3*g[(1,1)]")), el("w1*w2*w3*g[(1,1)]"));
}

TEST(HopfAction, ClosedFormExamples) {
  ExampleConfig c = preset("motivational-q3");
  const AlgebraSpec& alg = c.algebra;
  FamilyParams p = *preset_family("motivational-q3");
  Scalar q = alg.zeta(1);
  for (const auto& g : alg.group_elements()) {
    SmashMonomial m = alg.variable(0);
    m.g = g;
    auto images = closed_form_oracle(alg, q, p, m);
    SmashElement expected = element_mul(alg, alg.element(alg.generator(1)), alg.element(g))
                                .scaled(alg.chi(0, alg.inverse(g)));
    EXPECT_EQ(images.d1, expected);
  }
  SmashMonomial m = alg.variable(1);
  m.alpha[2] = 3;
  EXPECT_TRUE(closed_form_oracle(alg, q, p, m).d1.is_zero());

  ExampleConfig k4 = preset("general-k4-n2-a1-b1");
  auto images = closed_form_oracle(k4.algebra, k4.algebra.zeta(1), *preset_family("general-k4-n2-a1-b1"),
                                   k4.algebra.variable(1));
  EXPECT_EQ(images.d2, parse_element("w3^3*g[(1,1)]", k4.algebra));
  EXPECT_THROW(closed_form_oracle(c.algebra, q, *preset_family("general-k4-n2-a1-b1"), m), SpecError);
}

class FamilyAgreement : public ::testing::TestWithParam<std::string> {};

TEST_P(FamilyAgreement, RecursiveExtensionMatchesClosedForm) {
  ExampleConfig c = preset(GetParam());
  HopfAction act = c.make_action();
  const AlgebraSpec& alg = act.algebra();
  FamilyParams p = *preset_family(GetParam());
  for (const auto& m : basis_monomials(alg, 4)) {
    SmashElement a(m, alg.scalar(1));
    auto oracle = closed_form_oracle(alg, act.q(), p, m);
    ASSERT_EQ(act.sigma(a), oracle.sigma) << m.to_string();
    ASSERT_EQ(act.d1(a), oracle.d1) << m.to_string();
    ASSERT_EQ(act.d2(a), oracle.d2) << m.to_string();
  }
}

TEST_P(FamilyAgreement, SkewLeibnizOnProducts) {
  ExampleConfig c = preset(GetParam());
  HopfAction act = c.make_action();
  const AlgebraSpec& alg = act.algebra();
  auto basis = basis_monomials(alg, 3);
  auto mul = [&](const SmashElement& x, const SmashElement& y) { return element_mul(alg, x, y); };
  for (std::size_t x = 0; x < basis.size(); x += 3) {
    for (std::size_t y = 0; y < basis.size(); y += 2) {
      SmashElement a(basis[x], alg.scalar(1));
      SmashElement b(basis[y], alg.scalar(1));
      SmashElement ab = mul(a, b);
      ASSERT_EQ(act.sigma(ab), mul(act.sigma(a), act.sigma(b)));
      ASSERT_EQ(act.d1(ab), mul(act.d1(a), act.sigma(b)) + mul(a, act.d1(b)));
      ASSERT_EQ(act.d2(ab), mul(act.d2(a), b) + mul(act.sigma(a), act.d2(b)));
    }
  }
}

TEST_P(FamilyAgreement, FoldOverUnreducedWordsIsWellDefined) {
  ExampleConfig c = preset(GetParam());
  HopfAction act = c.make_action();
  const AlgebraSpec& alg = act.algebra();
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::size_t> var(0, alg.num_vars() - 1);
  std::uniform_int_distribution<std::size_t> gen(0, alg.num_generators() - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  for (int s = 0; s < 300; ++s) {
    std::vector<Letter> word;
    for (int l = 0; l < 5; ++l) {
      word.push_back(kind(rng) == 0 ? Letter::group(alg.generator(gen(rng))) : Letter::variable(var(rng)));
    }
    auto state = act.fold(word);
    SmashElement value = free_reduce_oracle(alg, word);
    ASSERT_EQ(state.value, value);
    ASSERT_EQ(state.d1, act.d1(value));
    ASSERT_EQ(state.d2, act.d2(value));
    ASSERT_EQ(state.sigma, act.sigma(value));
  }
}

TEST_P(FamilyAgreement, AllConditionSuitesPass) {
  ExampleConfig c = preset(GetParam());
  HopfAction act = c.make_action();
  CheckReport hq = check_hq_relations(act, 4);
  EXPECT_TRUE(hq.passed()) << hq.to_text();
  CheckReport general = check_module_algebra_general(act);
  EXPECT_TRUE(general.passed()) << general.to_text();
  CheckReport special = check_special_conditions(c.algebra, c.special());
  EXPECT_TRUE(special.passed()) << special.to_text();
  for (int i = 1; i <= 9; ++i) EXPECT_TRUE(general.find("EQ" + std::to_string(i))) << i;
  for (int i = 2; i <= 9; ++i) EXPECT_TRUE(special.find("EQU" + std::to_string(i))) << i;
}

TEST_P(FamilyAgreement, KernelsAndNilpotency) {
  ExampleConfig c = preset(GetParam());
  HopfAction act = c.make_action();
  EXPECT_TRUE(act.d2(c.special().p1).is_zero());
  EXPECT_TRUE(act.d1(c.special().p2).is_zero());
  unsigned n = *act.nilpotency_order();
  for (const auto& m : basis_monomials(act.algebra(), 4)) {
    SmashElement a(m, act.algebra().scalar(1));
    ASSERT_TRUE(act.apply_power(HopfAction::Op::D1, n, a).is_zero());
    ASSERT_TRUE(act.apply_power(HopfAction::Op::D2, n, a).is_zero());
  }
}

INSTANTIATE_TEST_SUITE_P(Presets, FamilyAgreement,
                         ::testing::Values("motivational-q2", "motivational-q3", "motivational-q4",
                                           "general-k4-n2-a1-b1", "general-k4-n3-a1-b0", "general-k5-n2-a0-b1"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (char& ch : s) {
                             if (ch == '-') ch = '_';
                           }
                           return s;
                         });

TEST(HopfAction, TamperedD2FailsHqRelations) {
  ExampleConfig c = general_config("motivational-q2", "q = -1\nxi = -1, 1\nsigma(1) = -w1\nD1(w1) = g[(0,1)]\n"
                                                      "D2(w2) = w2*g[(1,1)]");
  CheckReport r = check_hq_relations(c.make_action(), 4);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(entry(r, "D2-nilpotent").passed);
  EXPECT_EQ(entry(r, "D2-nilpotent").witness->input, "w2 D2^2");
}

TEST(HopfAction, ZeroDerivationsPass) {
  ExampleConfig c = general_config("motivational-q2", "q = 1\nxi = 1, 1");
  HopfAction act = c.make_action();
  CheckReport hq = check_hq_relations(act, 4);
  EXPECT_TRUE(hq.passed()) << hq.to_text();
  EXPECT_EQ(act.nilpotency_order(), std::nullopt);
  EXPECT_FALSE(entry(hq, "D1-nilpotent").note.empty());
  CheckReport general = check_module_algebra_general(act);
  EXPECT_TRUE(general.passed()) << general.to_text();
}

TEST(HopfAction, NonDiagonalSigmaFailsEq1) {
  ExampleConfig c = general_config("motivational-q2", "q = -1\nxi = -1, 1\nsigma(1) = -w1\nsigma(3) = w2\n"
                                                      "D1(w1) = g[(0,1)]\nD2(w2) = w3*g[(1,1)]");
  CheckReport r = check_module_algebra_general(c.make_action());
  EXPECT_FALSE(entry(r, "EQ1").passed) << r.to_text();
}

TEST(HopfAction, SpecialMutationFixtures) {
  for (const char* name : {"motivational-q2", "motivational-q3", "general-k4-n2-a1-b1"}) {
    SCOPED_TRACE(name);
    ExampleConfig wrong_qp = preset_with(name, "qP2(1)", "qP2(1) = 1");
    CheckReport r1 = check_special_conditions(wrong_qp.algebra, wrong_qp.special());
    EXPECT_FALSE(entry(r1, "EQU3").passed);
    EXPECT_TRUE(entry(r1, "EQU2").passed);

    ExampleConfig tampered = preset_with(name, "P1", "P1 = w3");
    CheckReport r2 = check_special_conditions(tampered.algebra, tampered.special());
    EXPECT_FALSE(entry(r2, "EQU5").passed);
    EXPECT_FALSE(entry(check_module_algebra_general(tampered.make_action()), "EQ9").passed);

    std::string ones = "lambda = 1";
    for (std::size_t i = 1; i < wrong_qp.algebra.num_vars(); ++i) ones += ", 1";
    ExampleConfig broken_lambda = preset_with(name, "lambda", ones);
    CheckReport r3 = check_special_conditions(broken_lambda.algebra, broken_lambda.special());
    EXPECT_FALSE(entry(r3, "EQU8").passed);
    EXPECT_FALSE(entry(r3, "EQU3").passed);
  }
}

TEST(HopfAction, ZeroPolynomialsPassVacuously) {
  ExampleConfig c = preset_with("motivational-q2", "P2", "P2 = 0");
  c = parse_config(testing::replace_line(print_config(c), "P1", "P1 = 0"));
  CheckReport r = check_special_conditions(c.algebra, c.special());
  EXPECT_TRUE(r.passed()) << r.to_text();
}

TEST(HopfAction, CommutationScalar) {
  ExampleConfig c = preset("general-k4-n2-a1-b1");
  const AlgebraSpec& alg = c.algebra;
  EXPECT_EQ(commutation_scalar(alg, c.special().p2, 0), alg.scalar(-1));
  EXPECT_EQ(commutation_scalar(alg, c.special().p2, 3), alg.scalar(1));
  EXPECT_EQ(commutation_scalar(alg, SmashElement(), 0), std::nullopt);
  EXPECT_EQ(commutation_scalar(alg, parse_element("w1 + w3", alg), 0), std::nullopt);
}

TEST(HopfAction, XiMustBeACharacter) {
  ExampleConfig c = preset("motivational-q3");
  GeneralActionSpec g = c.general();
  g.xi_on_gens[0] = c.algebra.scalar(2);
  EXPECT_THROW(HopfAction(c.algebra, g), SpecError);
  g = c.general();
  g.d1_on_v.pop_back();
  EXPECT_THROW(HopfAction(c.algebra, g), SpecError);
}

}  // namespace
}  // namespace qdef
