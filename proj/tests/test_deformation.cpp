#include <gtest/gtest.h>

#include "qdef/deformation.hpp"
#include "support.hpp"

namespace qdef {
namespace {

struct Fixture {
  explicit Fixture(const std::string& name) : config(load_preset(name)), action(config.make_action()), star(action) {}
  SmashElement el(const char* text) const { return parse_element(text, action.algebra()); }
  DeformElement de(const char* text, unsigned d = 0) const {
    DeformElement out;
    out.add(d, el(text));
    return out;
  }

  ExampleConfig config;
  HopfAction action;
  StarProduct star;
};

TEST(Deformation, UdfExamples) {
  Fixture f("motivational-q2");
  const AlgebraSpec& alg = f.action.algebra();
  DeformElement unit_left = f.star.udf_pair(alg.one(), f.el("w1*w2*g[(1,1)]"));
  EXPECT_EQ(unit_left, f.de("w1*w2*g[(1,1)]"));
  EXPECT_EQ(f.star.udf_pair(f.el("w2^2"), alg.one()), f.de("w2^2"));
  EXPECT_EQ(f.star.udf_pair(alg.w(0), alg.w(1)), f.de("w1*w2") + f.de("-w3*g[(1,0)]", 1));
  EXPECT_EQ(f.star.udf_pair(alg.w(1), alg.w(0)), f.de("w2*w1"));
  EXPECT_EQ((f.de("w1*w2") + f.de("-w3*g[(1,0)]", 1)).to_string(), "w1*w2 - t * w3*g[(1,0)]");
  EXPECT_EQ((f.de("w1", 2) + f.de("2", 3)).to_string(), "t^2 * w1 + 2 * t^3");
}

TEST(Deformation, StarMultiplyExamples) {
  Fixture f("motivational-q2");
  DeformElement one = f.de("1");
  DeformElement a = f.de("w1*w3") + f.de("w2*g[(0,1)]", 2);
  EXPECT_EQ(f.star.multiply(one, a), a);
  DeformElement tail = f.de("w3*g[(1,0)]", 1);
  EXPECT_EQ(f.star.multiply(tail, one), tail);
  DeformElement w1 = f.de("w1");
  DeformElement w2 = f.de("w2");
  EXPECT_EQ(f.star.multiply(f.star.multiply(w1, w2), w1), f.star.multiply(w1, f.star.multiply(w2, w1)));
}

TEST(Deformation, DeformedRelations) {
  Fixture q2("motivational-q2");
  EXPECT_EQ(q2.star.deformed_relation(0, 1), q2.de("-w3*g[(1,0)]", 1));
  EXPECT_TRUE(q2.star.deformed_relation(1, 2).is_zero());
  EXPECT_TRUE(q2.star.deformed_relation(0, 2).is_zero());
  Fixture q3("motivational-q3");
  EXPECT_EQ(q3.star.deformed_relation(0, 1), q3.de("z*w3*g[(1,0)]", 1));
}

TEST(Deformation, PresentationLines) {
  Fixture q2("motivational-q2");
  Presentation p = presentation_report(q2.star);
  EXPECT_EQ(p.group, "Z2 x Z2");
  EXPECT_EQ(p.relations, (std::vector<std::string>{"w1*w2 + w2*w1 + t * w3*g[(1,0)] = 0", "w1*w3 + w3*w1 = 0",
                                                   "w2*w3 - w3*w2 = 0"}));
  EXPECT_EQ(p.group_relations.size(), 6u);
  EXPECT_EQ(p.group_relations[0], "g[(1,0)]*w1 + w1*g[(1,0)] = 0");

  Fixture k4("general-k4-n2-a1-b1");
  Presentation p4 = presentation_report(k4.star);
  EXPECT_EQ(p4.relations.front(), "w1*w2 + w2*w1 + t * w3^5*g[(1,0)] = 0");
  EXPECT_EQ(p4.relations.size(), 6u);
}

TEST(Deformation, ZeroDerivationsGiveClassicalRelations) {
  std::string text = *preset_text("motivational-q2");
  text = text.substr(0, text.find("[action]")) + "[action]\ntype = general\nq = 1\nxi = 1, 1\n";
  ExampleConfig c = parse_config(text);
  HopfAction act = c.make_action();
  StarProduct star(act);
  for (const auto& line : presentation_report(star).relations) EXPECT_EQ(line.find('t'), std::string::npos) << line;
}

TEST(Deformation, SpecializationAndFiniteSum) {
  for (const char* name : {"motivational-q2", "motivational-q3", "general-k4-n2-a1-b1"}) {
    Fixture f(name);
    const AlgebraSpec& alg = f.action.algebra();
    unsigned n = *f.action.nilpotency_order();
    auto basis = basis_monomials(alg, 2);
    for (std::size_t x = 0; x < basis.size(); x += 2) {
      for (std::size_t y = 0; y < basis.size(); y += 3) {
        SmashElement a(basis[x], alg.scalar(1));
        SmashElement b(basis[y], alg.scalar(1));
        DeformElement ab = f.star.udf_pair(a, b);
        ASSERT_EQ(ab.component(0), element_mul(alg, a, b));
        ASSERT_EQ(ab.component(1), f.star.mu1(a, b));
        if (!ab.is_zero()) ASSERT_LT(ab.components().rbegin()->first, n);
      }
    }
  }
}

TEST(Deformation, SecondPowersVanishOnFirstVariables) {
  Fixture f("motivational-q3");
  const AlgebraSpec& alg = f.action.algebra();
  for (auto op : {HopfAction::Op::D1, HopfAction::Op::D2}) {
    for (std::size_t j = 0; j < 2; ++j) EXPECT_TRUE(f.action.apply_power(op, 2, alg.w(j)).is_zero());
  }
}

TEST(Deformation, TailSupportIsOneMonomial) {
  Fixture f("general-k4-n2-a1-b1");
  DeformElement tail = f.star.deformed_relation(0, 1);
  ASSERT_EQ(tail.components().size(), 1u);
  EXPECT_EQ(tail.component(1).size(), 1u);
}

TEST(Deformation, Mu1Examples) {
  Fixture f("motivational-q2");
  const AlgebraSpec& alg = f.action.algebra();
  EXPECT_EQ(f.star.mu1(alg.w(0), alg.w(1)), f.el("-w3*g[(1,0)]"));
  EXPECT_TRUE(f.star.mu1(alg.one(), f.el("w1*w2")).is_zero());
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (i == 0 && j == 1) continue;
      EXPECT_TRUE(f.star.mu1(alg.w(i), alg.w(j)).is_zero());
    }
  }
}

TEST(Deformation, AssociativitySweeps) {
  Fixture q2("motivational-q2");
  CheckReport r2 = check_associativity(q2.star, 3);
  EXPECT_TRUE(r2.passed()) << r2.to_text();
  EXPECT_EQ(r2.entries().front().cases, 80u * 80u * 80u);
  Fixture q3("motivational-q3");
  EXPECT_TRUE(check_associativity(q3.star, 2).passed());
}

TEST(Deformation, ActionBreakingTamperFailsAssociativity) {
  ExampleConfig c = testing::preset_with("motivational-q2", "P2", "P2 = w3^2");
  HopfAction act = c.make_action();
  StarProduct star(act);
  CheckReport r = check_associativity(star, 2);
  ASSERT_FALSE(r.passed());
  const CheckEntry& e = r.entries().front();
  ASSERT_TRUE(e.witness.has_value());
  EXPECT_NE(e.witness->lhs, e.witness->rhs);
  CheckReport special = check_special_conditions(c.algebra, c.special());
  EXPECT_FALSE(special.passed("EQU3"));
}

TEST(Deformation, GenericParameterHitsTheCap) {
  const char* text =
      "[field]\nn = 1\n[algebra]\nk = 2\ngroup = trivial\n"
      "[action]\ntype = general\nq = 2\nD1(w1) = w1\nD2(w2) = w2\n";
  ExampleConfig c = parse_config(text);
  HopfAction act = c.make_action();
  EXPECT_EQ(act.nilpotency_order(), std::nullopt);
  StarProduct star(act, DeformationConfig{3});
  EXPECT_THROW(star.udf_pair(c.algebra.w(0), c.algebra.w(1)), NonterminationError);
  DeformElement finite = star.udf_pair(c.algebra.w(1), c.algebra.w(0));
  EXPECT_EQ(finite.components().size(), 1u);
  EXPECT_THROW(StarProduct(act, DeformationConfig{0}), SpecError);
}

}  // namespace
}  // namespace qdef
