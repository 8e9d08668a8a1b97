#include <gtest/gtest.h>

#include "qdef/commands.hpp"
#include "qdef/config.hpp"
#include "support.hpp"

namespace qdef {
namespace {

using testing::replace_line;

std::string error_of(const std::string& text) {
  try {
    parse_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

const std::string kMinimal =
    "name = tiny\n"
    "[field]\n"
    "n = 2\n"
    "[algebra]\n"
    "k = 2\n"
    "group = 2\n"
    "q(1,2) = -1\n"
    "chi(1) = -1\n"
    "[action]\n"
    "type = general\n"
    "q = -1\n"
    "xi = 1\n";

TEST(Config, MotivationalPreset) {
  ExampleConfig c = load_preset("motivational-q2");
  EXPECT_EQ(c.name, "motivational-q2");
  EXPECT_EQ(c.algebra.num_vars(), 3u);
  EXPECT_EQ(std::vector<std::uint32_t>(c.algebra.group_orders().begin(), c.algebra.group_orders().end()),
            (std::vector<std::uint32_t>{2, 2}));
  ASSERT_TRUE(c.is_special());
  EXPECT_EQ(c.special().q, c.algebra.scalar(-1));
  EXPECT_EQ(c.special().p2, c.algebra.w(2));
  EXPECT_EQ(c.special().g2, c.algebra.group_element(std::vector<std::int64_t>{1, 1}));
  EXPECT_EQ(c.run, RunParams{});
}

TEST(Config, GeneralFamilyPreset) {
  ExampleConfig c = load_preset("general-k4-n2-a1-b1");
  EXPECT_EQ(c.algebra.num_vars(), 4u);
  EXPECT_EQ(c.special().p1, parse_element("w3^2", c.algebra));
  EXPECT_EQ(c.special().p2, parse_element("w3^3", c.algebra));
  FamilyParams p = *preset_family("general-k4-n2-a1-b1");
  EXPECT_EQ(p.alpha, (std::vector<std::uint32_t>{1, 0}));
  EXPECT_EQ(p.beta, (std::vector<std::uint32_t>{1, 0}));
  EXPECT_FALSE(preset_family("general-k2-n2-a1-b1"));
  EXPECT_FALSE(preset_family("motivational-q1"));
  EXPECT_FALSE(preset_family("motivational"));
  EXPECT_THROW(load_preset("nope"), ConfigError);
}

TEST(Config, RoundTrip) {
  for (const char* name : {"motivational-q2", "motivational-q3", "motivational-q5", "general-k4-n2-a1-b1",
                           "general-k5-n3-a0-b2"}) {
    ExampleConfig c = load_preset(name);
    std::string printed = print_config(c);
    ExampleConfig again = parse_config(printed);
    EXPECT_EQ(again, c) << printed;
    EXPECT_EQ(print_config(again), printed);

    ExampleConfig general{c.name, c.algebra, c.general(), RunParams{2, 5}};
    ExampleConfig general_again = parse_config(print_config(general));
    EXPECT_EQ(general_again, general) << print_config(general);
  }
  ExampleConfig tiny = parse_config(kMinimal);
  EXPECT_EQ(parse_config(print_config(tiny)), tiny);
}

TEST(Config, InversePairViolation) {
  std::string text = *preset_text("motivational-q3");
  text = replace_line(text, "q(2,3)", "q(2,3) = z\nq(3,2) = z");
  std::string err = error_of(text);
  EXPECT_NE(err.find("inverse-pair violation"), std::string::npos) << err;
}

TEST(Config, DerivesMissingInverse) {
  ExampleConfig c = parse_config(kMinimal);
  EXPECT_EQ(c.algebra.q(1, 0), c.algebra.scalar(-1));
  ExampleConfig d = parse_config(replace_line(kMinimal, "q(1,2)", "q(1,2) = -1\nq(2,1) = -1"));
  EXPECT_EQ(c, d);
}

TEST(Config, SyntaxErrorsCarryLineNumbers) {
  EXPECT_EQ(error_of(replace_line(kMinimal, "k =", "k = 2\nbogus = 1")), "line 6: bogus: unknown key in [algebra]");
  EXPECT_EQ(error_of(replace_line(kMinimal, "k =", "k = 2\nk = 3")), "line 6: k: duplicate key (first given on line 5)");
  EXPECT_EQ(error_of(replace_line(kMinimal, "k =", "k 2")), "line 5: expected 'key = value'");
  EXPECT_EQ(error_of(replace_line(kMinimal, "[algebra]", "[algebra")), "line 4: unterminated section header");
  EXPECT_EQ(error_of(replace_line(kMinimal, "[algebra]", "[alg]")), "line 4: unknown section [alg]");
  EXPECT_EQ(error_of(replace_line(kMinimal, "k =", "k = -2")),
            "line 5: k: expected a non-negative integer, got '-2'");
  std::string bad_scalar = error_of(replace_line(kMinimal, "q = -1", "q = 1 + "));
  EXPECT_EQ(bad_scalar.rfind("line 11: q: column", 0), 0u) << bad_scalar;
  EXPECT_EQ(error_of(replace_line(kMinimal, "chi(1)", "chi(1) = -1, 1")), "line 8: chi(1): expected 1 values, got 2");
  EXPECT_EQ(error_of(replace_line(kMinimal, "chi(1)", "chi(3) = 1")),
            "line 8: chi(3): variable index must be between 1 and 2");
  EXPECT_EQ(error_of(replace_line(kMinimal, "type", "type = other")), "line 10: type: expected 'special' or 'general'");
  EXPECT_EQ(error_of(kMinimal.substr(0, kMinimal.find("[action]"))), "missing section [action]");
}

TEST(Config, CommentsAndWhitespace) {
  std::string text = "# leading comment\n" + replace_line(kMinimal, "k =", "  k   =   2   # two variables\n\n");
  EXPECT_EQ(parse_config(text), parse_config(kMinimal));
}

TEST(Config, SemanticErrors) {
  EXPECT_NE(error_of(replace_line(*preset_text("motivational-q2"), "P1", "P1 = g[(1,0)]")).find("no group part"),
            std::string::npos);
  EXPECT_NE(error_of(replace_line(kMinimal, "xi", "xi = 2")).find("[action]"), std::string::npos);
  EXPECT_NE(error_of(replace_line(kMinimal, "chi(1)", "chi(1) = 2")).find("[algebra]"), std::string::npos);
  EXPECT_NE(error_of(replace_line(*preset_text("motivational-q2"), "g1", "g1 = (0,1,1)")).find("g1"),
            std::string::npos);
  EXPECT_NE(error_of(replace_line(kMinimal, "type", "type = general\nlambda = 1, 1")).find("lambda: unknown key"),
            std::string::npos);
}

TEST(Commands, DeformPreset) {
  CommandResult r = run_command("deform", load_preset("motivational-q2"), {});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.json["relations"], nlohmann::ordered_json({"w1*w2 + w2*w1 + t * w3*g[(1,0)] = 0",
                                                          "w1*w3 + w3*w1 = 0", "w2*w3 - w3*w2 = 0"}));
  EXPECT_NE(r.text.find("associativity: PASS"), std::string::npos);
}

TEST(Commands, CertifyAndValidate) {
  CommandResult cert = run_command("certify", load_preset("motivational-q3"), {});
  EXPECT_EQ(cert.exit_code, 0) << cert.text;
  EXPECT_EQ(cert.json["verdict"], "nontrivial");

  ExampleConfig c = load_preset("motivational-q2");
  GeneralActionSpec g = c.general();
  g.sigma_on_v[2] = c.algebra.w(1);
  ExampleConfig broken{c.name, c.algebra, g, c.run};
  CommandResult v = run_command("validate", broken, {});
  EXPECT_EQ(v.exit_code, 1);
  EXPECT_NE(v.text.find("EQ1: FAIL"), std::string::npos) << v.text;
  EXPECT_FALSE(v.json["passed"].get<bool>());

  CommandResult general_cert = run_command("certify", broken, {});
  EXPECT_EQ(general_cert.exit_code, 2);
  EXPECT_TRUE(general_cert.json.contains("error"));
}

TEST(Commands, NoCertificateForZeroDerivations) {
  ExampleConfig c = testing::preset_with("motivational-q2", "P2", "P2 = 0");
  CommandResult r = run_command("certify", c, CommandOptions{2, std::nullopt});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_EQ(r.json["verdict"], "no certificate");
}

TEST(Commands, Deterministic) {
  ExampleConfig c = load_preset("general-k4-n2-a1-b1");
  for (const auto& command : config_commands()) {
    CommandOptions opts{2, std::nullopt};
    CommandResult a = run_command(command, c, opts);
    CommandResult b = run_command(command, parse_config(print_config(c)), opts);
    EXPECT_EQ(a.text, b.text) << command;
    EXPECT_EQ(a.json.dump(), b.json.dump()) << command;
    EXPECT_EQ(a.exit_code, 0) << command << "\n" << a.text;
  }
}

TEST(Commands, Mu1Table) {
  CommandResult r = run_command("mu1", load_preset("motivational-q2"), {});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.text.find("mu1(w1, w2) = -w3*g[(1,0)]"), std::string::npos);
  EXPECT_EQ(r.json["table"].size(), 9u);
}

TEST(Commands, NonterminationIsACheckFailure) {
  const char* text =
      "[field]\nn = 1\n[algebra]\nk = 2\ngroup = trivial\n"
      "[action]\ntype = general\nq = 2\nD1(w1) = w1\nD2(w2) = w2\n[run]\nt_cap = 2\n";
  CommandResult r = run_command("deform", parse_config(text), {});
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.json["error"].get<std::string>().find("t^2"), std::string::npos);
}

}  // namespace
}  // namespace qdef
