#include <gtest/gtest.h>

#include <random>

#include "pdo/error.hpp"
#include "pdo/frontend/commands.hpp"
#include "pdo/frontend/json_io.hpp"
#include "pdo/frontend/parser.hpp"
#include "pdo/operator_algebra.hpp"
#include "support.hpp"

using namespace pdo;
using namespace pdo::frontend;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::InvariantViolation;
}

std::string strip_timing(std::string s) {
  const auto at = s.find("\"timing_ms\"");
  return at == std::string::npos ? s : s.substr(0, at);
}

Report run(const std::string& script) { return run_command(parse_script(script)); }

}  // namespace

TEST(Parser, Examples) {
  EXPECT_EQ(parse_operator("D1*x1", 1).to_string(), "(x1) D1 + 1");
  EXPECT_EQ(parse_operator("(D1^2+D2^2)*(x1*D2+x2*D1)", 2).to_string(),
            "(x2) D1^3 + (x1) D1^2 D2 + (x2) D1 D2^2 + (x1) D2^3 + 4 D1 D2");
  EXPECT_EQ(parse_operator("x1 x2 * (D1*D2 - lambda) * 1/(x1*x2)", 2).order(), 2);
  EXPECT_EQ(parse_polynomial("mu3 - mu1*mu2 + gamma*mu1", 2).total_degree(), 2u);
  EXPECT_TRUE(std::holds_alternative<MultiPoly>(parse_expression("x1^2 - 1/2", 2)));
  EXPECT_TRUE(std::holds_alternative<DiffOp>(parse_expression("D1 - D1 + x1", 2)));
}

TEST(Parser, Errors) {
  EXPECT_EQ(kind_of([] { parse_operator("D1 + ", 2); }), ErrorKind::SyntaxError);
  try {
    parse_operator("D1 + ", 2);
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("end of input"), std::string::npos);
  }
  EXPECT_EQ(kind_of([] { parse_operator("D3", 2); }), ErrorKind::DimensionExceeded);
  EXPECT_EQ(kind_of([] { parse_operator("x1 $ 2", 2); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_operator("(D1", 2); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_operator("D1^x1", 2); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_operator("x1 / D1", 2); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_operator("x1 / 0", 2); }), ErrorKind::ZeroDivisor);
  EXPECT_EQ(kind_of([] { parse_operator("L1 + 1", 2); }), ErrorKind::UnboundName);
  EXPECT_EQ(kind_of([] { parse_operator("D0", 2); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_polynomial("D1", 2); }), ErrorKind::InvalidArgument);
}

TEST(Parser, PrintParseRoundtrip) {
  std::mt19937_64 rng(61);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const auto op = pdo::testing::random_op(rng, n, 3, true);
    EXPECT_EQ(parse_operator(op.to_string(), n), op) << op.to_string();
  }
}

TEST(Json, RoundtripMatchesText) {
  std::mt19937_64 rng(62);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const auto op = pdo::testing::random_op(rng, n, 3, true);
    const auto back = op_from_json(nlohmann::json::parse(op_to_json(op).dump()));
    EXPECT_EQ(back, op);
    EXPECT_EQ(back, parse_operator(op.to_string(), n));
  }
  const MultiPoly p = parse_polynomial("3/4*x1^2*lambda - mu2", 2);
  EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  EXPECT_THROW(poly_from_json(nlohmann::json::parse(R"([{"exps": [], "coeff": "1/0"}])")), Error);
}

TEST(Script, Parsing) {
  const Script s = parse_script("# comment\ndim 2\nA = D1^2 - D2^2\nB = x2*D1 + x1*D2\ncommutator A, B\n");
  EXPECT_EQ(s.dim, 2u);
  ASSERT_EQ(s.bindings.size(), 2u);
  EXPECT_EQ(s.bindings[1].first, "B");
  EXPECT_EQ(s.verb, "commutator");
  EXPECT_EQ(s.args, (std::vector<std::string>{"A", "B"}));
  const Script r = parse_script("dim = 2\nresultant D1, D2, D1 + D2 --mode=sampled:5 --seed=3 --rank-only");
  EXPECT_EQ(r.flags.at("mode"), "sampled:5");
  EXPECT_EQ(r.flags.at("rank-only"), "true");
  EXPECT_EQ(kind_of([] { parse_script("dim 2\n"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_script("dim 2\nfrobnicate D1"); }), ErrorKind::SyntaxError);
  EXPECT_EQ(kind_of([] { parse_script("dim 2\nmult D1\nmult D2"); }), ErrorKind::SyntaxError);
}

TEST(Commands, MultAndCommutator) {
  EXPECT_EQ(render_text(run("dim 1\nmult D1, x1")), "(x1) D1 + 1\n");
  EXPECT_EQ(render_text(run("dim 2\nA = D1^2 - D2^2\nB = x2*D1 + x1*D2\ncommutator A, B")), "0\n");
}

TEST(Commands, ResultantRankOnlyKleinGordon) {
  const Report r = run("dim 2\nresultant D1^2 - D2^2 - 1, D1^3 - D1*D2^2 - D1, D1^2*D2 - D2^3 - D2 --rank-only");
  EXPECT_EQ(r.result.at("kind"), "Zero");
  EXPECT_LT(r.result.at("rank").get<std::size_t>(), 28u);
  EXPECT_EQ(r.lines.front().second, "Zero");
}

TEST(Commands, MembershipExitCodes) {
  EXPECT_EQ(run("dim 2\nkernel-check (D1*D2 - lambda)^3").exit_code, 0);
  EXPECT_EQ(run("dim 2\nkernel-check D1").exit_code, 1);
  EXPECT_EQ(run("dim 2\nrlambda-check (x1*x2 - lambda)^2").exit_code, 1);
  EXPECT_EQ(run("dim 2\nrlambda-check x1^2*(x1*x2 - 2)^3 --lambda=2").exit_code, 0);
  const Report d = run("dim 2\nrlambda-decompose x1*(x1*x2 - lambda)^3 + lambda");
  EXPECT_EQ(d.lines[0].second, "x1");
  EXPECT_EQ(d.lines[1].second, "lambda");
}

TEST(Commands, UsageErrorsMapToExitTwo) {
  auto code = [](const std::string& s) {
    try {
      run(s);
    } catch (const Error& e) {
      return exit_code_for(e.kind());
    }
    return 0;
  };
  EXPECT_EQ(code("dim 2\nmult D3"), 2);
  EXPECT_EQ(code("dim 2\nmult D1 +"), 2);
  EXPECT_EQ(code("dim 2\ncommutator D1"), 2);
  EXPECT_EQ(code("dim 2\nmult D1 --bogus=1"), 2);
  EXPECT_EQ(code("dim 2\nx1 = D1\nmult x1"), 2);
  EXPECT_EQ(code("mult D1"), 2);
  EXPECT_EQ(exit_code_for(ErrorKind::InvariantViolation), 3);
  EXPECT_EQ(exit_code_for(ErrorKind::NotInRing), 1);
}

TEST(Commands, ErrorsNameTheSubexpression) {
  try {
    run("dim 2\nmult D1, x1 + D7");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("x1 + D7"), std::string::npos);
  }
}

TEST(Commands, ReportsAreDeterministic) {
  const std::string s = "dim 2\nresultant D1^2 - D2^2, x2*D1 + x1*D2, x2*D1^2*D2 + x1*D1*D2^2 --mode=sampled:6 --seed=11";
  const auto a = render_json(run(s));
  const auto b = render_json(run(s));
  EXPECT_EQ(strip_timing(a), strip_timing(b));
  EXPECT_EQ(render_text(run(s)), render_text(run(s)));
  const auto j = nlohmann::json::parse(a);
  EXPECT_EQ(j.at("provenance").at("seed"), 11);
  EXPECT_EQ(j.at("result").at("samples"), 6);
}

TEST(Commands, JsonAndTextAgree) {
  const Report r = run("dim 2\nmult D1^2 + D2^2, x1*D2 + x2*D1");
  const DiffOp from_json = op_from_json(r.result);
  EXPECT_EQ(from_json, parse_operator(r.lines.front().second, 2));
  const Report c = run("dim 2\nconjugate D1*D2, x1");
  ASSERT_EQ(c.exit_code, 0);
  EXPECT_EQ(op_from_json(c.result), parse_operator(c.lines.front().second, 2));
}

TEST(Commands, ApplyAndDivide) {
  EXPECT_EQ(render_text(run("dim 2\napply D1*D2 - lambda")), "(z1*z2 - lambda)*exp(x1*z1 + x2*z2)\n");
  EXPECT_EQ(render_text(run("dim 1\ndivide D1^2*x1 - x1*D1^2, D1")), "2\n");
  EXPECT_EQ(run("dim 1\ndivide D1, D1^2").exit_code, 1);
}

TEST(Commands, DformAndAnnihilate) {
  const Report d = run("dim 1\ndform D1^2, D1^3");
  EXPECT_EQ(d.lines[0].second, "0,1,2,3,4");
  const std::string triple = "D1^2 - D2^2, x2*D1 + x1*D2, (D1^2 - D2^2)*(x2*D1 + x1*D2) - gamma*(D1^2 - D2^2)";
  EXPECT_EQ(run("dim 2\nannihilate mu3 - mu1*mu2 + gamma*mu1, " + triple).exit_code, 0);
  EXPECT_EQ(run("dim 2\nannihilate mu3 - mu1*mu2, " + triple).exit_code, 1);
}
