#include <doctest.h>

#include "lpwr/expr.hpp"
#include "lpwr/probes.hpp"

using namespace lpwr;

namespace {

const Field F = Field::rationals();

ExprEnv loop_env() {
  ExprEnv env;
  env.graph = sample_graphs().loop;
  env.field = F;
  return env;
}

} // namespace

TEST_CASE("expression grammar basics") {
  ExprEnv env = loop_env();
  CHECK(parse_cohn_expr(env, "v").str() == "v");
  CHECK(parse_cohn_expr(env, "c.c^*").str() == "c.c^*");
  CHECK(parse_cohn_expr(env, "v - c.c^*").str() == "v - c.c^*");
  CHECK(parse_cohn_expr(env, "2*c + 1/2*v").str() == "1/2*v + 2*c");
  CHECK(parse_cohn_expr(env, "(v - c.c^*).c").is_zero());
  CHECK(parse_cohn_expr(env, "-v + v").is_zero());
  CHECK(parse_cohn_expr(env, "c^*.c").str() == "v");
  // stars distribute in source order: c^* . c^* = (c.c)^*
  CHECK(parse_cohn_expr(env, "c^*.c^*").str() == "c^*.c^*");
}

TEST_CASE("expression errors") {
  ExprEnv env = loop_env();
  CHECK_THROWS_AS(parse_cohn_expr(env, "w"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cohn_expr(env, "c..c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cohn_expr(env, "c c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cohn_expr(env, "2c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cohn_expr(env, "c^"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cohn_expr(env, "[1 @ e, e]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cohn_expr(env, ""), std::invalid_argument);
}

TEST_CASE("matrix unit expressions") {
  auto coeff = std::make_shared<const FieldCoeff>(F);
  ExprEnv env = loop_env();
  env.eg = extend_graph(env.graph, coeff, {BridgeSpec{"e", "v", "1"}});

  ActionElement unit = parse_action_expr(env, "[1 @ e, e]");
  CHECK(unit.sg.is_zero());
  CHECK(unit.mat.str() == "[1 @ e, e]");

  ActionElement shifted = parse_action_expr(env, "[2 @ c.e, 0]");
  CHECK(shifted.mat.str() == "[2 @ c.e, 0]");

  ActionElement mixed = parse_action_expr(env, "c - [1 @ e, e]");
  CHECK(mixed.sg.str() == "c");
  CHECK(mixed.mat.str() == "[-1 @ e, e]");

  // products act on indices: c.[1 @ e, e] = [1 @ c.e, e]
  ActionElement acted = parse_action_expr(env, "c.[1 @ e, e]");
  CHECK(acted.mat.str() == "[1 @ c.e, e]");

  CHECK_THROWS_AS(parse_action_expr(env, "[1 @ c, e]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_action_expr(env, "[1 @ e e]"), std::invalid_argument);
}

TEST_CASE("coefficient entries over F[x]") {
  auto coeff = std::make_shared<const PolyCoeff>(F);
  ExprEnv env = loop_env();
  env.eg = extend_graph(env.graph, coeff, {BridgeSpec{"e", "v", "1"}});
  ActionElement e = parse_action_expr(env, "[x*x + 2 @ e, 0]");
  CHECK(e.mat.str() == "[2 + x^2 @ e, 0]");
  CHECK_THROWS_AS(parse_action_expr(env, "[y @ e, 0]"), std::invalid_argument);
}

TEST_CASE("bridge path parsing") {
  auto coeff = std::make_shared<const FieldCoeff>(F);
  ExtendedGraphPtr eg =
      extend_graph(sample_graphs().loop, coeff, {BridgeSpec{"e", "v", "1"}});
  CHECK(parse_bridge_path(*eg, "0").is_x0());
  CHECK(bridge_path_str(*eg, parse_bridge_path(*eg, "c.c.e")) == "c.c.e");
  CHECK_THROWS_AS(parse_bridge_path(*eg, "c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bridge_path(*eg, "e.c"), std::invalid_argument);
}

TEST_CASE("GF(p) scalars in expressions") {
  ExprEnv env = loop_env();
  env.field = Field::gf(5);
  // 3*c + 3*c = 6*c = c
  CHECK(parse_cohn_expr(env, "3*c + 3*c").str() == "c");
  CHECK(parse_cohn_expr(env, "2/3*v").str() == "4*v"); // 2 * 3^-1 = 2*2 = 4
}
