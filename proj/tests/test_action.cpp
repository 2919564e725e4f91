#include <doctest.h>

#include "lpwr/probes.hpp"
#include "lpwr/sampling.hpp"

using namespace lpwr;

namespace {

const Field F = Field::rationals();

ExtendedGraphPtr loop_wr_field() {
  auto coeff = std::make_shared<const FieldCoeff>(F);
  return extend_graph(sample_graphs().loop, coeff, {BridgeSpec{"e", "v", "1"}});
}

} // namespace

TEST_CASE("biset axioms hold exhaustively on the loop wreath") {
  ExtendedGraphPtr eg = loop_wr_field();
  const Graph& g = *eg->base();
  std::vector<SGElement> ss{SGElement::zero()};
  auto paths = enumerate_paths(g, 4);
  for (const auto& p : paths)
    for (const auto& q : paths) ss.push_back(sg_make(g, p, q));
  auto xs = enumerate_bridge_paths(*eg, 4);
  Report rep = biset_axioms_check(bridge_biset(eg), ss, xs);
  CHECK(rep.pass);

  SUBCASE("empty samples pass vacuously") {
    CHECK(biset_axioms_check(bridge_biset(eg), {}, {}).pass);
  }
  SUBCASE("the corrupted biset fails property (1)") {
    BridgePath live{Path::at(0), 0};
    Report bad = biset_axioms_check(corrupted_biset(eg, live), ss, xs);
    CHECK_FALSE(bad.pass);
    bool mentions_p1 = false;
    for (const auto& l : bad.lines)
      if (l.find("property (1)") != std::string::npos) mentions_p1 = true;
    CHECK(mentions_p1);
  }
}

TEST_CASE("ambient product rules") {
  ExtendedGraphPtr eg = loop_wr_field();
  const GraphPtr& g = eg->base();
  AlgElem one = eg->coeff()->one();
  PointedBiset b = bridge_biset(eg);
  BridgePath e{Path::at(0), 0};
  BridgePath ce{Path{0, {0}}, 0};

  // s a_{x,y} = 0 when s x = x0: c* annihilates e
  ActionElement cstar = ActionElement::of_sg(eg, CohnElement::edge_star(g, F, 0));
  ActionElement a_ee = ActionElement::of_unit(eg, one, e, e);
  CHECK(action_mul(cstar, a_ee, b).is_zero());

  // c a_{e,e} = a_{ce,e}
  ActionElement c = ActionElement::of_sg(eg, CohnElement::edge(g, F, 0));
  CHECK(action_mul(c, a_ee, b) == ActionElement::of_unit(eg, one, ce, e));

  // matrix units compose: a_{e,ce} a_{ce,e} = a_{e,e}
  ActionElement u1 = ActionElement::of_unit(eg, one, e, ce);
  ActionElement u2 = ActionElement::of_unit(eg, one, ce, e);
  CHECK(action_mul(u1, u2, b) == a_ee);
  CHECK(action_mul(u2, u1, b) == ActionElement::of_unit(eg, one, ce, ce));
  // mismatched inner indices vanish
  CHECK(action_mul(u1, u1, b).is_zero());

  // a_{x,x0} F0[S] = 0
  ActionElement a_x0 = ActionElement::of_unit(eg, one, e, BridgePath::x0());
  CHECK(action_mul(a_x0, c, b).is_zero());
  CHECK(action_mul(a_x0, cstar, b).is_zero());
  // and F0[S] a_{x0,y} = 0
  ActionElement a_0y = ActionElement::of_unit(eg, one, BridgePath::x0(), e);
  CHECK(action_mul(c, a_0y, b).is_zero());
}

TEST_CASE("associativity probe") {
  ExtendedGraphPtr eg = loop_wr_field();
  CHECK(associativity_probe(bridge_biset(eg), 1000, 42).pass);
  SUBCASE("zero samples is vacuous on the genuine biset") {
    CHECK(associativity_probe(bridge_biset(eg), 0, 0).pass);
  }
  SUBCASE("the corrupted biset yields a critical-shape counterexample") {
    BridgePath live{Path::at(0), 0};
    Report bad = associativity_probe(corrupted_biset(eg, live), 0, 0);
    CHECK_FALSE(bad.pass);
    bool critical = false;
    for (const auto& l : bad.lines)
      if (l.find("critical-shape") != std::string::npos) critical = true;
    CHECK(critical);
  }
}

TEST_CASE("associativity across all sample instances") {
  CHECK(probe_associativity(F, 300, 42).pass);
}

TEST_CASE("action closure and properties on all instances") {
  CHECK(probe_actions(F, 3).pass);
}
