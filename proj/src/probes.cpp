#include "lpwr/probes.hpp"

#include <algorithm>

#include "lpwr/sampling.hpp"

namespace lpwr {

namespace {

GraphPtr parse_shared(std::string_view text) {
  return std::make_shared<const Graph>(Graph::parse(text));
}

} // namespace

std::vector<std::pair<std::string, GraphPtr>> SampleGraphs::all() const {
  return {{"loop", loop},
          {"line", line},
          {"toeplitz", toeplitz},
          {"2-cycle", two_cycle},
          {"3-vertex", three_vertex}};
}

SampleGraphs sample_graphs() {
  SampleGraphs s;
  s.loop = parse_shared("vertex v\nedge c v v\n");
  s.line = parse_shared("vertex u\nvertex v\nedge a u v\n");
  s.toeplitz = parse_shared("vertex u\nvertex v\nedge c u u\nedge f u v\n");
  s.two_cycle = parse_shared("vertex u\nvertex v\nedge a u v\nedge b v u\n");
  s.three_vertex =
      parse_shared("vertex u\nvertex v\nvertex w\nedge a u u\nedge b u v\nedge c v w\n");
  return s;
}

std::vector<std::pair<std::string, ExtendedGraphPtr>> sample_extended_graphs(Field f) {
  SampleGraphs sg = sample_graphs();
  auto field_coeff = std::make_shared<const FieldCoeff>(f);
  std::vector<std::pair<std::string, ExtendedGraphPtr>> out;
  out.emplace_back("loop wr F",
                   extend_graph(sg.loop, field_coeff, {BridgeSpec{"e", "v", "1"}}));
  out.emplace_back("toeplitz wr F",
                   extend_graph(sg.toeplitz, field_coeff, {BridgeSpec{"e", "u", "1"}}));
  out.emplace_back("toeplitz/W",
                   prop2_context(sg.toeplitz, f, sg.toeplitz->parse_vertex_set("v")).eg);
  out.emplace_back(
      "3-vertex/W",
      prop2_context(sg.three_vertex, f,
                    hsat_closure(*sg.three_vertex, sg.three_vertex->parse_vertex_set("w")))
          .eg);
  return out;
}

Report probe_cohn_relations(const GraphPtr& g, Field f) {
  Report rep;
  auto V = [&](int v) { return CohnElement::vertex(g, f, v); };
  auto E = [&](int e) { return CohnElement::edge(g, f, e); };
  auto Es = [&](int e) { return CohnElement::edge_star(g, f, e); };
  int checked = 0;
  for (int v = 0; v < g->vertex_count(); ++v) {
    if (!(cohn_mul(V(v), V(v)) == V(v)))
      rep.fail("v^2 != v at '" + g->vertex_name(v) + "'");
    ++checked;
    for (int w = 0; w < g->vertex_count(); ++w) {
      if (w == v) continue;
      if (!cohn_mul(V(v), V(w)).is_zero())
        rep.fail("vw != 0 at '" + g->vertex_name(v) + "','" + g->vertex_name(w) + "'");
      ++checked;
    }
  }
  for (int e = 0; e < g->edge_count(); ++e) {
    int se = g->edge(e).src, re = g->edge(e).rng;
    const std::string& en = g->edge(e).name;
    if (!(cohn_mul(V(se), E(e)) == E(e))) rep.fail("s(e)e != e at '" + en + "'");
    if (!(cohn_mul(E(e), V(re)) == E(e))) rep.fail("e r(e) != e at '" + en + "'");
    if (!(cohn_mul(Es(e), V(se)) == Es(e))) rep.fail("e* s(e) != e* at '" + en + "'");
    if (!(cohn_mul(V(re), Es(e)) == Es(e))) rep.fail("r(e) e* != e* at '" + en + "'");
    if (!(cohn_mul(Es(e), E(e)) == V(re))) rep.fail("e*e != r(e) at '" + en + "'");
    checked += 5;
    for (int f2 = 0; f2 < g->edge_count(); ++f2) {
      if (f2 == e) continue;
      if (!cohn_mul(Es(e), E(f2)).is_zero())
        rep.fail("e*f != 0 at '" + en + "','" + g->edge(f2).name + "'");
      ++checked;
    }
  }
  rep.note("relation instances checked: " + std::to_string(checked));
  return rep;
}

Report probe_associativity(Field f, int samples, std::uint64_t seed) {
  Report rep;
  auto instances = sample_extended_graphs(f);
  for (const auto& [name, eg] : instances) {
    Report r = associativity_probe(bridge_biset(eg), samples, seed);
    rep.note("[" + name + "]");
    rep.merge(r);
  }
  // negative control: the corrupted biset must produce a counterexample
  const auto& eg = instances.front().second;
  BridgePath live{Path::at(eg->bridge(0).src), 0};
  Report bad = associativity_probe(corrupted_biset(eg, live), samples, seed);
  if (bad.pass) {
    rep.fail("corrupted biset unexpectedly passes the associativity probe");
  } else {
    rep.note("corrupted biset rejected as expected");
  }
  return rep;
}

Report probe_actions(Field f, int path_len) {
  Report rep;
  for (const auto& [name, eg] : sample_extended_graphs(f)) {
    const Graph& g = *eg->base();
    std::vector<SGElement> sample_s{SGElement::zero()};
    auto paths = enumerate_paths(g, 2 * path_len);
    for (const auto& p : paths)
      for (const auto& q : paths) {
        if (p.length() + q.length() > static_cast<std::size_t>(2 * path_len)) continue;
        if (path_range(g, p) != path_range(g, q)) continue;
        sample_s.push_back(SGElement::of(Mono{p, q}));
      }
    auto sample_x = enumerate_bridge_paths(*eg, path_len);
    // closure: act always returns a valid bridge path or x0
    int closure = 0;
    for (const auto& s : sample_s)
      for (const auto& x : sample_x)
        for (Side side : {Side::Left, Side::Right}) {
          BridgePath y = act(*eg, s, x, side);
          if (!bridge_path_valid(*eg, y))
            rep.fail("action left the bridge-path set on [" + name + "]");
          ++closure;
        }
    Report axioms = biset_axioms_check(bridge_biset(eg), sample_s, sample_x);
    rep.note("[" + name + "] closure instances: " + std::to_string(closure) +
             ", semigroup samples: " + std::to_string(sample_s.size()) +
             ", carrier samples: " + std::to_string(sample_x.size()));
    rep.merge(axioms);
  }
  return rep;
}

Report probe_rewriting(Field f, int samples, std::uint64_t seed) {
  Report rep;
  SampleGraphs sg = sample_graphs();
  for (const auto& [name, g] : sg.all()) {
    std::mt19937_64 rng(seed);
    int confluent = 0;
    for (int i = 0; i < samples; ++i) {
      CohnElement x = sample_cohn(g, f, rng, 4, 4);
      RewriteOptions first;
      first.check_termination = true;
      CohnElement nf1 = rewrite_normal_form(x, first);
      RewriteOptions rnd;
      rnd.pick = RewriteOptions::Pick::Random;
      rnd.seed = seed + static_cast<std::uint64_t>(i);
      rnd.check_termination = true;
      CohnElement nf2 = rewrite_normal_form(x, rnd);
      RewriteOptions last;
      last.pick = RewriteOptions::Pick::Last;
      CohnElement nf3 = rewrite_normal_form(x, last);
      if (!(nf1 == nf2) || !(nf1 == nf3)) {
        rep.fail("strategy-dependent normal form on " + name + " sample " +
                 std::to_string(i));
        continue;
      }
      if (!(rewrite_normal_form(nf1) == nf1))
        rep.fail("normal form is not idempotent on " + name);
      ++confluent;
      // compatibility with the product
      CohnElement y = sample_cohn(g, f, rng, 3, 3);
      CohnElement lhs = rewrite_normal_form(cohn_mul(x, y));
      CohnElement rhs = rewrite_normal_form(cohn_mul(nf1, rewrite_normal_form(y)));
      if (!(lhs == rhs)) rep.fail("normal form incompatible with product on " + name);
    }
    rep.note("[" + name + "] strategy-independent samples: " + std::to_string(confluent));
    // membership of N-generator multiples: nf(p CK(v)' q*) = 0
    auto paths = enumerate_paths(*g, 3);
    int members = 0;
    for (int v = 0; v < g->vertex_count(); ++v) {
      if (g->is_sink(v)) continue;
      CohnElement ck = ck_prime(g, f, v);
      for (const auto& p : paths) {
        if (path_range(*g, p) != v) continue;
        for (const auto& q : paths) {
          if (path_range(*g, q) != v) continue;
          CohnElement pe = CohnElement::monomial(g, f, Mono{p, Path::at(v)}, f.one());
          CohnElement qe = CohnElement::monomial(g, f, Mono{Path::at(v), q}, f.one());
          if (!rewrite_normal_form(cohn_mul(cohn_mul(pe, ck), qe)).is_zero())
            rep.fail("p CK(v)' q* does not reduce to zero on " + name);
          ++members;
        }
      }
    }
    rep.note("[" + name + "] N-membership instances: " + std::to_string(members));
  }
  // loop basis in the degree window [-3, 3]
  {
    const GraphPtr& loop = sg.loop;
    auto paths = enumerate_paths(*loop, 3);
    std::vector<std::string> basis;
    for (const auto& p : paths)
      for (const auto& q : paths) {
        Mono m{p, q};
        if (path_range(*loop, p) != path_range(*loop, q)) continue;
        if (is_redex(*loop, m)) continue;
        if (m.degree() < -3 || m.degree() > 3) continue;
        basis.push_back(CohnElement::monomial(loop, f, m, f.one()).str());
      }
    std::sort(basis.begin(), basis.end());
    std::vector<std::string> expected{"c",         "c.c",       "c.c.c", "c^*",
                                      "c^*.c^*",   "c^*.c^*.c^*", "v"};
    std::sort(expected.begin(), expected.end());
    if (basis != expected) {
      std::string got;
      for (const auto& b : basis) got += b + " ";
      rep.fail("loop normal-form basis mismatch: " + got);
    } else {
      rep.note("loop basis in degree window [-3,3]: {v, c, c^2, c^3, c^*, (c^*)^2, (c^*)^3}");
    }
  }
  return rep;
}

Report probe_ck_annihilation(Field f, int max_index, std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  for (const auto& [name, eg] : sample_extended_graphs(f)) {
    auto indices = enumerate_bridge_paths(*eg, max_index);
    int checked = 0;
    for (int v = 0; v < eg->base()->vertex_count(); ++v) {
      if (eg->base()->is_sink(v)) continue;
      ActionElement ck = ck_full(eg, v);
      for (const auto& x : indices)
        for (const auto& y : indices) {
          AlgElem a = corner_project(*eg, x, y, eg->coeff()->sample(rng));
          if (eg->coeff()->is_zero(a)) a = corner_project(*eg, x, y, eg->coeff()->one());
          if (eg->coeff()->is_zero(a)) continue;
          ActionElement unit = ActionElement::of_unit(eg, a, x, y);
          PointedBiset b = bridge_biset(eg);
          if (!action_mul(ck, unit, b).is_zero() || !action_mul(unit, ck, b).is_zero())
            rep.fail("CK('" + eg->base()->vertex_name(v) + "') does not annihilate [" +
                     name + "] unit at (" + bridge_path_str(*eg, x) + ", " +
                     bridge_path_str(*eg, y) + ")");
          ++checked;
        }
    }
    rep.note("[" + name + "] annihilation instances: " + std::to_string(checked));
  }
  return rep;
}

Report probe_j_reduction(Field f, int samples, std::uint64_t seed) {
  Report rep;
  for (const auto& [name, eg] : sample_extended_graphs(f)) {
    std::mt19937_64 rng(seed);
    const Graph& g = *eg->base();
    std::vector<int> nonsinks;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!g.is_sink(v)) nonsinks.push_back(v);
    if (nonsinks.empty()) continue;
    PointedBiset biset = bridge_biset(eg);
    int reduced = 0;
    for (int i = 0; i < samples; ++i) {
      ActionElement j = ActionElement::zero(eg);
      int terms = 1 + static_cast<int>(rng() % 3);
      for (int k = 0; k < terms; ++k) {
        int v = nonsinks[rng() % nonsinks.size()];
        // backward walks into v give p, q with r(p) = r(q) = v
        auto into = [&](int target) {
          std::vector<int> rev;
          int at = target;
          int len = static_cast<int>(rng() % 4);
          for (int s = 0; s < len; ++s) {
            const auto& ins = g.in_edges(at);
            if (ins.empty()) break;
            int e = ins[rng() % ins.size()];
            rev.push_back(e);
            at = g.edge(e).src;
          }
          return Path{at, {rev.rbegin(), rev.rend()}};
        };
        Path p = into(v), q = into(v);
        Scalar alpha = f.integer(static_cast<long>(rng() % 5) - 2);
        ActionElement pe = ActionElement::of_sg(
            eg, CohnElement::monomial(eg->base(), f, Mono{p, Path::at(v)}, alpha));
        ActionElement qe = ActionElement::of_sg(
            eg, CohnElement::monomial(eg->base(), f, Mono{Path::at(v), q}, f.one()));
        j = j + action_mul(action_mul(pe, ck_full(eg, v), biset), qe, biset);
      }
      if (!WreathElement::normal_form(j).is_zero()) {
        rep.fail("random J element does not reduce to zero on [" + name + "]");
        continue;
      }
      ++reduced;
    }
    rep.note("[" + name + "] J elements reduced to zero: " + std::to_string(reduced));
  }
  return rep;
}

Report probe_quotient_structure(Field f, int samples, std::uint64_t seed) {
  Report rep;
  for (const auto& [name, eg] : sample_extended_graphs(f)) {
    std::mt19937_64 rng(seed);
    int hom = 0, ideal = 0;
    for (int i = 0; i < samples; ++i) {
      WreathElement x = sample_wreath_element(eg, rng);
      WreathElement y = sample_wreath_element(eg, rng);
      WreathElement xy = wreath_mul(x, y);
      if (!(xy.leavitt_part() == lpa_mul(x.leavitt_part(), y.leavitt_part()))) {
        rep.fail("Leavitt-part projection not multiplicative on [" + name + "]");
      } else {
        ++hom;
      }
      if (!corner_valid(*eg, xy.matrix_part()))
        rep.fail("product violates the corner constraint on [" + name + "]");
      // pure-matrix closure
      WreathElement mx = x - WreathElement::from_leavitt(eg, x.leavitt_part());
      WreathElement my = y - WreathElement::from_leavitt(eg, y.leavitt_part());
      WreathElement mm = wreath_mul(mx, my);
      if (!mm.is_pure_matrix()) {
        rep.fail("product of pure-matrix elements is not pure-matrix on [" + name + "]");
      } else {
        ++ideal;
      }
    }
    rep.note("[" + name + "] multiplicative projections: " + std::to_string(hom) +
             ", pure-matrix products: " + std::to_string(ideal));
  }
  return rep;
}

Report probe_prop1(Field f, int max_index, int max_word, int word_cap) {
  auto poly = std::make_shared<const PolyCoeff>(f);
  GraphPtr loop = sample_graphs().loop;
  ExtendedGraphPtr eg = extend_graph(loop, poly, {BridgeSpec{"e", "v", "1"}});
  std::vector<AlgElem> gens{poly->symbol("x", false)};
  Report rep = prop1_check(eg, gens, max_index, max_word, 3, word_cap);
  Report head;
  head.note("loop wreath over " + poly->name() + ", generators {x}");
  head.merge(rep);
  return head;
}

Report probe_loop_relations(Field f, std::uint64_t seed) {
  Report rep;
  auto a = std::make_shared<const RatFunUnitCoeff>(f);
  LoopWreathPtr lw = make_loop_wreath(a);
  std::mt19937_64 rng(seed);

  auto expect = [&](const WreathElement& got, const WreathElement& want,
                    const std::string& label) {
    if (got == want) rep.note(label + ": OK");
    else rep.fail(label + ": got " + lw->str(got) + ", want " + lw->str(want));
  };

  expect(wreath_mul(lw->tinv, lw->t), lw->v, "t^-1 t = v");
  expect(wreath_mul(lw->t, lw->tinv), lw->v - lw->unit(0, 0), "t t^-1 = v - (1)_{0,0}");

  bool shifts_ok = true;
  for (long i = 0; i <= 3 && shifts_ok; ++i)
    for (long j = 0; j <= 3 && shifts_ok; ++j) {
      AlgElem entry = a->sample(rng);
      if (a->is_zero(entry)) entry = a->one();
      WreathElement aij = lw->matrix_unit(entry, i, j);
      if (!(wreath_mul(lw->t, aij) == lw->matrix_unit(entry, i + 1, j))) shifts_ok = false;
      WreathElement want_tinv = i == 0 ? WreathElement::zero(lw->eg)
                                       : lw->matrix_unit(entry, i - 1, j);
      if (!(wreath_mul(lw->tinv, aij) == want_tinv)) shifts_ok = false;
      WreathElement want_t = j == 0 ? WreathElement::zero(lw->eg)
                                    : lw->matrix_unit(entry, i, j - 1);
      if (!(wreath_mul(aij, lw->t) == want_t)) shifts_ok = false;
      if (!(wreath_mul(aij, lw->tinv) == lw->matrix_unit(entry, i, j + 1)))
        shifts_ok = false;
    }
  if (shifts_ok) {
    rep.note("t a_{i,j} = a_{i+1,j}: OK");
    rep.note("t^-1 a_{i,j} = a_{i-1,j}, t^-1 a_{0,j} = 0: OK");
    rep.note("a_{i,j} t = a_{i,j-1}, a_{i,0} t = 0: OK");
    rep.note("a_{i,j} t^-1 = a_{i,j+1}: OK");
  } else {
    rep.fail("a shift identity fails");
  }

  if (wreath_mul(lw->t, lw->tinv).matrix_part().is_zero())
    rep.fail("t t^-1 has no matrix part; F[t,t^-1] would be a subalgebra");
  else
    rep.note("F[t^-1,t] is a vector-space copy only (t t^-1 leaves it): OK");
  return rep;
}

Report probe_radical(Field f, int element_samples, int matrix_samples, int power_bound,
                     std::uint64_t seed) {
  Report rep;
  std::mt19937_64 rng(seed);
  auto sample_a0 = [&]() {
    std::vector<Scalar> nc{f.zero()};
    std::size_t deg = rng() % 3;
    for (std::size_t i = 0; i <= deg; ++i)
      nc.push_back(f.integer(static_cast<long>(rng() % 5) - 2));
    std::vector<Scalar> dc{f.one()};
    std::size_t ddeg = rng() % 3;
    for (std::size_t i = 0; i < ddeg; ++i)
      dc.push_back(f.integer(static_cast<long>(rng() % 5) - 2));
    return RationalFunction(Polynomial(f, nc), Polynomial(f, dc));
  };

  int ok = 0;
  for (int i = 0; i < element_samples; ++i) {
    RationalFunction x = sample_a0();
    RationalFunction y = a0_quasi_inverse(x);
    bool good = a0_membership(y) && (x + y + x * y).is_zero() && (x + y + y * x).is_zero();
    if (!good) rep.fail("quasi-inverse identity fails for " + x.str());
    else ++ok;
  }
  rep.note("A0 quasi-inverses verified: " + std::to_string(ok));

  int mok = 0;
  for (int i = 0; i < matrix_samples; ++i) {
    std::size_t n = 1 + rng() % 4;
    std::vector<std::vector<RationalFunction>> m(
        n, std::vector<RationalFunction>(n, RationalFunction::zero(f)));
    for (auto& row : m)
      for (auto& e : row)
        if (rng() % 2) e = sample_a0();
    try {
      radical_matrix_quasi_inverse(m);
      ++mok;
    } catch (const std::exception& e) {
      rep.fail("matrix quasi-inverse failed: " + std::string(e.what()));
    }
  }
  rep.note("matrix quasi-inverses verified (sizes <= 4): " + std::to_string(mok));

  // non-nilpotence witness: (t)_{0,0}^n = (t^n)_{0,0} != 0
  auto a = std::make_shared<const RatFunUnitCoeff>(f);
  LoopWreathPtr lw = make_loop_wreath(a);
  AlgElem t_entry = RatFunUnitCoeff::pure(RationalFunction::variable(f));
  WreathElement w = lw->matrix_unit(t_entry, 0, 0);
  WreathElement power = w;
  bool nonzero = true;
  for (int n = 2; n <= power_bound; ++n) {
    power = wreath_mul(power, w);
    if (power.is_zero()) {
      nonzero = false;
      rep.fail("(t)_{0,0}^" + std::to_string(n) + " vanished");
      break;
    }
  }
  if (nonzero)
    rep.note("(t)_{0,0}^n != 0 through n = " + std::to_string(power_bound) +
             " (radical element is not nilpotent)");
  return rep;
}

} // namespace lpwr
