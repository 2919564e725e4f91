#include <doctest.h>

#include <random>

#include "lpwr/affinization.hpp"
#include "lpwr/probes.hpp"

using namespace lpwr;

namespace {

const Field F = Field::rationals();

LoopWreathPtr field_ctx() {
  return make_loop_wreath(std::make_shared<const FieldCoeff>(F));
}

LoopWreathPtr a0_ctx() {
  return make_loop_wreath(std::make_shared<const RatFunUnitCoeff>(F));
}

} // namespace

TEST_CASE("loop wreath handle and index relabeling") {
  LoopWreathPtr lw = field_ctx();
  CHECK(lw->index_of(lw->index(0)) == 0);
  CHECK(lw->index_of(lw->index(5)) == 5);
  CHECK(lw->index_of(BridgePath::x0()) == -1);
  CHECK(lw->str(lw->unit(1, 2)) == "[1 @ 1, 2]");
  CHECK(lw->str(wreath_mul(lw->t, lw->tinv)) == "v + [-1 @ 0, 0]");
}

TEST_CASE("the six displayed relations") {
  CHECK(probe_loop_relations(F, 5).pass);
}

TEST_CASE("banded operators evaluate exactly") {
  auto A = std::make_shared<const FieldCoeff>(F);
  // diag(a_i) with a_i = i+1 on the main diagonal
  BandedOperator d = BandedOperator::diagonal(
      A, 0, [&](long col) { return AlgElem::of(F.integer(col + 1)); });
  CHECK(F.integer(3) == d.entry(2, 2).as<Scalar>());
  CHECK(d.entry(2, 3).as<Scalar>().is_zero());
  CHECK(d.entry(-1, 0).as<Scalar>().is_zero());

  // diag(a) * diag(b) = diag(ab)
  BandedOperator d2 = BandedOperator::diagonal(
      A, 0, [&](long col) { return AlgElem::of(F.integer(2 * col + 1)); });
  BandedOperator prod = banded_mul(d, d2);
  for (long i = 0; i < 8; ++i)
    CHECK(prod.entry(i, i).as<Scalar>() == F.integer((i + 1) * (2 * i + 1)));

  // shift(+1) * shift(-1): ones on the diagonal except (0,0)
  BandedOperator up =
      BandedOperator::diagonal(A, 1, [&](long) { return A->one(); });
  BandedOperator down =
      BandedOperator::diagonal(A, -1, [&](long) { return A->one(); });
  BandedOperator ud = banded_mul(up, down);
  CHECK(ud.entry(0, 0).as<Scalar>().is_zero());
  for (long i = 1; i < 6; ++i) CHECK(ud.entry(i, i).as<Scalar>().is_one());
  // and the other order is the full identity
  BandedOperator du = banded_mul(down, up);
  for (long i = 0; i < 6; ++i) CHECK(du.entry(i, i).as<Scalar>().is_one());

  // diagonal times finite matrix stays finite (M_{NxN} is an ideal)
  BandedOperator fin(A);
  fin.add_correction(1, 2, A->one());
  BandedOperator mixed = banded_mul(d, fin);
  CHECK(mixed.is_finite());
  CHECK(mixed.entry(1, 2).as<Scalar>() == F.integer(2));
}

TEST_CASE("banded product agrees with the brute-force window product") {
  auto A = std::make_shared<const FieldCoeff>(F);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    auto random_banded = [&]() {
      BandedOperator b(A);
      int ndiag = 1 + static_cast<int>(rng() % 3);
      for (int i = 0; i < ndiag; ++i) {
        long off = static_cast<long>(rng() % 5) - 2;
        long mult = static_cast<long>(rng() % 5) - 2;
        b = b + BandedOperator::diagonal(A, off, [mult, off, this_f = F](long col) {
              return AlgElem::of(this_f.integer(mult * (col + 1) + off));
            });
      }
      int ncorr = static_cast<int>(rng() % 3);
      for (int i = 0; i < ncorr; ++i)
        b.add_correction(static_cast<long>(rng() % 6), static_cast<long>(rng() % 6),
                         AlgElem::of(F.integer(static_cast<long>(rng() % 7) - 3)));
      return b;
    };
    BandedOperator x = random_banded(), y = random_banded();
    BandedOperator xy = banded_mul(x, y);
    long n = 12, reach = n + x.max_abs_offset() + y.max_abs_offset();
    for (long i = 0; i < n; ++i)
      for (long j = 0; j < n; ++j) {
        Scalar brute = F.zero();
        for (long k = 0; k < reach; ++k)
          brute += x.entry(i, k).as<Scalar>() * y.entry(k, j).as<Scalar>();
        CHECK(brute == xy.entry(i, j).as<Scalar>());
      }
  }
}

TEST_CASE("affine elements: Laurent action on banded operators") {
  LoopWreathPtr lw = a0_ctx();
  AffineElement t = AffineElement::laurent(lw, 1);
  AffineElement tinv = AffineElement::laurent(lw, -1);
  AffineElement a = AffineElement::diagonal_generator(lw);
  AffineElement e00 = AffineElement::unit00(lw);

  // t t^-1 = v - (1)_{0,0}
  AffineElement tt = affine_mul(t, tinv);
  CHECK(tt.laurent_part().str() == "v");
  REQUIRE(tt.matrix_part().is_finite());
  CHECK(tt.matrix_part().corrections().size() == 1);
  // t^-1 t = v exactly
  AffineElement id = affine_mul(tinv, t);
  CHECK(id.laurent_part().str() == "v");
  CHECK(id.matrix_part().corrections().empty());

  // t a t^-1 shifts the diagonal generator down the diagonal
  AffineElement shifted = affine_mul(affine_mul(t, a), tinv);
  const CoeffAlgebraPtr& A = lw->eg->coeff();
  for (long i = 1; i <= 5; ++i)
    CHECK(A->equal(shifted.matrix_part().entry(i, i),
                   a.matrix_part().entry(i - 1, i - 1)));
  CHECK(A->is_zero(shifted.matrix_part().entry(0, 0)));

  // (1)_{0,0} a (1)_{0,0} = (a_0)_{0,0} with a_0 = t
  AffineElement picked = affine_mul(affine_mul(e00, a), e00);
  REQUIRE(picked.matrix_part().is_finite());
  AlgElem picked00 = picked.matrix_part().entry(0, 0);
  CHECK(picked00.as<RatFunUnitCoeff::Elem>().a0 == RationalFunction::variable(F));
}

TEST_CASE("affine span") {
  LoopWreathPtr lw = a0_ctx();
  AffineElement t = AffineElement::laurent(lw, 1);
  AffineElement tinv = AffineElement::laurent(lw, -1);
  std::vector<std::pair<std::string, AffineElement>> gens{{"t", t}, {"t^-1", tinv}};

  std::vector<AffineElement> probes{
      AffineElement::laurent(lw, 0),  // v
      t,
      affine_mul(t, t),
      tinv,
      affine_mul(tinv, tinv),
      AffineElement::unit00(lw),      // v - t t^-1
  };
  AffineSpanResult res = affine_span(lw, gens, 2, 4, probes);
  CHECK(res.word_count == 6);
  for (std::size_t i = 0; i < probes.size(); ++i) {
    CAPTURE(i);
    CHECK(res.probe_in_span[i]);
  }
  // t^3 needs degree 3
  AffineSpanResult deeper =
      affine_span(lw, gens, 2, 4, {affine_mul(affine_mul(t, t), t)});
  CHECK_FALSE(deeper.probe_in_span[0]);
  // degree 0 spans nothing
  AffineSpanResult nothing = affine_span(lw, gens, 0, 4, {t});
  CHECK(nothing.dimension == 0);
  CHECK_FALSE(nothing.probe_in_span[0]);
  // an idempotent generator spans one dimension at any degree
  AffineSpanResult idem =
      affine_span(lw, {{"(1)00", AffineElement::unit00(lw)}}, 3, 4, {});
  CHECK(idem.dimension == 1);
}

TEST_CASE("prop3 witnesses") {
  LoopWreathPtr lw = a0_ctx();
  auto name = [](const Prop3Witness& w) {
    std::string s;
    for (std::size_t i = 0; i < w.word.size(); ++i) {
      if (i) s += " ";
      s += prop3_gen_name(w.word[i]);
    }
    return s;
  };

  // (a_0)_{0,0} -> (1)_{0,0} a (1)_{0,0}
  Prop3Witness w1 = prop3_witness(lw, {0}, 0, 0);
  CHECK(w1.verified);
  CHECK(name(w1) == "(1)_{0,0} a (1)_{0,0}");

  // (1)_{1,0} -> t (1)_{0,0}
  Prop3Witness w2 = prop3_witness(lw, {}, 1, 0);
  CHECK(w2.verified);
  CHECK(name(w2) == "t (1)_{0,0}");

  // (a_2 a_1)_{0,3} -> (1)_{0,2} a (1)_{2,1} a (1)_{1,3}
  Prop3Witness w3 = prop3_witness(lw, {2, 1}, 0, 3);
  CHECK(w3.verified);
  CHECK(name(w3) ==
        "(1)_{0,0} t^-1 t^-1 a t t (1)_{0,0} t^-1 a t (1)_{0,0} t^-1 t^-1 t^-1");
}

TEST_CASE("prop3 containments at reduced scale") {
  LoopWreathPtr lw = a0_ctx();
  CHECK(prop3_check(lw, 3, 3, 1).pass);
}

TEST_CASE("prop3 at degree 1 is incomplete but not failing") {
  LoopWreathPtr lw = a0_ctx();
  Report rep = prop3_check(lw, 1, 2, 1);
  CHECK(rep.pass);
  bool reported = false;
  for (const auto& l : rep.lines)
    if (l.find("incomplete at this degree") != std::string::npos) reported = true;
  CHECK(reported);
}

TEST_CASE("affine_span rejects degrees above the cap") {
  LoopWreathPtr lw = a0_ctx();
  std::vector<std::pair<std::string, AffineElement>> gens{
      {"t", AffineElement::laurent(lw, 1)}};
  CHECK_THROWS_AS(affine_span(lw, gens, 9, 4), std::invalid_argument);
}

TEST_CASE("prop3 negative control: corrupted diagonal generator") {
  LoopWreathPtr lw = a0_ctx();
  const CoeffAlgebraPtr& A = lw->eg->coeff();
  // a with the 0-th diagonal entry missing
  BandedOperator broken = BandedOperator::diagonal(A, 0, [A](long col) {
    return col == 0 ? A->zero() : A->generator(static_cast<std::size_t>(col));
  });
  AffineElement bad = AffineElement::from_banded(lw, std::move(broken));
  Report rep = prop3_check(lw, 2, 2, 1, bad);
  CHECK_FALSE(rep.pass);
  bool hits_a0 = false;
  for (const auto& l : rep.lines)
    if (l.find("(a_0 )_{0,0}") != std::string::npos) hits_a0 = true;
  CHECK(hits_a0);
}

TEST_CASE("matrix quasi-inverses over A0") {
  Polynomial t = Polynomial::variable(F);
  Polynomial one = Polynomial::one(F);
  RationalFunction zero = RationalFunction::zero(F);
  RationalFunction tt(t, one);

  SUBCASE("1x1 matches the scalar closed form") {
    auto y = radical_matrix_quasi_inverse({{tt}});
    CHECK(y[0][0] == RationalFunction(-t, one + t));
    CHECK(y[0][0] == a0_quasi_inverse(tt));
  }
  SUBCASE("zero matrix") {
    auto y = radical_matrix_quasi_inverse({{zero, zero}, {zero, zero}});
    CHECK(y[0][0].is_zero());
    CHECK(y[1][1].is_zero());
  }
  SUBCASE("nilpotent matrix") {
    auto y = radical_matrix_quasi_inverse({{zero, tt}, {zero, zero}});
    CHECK(y[0][1] == -tt);
    CHECK(y[0][0].is_zero());
    CHECK(y[1][0].is_zero());
    CHECK(y[1][1].is_zero());
  }
  SUBCASE("entries outside A0 are rejected") {
    RationalFunction bad(one, one - t);
    CHECK_THROWS_AS(radical_matrix_quasi_inverse({{bad}}), std::invalid_argument);
  }
}

TEST_CASE("radical probe at reduced scale") {
  CHECK(probe_radical(F, 40, 20, 12, 9).pass);
}
