#include "helpers.hpp"
#include "sp1/errors.hpp"
#include "sp1/random.hpp"
#include "sp1/sample.hpp"

using namespace sp1;
using namespace sp1::test;

TEST_CASE("normalize_point") {
  auto p7 = FieldSpec::padic(7);
  CHECK(ball(p7, "7", "1") == ball(p7, "0", "1"));
  CHECK(ball(p7, "7", "1").str() == "(std, 0, 1)");
  // B(1/7, 0) = {val(x − 1/7) ≥ 0} = {val x = −1}: in 1/x it is B(7, 2).
  PLinePoint p = ball(p7, "1/7", "0");
  CHECK(p.chart == Chart::Inv);
  CHECK(p.center == e("7"));
  CHECK(p.radius == g("2"));
  CHECK(ball(p7, "0", "inf") == simple_point(p7, e("0")));
  CHECK(normalize_point(p7, p) == p);
  // Balls around infinity live in the std chart with negative radius.
  CHECK(ball(p7, "1/7", "-1").str() == "(std, 0, -1)");
  CHECK(normalize_point(p7, Chart::Inv, e("0"), g("3")).str() == "(std, 0, -3)");
  CHECK(pt(p7, "1/7").str() == "(inv, 7, inf)");
}

TEST_CASE("normalization is idempotent and canonical") {
  for (auto spec : {FieldSpec::padic(3), FieldSpec::tadic()}) {
    Rng rng(21);
    for (int i = 0; i < 200; ++i) {
      PLinePoint p = sample::point(spec, rng);
      CHECK(normalize_point(spec, p) == p);
      // Moving the center inside the ball does not change the point.
      if (p.radius.is_finite() && p.chart == Chart::Std && p.radius >= GammaValue(0)) {
        FieldElem shift = sample::element(spec, rng);
        GammaValue v = val(spec, shift);
        if (v < p.radius) continue;
        CHECK(normalize_point(spec, Chart::Std, p.center + shift, p.radius) == p);
      }
    }
  }
}

TEST_CASE("metric_d") {
  auto p5 = FieldSpec::padic(5);
  CHECK(metric_d(p5, pt(p5, "3"), pt(p5, "3")).is_infinite());
  CHECK(metric_d(p5, pt(p5, "1"), pt(p5, "6")) == g("1"));
  CHECK(metric_d(p5, pt(p5, "1/5"), pt(p5, "5")) == g("0"));
  CHECK(metric_d(p5, pt(p5, "1/5"), pt(p5, "2/5")) == g("1"));
  CHECK(metric_d(p5, pt(p5, "inf"), pt(p5, "1/25")) == g("2"));
  CHECK_THROWS_AS(metric_d(p5, ball(p5, "0", "1"), pt(p5, "1")), PreconditionError);
}

TEST_CASE("ultrametric and separation on random simple points") {
  for (auto spec : {FieldSpec::padic(2), FieldSpec::padic(5), FieldSpec::tadic()}) {
    Rng rng(22);
    for (int i = 0; i < 200; ++i) {
      PLinePoint x = sample::simple(spec, rng), y = sample::simple(spec, rng), z = sample::simple(spec, rng);
      CHECK(metric_d(spec, x, z) >= std::min(metric_d(spec, x, y), metric_d(spec, y, z)));
      CHECK(metric_d(spec, x, y) == metric_d(spec, y, x));
      CHECK(metric_d(spec, x, y).is_infinite() == (x == y));
    }
  }
}

TEST_CASE("join") {
  auto p5 = FieldSpec::padic(5);
  CHECK(join(p5, pt(p5, "0"), pt(p5, "inf")) == gauss_point());
  CHECK(join(p5, pt(p5, "3"), pt(p5, "3")) == pt(p5, "3"));
  CHECK(join(p5, pt(p5, "1"), pt(p5, "6")) == ball(p5, "1", "1"));
  CHECK(join(p5, pt(p5, "1/5"), pt(p5, "1/25")) == ball(p5, "0", "-1"));
  Rng rng(23);
  for (int i = 0; i < 200; ++i) {
    PLinePoint x = sample::point(p5, rng), y = sample::point(p5, rng);
    PLinePoint j = join(p5, x, y);
    CHECK(j == join(p5, y, x));
    CHECK(contains(p5, j, x));
    CHECK(contains(p5, j, y));
    CHECK(contains(p5, gauss_point(), x));
  }
}

TEST_CASE("gauss_val") {
  auto p5 = FieldSpec::padic(5);
  Poly f({e("0"), e("-1"), e("1")});
  CHECK(gauss_val(p5, f, ball(p5, "0", "2")) == g("2"));
  CHECK(gauss_val(p5, Poly({e("50")}), ball(p5, "3", "1")) == g("2"));
  CHECK(gauss_val(p5, Poly({e("-5"), e("0"), e("1")}), gauss_point()) == g("0"));
  CHECK(gauss_val(p5, Poly(), gauss_point()).is_infinite());
  CHECK_THROWS_AS(gauss_val(p5, f, point_at_infinity()), PreconditionError);
}

TEST_CASE("gauss valuation is multiplicative and ultrametric") {
  for (auto spec : {FieldSpec::padic(3), FieldSpec::tadic()}) {
    Rng rng(24);
    for (int i = 0; i < 100; ++i) {
      Poly f = sample::poly(spec, rng, 3), h = sample::poly(spec, rng, 3);
      PLinePoint b = sample::point(spec, rng);
      if (b == point_at_infinity()) continue;
      CHECK(gauss_val(spec, f * h, b) == gauss_val(spec, f, b) + gauss_val(spec, h, b));
      CHECK(gauss_val(spec, f + h, b) >= std::min(gauss_val(spec, f, b), gauss_val(spec, h, b)));
    }
  }
}

TEST_CASE("psi, rho and psi_D") {
  auto p5 = FieldSpec::padic(5);
  CHECK(psi(p5, g("0"), pt(p5, "3")) == gauss_point());
  CHECK(psi(p5, g("5"), ball(p5, "0", "2")) == ball(p5, "0", "2"));
  CHECK(psi(p5, g("1"), pt(p5, "1/25")) == ball(p5, "0", "-1"));
  CHECK_THROWS_AS(psi(p5, g("-1"), pt(p5, "3")), PreconditionError);

  Divisor d0inf = make_divisor(p5, {pt(p5, "0"), pt(p5, "inf")});
  CHECK(rho(p5, pt(p5, "0"), d0inf).is_infinite());
  CHECK(rho(p5, pt(p5, "1"), d0inf) == g("0"));
  CHECK(rho(p5, ball(p5, "0", "3"), make_divisor(p5, {pt(p5, "0")})) == g("3"));
  CHECK(psi_D(p5, g("0"), pt(p5, "1"), d0inf) == gauss_point());
  CHECK(psi_D(p5, g("2"), pt(p5, "25"), d0inf) == ball(p5, "0", "2"));
  CHECK_THROWS_AS(make_divisor(p5, {ball(p5, "0", "1")}), PreconditionError);
  CHECK_THROWS_AS(make_divisor(p5, {}), PreconditionError);
}

TEST_CASE("skeleton examples") {
  auto p5 = FieldSpec::padic(5);
  auto path = skeleton(p5, make_divisor(p5, {pt(p5, "0"), pt(p5, "inf")}));
  CHECK(path.vertices.size() == 3);
  CHECK(path.edges.size() == 2);
  for (const auto& ed : path.edges) CHECK(ed.length.is_infinite());
  CHECK(path.vertices[0].point == gauss_point());

  auto star = skeleton(p5, make_divisor(p5, {pt(p5, "0"), pt(p5, "1"), pt(p5, "inf")}));
  CHECK(star.vertices.size() == 4);
  CHECK(star.adjacency()[0].size() == 3);

  auto chain = skeleton(p5, make_divisor(p5, {pt(p5, "0"), pt(p5, "25"), pt(p5, "inf")}));
  CHECK(chain.vertices.size() == 5);
  int finite = 0;
  for (const auto& ed : chain.edges) {
    if (ed.length.is_finite()) {
      ++finite;
      CHECK(ed.length == g("2"));
    }
  }
  CHECK(finite == 1);
  bool has_b02 = false;
  for (const auto& v : chain.vertices) has_b02 = has_b02 || v.point == ball(p5, "0", "2");
  CHECK(has_b02);
}

TEST_CASE("retract examples") {
  auto p5 = FieldSpec::padic(5);
  Divisor d = make_divisor(p5, {pt(p5, "0"), pt(p5, "25"), pt(p5, "inf")});
  // 26 − 25 = 1 is a unit, so 26 leaves the skeleton at the Gauss point.
  CHECK(retract(p5, pt(p5, "26"), d) == gauss_point());
  CHECK(retract(p5, pt(p5, "50"), d) == ball(p5, "0", "2"));
  CHECK(retract(p5, ball(p5, "0", "1"), d) == ball(p5, "0", "1"));
  CHECK(retract(p5, pt(p5, "25"), d) == pt(p5, "25"));
}

TEST_CASE("retraction axioms on random instances") {
  for (auto spec : {FieldSpec::padic(2), FieldSpec::padic(5), FieldSpec::tadic()}) {
    Rng rng(25);
    for (int i = 0; i < 60; ++i) {
      std::vector<PLinePoint> pts;
      const long n = rng.uniform(1, 4);
      for (long k = 0; k < n; ++k) pts.push_back(sample::simple(spec, rng));
      Divisor d = make_divisor(spec, pts);
      auto tree = skeleton(spec, d);
      CHECK_NOTHROW(tree.validate());
      PLinePoint a = sample::point(spec, rng);
      PLinePoint r = retract(spec, a, d);
      CHECK(psi_D(spec, kInfinity, a, d) == a);
      CHECK(retract(spec, r, d) == r);
      CHECK(on_tree(spec, r, tree));
      for (int s = 0; s < 5; ++s) {
        GammaValue t = sample::radius(rng);
        CHECK(psi_D(spec, g("0"), psi_D(spec, t, a, d), d) == r);
        // Points of the skeleton stay put for every t.
        CHECK(psi_D(spec, t, r, d) == r);
      }
    }
  }
}

TEST_CASE("gauss valuation along a path is a MinAffine") {
  auto p3 = FieldSpec::padic(3);
  Rng rng(26);
  for (int i = 0; i < 50; ++i) {
    Poly f = sample::poly(p3, rng, 4);
    FieldElem c = sample::element_or_zero(p3, rng);
    std::vector<MinAffine::Term> terms;
    auto shifted = taylor_shift(p3, f, c);
    for (std::size_t k = 0; k < shifted.size(); ++k) {
      if (!shifted[k].is_zero()) terms.push_back({Rational(static_cast<long>(k)), val(p3, shifted[k])});
    }
    MinAffine m(terms);
    for (long t2 = 0; t2 <= 12; ++t2) {
      GammaValue t(make_rational(t2, 2));
      CHECK(gauss_val(p3, f, PLinePoint{Chart::Std, c, t}) == m(t));
    }
  }
}
