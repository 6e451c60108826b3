#include "helpers.hpp"
#include "sp1/errors.hpp"
#include "sp1/random.hpp"
#include "sp1/sample.hpp"

using namespace sp1;
using namespace sp1::test;

TEST_CASE("p-adic and t-adic valuations") {
  auto p5 = FieldSpec::padic(5);
  CHECK(val(p5, e("50")) == g("2"));
  CHECK(val(p5, e("0")).is_infinite());
  CHECK(val(p5, e("3/125")) == g("-3"));
  auto tad = FieldSpec::tadic();
  const FieldElem t = FieldElem::t();
  CHECK(val(tad, t * t / (FieldElem(1) + t)) == g("2"));
  CHECK(val(tad, FieldElem(1) / t) == g("-1"));
  CHECK(val(tad, e("7")) == g("0"));
  CHECK_THROWS_AS(FieldSpec::padic(4), ParseError);
  CHECK_THROWS_AS(FieldSpec::padic(1), ParseError);
  CHECK_THROWS_AS(p5.field().check(t), PreconditionError);
}

TEST_CASE("rational function arithmetic is canonical") {
  const FieldElem t = FieldElem::t();
  FieldElem a = (t * t - FieldElem(1)) / (t - FieldElem(1));
  CHECK(a == t + FieldElem(1));
  CHECK((t / t).is_rational());
  CHECK(t / t == FieldElem(1));
  CHECK((t - t).is_zero());
  CHECK_THROWS(FieldElem(1) / FieldElem(0));
}

TEST_CASE("taylor_shift examples") {
  auto p5 = FieldSpec::padic(5);
  CHECK(taylor_shift(p5, Poly({e("0"), e("-1"), e("1")}), e("0")) == std::vector<FieldElem>{e("0"), e("-1"), e("1")});
  CHECK(taylor_shift(p5, Poly({e("0"), e("0"), e("1")}), e("1")) == std::vector<FieldElem>{e("1"), e("2"), e("1")});
  CHECK(taylor_shift(p5, Poly({e("3")}), e("7")) == std::vector<FieldElem>{e("3")});
  CHECK_THROWS_AS(taylor_shift(p5.with_max_degree(2), Poly({e("1"), e("1"), e("1"), e("1")}), e("1")),
                  PreconditionError);
}

TEST_CASE("valuation axioms on random elements") {
  for (auto spec : {FieldSpec::padic(2), FieldSpec::padic(3), FieldSpec::tadic()}) {
    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
      FieldElem a = sample::element_or_zero(spec, rng), b = sample::element_or_zero(spec, rng);
      CHECK(val(spec, a * b) == val(spec, a) + val(spec, b));
      GammaValue lo = std::min(val(spec, a), val(spec, b));
      CHECK(val(spec, a + b) >= lo);
      if (val(spec, a) != val(spec, b)) CHECK(val(spec, a + b) == lo);
    }
  }
}

TEST_CASE("taylor shift reproduces f at sample points") {
  for (auto spec : {FieldSpec::padic(5), FieldSpec::tadic()}) {
    Rng rng(12);
    for (int i = 0; i < 30; ++i) {
      Poly f = sample::poly(spec, rng, 5);
      FieldElem c = sample::element_or_zero(spec, rng);
      auto shifted = taylor_shift(spec, f, c);
      for (int k = 0; k < 20; ++k) {
        FieldElem x = sample::element_or_zero(spec, rng);
        FieldElem acc, power(1);
        for (const auto& a : shifted) {
          acc += a * power;
          power *= x - c;
        }
        CHECK(acc == f(x));
      }
    }
  }
}

TEST_CASE("truncation keeps exactly the ball") {
  auto p5 = FieldSpec::padic(5);
  // 1 + 5 + 25·k truncated below 2 is 6.
  CHECK(p5.field().truncate(e("656"), q("2")) == e("6"));
  CHECK(p5.field().truncate(e("1/2"), q("1")) == e("3"));
  auto tad = FieldSpec::tadic();
  const FieldElem t = FieldElem::t();
  CHECK(tad.field().truncate(FieldElem(1) / (FieldElem(1) - t), q("3")) == FieldElem(1) + t + t * t);
  Rng rng(13);
  for (auto spec : {p5, tad}) {
    for (int i = 0; i < 100; ++i) {
      FieldElem c = sample::element(spec, rng);
      Rational r = Rational(rng.uniform(-2, 6));
      if (GammaValue(r) <= val(spec, c)) continue;
      FieldElem tr = spec.field().truncate(c, r);
      CHECK(val(spec, tr - c) >= GammaValue(r));
      CHECK(spec.field().truncate(tr, r) == tr);
    }
  }
}
