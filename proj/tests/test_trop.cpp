#include "helpers.hpp"
#include "sp1/errors.hpp"
#include "sp1/random.hpp"
#include "sp1/sample.hpp"
#include "sp1/trop.hpp"

#include <set>

using namespace sp1;
using namespace sp1::test;

namespace {

MPoly mono(std::size_t n, MPoly::Exponent ex, const char* c = "1") {
  return MPoly::monomial(n, std::move(ex), e(c));
}

TropPoint tp(std::vector<GammaValue> v) { return TropPoint{std::move(v)}; }

PolyTuple skeleton_tuple() {
  return PolyTuple{2, {mono(2, {2, 0}), mono(2, {0, 2}), mono(2, {1, 1}) + mono(2, {0, 2}, "-1")}};
}

}  // namespace

TEST_CASE("trop_normalize") {
  CHECK(trop_normalize({g("1"), g("0")}) == tp({g("1"), g("0")}));
  CHECK(trop_normalize({g("3"), g("5"), g("4")}) == tp({g("0"), g("2"), g("1")}));
  CHECK(trop_normalize({kInfinity, g("2")}) == tp({kInfinity, g("0")}));
  CHECK_THROWS_AS(trop_normalize({kInfinity, kInfinity}), PreconditionError);
}

TEST_CASE("tau_h examples") {
  auto p5 = FieldSpec::padic(5);
  PolyTuple lin{1, {mono(2, {1, 0}), mono(2, {0, 1})}};
  CHECK(tau_h(p5, lin, std::vector<FieldElem>{e("1"), e("5")}) == tp({g("0"), g("1")}));
  CHECK(tau_h(p5, lin, gauss_point()) == tp({g("0"), g("0")}));
  CHECK(tau_h(p5, lin, pt(p5, "inf")) == tp({kInfinity, g("0")}));
  CHECK(tau_h(p5, lin, ball(p5, "0", "-2")) == tp({g("2"), g("0")}));
  PolyTuple quad{2, {mono(2, {2, 0}), mono(2, {1, 1}), mono(2, {0, 2})}};
  CHECK(tau_h(p5, quad, std::vector<FieldElem>{e("1"), e("1")}) == tp({g("0"), g("0"), g("0")}));
  CHECK_THROWS_AS(tau_h(p5, lin, std::vector<FieldElem>{e("0"), e("0")}), PreconditionError);
  PolyTuple bad{2, {mono(2, {1, 0})}};
  CHECK_THROWS_AS(tau_h(p5, bad, gauss_point()), PreconditionError);
}

TEST_CASE("tau_h agrees on simple points in both charts") {
  auto p3 = FieldSpec::padic(3);
  auto h = skeleton_tuple();
  Rng rng(41);
  for (int i = 0; i < 100; ++i) {
    FieldElem a = sample::element(p3, rng);
    CHECK(tau_h(p3, h, simple_point(p3, a)) == tau_h(p3, h, std::vector<FieldElem>{e("1"), a}));
  }
}

TEST_CASE("tau_h is invariant under scaling the tuple") {
  for (auto spec : {FieldSpec::padic(3), FieldSpec::tadic()}) {
    Rng rng(42);
    for (int i = 0; i < 50; ++i) {
      PolyTuple h{2, {}};
      for (int k = 0; k < 3; ++k) {
        MPoly m(2);
        for (unsigned j = 0; j <= 2; ++j) m = m + MPoly::monomial(2, {2 - j, j}, sample::element_or_zero(spec, rng));
        h.h.push_back(m);
      }
      FieldElem s = sample::element(spec, rng);
      PolyTuple scaled = h;
      for (auto& m : scaled.h) m = s * m;
      PLinePoint x = sample::point(spec, rng);
      try {
        CHECK(tau_h(spec, scaled, x) == tau_h(spec, h, x));
      } catch (const PreconditionError&) {
        CHECK_THROWS_AS(tau_h(spec, h, x), PreconditionError);
      }
    }
  }
}

TEST_CASE("polydisk_gauss_val and semilattice_member") {
  auto p5 = FieldSpec::padic(5);
  CHECK(polydisk_gauss_val(p5, mono(2, {1, 1}), {g("1"), g("2")}) == g("3"));
  CHECK(polydisk_gauss_val(p5, mono(2, {0, 0}, "50"), {g("1"), g("2")}) == g("2"));
  CHECK(polydisk_gauss_val(p5, mono(1, {1}) + mono(1, {0}, "5"), {g("2")}) == g("1"));
  CHECK(semilattice_member(p5, mono(1, {1}), {g("1")}, 1));
  CHECK(semilattice_member(p5, mono(1, {1}, "1/5"), {g("1")}, 1));
  CHECK_FALSE(semilattice_member(p5, mono(1, {0}, "1/5"), {g("4")}, 1));
  CHECK_THROWS_AS(semilattice_member(p5, mono(1, {2}), {g("1")}, 1), PreconditionError);
  CHECK_THROWS_AS(polydisk_gauss_val(p5, mono(1, {1}), {g("-1")}), PreconditionError);
}

TEST_CASE("semilattice is an O-submodule") {
  auto p3 = FieldSpec::padic(3);
  Rng rng(43);
  const std::vector<GammaValue> gamma{g("1/2"), g("2")};
  auto random_member = [&]() {
    for (;;) {
      MPoly m(2);
      for (unsigned a = 0; a <= 2; ++a)
        for (unsigned b = 0; a + b <= 2; ++b)
          if (rng.coin()) m = m + MPoly::monomial(2, {a, b}, sample::element(p3, rng));
      if (semilattice_member(p3, m, gamma, 2)) return m;
    }
  };
  for (int i = 0; i < 100; ++i) {
    MPoly a = random_member(), b = random_member();
    CHECK(semilattice_member(p3, a + b, gamma, 2));
    FieldElem s = sample::element(p3, rng);
    if (val(p3, s) >= GammaValue(0)) CHECK(semilattice_member(p3, s * a, gamma, 2));
  }
}

TEST_CASE("tau_h separates a skeleton sample") {
  auto p3 = FieldSpec::padic(3);
  Divisor d = make_divisor(p3, {pt(p3, "0"), pt(p3, "1"), pt(p3, "inf")});
  std::vector<PLinePoint> samples{gauss_point(), pt(p3, "0"), pt(p3, "1"), pt(p3, "inf")};
  for (const char* r : {"1/2", "1", "3"}) {
    samples.push_back(ball(p3, "0", r));
    samples.push_back(ball(p3, "1", r));
    samples.push_back(normalize_point(p3, Chart::Inv, e("0"), g(r)));
  }
  std::set<TropPoint> images;
  for (const auto& x : samples) {
    CHECK(retract(p3, x, d) == x);
    images.insert(tau_h(p3, skeleton_tuple(), x));
  }
  CHECK(images.size() == samples.size());
}
