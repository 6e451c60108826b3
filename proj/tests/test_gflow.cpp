#include "generators.hpp"
#include "helpers.hpp"
#include "sp1/errors.hpp"
#include "sp1/gflow.hpp"

using namespace sp1;
using namespace sp1::test;

namespace {

lp::Vec v(std::initializer_list<long> xs) {
  lp::Vec out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

std::vector<GammaValue> gv(std::initializer_list<const char*> xs) {
  std::vector<GammaValue> out;
  for (auto x : xs) out.push_back(g(x));
  return out;
}

// w = {a, h} with functionals x_a − x_h, x_a, x_h.
CellComplex running_example() {
  ComplexSpec spec;
  spec.coords = {"a", "h"};
  spec.h = "h";
  spec.functionals = {{v({1, -1}), Rational(0)}, {v({1, 0}), Rational(0)}, {v({0, 1}), Rational(0)}};
  return build_complex(spec);
}

}  // namespace

TEST_CASE("build_complex examples") {
  auto k = running_example();
  CHECK(k.functionals().size() == 3);
  CHECK(enumerate_cells(k).size() == 13);

  ComplexSpec bare;
  bare.coords = {"a", "h"};
  bare.h = "h";
  bare.diagonals = false;
  // Only the coordinate hyperplanes are added, so the open orthant is one cell.
  auto kb = build_complex(bare);
  CHECK(kb.functionals().size() == 2);
  std::size_t open = 0;
  for (const auto& c : enumerate_flow_cells(kb)) open += c.signs == ">>";
  CHECK(open == 1);

  ComplexSpec sym;
  sym.coords = {"a", "b", "h"};
  sym.h = "h";
  sym.diagonals = false;
  sym.functionals = {{v({1, 0, 2}), Rational(1)}};
  sym.symmetries = {{{"a", "b"}, {"b", "a"}}};
  auto ks = build_complex(sym);
  CHECK(std::find(ks.functionals().begin(), ks.functionals().end(), Functional{v({0, 1, 2}), Rational(1)}) !=
        ks.functionals().end());
  CHECK(ks.functionals().size() == 5);
}

TEST_CASE("build_complex normalizes and rejects bad input") {
  ComplexSpec spec;
  spec.coords = {"a", "h"};
  spec.h = "h";
  spec.diagonals = false;
  spec.functionals = {{v({-2, 4}), Rational(6)}, {v({1, -2}), Rational(-3)}};
  auto k = build_complex(spec);
  CHECK(k.functionals().front() == Functional{v({1, -2}), Rational(-3)});
  CHECK(k.functionals().size() == 3);

  spec.functionals = {{v({0, 0}), Rational(1)}};
  CHECK_THROWS_AS(build_complex(spec), PreconditionError);
  spec.functionals = {{v({1}), Rational(1)}};
  CHECK_THROWS_AS(build_complex(spec), PreconditionError);
  spec.functionals.clear();
  spec.h = "z";
  CHECK_THROWS_AS(build_complex(spec), PreconditionError);
  spec.h = "h";
  spec.coords = {"h", "h"};
  CHECK_THROWS_AS(build_complex(spec), PreconditionError);
}

TEST_CASE("locate_cell and classify_D0") {
  auto k = running_example();
  CHECK(locate_cell(k, v({3, 1})).signs == ">>>");
  CHECK(locate_cell(k, v({0, 0})).signs == "===");
  CHECK(locate_cell(k, v({2, 2})).signs == "=>>");
  CHECK_FALSE(classify_D0(k, Cell{">>>"}));
  CHECK(classify_D0(k, Cell{"<>>"}));
  CHECK(classify_D0(k, Cell{"=>>"}));
  CHECK(classify_D0(k, Cell{"==="}));

  ComplexSpec boxed;
  boxed.coords = {"a", "h"};
  boxed.h = "h";
  boxed.functionals = {{v({1, 0}), Rational(2)}, {v({0, 1}), Rational(2)}};
  auto kb = build_complex(boxed);
  // 0 < x_a < 2 and 0 < x_h < 2 is bounded.
  CHECK(classify_D0(kb, locate_cell(kb, v({1, 1}))));
}

TEST_CASE("recession barycenters") {
  auto k = running_example();
  CHECK(recession_barycenter(k, Cell{">>>"}) == v({1, 0}));
  CHECK(recession_barycenter(k, Cell{"=>>"}) == v({0, 0}));

  ComplexSpec spec;
  spec.coords = {"a", "b", "h"};
  spec.h = "h";
  spec.diagonals = false;
  auto k3 = build_complex(spec);
  // Open orthant: the slice at v_h = 0 is the segment from (1,0,0) to (0,1,0).
  CHECK(recession_barycenter(k3, locate_cell(k3, v({1, 1, 1}))) ==
        lp::Vec{q("1/2"), q("1/2"), q("0")});
}

TEST_CASE("exit_time") {
  auto k = running_example();
  CHECK(exit_time(k, Cell{">>>"}, v({1, 0}), v({3, 1})) == g("2"));
  ComplexSpec spec;
  spec.coords = {"a", "b", "h"};
  spec.h = "h";
  spec.diagonals = false;
  auto k3 = build_complex(spec);
  // Two active walls x_a = 0 and x_b = 0: the nearer one wins.
  CHECK(exit_time(k3, Cell{">>>"}, lp::Vec{q("1/2"), q("1/2"), q("0")}, v({3, 1, 5})) == g("2"));
  CHECK(exit_time(k3, Cell{">>>"}, v({0, 0, 1}), v({3, 1, 5})) == g("5"));
  CHECK(exit_time(k3, Cell{">>>"}, v({0, -1, 0}), v({3, 1, 5})).is_infinite());
}

TEST_CASE("flow examples") {
  auto k = running_example();
  auto r = flow(k, kInfinity, gv({"3", "1"}));
  CHECK(r.endpoint == gv({"1", "1"}));
  REQUIRE(r.trajectory.size() == 1);
  CHECK(r.trajectory[0].time == g("2"));
  CHECK(r.trajectory[0].direction == v({1, 0}));
  CHECK(r.final_cell.signs == "=>>");
  CHECK(final_image_membership(k, r.endpoint));
  CHECK_FALSE(final_image_membership(k, gv({"3", "1"})));
  CHECK(final_image_membership(k, gv({"3", "inf"})));

  CHECK(flow(k, g("1/2"), gv({"3", "1"})).endpoint == gv({"5/2", "1"}));
  CHECK(flow(k, g("7"), gv({"1/2", "1"})).endpoint == gv({"1/2", "1"}));
  auto fixed = flow(k, kInfinity, gv({"9", "inf"}));
  CHECK(fixed.endpoint == gv({"9", "inf"}));
  CHECK(fixed.trajectory.empty());

  CHECK_THROWS_AS(flow(k, g("1"), gv({"-1", "1"})), PreconditionError);
  CHECK_THROWS_AS(flow(k, g("1"), gv({"inf", "1"})), PreconditionError);
  CHECK_THROWS_AS(flow(k, g("1"), gv({"1"})), PreconditionError);
}

TEST_CASE("flow rejects a xi that is not invariant") {
  ComplexSpec spec;
  spec.coords = {"a", "h"};
  spec.h = "h";
  spec.xi = {{v({1, 0}), Rational(0)}};
  auto k = build_complex(spec);
  CHECK_THROWS_AS(flow(k, kInfinity, gv({"3", "1"})), PreconditionError);
}

TEST_CASE("flow respects the region") {
  ComplexSpec spec;
  spec.coords = {"a", "b", "h"};
  spec.h = "h";
  spec.region = {{v({0, 1, -1}), Rational(1)}};
  spec.xi = {{v({0, 1, 0}), Rational(0)}, {v({0, 0, 1}), Rational(0)}};
  auto k = build_complex(spec);
  CHECK_THROWS_AS(flow(k, g("1"), gv({"1", "5", "1"})), PreconditionError);
  auto r = flow(k, kInfinity, gv({"7", "2", "1"}));
  CHECK(r.endpoint[1] == g("2"));
  CHECK(r.endpoint[2] == g("1"));
  CHECK(final_image_membership(k, r.endpoint));
  auto core = compact_core(k);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r.endpoint[i].finite() <= Rational(core.m[i]) * r.endpoint[2].finite() + core.c[i]);
  }
}

TEST_CASE("compact core of the running example") {
  auto core = compact_core(running_example());
  CHECK(core.m == std::vector<Integer>{1, 1});
  CHECK(core.c == std::vector<Rational>{0, 0});
}

TEST_CASE("flow laws on generated complexes") {
  Rng rng(51);
  for (int i = 0; i < 6; ++i) {
    auto inst = random_instance(rng);
    const auto& k = inst.complex;
    const auto cells = enumerate_flow_cells(k);
    auto core = compact_core(k);
    for (int j = 0; j < 20; ++j) {
      auto x = random_start(k, rng);
      GammaValue s = random_time(rng), t = random_time(rng);
      auto whole = flow(k, s + t, x);
      auto first = flow(k, t, x);
      CHECK(flow(k, s, first.endpoint).endpoint == whole.endpoint);
      auto end = flow(k, kInfinity, x);
      CHECK(end.trajectory.size() <= cells.size());
      CHECK(final_image_membership(k, end.endpoint));
      CHECK(flow(k, g("3"), end.endpoint).endpoint == end.endpoint);
      std::size_t prev = k.dim() + 1;
      for (const auto& step : end.trajectory) {
        CHECK(k.info(step.cell).dimension < prev);
        prev = k.info(step.cell).dimension;
      }
      if (end.endpoint[k.h()].is_infinite()) continue;
      lp::Vec a, b;
      for (std::size_t c = 0; c < k.dim(); ++c) {
        a.push_back(x[c].finite());
        b.push_back(end.endpoint[c].finite());
      }
      for (const auto& xi : k.xi()) CHECK(xi(a) == xi(b));
      for (std::size_t c = 0; c < k.dim(); ++c) {
        CHECK(b[c] <= Rational(core.m[c]) * b[k.h()] + core.c[c]);
      }
    }
  }
}

TEST_CASE("endpoint map is Lipschitz along a cell chain") {
  Rng rng(52);
  const Rational eps = make_rational(1, 1000);
  int compared = 0;
  for (int i = 0; i < 10; ++i) {
    auto inst = random_instance(rng);
    const auto& k = inst.complex;
    for (int j = 0; j < 10; ++j) {
      auto x = random_start(k, rng);
      if (x[k.h()].is_infinite()) continue;
      std::vector<GammaValue> y = x;
      bool ok = true;
      for (auto& c : y) {
        Rational moved = c.finite() + eps * rng.uniform(-1, 1);
        ok = ok && sgn(moved) >= 0;
        c = GammaValue(moved);
      }
      lp::Vec yv;
      for (const auto& c : y) yv.push_back(c.finite());
      if (!ok || !k.in_region(yv)) continue;
      auto fx = flow(k, kInfinity, x), fy = flow(k, kInfinity, y);
      if (fx.trajectory.size() != fy.trajectory.size()) continue;
      bool same = true;
      for (std::size_t s = 0; s < fx.trajectory.size(); ++s) same = same && fx.trajectory[s].cell == fy.trajectory[s].cell;
      if (!same) continue;
      ++compared;
      Rational dist = 0;
      for (std::size_t c = 0; c < k.dim(); ++c) {
        dist = std::max(dist, Rational(abs(fx.endpoint[c].finite() - fy.endpoint[c].finite())));
      }
      CHECK(dist <= fx.lipschitz * eps);
    }
  }
  CHECK(compared > 20);
}
