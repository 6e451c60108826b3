#include "helpers.hpp"
#include "sp1/errors.hpp"
#include "sp1/lp.hpp"

using namespace sp1;
using namespace sp1::test;
using lp::Rel;

namespace {

lp::Vec v(std::initializer_list<const char*> xs) {
  lp::Vec out;
  for (auto x : xs) out.push_back(q(x));
  return out;
}

}  // namespace

TEST_CASE("maximize on a triangle") {
  std::vector<lp::Constraint> rows{
      {v({"1", "0"}), Rel::Ge, q("0")}, {v({"0", "1"}), Rel::Ge, q("0")}, {v({"1", "1"}), Rel::Le, q("1")}};
  auto r = lp::maximize(v({"2", "1"}), 2, rows);
  CHECK(r.status == lp::Status::Optimal);
  CHECK(r.value == q("2"));
  CHECK(r.x == v({"1", "0"}));
  auto min_r = lp::maximize(v({"-1", "-1"}), 2, rows);
  CHECK(min_r.value == q("0"));
}

TEST_CASE("maximize detects unbounded and infeasible programs") {
  std::vector<lp::Constraint> half{{v({"1", "-1"}), Rel::Le, q("3")}};
  CHECK(lp::maximize(v({"1", "0"}), 2, half).status == lp::Status::Unbounded);
  std::vector<lp::Constraint> empty{{v({"1"}), Rel::Ge, q("2")}, {v({"1"}), Rel::Le, q("1")}};
  CHECK(lp::maximize(v({"1"}), 1, empty).status == lp::Status::Infeasible);
  std::vector<lp::Constraint> strict{{v({"1"}), Rel::Lt, q("1")}};
  CHECK_THROWS_AS(lp::maximize(v({"1"}), 1, strict), PreconditionError);
}

TEST_CASE("maximize handles free variables, equalities and redundant rows") {
  std::vector<lp::Constraint> rows{{v({"1", "1"}), Rel::Eq, q("-3")},
                                   {v({"2", "2"}), Rel::Eq, q("-6")},
                                   {v({"1", "0"}), Rel::Le, q("-5/2")}};
  auto r = lp::maximize(v({"0", "-1"}), 2, rows);
  CHECK(r.status == lp::Status::Optimal);
  CHECK(r.value == q("1/2"));
  CHECK(r.x == v({"-5/2", "-1/2"}));
  CHECK(lp::maximize(v({"0", "1"}), 2, rows).status == lp::Status::Unbounded);
}

TEST_CASE("find_point respects strict rows") {
  std::vector<lp::Constraint> open{{v({"1"}), Rel::Gt, q("0")}, {v({"1"}), Rel::Lt, q("1/3")}};
  auto x = lp::find_point(1, open);
  REQUIRE(x.has_value());
  CHECK((*x)[0] > 0);
  CHECK((*x)[0] < q("1/3"));
  std::vector<lp::Constraint> empty{{v({"1"}), Rel::Gt, q("0")}, {v({"1"}), Rel::Le, q("0")}};
  CHECK_FALSE(lp::find_point(1, empty).has_value());
  std::vector<lp::Constraint> line{{v({"1", "-1"}), Rel::Eq, q("0")}, {v({"1", "0"}), Rel::Gt, q("7")}};
  auto y = lp::find_point(2, line);
  REQUIRE(y.has_value());
  CHECK((*y)[0] == (*y)[1]);
  CHECK((*y)[0] > 7);
}

TEST_CASE("is_bounded") {
  std::vector<lp::Constraint> box{{v({"1", "0"}), Rel::Ge, q("0")},
                                  {v({"0", "1"}), Rel::Ge, q("0")},
                                  {v({"1", "1"}), Rel::Le, q("1")}};
  CHECK(lp::is_bounded(2, box));
  box.pop_back();
  CHECK_FALSE(lp::is_bounded(2, box));
}

TEST_CASE("vertices of a simplex slice") {
  std::vector<lp::Constraint> rows{{v({"1", "0", "0"}), Rel::Ge, q("0")},
                                   {v({"0", "1", "0"}), Rel::Ge, q("0")},
                                   {v({"0", "0", "1"}), Rel::Eq, q("0")},
                                   {v({"1", "1", "1"}), Rel::Eq, q("1")}};
  auto vs = lp::vertices(3, rows);
  CHECK(vs == std::vector<lp::Vec>{v({"0", "1", "0"}), v({"1", "0", "0"})});
  std::vector<lp::Constraint> square{{v({"1", "0"}), Rel::Ge, q("0")}, {v({"1", "0"}), Rel::Le, q("1")},
                                     {v({"0", "1"}), Rel::Ge, q("0")}, {v({"0", "1"}), Rel::Le, q("1")}};
  CHECK(lp::vertices(2, square).size() == 4);
}

TEST_CASE("rank") {
  CHECK(lp::rank({}) == 0);
  CHECK(lp::rank({v({"1", "2"}), v({"2", "4"})}) == 1);
  CHECK(lp::rank({v({"1", "0", "1"}), v({"0", "1", "1"}), v({"1", "1", "2"})}) == 2);
  CHECK(lp::rank({v({"1", "0"}), v({"0", "1"})}) == 2);
}
