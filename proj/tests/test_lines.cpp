#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"

#include "farey/lines.hpp"

using namespace farey;

namespace {

// Brute-force re-enumeration used as an oracle: no clipping logic shared
// with the library, just corner sign spans.
std::set<PrimitiveLine> oracle_family(int m, int n, const RectWindow& rect) {
  std::set<PrimitiveLine> out;
  const auto corners = rect.corners();
  for (int u = -m; u <= m; ++u) {
    for (int v = -n; v <= n; ++v) {
      if (u == 0 && v == 0) continue;
      Rat lo = Rat(u) * corners[0].x + Rat(v) * corners[0].y;
      Rat hi = lo;
      for (const Pt& p : corners) {
        const Rat val = Rat(u) * p.x + Rat(v) * p.y;
        lo = std::min(lo, val);
        hi = std::max(hi, val);
      }
      for (auto w = lo.ceil(); w <= hi.floor(); ++w)
        out.insert(PrimitiveLine::normalized(u, v, w.get_si()));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("normalized reduces to the primitive signed representative") {
  CHECK(PrimitiveLine::normalized(2, 4, 6) == PrimitiveLine{1, 2, 3});
  CHECK(PrimitiveLine::normalized(-1, 2, 3) == PrimitiveLine{1, -2, -3});
  CHECK(PrimitiveLine::normalized(0, -2, 4) == PrimitiveLine{0, 1, -2});
  CHECK(PrimitiveLine::normalized(-3, 0, 0) == PrimitiveLine{1, 0, 0});
  CHECK(PrimitiveLine::normalized(1, -1, 0) == PrimitiveLine{1, -1, 0});
  CHECK_THROWS_AS(PrimitiveLine::normalized(0, 0, 5), DegeneratePoints);
}

TEST_CASE("FareyParams and RectWindow validate their bounds") {
  CHECK_THROWS_AS(FareyParams(0, 1), PreconditionViolated);
  CHECK_THROWS_AS(FareyParams(1, -2), PreconditionViolated);
  CHECK_THROWS_AS(RectWindow(Rat(1), Rat(1), Rat(0), Rat(1)), PreconditionViolated);
  CHECK_THROWS_AS(RectWindow(Rat(0), Rat(1), Rat(2), Rat(1)), PreconditionViolated);
  const RectWindow sq = RectWindow::unit_square();
  CHECK(sq.area() == Rat(1));
  CHECK(sq.contains({Rat(0), Rat(1)}));
  CHECK_FALSE(sq.strictly_contains({Rat(0), Rat(1)}));
  CHECK(sq.strictly_contains({Rat(1, 2), Rat(1, 3)}));
}

TEST_CASE("meets_rect by corner signs, corner grazing included") {
  const RectWindow sq = RectWindow::unit_square();
  CHECK(meets_rect(PrimitiveLine{1, 1, 0}, sq));   // touches only (0,0)
  CHECK(meets_rect(PrimitiveLine{1, 1, 2}, sq));   // touches only (1,1)
  CHECK(meets_rect(PrimitiveLine{1, 0, 0}, sq));   // left edge
  CHECK(meets_rect(PrimitiveLine{1, -1, 0}, sq));  // diagonal
  CHECK_FALSE(meets_rect(PrimitiveLine{1, 1, 3}, sq));
  CHECK_FALSE(meets_rect(PrimitiveLine{1, 0, 2}, sq));
}

TEST_CASE("the ten lines of the (1,1) family over the unit square") {
  const std::vector<PrimitiveLine> expected = {
      {0, 1, 0}, {0, 1, 1}, {1, -1, -1}, {1, -1, 0}, {1, -1, 1},
      {1, 0, 0}, {1, 0, 1}, {1, 1, 0},  {1, 1, 1},  {1, 1, 2},
  };
  CHECK(enumerate_lines(FareyParams(1, 1), RectWindow::unit_square()) == expected);
}

TEST_CASE("enumerate_lines matches the brute-force oracle") {
  for (int m = 1; m <= 4; ++m) {
    for (int n = 1; n <= 4; ++n) {
      const RectWindow sq = RectWindow::unit_square();
      const auto got = enumerate_lines(FareyParams(m, n), sq);
      const std::set<PrimitiveLine> got_set(got.begin(), got.end());
      CHECK(got_set.size() == got.size());  // duplicate-free
      CHECK(std::is_sorted(got.begin(), got.end()));
      CHECK(got_set == oracle_family(m, n, sq));
      const std::size_t bound =
          static_cast<std::size_t>(2 * m + 1) * (2 * n + 1) * (2 * m + 2 * n + 1);
      CHECK(got.size() <= bound);
      for (const PrimitiveLine& line : got) CHECK(in_family(line, FareyParams(m, n)));
    }
  }
}

TEST_CASE("enumerate_lines on a custom window matches the oracle") {
  const RectWindow win{Rat(-2), Rat(3), Rat(-2), Rat(3)};
  const auto got = enumerate_lines(FareyParams(2, 3), win);
  const std::set<PrimitiveLine> got_set(got.begin(), got.end());
  CHECK(got_set == oracle_family(2, 3, win));
}

TEST_CASE("the family grows monotonically in m and n") {
  const RectWindow sq = RectWindow::unit_square();
  const auto small = enumerate_lines(FareyParams(2, 2), sq);
  const auto large = enumerate_lines(FareyParams(3, 4), sq);
  const std::set<PrimitiveLine> large_set(large.begin(), large.end());
  for (const PrimitiveLine& line : small) CHECK(large_set.count(line) == 1);
}

TEST_CASE("swapping m and n mirrors the family across y=x") {
  const RectWindow sq = RectWindow::unit_square();
  const auto a = enumerate_lines(FareyParams(2, 5), sq);
  const auto b = enumerate_lines(FareyParams(5, 2), sq);
  std::set<PrimitiveLine> swapped;
  for (const PrimitiveLine& line : a) swapped.insert(PrimitiveLine::normalized(line.v, line.u, line.w));
  CHECK(swapped == std::set<PrimitiveLine>(b.begin(), b.end()));
}

TEST_CASE("reflect_x and reflect_y are involutions preserving the family") {
  const FareyParams params(3, 2);
  const auto lines = enumerate_lines(params, RectWindow::unit_square());
  std::set<PrimitiveLine> family(lines.begin(), lines.end());
  for (const PrimitiveLine& line : lines) {
    CHECK(reflect_x(reflect_x(line)) == line);
    CHECK(reflect_y(reflect_y(line)) == line);
    CHECK(family.count(reflect_x(line)) == 1);
    CHECK(family.count(reflect_y(line)) == 1);
  }
  // fixed lines of each mirror
  CHECK(reflect_x(PrimitiveLine{0, 2, 1}) == PrimitiveLine{0, 2, 1});  // y = 1/2
  CHECK(reflect_y(PrimitiveLine{2, 0, 1}) == PrimitiveLine{2, 0, 1});  // x = 1/2
  // the mirror image of y = 0 is y = 1
  CHECK(reflect_x(PrimitiveLine{0, 1, 0}) == PrimitiveLine{0, 1, 1});
}

TEST_CASE("in_family checks coefficients and unit-square incidence") {
  CHECK(in_family(PrimitiveLine{1, 0, 0}, FareyParams(1, 1)));
  CHECK(in_family(PrimitiveLine{1, 1, 2}, FareyParams(1, 1)));   // corner grazer
  CHECK_FALSE(in_family(PrimitiveLine{1, 1, 3}, FareyParams(1, 1)));  // misses square
  CHECK_FALSE(in_family(PrimitiveLine{7, 1, 3}, FareyParams(6, 6)));
  CHECK_FALSE(in_family(PrimitiveLine{1, 7, 3}, FareyParams(6, 6)));
}

TEST_CASE("clip_to_rect returns lexicographically ordered proper segments") {
  const RectWindow sq = RectWindow::unit_square();
  const auto diag = clip_to_rect(PrimitiveLine{1, -1, 0}, sq);
  REQUIRE(diag.has_value());
  CHECK(diag->first == Pt{Rat(0), Rat(0)});
  CHECK(diag->second == Pt{Rat(1), Rat(1)});

  const auto vertical = clip_to_rect(PrimitiveLine{2, 0, 1}, sq);
  REQUIRE(vertical.has_value());
  CHECK(vertical->first == Pt{Rat(1, 2), Rat(0)});
  CHECK(vertical->second == Pt{Rat(1, 2), Rat(1)});

  const auto side = clip_to_rect(PrimitiveLine{1, 0, 0}, sq);
  REQUIRE(side.has_value());
  CHECK(side->first == Pt{Rat(0), Rat(0)});
  CHECK(side->second == Pt{Rat(0), Rat(1)});

  CHECK_FALSE(clip_to_rect(PrimitiveLine{1, 1, 0}, sq).has_value());  // corner only
  CHECK_FALSE(clip_to_rect(PrimitiveLine{1, 1, 3}, sq).has_value());  // misses
}
