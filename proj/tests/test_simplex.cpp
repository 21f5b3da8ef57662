#include <doctest.h>

#include "tilebench/constructions.hpp"
#include "tilebench/simplex.hpp"

using namespace tilebench;

namespace {

SimplexPoint point(Rational alpha, Rational y0, Rational y1, Rational y2, Rational y3) {
  return SimplexPoint{{y0, y1, y2, y3}, alpha};
}

}  // namespace

TEST_CASE("psi evaluations") {
  CHECK(psi(ratio(1, 10), point(ratio(1, 10), 0, 0, 0, 0)) == 0);
  CHECK(psi(ratio(1, 9), point(ratio(1, 9), ratio(1, 9), 0, 0, 0)) == ratio(2, 9));
  CHECK(psi(ratio(1, 12), point(ratio(1, 12), 0, 0, 0, ratio(1, 12))) == ratio(3, 16));
  CHECK_THROWS_AS(psi(ratio(1, 12), point(ratio(1, 12), ratio(1, 12), 0, 0, ratio(1, 12))), std::domain_error);
  CHECK_THROWS_AS(psi(ratio(1, 12), point(ratio(1, 12), -1, 0, 0, 0)), std::domain_error);
}

TEST_CASE("psi_star examples") {
  const auto zero = psi_star(0);
  CHECK(zero.value == 0);
  for (const auto& c : zero.argmax.y) CHECK(c == 0);
  CHECK(psi_star(ratio(1, 9)).value == ratio(2, 9));
  const auto tenth = psi_star(ratio(1, 10));
  CHECK(tenth.value == ratio(21, 100));
  CHECK(psi(ratio(1, 10), point(ratio(1, 10), 0, 0, 0, ratio(1, 10))) == ratio(21, 100));
  CHECK_THROWS_AS(psi_star(ratio(1, 5)), std::domain_error);
  CHECK_THROWS_AS(psi_star(ratio(-1, 5)), std::domain_error);
}

TEST_CASE("psi_star equals xi on the grid") {
  for (int k = 0; k <= 30; ++k) {
    const Rational alpha = ratio(k, 180);
    const auto r = psi_star(alpha);
    CHECK(r.value == xi(alpha));
    CHECK(r.argmax.feasible());
    CHECK(psi(alpha, r.argmax) == r.value);
    const Rational corner = alpha <= ratio(1, 9) ? psi(alpha, point(alpha, 0, 0, 0, alpha)) : psi(alpha, point(alpha, alpha, 0, 0, 0));
    CHECK(corner == xi(alpha));
  }
}

TEST_CASE("lattice oracle stays below and converges") {
  for (const Rational& alpha : {ratio(1, 10), ratio(1, 9), ratio(2, 15), ratio(1, 6), ratio(1, 20)}) {
    const Rational exact = psi_star(alpha).value;
    Rational previous_gap = 1;
    for (int steps : {5, 10, 20, 40}) {
      const Rational grid = psi_star_grid(alpha, steps);
      CHECK(grid <= exact);
      const Rational gap = exact - grid;
      CHECK(gap <= previous_gap);
      previous_gap = gap;
    }
    CHECK(previous_gap < ratio(1, 1000));
  }
  const Rational steps_one = psi_star_grid(ratio(1, 10), 1);
  Rational corners = 0;
  for (int i = 0; i < 4; ++i) {
    SimplexPoint p{{0, 0, 0, 0}, ratio(1, 10)};
    p.y[i] = ratio(1, 10);
    corners = std::max(corners, psi(ratio(1, 10), p));
  }
  CHECK(steps_one == corners);
  const Rational twenty = psi_star_grid(ratio(1, 10), 20);
  CHECK(twenty <= ratio(21, 100));
  CHECK(ratio(21, 100) - twenty <= ratio(5, 1000));
  CHECK(psi_star_grid(0, 7) == 0);
  CHECK_THROWS_AS(psi_star_grid(ratio(1, 10), 0), std::invalid_argument);
}

TEST_CASE("aggregate edge bound") {
  CHECK(aggregate_edge_bound(point(ratio(1, 10), ratio(1, 20), 0, 0, 0), 50, ratio(1, 10)) == 18 * ratio(1, 400));
  CHECK(aggregate_edge_bound(point(ratio(1, 10), 0, 0, 0, 0), 50, ratio(1, 10)) == 0);
  CHECK(aggregate_edge_bound(point(ratio(1, 10), 0, ratio(1, 10), 0, 0), 100, ratio(1, 10)) == ratio(123, 1000));
  for (int k = 0; k <= 6; ++k) {
    const Rational alpha = ratio(k, 36);
    const SimplexPoint p = point(alpha, alpha / 4, alpha / 4, alpha / 4, alpha / 4);
    CHECK(aggregate_bound_within_psi(p, 1 + k, alpha));
  }
  CHECK_THROWS_AS(aggregate_edge_bound(point(0, 0, 0, 0, 0), 0, 0), std::invalid_argument);
}
