#pragma once

#include <array>

#include "tilebench/rational.hpp"

namespace tilebench {

/// A point y = (y0, y1, y2, y3) of the simplex {y >= 0, y0+y1+y2+y3 <= alpha}.
struct SimplexPoint {
  std::array<Rational, 4> y{};
  Rational alpha = 0;

  bool feasible() const;
};

/// 18y0^2 + 12y1^2 + 12y2^2 + 9y3^2 + 30y0y1 + 24y0y2 + 24y0y3 + 24y1y2
/// + 24y1y3 + 21y2y3 + (y1 + 2y2 + 3y3)(1 - 6 alpha).
/// Throws std::domain_error for infeasible points.
Rational psi(const Rational& alpha, const SimplexPoint& p);

/// The quadratic part of psi alone.
Rational psi_quadratic(const std::array<Rational, 4>& y);

struct PsiMax {
  Rational value;
  SimplexPoint argmax;
};

/// Exact maximum of psi over the simplex for 0 <= alpha <= 1/6, by
/// enumerating stationary points of every face plus the simplex vertices.
PsiMax psi_star(const Rational& alpha);

/// Maximum over the lattice points y_i = k_i alpha / steps, sum k_i <= steps.
Rational psi_star_grid(const Rational& alpha, int steps);

/// Quadratic form plus 3y1/n + 3y2/n + 6y3/n.
Rational aggregate_edge_bound(const SimplexPoint& p, int n, const Rational& alpha);

/// aggregate + (y1 + 2y2 + 3y3)(1 - 6 alpha) <= psi + 6/n (y1 + y2 + 2y3).
bool aggregate_bound_within_psi(const SimplexPoint& p, int n, const Rational& alpha);

}  // namespace tilebench
