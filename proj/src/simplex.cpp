#include "tilebench/simplex.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace tilebench {

namespace {

// psi = y^T Q y + c^T y with c = (1 - 6 alpha) (0, 1, 2, 3).
const std::array<std::array<int, 4>, 4> kTwiceQ = {{
    {36, 30, 24, 24},
    {30, 24, 24, 24},
    {24, 24, 24, 21},
    {24, 24, 21, 18},
}};

void check_alpha(const Rational& alpha) {
  if (alpha < 0 || alpha > ratio(1, 6)) throw std::domain_error("alpha must lie in [0, 1/6], got " + to_string(alpha));
}

// Solves a square system by Gauss-Jordan elimination. Free variables are
// set to zero; returns none when the system is inconsistent.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::ptrdiff_t> pivot_row_of(cols, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
      b[i] -= f * b[r];
    }
    pivot_row_of[c] = static_cast<std::ptrdiff_t>(r);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t c = 0; c < cols; ++c)
    if (pivot_row_of[c] >= 0) x[c] = b[static_cast<std::size_t>(pivot_row_of[c])];
  return x;
}

}  // namespace

bool SimplexPoint::feasible() const {
  Rational sum = 0;
  for (const auto& v : y) {
    if (v < 0) return false;
    sum += v;
  }
  return sum <= alpha;
}

Rational psi_quadratic(const std::array<Rational, 4>& y) {
  Rational q = 0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) q += ratio(kTwiceQ[i][j], 2) * y[i] * y[j];
  return q;
}

Rational psi(const Rational& alpha, const SimplexPoint& p) {
  if (!p.feasible() || p.alpha != alpha) throw std::domain_error("point is not in the simplex for alpha = " + to_string(alpha));
  return psi_quadratic(p.y) + (p.y[1] + 2 * p.y[2] + 3 * p.y[3]) * (1 - 6 * alpha);
}

PsiMax psi_star(const Rational& alpha) {
  check_alpha(alpha);
  const Rational slope = 1 - 6 * alpha;
  const std::array<Rational, 4> c = {Rational(0), slope, 2 * slope, 3 * slope};

  std::vector<SimplexPoint> candidates;
  candidates.push_back({{}, alpha});
  for (std::size_t i = 0; i < 4; ++i) {
    SimplexPoint v{{}, alpha};
    v.y[i] = alpha;
    candidates.push_back(v);
  }

  // Constraint subsets: bits 0..3 pin y_i = 0, bit 4 makes the sum tight.
  for (unsigned active = 0; active < 32; ++active) {
    std::vector<std::size_t> face;
    for (std::size_t i = 0; i < 4; ++i)
      if (!((active >> i) & 1u)) face.push_back(i);
    const bool tight = (active >> 4) & 1u;
    if (face.empty()) continue;
    // Unknowns: y_F, then lambda when the sum constraint is tight.
    const std::size_t m = face.size() + (tight ? 1 : 0);
    std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
    std::vector<Rational> b(m, Rational(0));
    for (std::size_t r = 0; r < face.size(); ++r) {
      for (std::size_t s = 0; s < face.size(); ++s) a[r][s] = kTwiceQ[face[r]][face[s]];
      if (tight) a[r][face.size()] = -1;
      b[r] = -c[face[r]];
    }
    if (tight) {
      for (std::size_t s = 0; s < face.size(); ++s) a[face.size()][s] = 1;
      b[face.size()] = alpha;
    }
    auto x = solve(std::move(a), std::move(b));
    if (!x) continue;
    SimplexPoint p{{}, alpha};
    for (std::size_t r = 0; r < face.size(); ++r) p.y[face[r]] = (*x)[r];
    candidates.push_back(p);
  }

  std::optional<PsiMax> best;
  for (const auto& p : candidates) {
    if (!p.feasible()) continue;
    Rational v = psi(alpha, p);
    if (!best || v > best->value) best = PsiMax{v, p};
  }
  return *best;
}

Rational psi_star_grid(const Rational& alpha, int steps) {
  if (steps < 1) throw std::invalid_argument("grid needs at least one step");
  check_alpha(alpha);
  const Rational unit = alpha / steps;
  Rational best = 0;
  SimplexPoint p{{}, alpha};
  for (int k0 = 0; k0 <= steps; ++k0)
    for (int k1 = 0; k0 + k1 <= steps; ++k1)
      for (int k2 = 0; k0 + k1 + k2 <= steps; ++k2)
        for (int k3 = 0; k0 + k1 + k2 + k3 <= steps; ++k3) {
          p.y = {unit * k0, unit * k1, unit * k2, unit * k3};
          Rational v = psi(alpha, p);
          if (v > best) best = v;
        }
  return best;
}

Rational aggregate_edge_bound(const SimplexPoint& p, int n, const Rational&) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return psi_quadratic(p.y) + ratio(3, n) * p.y[1] + ratio(3, n) * p.y[2] + ratio(6, n) * p.y[3];
}

bool aggregate_bound_within_psi(const SimplexPoint& p, int n, const Rational& alpha) {
  const Rational lhs = aggregate_edge_bound(p, n, alpha) + (p.y[1] + 2 * p.y[2] + 3 * p.y[3]) * (1 - 6 * alpha);
  return lhs <= psi(alpha, p) + ratio(6, n) * (p.y[1] + p.y[2] + 2 * p.y[3]);
}

}  // namespace tilebench
