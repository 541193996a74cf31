#include "coxm06/simplex.hpp"

#include "coxm06/errors.hpp"

namespace coxm06 {

FeasibilityResult phase_one(const RationalMatrix& G, const RationalVector& b) {
  const std::size_t m = G.rows(), n = G.cols();
  if (b.size() != m) throw Error("phase_one: right-hand side has the wrong length");
  // Columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1, rhs = n + m;
  std::vector<RationalVector> T(m, RationalVector(width));
  std::vector<int> flip(m, 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    flip[i] = b[i] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) T[i][j] = Rational(flip[i]) * G.at(i, j);
    T[i][n + i] = 1;
    T[i][rhs] = Rational(flip[i]) * b[i];
    basis[i] = n + i;
  }
  // Reduced costs of the auxiliary objective (sum of artificials); the last entry is minus its value.
  RationalVector obj(width);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) obj[j] -= T[i][j];
    obj[rhs] -= T[i][rhs];
  }

  FeasibilityResult res;
  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < rhs; ++j)
      if (obj[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(T[i][enter] > 0)) continue;
      Rational ratio = T[i][rhs] / T[i][enter];
      if (leave == m || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    // The auxiliary problem is bounded below by zero, so some row always qualifies.
    if (leave == m) throw Error("phase_one: unbounded auxiliary problem");
    Rational inv = Rational(1) / T[leave][enter];
    for (auto& v : T[leave]) v *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || T[i][enter].is_zero()) continue;
      Rational f = T[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (!T[leave][j].is_zero()) T[i][j] -= f * T[leave][j];
    }
    Rational f = obj[enter];
    for (std::size_t j = 0; j < width; ++j)
      if (!T[leave][j].is_zero()) obj[j] -= f * T[leave][j];
    basis[leave] = enter;
    ++res.pivots;
  }

  if (obj[rhs].is_zero()) {
    res.feasible = true;
    res.x.assign(n, Rational());
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) res.x[basis[i]] = T[i][rhs];
    return res;
  }
  // Dual multipliers of the flipped system are 1 - (reduced cost of each artificial);
  // undo the flips and negate so that y^T G >= 0 and y^T b < 0.
  res.y.assign(m, Rational());
  for (std::size_t i = 0; i < m; ++i) res.y[i] = Rational(-flip[i]) * (Rational(1) - obj[n + i]);
  return res;
}

}  // namespace coxm06
