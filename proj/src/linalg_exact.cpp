#include <utility>
#include <vector>

#include "copzero/linalg.hpp"

namespace copzero {

namespace {

using Grid = std::vector<std::vector<Rational>>;

Grid to_grid(const SymMatrix<Rational>& a) {
  Grid g(static_cast<std::size_t>(a.dim()), std::vector<Rational>(static_cast<std::size_t>(a.dim())));
  for (int k = 0; k < a.dim(); ++k)
    for (int q = 0; q < a.dim(); ++q) g[k][q] = a.at(k, q);
  return g;
}

// One-step Bareiss elimination with row pivoting. Returns the number of
// pivots; `det` (when non-null) receives the determinant of a square input.
int bareiss(Grid& m, Rational* det) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(m[0].size());
  Rational prev(1);
  int sign = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c].sign() != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(m[piv], m[r]);
      sign = -sign;
    }
    const Rational p = m[r][c];
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = (m[i][j] * p - m[i][c] * m[r][j]) / prev;
      m[i][c] = Rational(0);
    }
    prev = p;
    ++r;
  }
  if (det) {
    if (r < rows)
      *det = Rational(0);
    else
      *det = sign < 0 ? -m[rows - 1][cols - 1] : m[rows - 1][cols - 1];
  }
  return r;
}

}  // namespace

int rank(const SymMatrix<Rational>& a) {
  Grid g = to_grid(a);
  return bareiss(g, nullptr);
}

Rational determinant(const SymMatrix<Rational>& a) {
  Grid g = to_grid(a);
  Rational det;
  bareiss(g, &det);
  return det;
}

bool determinant_is_zero(const SymMatrix<Rational>& a) {
  return determinant(a).sign() == 0;
}

std::vector<std::vector<Rational>> kernel_basis(const SymMatrix<Rational>& a) {
  const int n = a.dim();
  Grid m = to_grid(a);

  // Gauss-Jordan to reduced row echelon form; divisions are exact.
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < n && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i)
      if (m[i][c].sign() != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[r]);
    const Rational p = m[r][c];
    for (int j = 0; j < n; ++j) m[r][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == r || m[i][c].sign() == 0) continue;
      const Rational f = m[i][c];
      for (int j = 0; j < n; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }

  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::vector<Rational>> basis;
  for (int f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<std::size_t>(n), Rational(0));
    v[static_cast<std::size_t>(f)] = Rational(1);
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[static_cast<std::size_t>(pivot_col[i])] = -m[i][f];

    // canonical form: first nonzero positive, l1 norm 1
    Rational norm(0);
    int first = -1;
    for (int j = 0; j < n; ++j) {
      if (first < 0 && v[static_cast<std::size_t>(j)].sign() != 0) first = j;
      norm += abs(v[static_cast<std::size_t>(j)]);
    }
    const bool flip = first >= 0 && v[static_cast<std::size_t>(first)].sign() < 0;
    for (auto& x : v) {
      x /= norm;
      if (flip) x = -x;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> solve(const SymMatrix<Rational>& a, const std::vector<Rational>& b) {
  const int n = a.dim();
  if (static_cast<int>(b.size()) != n) throw std::invalid_argument("dimension mismatch");
  Grid m = to_grid(a);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)].push_back(b[static_cast<std::size_t>(i)]);

  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int i = c; i < n; ++i)
      if (m[i][c].sign() != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw SingularSystemError("singular system");
    std::swap(m[piv], m[c]);
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].sign() == 0) continue;
      const Rational f = m[i][c] / m[c][c];
      for (int j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
    }
  }

  std::vector<Rational> x(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    Rational acc = m[i][n];
    for (int j = i + 1; j < n; ++j) acc -= m[i][j] * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = acc / m[i][i];
  }
  return x;
}

}  // namespace copzero
