#include "gfk/linalg.hpp"

#include <algorithm>
#include <utility>

#include "gfk/errors.hpp"

namespace gfk {

RatMatrix rref(RatMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < ncols && pivot_row < rows.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[pivot_row]);
    Rational inv = 1 / rows[pivot_row][c];
    for (auto& x : rows[pivot_row]) x *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot_row || rows[i][c] == 0) continue;
      Rational f = rows[i][c];
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] -= f * rows[pivot_row][j];
    }
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

std::size_t rank(const RatMatrix& rows) { return rref(rows).size(); }

std::size_t rank(const IntMatrix& rows) { return rref(to_rational(rows)).size(); }

RatMatrix nullspace(const RatMatrix& rows, std::size_t ncols) {
  RatMatrix r = rref(rows);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(ncols, false);
  for (const auto& row : r) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  RatMatrix basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    RatVector v(ncols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < r.size(); ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

IntMatrix canonical_span_basis(const RatMatrix& rows, std::size_t ncols) {
  IntMatrix out;
  for (const auto& row : rref(rows)) {
    if (row.size() != ncols) throw DimensionError("row length mismatch in span basis");
    out.push_back(primitive(row));
  }
  return out;
}

bool in_span(const RatMatrix& rows, const RatVector& v) {
  RatMatrix ext = rows;
  ext.push_back(v);
  return rank(ext) == rank(rows);
}

namespace {

void axpy_row(IntVector& target, const Integer& factor, const IntVector& source) {
  for (std::size_t j = 0; j < target.size(); ++j) target[j] -= factor * source[j];
}

}  // namespace

IntMatrix hermite_normal_form(IntMatrix rows) {
  if (rows.empty()) return rows;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      while (rows[i][c] != 0) {
        Integer q = rows[r][c] / rows[i][c];
        axpy_row(rows[r], q, rows[i]);
        std::swap(rows[r], rows[i]);
      }
    }
    if (rows[r][c] == 0) continue;
    if (rows[r][c] < 0)
      for (auto& x : rows[r]) x = -x;
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
      if (q != 0) axpy_row(rows[i], q, rows[r]);
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

IntMatrix integer_kernel(const IntMatrix& rows, std::size_t ncols) {
  const std::size_t m = rows.size();
  // Row j of the augmented matrix is (column j of A | e_j); unimodular row
  // operations then expose the kernel in the identity block.
  IntMatrix aug(ncols, IntVector(m + ncols, Integer(0)));
  for (std::size_t j = 0; j < ncols; ++j) {
    for (std::size_t i = 0; i < m; ++i) aug[j][i] = rows[i][j];
    aug[j][m + j] = 1;
  }
  IntMatrix h = hermite_normal_form(std::move(aug));
  IntMatrix kernel;
  for (const auto& row : h) {
    bool zero_head = true;
    for (std::size_t i = 0; i < m && zero_head; ++i) zero_head = row[i] == 0;
    if (zero_head) kernel.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(m), row.end());
  }
  return hermite_normal_form(std::move(kernel));
}

IntVector elementary_divisors(IntMatrix a) {
  IntVector out;
  if (a.empty()) return out;
  const std::size_t m = a.size(), n = a.front().size();
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        std::sort(out.begin(), out.end());
        return out;
      }
      std::swap(a[t], a[pi]);
      for (auto& row : a) std::swap(row[t], row[pj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        Integer q = a[i][t] / a[t][t];
        if (q != 0) axpy_row(a[i], q, a[t]);
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        Integer q = a[t][j] / a[t][t];
        if (q != 0)
          for (std::size_t i = 0; i < m; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Pivot must divide the whole trailing block.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
      if (bad == m) break;
      for (std::size_t j = 0; j < n; ++j) a[t][j] += a[bad][j];
    }
    out.push_back(abs(a[t][t]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Rational determinant(RatMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

RatMatrix inverse(RatMatrix a) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, Rational(0));
    a[i][n + i] = 1;
  }
  RatMatrix r = rref(std::move(a));
  if (r.size() != n || r[n - 1][n - 1] == 0) throw DomainError("singular matrix has no inverse");
  RatMatrix inv;
  for (auto& row : r) inv.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(n), row.end());
  return inv;
}

RatMatrix transpose(const RatMatrix& m) {
  if (m.empty()) return {};
  RatMatrix t(m.front().size(), RatVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

RatVector times(const RatVector& v, const RatMatrix& m) {
  if (m.empty()) return {};
  RatVector out(m.front().size(), Rational(0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += v[i] * m[i][j];
  return out;
}

IntVector apply(const IntMatrix& map, const IntVector& v) {
  IntVector out;
  out.reserve(map.size());
  for (const auto& row : map) out.push_back(dot(row, v));
  return out;
}

}  // namespace gfk
