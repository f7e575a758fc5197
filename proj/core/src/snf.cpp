#include "gtw/snf.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gtw {

namespace {

BigInt big_gcd(BigInt a, BigInt b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    BigInt t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t n = std::min(rows, cols);
  std::vector<BigInt> diag;

  std::size_t top = 0;
  while (top < n) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pr = top, pc = top;
    BigInt best = 0;
    for (std::size_t i = top; i < rows; ++i)
      for (std::size_t j = top; j < cols; ++j) {
        BigInt v = m[i][j] < 0 ? -m[i][j] : m[i][j];
        if (v != 0 && (best == 0 || v < best)) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (best == 0) break;
    std::swap(m[top], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][top], m[i][pc]);

    bool clean = true;
    for (std::size_t i = top + 1; i < rows; ++i)
      if (m[i][top] != 0) {
        BigInt q = m[i][top] / m[top][top];
        for (std::size_t j = top; j < cols; ++j) m[i][j] -= q * m[top][j];
        if (m[i][top] != 0) clean = false;
      }
    for (std::size_t j = top + 1; j < cols; ++j)
      if (m[top][j] != 0) {
        BigInt q = m[top][j] / m[top][top];
        for (std::size_t i = top; i < rows; ++i) m[i][j] -= q * m[i][top];
        if (m[top][j] != 0) clean = false;
      }
    if (!clean) continue;  // smaller remainder appeared; re-pivot

    // Enforce divisibility: pivot must divide the whole remaining block.
    bool divides = true;
    for (std::size_t i = top + 1; i < rows && divides; ++i)
      for (std::size_t j = top + 1; j < cols && divides; ++j)
        if (m[i][j] % m[top][top] != 0) {
          for (std::size_t jj = top; jj < cols; ++jj) m[top][jj] += m[i][jj];
          divides = false;
        }
    if (!divides) continue;

    diag.push_back(m[top][top] < 0 ? -m[top][top] : m[top][top]);
    ++top;
  }
  while (diag.size() < n) diag.push_back(0);
  return diag;
}

std::vector<BigInt> smith_diagonal_by_minors(const IntMatrix& m) {
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t n = std::min(rows, cols);

  // Determinant by cofactor expansion on the selected submatrix.
  std::function<BigInt(const std::vector<std::size_t>&, const std::vector<std::size_t>&)> det =
      [&](const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) -> BigInt {
    if (ri.size() == 1) return m[ri[0]][ci[0]];
    BigInt total = 0;
    std::vector<std::size_t> sub_r(ri.begin() + 1, ri.end());
    for (std::size_t k = 0; k < ci.size(); ++k) {
      if (m[ri[0]][ci[k]] == 0) continue;
      std::vector<std::size_t> sub_c;
      for (std::size_t j = 0; j < ci.size(); ++j)
        if (j != k) sub_c.push_back(ci[j]);
      BigInt cof = m[ri[0]][ci[k]] * det(sub_r, sub_c);
      total += (k % 2 == 0) ? cof : -cof;
    }
    return total;
  };

  std::vector<BigInt> dets(n + 1, 0);  // d_k = gcd of all k x k minors
  dets[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    BigInt g = 0;
    std::vector<bool> rsel(rows, false), csel(cols, false);
    std::fill(rsel.begin(), rsel.begin() + k, true);
    // Enumerate row subsets, then column subsets.
    std::vector<std::vector<std::size_t>> rsets, csets;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t, std::size_t, std::size_t, std::vector<std::vector<std::size_t>>&)>
        comb = [&](std::size_t start, std::size_t need, std::size_t total,
                   std::vector<std::vector<std::size_t>>& outs) {
          if (need == 0) {
            outs.push_back(cur);
            return;
          }
          for (std::size_t i = start; i + need <= total; ++i) {
            cur.push_back(i);
            comb(i + 1, need - 1, total, outs);
            cur.pop_back();
          }
        };
    comb(0, k, rows, rsets);
    comb(0, k, cols, csets);
    for (const auto& ri : rsets)
      for (const auto& ci : csets) {
        g = big_gcd(g, det(ri, ci));
        if (g == 1) break;
      }
    dets[k] = g;
    if (g == 0) break;
  }

  std::vector<BigInt> diag;
  for (std::size_t k = 1; k <= n; ++k) {
    if (dets[k] == 0)
      diag.push_back(0);
    else
      diag.push_back(dets[k] / dets[k - 1]);
  }
  return diag;
}

bool in_row_lattice(const IntMatrix& m, const std::vector<BigInt>& v) {
  // Row-reduce (Hermite style) and reduce v against the pivots.
  IntMatrix rows = m;
  std::vector<BigInt> target = v;
  std::size_t cols = v.size();
  for (auto& r : rows)
    if (r.size() != cols) throw std::invalid_argument("dimension mismatch");

  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    // gcd the column below `rank` into one row
    std::size_t piv = rank;
    bool any = false;
    for (std::size_t i = rank; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        if (!any || abs(rows[i][c]) < abs(rows[piv][c])) piv = i;
        any = true;
      }
    if (!any) continue;
    std::swap(rows[rank], rows[piv]);
    bool again = true;
    while (again) {
      again = false;
      for (std::size_t i = rank + 1; i < rows.size(); ++i)
        if (rows[i][c] != 0) {
          BigInt q = rows[i][c] / rows[rank][c];
          for (std::size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[rank][j];
          if (rows[i][c] != 0) {
            std::swap(rows[rank], rows[i]);
            again = true;
          }
        }
    }
    ++rank;
    if (rank == rows.size()) break;
  }

  // Back-reduce the target vector.
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    if (r < rank) {
      // find the pivot row whose first nonzero is at or before c
      // rows are in echelon order; check rows[r]'s pivot column
      std::size_t pc = 0;
      while (pc < cols && rows[r][pc] == 0) ++pc;
      if (pc == c) {
        if (target[c] % rows[r][pc] == 0) {
          BigInt q = target[c] / rows[r][pc];
          for (std::size_t j = 0; j < cols; ++j) target[j] -= q * rows[r][j];
        }
        ++r;
      }
    }
    if (target[c] != 0) return false;
  }
  return true;
}

AbelianInvariants abelian_invariants(const IntMatrix& relator_matrix, int generator_count) {
  AbelianInvariants inv;
  if (relator_matrix.empty()) {
    inv.free_rank = generator_count;
    return inv;
  }
  std::vector<BigInt> diag = smith_diagonal(relator_matrix);
  int nonzero = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++nonzero;
    if (d >= 2) inv.torsion.push_back(d);
  }
  inv.free_rank = generator_count - nonzero;
  return inv;
}

}  // namespace gtw
