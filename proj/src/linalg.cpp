#include "chainfold/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace chainfold {

namespace {

// Row echelon with full record of pivot columns.  Returns pivot columns and
// leaves m in reduced row echelon form.
std::vector<int> rref_inplace(MatQ& m) {
  std::vector<int> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i) {
      if (!m(i, col).is_zero()) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    m.row(sel).swap(m.row(row));
    const Rat inv = Rat(1) / m(row, col);
    for (Eigen::Index j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col).is_zero()) continue;
      const Rat f = m(i, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

}  // namespace

int rank_exact(const MatQ& a) {
  MatQ m = a;
  return static_cast<int>(rref_inplace(m).size());
}

MatQ kernel_basis(const MatQ& a) {
  MatQ m = a;
  const std::vector<int> pivots = rref_inplace(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<VecQ> basis;
  for (Eigen::Index free_col = 0; free_col < a.cols(); ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    VecQ v = VecQ::Zero(a.cols());
    v[free_col] = Rat(1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = -m(static_cast<Eigen::Index>(k), free_col);
    basis.push_back(v);
  }
  return from_columns(static_cast<int>(a.cols()), basis);
}

std::optional<VecQ> solve_exact(const MatQ& a, const VecQ& b) {
  if (a.rows() != b.size()) throw std::domain_error("solve_exact: size mismatch");
  MatQ m(a.rows(), a.cols() + 1);
  if (a.cols() > 0) m.leftCols(a.cols()) = a;
  m.col(a.cols()) = b;
  const std::vector<int> pivots = rref_inplace(m);
  if (!pivots.empty() && pivots.back() == static_cast<int>(a.cols()))
    return std::nullopt;  // pivot in the augmented column
  VecQ x = VecQ::Zero(a.cols());
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[pivots[k]] = m(static_cast<Eigen::Index>(k), a.cols());
  return x;
}

MatQ inverse_exact(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::domain_error("inverse_exact: not square");
  MatQ m(a.rows(), 2 * a.cols());
  m.leftCols(a.cols()) = a;
  m.rightCols(a.cols()) = MatQ::Identity(a.rows(), a.cols());
  const std::vector<int> pivots = rref_inplace(m);
  if (static_cast<Eigen::Index>(pivots.size()) != a.rows())
    throw std::domain_error("inverse_exact: singular matrix");
  return m.rightCols(a.cols());
}

bool in_column_span(const MatQ& basis, const VecQ& v) {
  if (is_zero(v)) return true;
  if (basis.cols() == 0) return false;
  return solve_exact(basis, v).has_value();
}

namespace {

BigInt int_at(const MatQ& m, Eigen::Index i, Eigen::Index j) {
  if (!m(i, j).is_integer())
    throw std::domain_error("integer normal form on a non-integral matrix");
  return m(i, j).num();
}

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

}  // namespace

SmithForm smith_normal_form(const MatQ& a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  // d = working copy; u accumulates row ops (rows of U), vcol accumulates
  // column ops (columns of V), so that U * A * V = D holds throughout.
  std::vector<std::vector<BigInt>> d(rows, std::vector<BigInt>(cols));
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) d[i][j] = int_at(a, i, j);

  std::vector<std::vector<BigInt>> u(rows, std::vector<BigInt>(rows, 0));
  std::vector<std::vector<BigInt>> vcol(cols, std::vector<BigInt>(cols, 0));
  for (Eigen::Index i = 0; i < rows; ++i) u[i][i] = 1;
  for (Eigen::Index j = 0; j < cols; ++j) vcol[j][j] = 1;

  auto swap_rows = [&](Eigen::Index i, Eigen::Index k) {
    std::swap(d[i], d[k]);
    std::swap(u[i], u[k]);
  };
  auto swap_cols = [&](Eigen::Index j, Eigen::Index k) {
    for (Eigen::Index i = 0; i < rows; ++i) std::swap(d[i][j], d[i][k]);
    std::swap(vcol[j], vcol[k]);
  };
  // row dst += f * row src
  auto add_row = [&](Eigen::Index dst, Eigen::Index src, const BigInt& f) {
    for (Eigen::Index j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
    for (Eigen::Index j = 0; j < rows; ++j) u[dst][j] += f * u[src][j];
  };
  // col dst += f * col src
  auto add_col = [&](Eigen::Index dst, Eigen::Index src, const BigInt& f) {
    for (Eigen::Index i = 0; i < rows; ++i) d[i][dst] += f * d[i][src];
    for (Eigen::Index i = 0; i < cols; ++i) vcol[dst][i] += f * vcol[src][i];
  };
  auto negate_row = [&](Eigen::Index i) {
    for (Eigen::Index j = 0; j < cols; ++j) d[i][j] = -d[i][j];
    for (Eigen::Index j = 0; j < rows; ++j) u[i][j] = -u[i][j];
  };

  const Eigen::Index steps = std::min(rows, cols);
  Eigen::Index t = 0;
  for (; t < steps; ++t) {
    // Smallest nonzero entry of the trailing submatrix becomes the pivot.
    Eigen::Index pi = -1, pj = -1;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j)
        if (d[i][j] != 0 &&
            (pi < 0 || abs_big(d[i][j]) < abs_big(d[pi][pj]))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) swap_rows(pi, t);
    if (pj != t) swap_cols(pj, t);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d[i][t] == 0) continue;
        const BigInt q = d[i][t] / d[t][t];
        add_row(i, t, -q);
        if (d[i][t] != 0) {  // remainder became the smaller pivot
          swap_rows(i, t);
          clean = false;
        }
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d[t][j] == 0) continue;
        const BigInt q = d[t][j] / d[t][t];
        add_col(j, t, -q);
        if (d[t][j] != 0) {
          swap_cols(j, t);
          clean = false;
        }
      }
      if (clean) {
        // Divisibility sweep: fold a bad entry into row t and keep reducing.
        for (Eigen::Index i = t + 1; i < rows && clean; ++i)
          for (Eigen::Index j = t + 1; j < cols && clean; ++j)
            if (d[i][j] % d[t][t] != 0) {
              add_row(t, i, 1);
              clean = false;
            }
      }
    }
    if (d[t][t] < 0) negate_row(t);
  }

  SmithForm out;
  out.rank = static_cast<int>(t);
  out.u = MatQ(rows, rows);
  out.v = MatQ(cols, cols);
  out.d = MatQ::Zero(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < rows; ++j) out.u(i, j) = Rat(u[i][j]);
  for (Eigen::Index i = 0; i < cols; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) out.v(i, j) = Rat(vcol[j][i]);
  for (Eigen::Index k = 0; k < t; ++k) {
    out.d(k, k) = Rat(d[k][k]);
    out.diagonal.push_back(d[k][k]);
  }
  return out;
}

MatQ integer_kernel_basis(const MatQ& a) {
  const SmithForm s = smith_normal_form(a);
  // A * V = U^{-1} * D, so the trailing columns of V span the kernel lattice.
  std::vector<VecQ> basis;
  for (Eigen::Index j = s.rank; j < a.cols(); ++j) {
    VecQ col = s.v.col(j);
    // Sign-normalize: first nonzero entry positive.
    for (Eigen::Index i = 0; i < col.size(); ++i) {
      if (col[i].is_zero()) continue;
      if (col[i].sign() < 0) col = -col;
      break;
    }
    basis.push_back(col);
  }
  std::sort(basis.begin(), basis.end(), VecQLess{});
  return from_columns(static_cast<int>(a.cols()), basis);
}

std::vector<BigInt> cokernel_torsion(const MatQ& a) {
  const SmithForm s = smith_normal_form(a);
  std::vector<BigInt> torsion;
  for (const BigInt& e : s.diagonal)
    if (e > 1) torsion.push_back(e);
  return torsion;
}

}  // namespace chainfold
