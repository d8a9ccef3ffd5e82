#include "chainfold/simplex.hpp"

#include <stdexcept>
#include <vector>

namespace chainfold {

namespace {

// Dense tableau over the rationals.  Columns: structural variables first,
// then slacks, then artificials; one extra rhs column.  Invariant: rhs >= 0
// and basis columns form an identity.
class Tableau {
 public:
  Tableau(Eigen::Index rows, Eigen::Index cols_total)
      : t_(MatQ::Zero(rows, cols_total + 1)), basis_(rows, -1) {}

  Rat& at(Eigen::Index i, Eigen::Index j) { return t_(i, j); }
  Rat& rhs(Eigen::Index i) { return t_(i, t_.cols() - 1); }
  Eigen::Index rows() const { return t_.rows(); }
  Eigen::Index cols() const { return t_.cols() - 1; }
  int basis(Eigen::Index i) const { return basis_[static_cast<std::size_t>(i)]; }
  void set_basis(Eigen::Index i, int var) { basis_[static_cast<std::size_t>(i)] = var; }

  void pivot(Eigen::Index pr, Eigen::Index pc) {
    const Rat inv = Rat(1) / t_(pr, pc);
    t_.row(pr) *= inv;
    for (Eigen::Index i = 0; i < t_.rows(); ++i) {
      if (i == pr || t_(i, pc).is_zero()) continue;
      const Rat f = t_(i, pc);
      t_.row(i) -= f * t_.row(pr);
    }
    basis_[static_cast<std::size_t>(pr)] = static_cast<int>(pc);
  }

  // Maximize an objective given by reduced-cost row `z` (z[j] = c_B B^-1 a_j - c_j)
  // updated in place alongside the tableau; `zval` tracks the objective value.
  // Bland's rule; restrict entering candidates to columns < ncols_allowed.
  // Returns false when unbounded.
  bool optimize(VecQ& z, Rat& zval, Eigen::Index ncols_allowed) {
    for (;;) {
      Eigen::Index enter = -1;
      for (Eigen::Index j = 0; j < ncols_allowed; ++j) {
        if (z[j].sign() < 0) {
          enter = j;
          break;  // Bland: first improving column
        }
      }
      if (enter < 0) return true;

      Eigen::Index leave = -1;
      Rat best;
      for (Eigen::Index i = 0; i < rows(); ++i) {
        if (t_(i, enter).sign() <= 0) continue;
        const Rat ratio = rhs(i) / t_(i, enter);
        if (leave < 0 || ratio < best ||
            (ratio == best && basis(i) < basis(leave))) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;  // unbounded in the entering direction

      const Rat zf = z[enter];
      const Rat inv = Rat(1) / t_(leave, enter);
      // Update reduced costs before the tableau row is rescaled.
      zval -= zf * rhs(leave) * inv;
      z -= (zf * inv) * t_.row(leave).head(cols()).transpose();
      pivot(leave, enter);
    }
  }

 private:
  MatQ t_;
  std::vector<int> basis_;
};

}  // namespace

LPResult solve_lp(const MatQ& a, const VecQ& b, const VecQ& c) {
  if (a.rows() != b.size() || a.cols() != c.size())
    throw std::domain_error("solve_lp: dimension mismatch");
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();

  // Free variables split as x = u - w with u, w >= 0.
  const Eigen::Index npos = 2 * n;
  // Count artificials: one per row with b < 0.
  Eigen::Index nart = 0;
  for (Eigen::Index i = 0; i < m; ++i)
    if (b[i].sign() < 0) ++nart;

  const Eigen::Index ncols = npos + m + nart;  // structural + slacks + artificials
  Tableau tab(m, ncols);

  Eigen::Index art = npos + m;
  for (Eigen::Index i = 0; i < m; ++i) {
    const bool neg = b[i].sign() < 0;
    const Rat s = neg ? Rat(-1) : Rat(1);
    for (Eigen::Index j = 0; j < n; ++j) {
      tab.at(i, j) = s * a(i, j);
      tab.at(i, n + j) = -s * a(i, j);
    }
    tab.at(i, npos + i) = s;  // slack
    tab.rhs(i) = s * b[i];
    if (neg) {
      tab.at(i, art) = Rat(1);
      tab.set_basis(i, static_cast<int>(art));
      ++art;
    } else {
      tab.set_basis(i, static_cast<int>(npos + i));
    }
  }

  if (nart > 0) {
    // Phase I: maximize -(sum of artificials).  Reduced costs priced out for
    // the artificial basis: z_j = -(sum of artificial rows)_j, value = -sum rhs.
    VecQ z = VecQ::Zero(ncols);
    Rat zval(0);
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basis(i) < static_cast<int>(npos + m)) continue;
      for (Eigen::Index j = 0; j < ncols; ++j) z[j] -= tab.at(i, j);
      z[tab.basis(i)] += Rat(1);  // basic column stays priced at zero
      zval -= tab.rhs(i);
    }
    if (!tab.optimize(z, zval, npos + m))  // artificials never re-enter
      throw std::logic_error("phase I unbounded");
    if (zval.sign() < 0) return {LPResult::Status::Infeasible, Rat(0), VecQ()};

    // Drive leftover artificials (stuck at zero) out of the basis.
    for (Eigen::Index i = 0; i < m; ++i) {
      if (tab.basis(i) < static_cast<int>(npos + m)) continue;
      Eigen::Index piv = -1;
      for (Eigen::Index j = 0; j < npos + m; ++j)
        if (!tab.at(i, j).is_zero()) {
          piv = j;
          break;
        }
      if (piv >= 0) tab.pivot(i, piv);
      // else: identically zero row; the artificial stays basic at zero and
      // never pivots again, which is harmless.
    }
  }

  // Phase II on the original objective (maximize c.(u - w)).
  VecQ cost = VecQ::Zero(ncols);
  for (Eigen::Index j = 0; j < n; ++j) {
    cost[j] = c[j];
    cost[n + j] = -c[j];
  }
  VecQ z = -cost;
  Rat zval(0);
  for (Eigen::Index i = 0; i < m; ++i) {
    const int bi = tab.basis(i);
    if (bi < 0 || cost[bi].is_zero()) continue;
    const Rat cb = cost[bi];
    for (Eigen::Index j = 0; j < tab.cols(); ++j) z[j] += cb * tab.at(i, j);
    zval += cb * tab.rhs(i);
  }
  for (Eigen::Index i = 0; i < m; ++i)
    if (tab.basis(i) >= 0) z[tab.basis(i)] = Rat(0);

  if (!tab.optimize(z, zval, npos + m))
    return {LPResult::Status::Unbounded, Rat(0), VecQ()};

  VecQ x = VecQ::Zero(n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const int bi = tab.basis(i);
    if (bi < 0 || bi >= static_cast<int>(npos)) continue;
    if (bi < static_cast<int>(n))
      x[bi] += tab.rhs(i);
    else
      x[bi - n] -= tab.rhs(i);
  }
  return {LPResult::Status::Optimal, zval, x};
}

bool lp_feasible(const MatQ& a, const VecQ& b) {
  return lp_feasible_point(a, b).has_value();
}

std::optional<VecQ> lp_feasible_point(const MatQ& a, const VecQ& b) {
  const LPResult r = solve_lp(a, b, VecQ::Zero(a.cols()));
  if (r.status != LPResult::Status::Optimal) return std::nullopt;
  return r.x;
}

}  // namespace chainfold
