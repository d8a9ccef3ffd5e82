// Exact linear algebra over the rationals plus the integer-lattice normal
// forms (Smith form, saturated kernels) that the Cox construction needs.
// Everything works by fraction-exact Gaussian elimination; matrices are small
// (rank <= 4, a dozen generators), so simplicity wins over sparsity tricks.

#pragma once

#include "chainfold/rational.hpp"

#include <optional>
#include <vector>

namespace chainfold {

int rank_exact(const MatQ& a);

// Columns form a basis of ker(a) (right kernel); may have zero columns count.
MatQ kernel_basis(const MatQ& a);

// One solution of a x = b, or nullopt if inconsistent.
std::optional<VecQ> solve_exact(const MatQ& a, const VecQ& b);

MatQ inverse_exact(const MatQ& a);  // throws std::domain_error when singular

// Is v in the column span of basis?
bool in_column_span(const MatQ& basis, const VecQ& v);

// Smith normal form of an integral matrix: u * a * v = d with u, v
// unimodular and d diagonal, d_1 | d_2 | ... .  Entries of a must be
// integers (den == 1).
struct SmithForm {
  MatQ u, v, d;
  int rank = 0;
  // Diagonal entries d_1..d_rank as positive integers.
  std::vector<BigInt> diagonal;
};
SmithForm smith_normal_form(const MatQ& a);

// Basis (columns) of the saturated lattice {x in Z^n : a x = 0}; the basis is
// primitive and deterministic.  a must be integral.
MatQ integer_kernel_basis(const MatQ& a);

// Invariant factors > 1 of coker(Z^cols -> Z^rows, x -> a x), i.e. the
// torsion of Z^rows / (column lattice of a).  a must be integral.
std::vector<BigInt> cokernel_torsion(const MatQ& a);

}  // namespace chainfold
