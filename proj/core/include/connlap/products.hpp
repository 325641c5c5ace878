// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <utility>
#include <vector>

#include "connlap/check.hpp"
#include "connlap/complex.hpp"
#include "connlap/exact_linalg.hpp"
#include "connlap/int_matrix.hpp"

namespace connlap {

/// Cells (x, y) of A × B in lexicographic factor order: cell (i, j) sits at
/// position i * |B| + j, the same layout as a Kronecker product.
struct ProductComplex {
  Complex a, b;
  std::vector<std::pair<int, int>> cells;
};

ProductComplex make_product(const Complex& a, const Complex& b);

/// L(A × B) = L(A) ⊗ L(B).
IntMatrix product_connection(const Complex& a, const Complex& b);
/// Cell rule: (x, y) and (x', y') meet iff x ∩ x' and y ∩ y' are nonempty.
IntMatrix product_connection_by_cells(const ProductComplex& p);
/// H(A × B) = H(A) ⊗ I + I ⊗ H(B).
IntMatrix product_hodge(const Complex& a, const Complex& b);

struct ProductReport {
  Integer energy;
  long long chi_a = 0, chi_b = 0;
  Integer det;
  Reciprocity l2_reciprocity = Reciprocity::none;
  /// max |L - L^{-1} - |H(A × B)||, with |·| the entrywise absolute value.
  Integer hydrogen_residual_max;
  double multiplicativity_error = 0.0;  // L spectrum vs pairwise products
  double additivity_error = 0.0;        // H spectrum vs pairwise sums
  std::vector<Check> checks;
};

/// Energy, unimodularity, reciprocity of charpoly(L^2), spectral
/// multiplicativity and additivity, and the hydrogen residual. The residual
/// is reported, not judged: it is expected to be nonzero for nontrivial
/// products.
ProductReport product_checks(const Complex& a, const Complex& b, double tol = 1e-8);

/// (L_A ⊗ I)^n (I ⊗ L_B)^m ψ0; negative exponents use exact inverses. With
/// b_first the B factor is applied first.
std::vector<Integer> two_time_walk(const IntMatrix& l_a, const IntMatrix& l_b, const std::vector<Integer>& psi0,
                                   long long n, long long m, bool b_first = false);

}  // namespace connlap
