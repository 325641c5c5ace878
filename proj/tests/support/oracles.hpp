// SPDX-License-Identifier: Apache-2.0
#pragma once

// Independent reference computations used only by tests. Each takes a route
// that shares no code with the library routine it checks.

#include <Eigen/Core>
#include <vector>

#include "connlap/complex.hpp"
#include "connlap/int_matrix.hpp"

namespace connlap::testing {

/// Ascending coefficients of det(xI - A) by Faddeev–LeVerrier.
std::vector<Integer> faddeev_leverrier(const IntMatrix& a);

/// Gauss–Jordan over Q with rational entries throughout.
RatMatrix rational_inverse(const IntMatrix& a);

/// Cofactor expansion along the first row. Meant for n <= 9.
Integer laplace_det(const IntMatrix& a);

/// max over simplices of the number of length-k walks in the connection
/// graph, by explicit enumeration.
Integer enumerate_max_walks(const Complex& c, int k);

/// Eigen's self-adjoint solver, ascending.
std::vector<double> reference_eigenvalues(const Eigen::MatrixXd& m);

/// |H| from its block description: B + A on vertices and the count of
/// shared endpoints on edges.
IntMatrix signless_hodge_by_blocks(const Complex& c);

/// Integer matrix with entries from a seeded stream, made unimodular as a
/// product of unit lower and unit upper triangular factors.
IntMatrix random_unimodular(int n, unsigned seed);

}  // namespace connlap::testing
