// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "connlap/check.hpp"
#include "connlap/complex.hpp"
#include "connlap/int_matrix.hpp"

namespace connlap {

/// Every operator of a complex, in the complex's vertex-first ordering.
///
/// d0 orients edge {a, b} (a < b) from a to b: row entries -1 at a, +1 at b.
/// The n x n operators (n = v + e) place the vertex block first.
struct OperatorBundle {
  Complex complex;
  IntMatrix d0_signed;           // e x v
  IntMatrix d0_signless;         // e x v
  IntMatrix dirac;               // D = d + d^T
  IntMatrix hodge;               // H = D^2 = H0 ⊕ H1
  IntMatrix hodge_signless;      // |H| = (|d| + |d|^T)^2
  IntMatrix kirchhoff;           // H0 = B - A, v x v
  IntMatrix kirchhoff_signless;  // |H0| = B + A, v x v
  IntMatrix connection;          // L
  IntMatrix green;               // g = L^{-1}
};

OperatorBundle build_operators(const Complex& c);

IntMatrix incidence(const Complex& c, bool signless = false);
/// Embeds the e x v incidence into the n x n layout: rows of the edge block,
/// columns of the vertex block.
IntMatrix exterior_derivative(const Complex& c, bool signless = false);
IntMatrix connection_laplacian(const Complex& c);

/// Named operator for dumps: L, Linv, D, H, Habs, H0, H0abs. Throws
/// std::invalid_argument for an unknown name.
const IntMatrix& operator_by_name(const OperatorBundle& ops, const std::string& name);
std::vector<std::string> operator_names();

/// g(x, y) = ω(x) ω(y) χ(St(x) ∩ St(y)), built from stars alone.
IntMatrix green_star(const Complex& c);

/// L - L^{-1} - |H|.
IntMatrix hydrogen_residual(const Complex& c);
IntMatrix hydrogen_residual(const OperatorBundle& ops);

/// Sum of all entries of L^{-1}.
Integer energy(const Complex& c);
Integer energy(const OperatorBundle& ops);

struct TraceReport {
  Integer tr_L, n;
  Integer tr_Habs, four_e, sum_sphere_chi;
  Integer tr_Habs_sq, two_tr_L_sq_minus_2n, four_conn_edges;
  Integer tr_H0abs_sq, tr_H1abs_sq;
  std::vector<Check> checks;
};

/// tr L = n; tr |H| = Σ χ(S(x)) = 4e; tr |H|^2 = 2 tr L^2 - 2n = 4|E'|;
/// tr |H0|^2 = tr |H1|^2.
TraceReport trace_identities(const OperatorBundle& ops);

struct SupersymmetryReport {
  std::vector<double> nonzero_h0, nonzero_h1;
  double max_spectral_mismatch = 0.0;
  int b0 = 0, b1 = 0;
  int nullity_h0 = 0, nullity_h1 = 0;
  long long chi = 0;
  std::vector<Check> checks;
};

/// Nonzero spectra of H0 = d0^T d0 and H1 = d0 d0^T agree; nullities are the
/// Betti numbers; b0 - b1 = χ.
SupersymmetryReport dirac_supersymmetry(const OperatorBundle& ops, double tol = 1e-8);

/// b0 = number of components, b1 = e - v + b0.
int betti0(const Graph& g);
int betti1(const Graph& g);

}  // namespace connlap
