// SPDX-License-Identifier: Apache-2.0
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "connlap/exact_linalg.hpp"
#include "connlap/field_matrix.hpp"

namespace connlap {

namespace {

using Poly = std::vector<std::uint64_t>;  // ascending, fixed length n + 1

// Characteristic polynomial over F_p: similarity reduction to upper
// Hessenberg form, then the standard three-term column recurrence.
Poly charpoly_mod(const IntMatrix& m, std::uint64_t p) {
  const int n = m.rows();
  std::vector<std::vector<std::uint64_t>> h(n, std::vector<std::uint64_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[i][j] = modp::reduce(m(i, j), p);

  for (int j = 0; j + 2 < n; ++j) {
    int piv = j + 1;
    while (piv < n && h[piv][j] == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      std::swap(h[piv], h[j + 1]);
      for (int r = 0; r < n; ++r) std::swap(h[r][piv], h[r][j + 1]);
    }
    const std::uint64_t t = modp::inv(h[j + 1][j], p);
    for (int i = j + 2; i < n; ++i) {
      const std::uint64_t u = modp::mul(h[i][j], t, p);
      if (u == 0) continue;
      // row_i -= u row_{j+1}; then col_{j+1} += u col_i keeps the similarity.
      for (int c = 0; c < n; ++c) h[i][c] = (h[i][c] + p - modp::mul(u, h[j + 1][c], p)) % p;
      for (int r = 0; r < n; ++r) h[r][j + 1] = (h[r][j + 1] + modp::mul(u, h[r][i], p)) % p;
    }
  }

  // chi[k] = charpoly of the leading k x k block.
  std::vector<Poly> chi(n + 1, Poly(n + 1, 0));
  chi[0][0] = 1;
  for (int k = 1; k <= n; ++k) {
    const int c = k - 1;  // column being absorbed
    Poly& cur = chi[k];
    // (x - h[c][c]) chi[k-1]
    const std::uint64_t diag = h[c][c];
    for (int d = 0; d < k; ++d) {
      cur[d + 1] = (cur[d + 1] + chi[k - 1][d]) % p;
      cur[d] = (cur[d] + p - modp::mul(diag, chi[k - 1][d], p)) % p;
    }
    // - sum_{i<c} h[i][c] * prod_{r=i+1..c} h[r][r-1] * chi[i]
    std::uint64_t sub = 1;
    for (int i = c - 1; i >= 0; --i) {
      sub = modp::mul(sub, h[i + 1][i], p);
      if (sub == 0) break;
      const std::uint64_t f = modp::mul(sub, h[i][c], p);
      if (f == 0) continue;
      for (int d = 0; d <= i; ++d) cur[d] = (cur[d] + p - modp::mul(f, chi[i][d], p)) % p;
    }
  }
  return chi[n];
}

std::vector<std::uint64_t> primes_below_2_31(std::size_t count, std::uint64_t& cursor) {
  std::vector<std::uint64_t> out;
  while (out.size() < count) {
    cursor -= 2;
    if (is_prime(cursor)) out.push_back(cursor);
  }
  return out;
}

}  // namespace

IntPolynomial charpoly(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly: non-square matrix");
  const int n = m.rows();
  if (n == 0) return IntPolynomial({Integer(1)});

  // |coefficient of x^{n-k}| <= C(n,k) beta^k, so all are below (1+beta)^n.
  Integer beta = 0;
  for (int i = 0; i < n; ++i) {
    Integer row = 0;
    for (int j = 0; j < n; ++j) row += ::abs(m(i, j));
    if (row > beta) beta = row;
  }
  Integer bound;
  mpz_pow_ui(bound.get_mpz_t(), Integer(beta + 1).get_mpz_t(), static_cast<unsigned long>(n));
  const Integer need = 2 * bound + 1;

  std::vector<Integer> coeff(n + 1, 0);
  Integer modulus = 1;
  std::uint64_t cursor = (1ULL << 31) + 1;
  Integer tmp;
  while (modulus < need) {
    const std::uint64_t p = primes_below_2_31(1, cursor).front();
    const Poly r = charpoly_mod(m, p);
    // Garner step: x = x_old + M * ((r - x_old) * M^{-1} mod p).
    const std::uint64_t minv = modp::inv(modp::reduce(modulus, p), p);
    for (int d = 0; d <= n; ++d) {
      const std::uint64_t old = modp::reduce(coeff[d], p);
      const std::uint64_t delta = modp::mul((r[d] + p - old) % p, minv, p);
      if (delta == 0) continue;
      mpz_addmul_ui(coeff[d].get_mpz_t(), modulus.get_mpz_t(), static_cast<unsigned long>(delta));
    }
    modulus *= static_cast<unsigned long>(p);
  }
  // Symmetric residues.
  const Integer half = modulus / 2;
  for (auto& c : coeff)
    if (c > half) c -= modulus;
  return IntPolynomial(std::move(coeff));
}

}  // namespace connlap
