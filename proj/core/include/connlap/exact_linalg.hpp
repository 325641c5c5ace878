// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "connlap/int_matrix.hpp"

namespace connlap {

/// Exact determinant by Bareiss fraction-free elimination. Pivots are the
/// first nonzero entry of each column.
Integer det(const IntMatrix& m);

/// Exact inverse via fraction-free Gauss–Jordan on [m | I]. Throws
/// std::domain_error for a singular matrix.
RatMatrix inverse_exact(const IntMatrix& m);

/// inverse_exact converted to integers; throws std::domain_error when the
/// inverse has a non-integral entry.
IntMatrix inverse_integral(const IntMatrix& m);

int rank(const IntMatrix& m);

/// m^k by repeated squaring; m^0 = I.
IntMatrix matpow(const IntMatrix& m, unsigned k);

/// Integer polynomial with ascending coefficients, kept canonical (no zero
/// leading coefficient; the zero polynomial has no coefficients).
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> ascending);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return c_; }
  /// Coefficient of x^k; zero beyond the degree.
  Integer coefficient(int k) const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;
  /// Human-readable form, highest degree first: "x^3 - 3x^2 + x + 1".
  std::string str() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  std::vector<Integer> c_;
};

/// det(xI - m), exact. Computed modulo enough 31-bit primes to cover the
/// coefficient bound (1 + max absolute row sum)^n, each by Hessenberg
/// reduction, then lifted by Chinese remaindering. Practical up to n ≈ 300.
IntPolynomial charpoly(const IntMatrix& m);

enum class Reciprocity { palindromic, anti_palindromic, none };

/// Classifies x^n p(1/x) against p: equal (palindromic), equal to -p
/// (anti-palindromic), or neither. Both symmetric cases mean the root set is
/// closed under z -> 1/z. The zero polynomial is classified as none.
Reciprocity reciprocity(const IntPolynomial& p);

/// True iff the coefficient list is a palindrome.
bool is_reciprocal(const IntPolynomial& p);

const char* to_string(Reciprocity r);

}  // namespace connlap
