// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "connlap/int_matrix.hpp"

namespace connlap {

/// Deterministic Miller–Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

namespace modp {

/// Requires a, b < p < 2^32.
inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
/// Inverse of a nonzero residue modulo a prime.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
std::uint64_t reduce(const Integer& x, std::uint64_t p);

}  // namespace modp

/// Dense matrix over F_p for a prime p < 2^32.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  /// Throws std::invalid_argument when p is not prime or too large.
  FieldMatrix(std::uint64_t p, int rows, int cols);
  static FieldMatrix identity(std::uint64_t p, int n);

  std::uint64_t modulus() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::uint64_t operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  /// Stores x mod p.
  void set(int r, int c, std::uint64_t x) { data_[static_cast<std::size_t>(r) * cols_ + c] = x % p_; }

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  std::uint64_t p_ = 2;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> data_;
};

FieldMatrix field_reduce(const IntMatrix& m, std::uint64_t p);
/// Reduces a rational matrix; throws std::domain_error if a denominator is
/// divisible by p.
FieldMatrix field_reduce(const RatMatrix& m, std::uint64_t p);
/// Gauss–Jordan inverse; throws std::domain_error when singular mod p.
FieldMatrix field_inverse(const FieldMatrix& m);
FieldMatrix field_matmul(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix field_add(const FieldMatrix& a, const FieldMatrix& b);
FieldMatrix field_sub(const FieldMatrix& a, const FieldMatrix& b);
std::vector<std::uint64_t> field_matvec(const FieldMatrix& m, const std::vector<std::uint64_t>& x);
std::vector<std::uint64_t> field_reduce(const std::vector<Integer>& x, std::uint64_t p);
int field_rank(const FieldMatrix& m);

/// Smallest k ≥ 1 with m^k = I, searched up to max_order; nullopt if not
/// found (or m is singular).
std::optional<std::uint64_t> multiplicative_order(const FieldMatrix& m, std::uint64_t max_order);

}  // namespace connlap
