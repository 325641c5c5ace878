// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <initializer_list>
#include <vector>

namespace connlap {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Integer& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Integer& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const std::vector<Integer>& data() const { return data_; }

  bool is_zero() const;
  bool is_symmetric() const;
  /// Largest |entry|, 0 for an empty matrix.
  Integer max_abs() const;
  Eigen::MatrixXd to_double() const;

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(long s, IntMatrix a);
  friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

/// Dense row-major matrix of reduced rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols);
  explicit RatMatrix(const IntMatrix& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool is_integral() const;
  /// Throws std::domain_error naming the first entry with denominator != 1.
  IntMatrix to_integer() const;
  Eigen::MatrixXd to_double() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

IntMatrix transpose(const IntMatrix& m);
/// Entrywise absolute value.
IntMatrix abs(const IntMatrix& m);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);
Integer trace(const IntMatrix& m);
Integer sum_entries(const IntMatrix& m);

}  // namespace connlap
