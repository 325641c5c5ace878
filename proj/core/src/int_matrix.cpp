// SPDX-License-Identifier: Apache-2.0
#include "connlap/int_matrix.hpp"

#include <stdexcept>
#include <string>

namespace connlap {

namespace {

void require_same_shape(const IntMatrix& a, const IntMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument(std::string(op) + ": shape mismatch");
}

}  // namespace

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("IntMatrix: negative dimension");
  data_.resize(static_cast<std::size_t>(rows) * cols);
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  data_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != cols_) throw std::invalid_argument("IntMatrix: ragged rows");
    for (long x : row) data_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Integer IntMatrix::max_abs() const {
  Integer best = 0;
  for (const auto& x : data_)
    if (mpz_cmpabs(x.get_mpz_t(), best.get_mpz_t()) > 0) best = ::abs(x);
  return best;
}

Eigen::MatrixXd IntMatrix::to_double() const {
  Eigen::MatrixXd out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).get_d();
  return out;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  require_same_shape(*this, o, "operator+");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  require_same_shape(*this, o, "operator-");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("operator*: inner dimension mismatch");
  IntMatrix c(a.rows_, b.cols_);
  // i-k-j order; zero entries are common in connection Laplacians and skipped.
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Integer& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const Integer& bkj = b(k, j);
        if (sgn(bkj) == 0) continue;
        mpz_addmul(c(i, j).get_mpz_t(), aik.get_mpz_t(), bkj.get_mpz_t());
      }
    }
  return c;
}

IntMatrix operator*(long s, IntMatrix a) {
  for (auto& x : a.data_) x *= s;
  return a;
}

std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x) {
  if (static_cast<int>(x.size()) != a.cols_)
    throw std::invalid_argument("matrix-vector product: dimension mismatch");
  std::vector<Integer> y(a.rows_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) {
      const Integer& aij = a(i, j);
      if (sgn(aij) != 0) mpz_addmul(y[i].get_mpz_t(), aij.get_mpz_t(), x[j].get_mpz_t());
    }
  return y;
}

RatMatrix::RatMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("RatMatrix: negative dimension");
  data_.resize(static_cast<std::size_t>(rows) * cols);
}

RatMatrix::RatMatrix(const IntMatrix& m) : RatMatrix(m.rows(), m.cols()) {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) (*this)(i, j) = Rational(m(i, j));
}

bool RatMatrix::is_integral() const {
  for (const auto& x : data_)
    if (x.get_den() != 1) return false;
  return true;
}

IntMatrix RatMatrix::to_integer() const {
  IntMatrix out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      const Rational& x = (*this)(i, j);
      if (x.get_den() != 1)
        throw std::domain_error("entry (" + std::to_string(i) + "," + std::to_string(j) +
                                ") = " + x.get_str() + " is not an integer");
      out(i, j) = x.get_num();
    }
  return out;
}

Eigen::MatrixXd RatMatrix::to_double() const {
  Eigen::MatrixXd out(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j).get_d();
  return out;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("operator*: inner dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols(), m.rows());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
  return t;
}

IntMatrix abs(const IntMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = ::abs(m(i, j));
  return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      const Integer& aij = a(i, j);
      if (sgn(aij) == 0) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

Integer trace(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("trace: non-square matrix");
  Integer t = 0;
  for (int i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Integer sum_entries(const IntMatrix& m) {
  Integer s = 0;
  for (const auto& x : m.data()) s += x;
  return s;
}

}  // namespace connlap
