// SPDX-License-Identifier: Apache-2.0
#include "connlap/field_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace connlap {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

void require_same_field(const FieldMatrix& a, const FieldMatrix& b, const char* op) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument(std::string(op) + ": modulus mismatch");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set below 2^64.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) { return powmod64(a, e, p); }

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw std::domain_error("modp::inv: zero has no inverse");
  return powmod64(a, p - 2, p);
}

std::uint64_t reduce(const Integer& x, std::uint64_t p) {
  return mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
}

}  // namespace modp

FieldMatrix::FieldMatrix(std::uint64_t p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  if (p >= (1ULL << 32)) throw std::invalid_argument("field modulus must be below 2^32");
  if (!is_prime(p)) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
  if (rows < 0 || cols < 0) throw std::invalid_argument("FieldMatrix: negative dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

FieldMatrix FieldMatrix::identity(std::uint64_t p, int n) {
  FieldMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

FieldMatrix field_reduce(const IntMatrix& m, std::uint64_t p) {
  FieldMatrix out(p, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out.set(i, j, modp::reduce(m(i, j), p));
  return out;
}

FieldMatrix field_reduce(const RatMatrix& m, std::uint64_t p) {
  FieldMatrix out(p, m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      const std::uint64_t den = modp::reduce(m(i, j).get_den(), p);
      if (den == 0) throw std::domain_error("denominator divisible by the modulus");
      out.set(i, j, modp::mul(modp::reduce(m(i, j).get_num(), p), modp::inv(den, p), p));
    }
  return out;
}

std::vector<std::uint64_t> field_reduce(const std::vector<Integer>& x, std::uint64_t p) {
  std::vector<std::uint64_t> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = modp::reduce(x[i], p);
  return out;
}

FieldMatrix field_inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("field_inverse: non-square matrix");
  const std::uint64_t p = m.modulus();
  const int n = m.rows();
  std::vector<std::vector<std::uint64_t>> a(n, std::vector<std::uint64_t>(2 * n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw std::domain_error("matrix is singular mod " + std::to_string(p));
    std::swap(a[piv], a[k]);
    const std::uint64_t s = modp::inv(a[k][k], p);
    for (auto& x : a[k]) x = modp::mul(x, s, p);
    for (int i = 0; i < n; ++i) {
      if (i == k || a[i][k] == 0) continue;
      const std::uint64_t f = a[i][k];
      for (int j = 0; j < 2 * n; ++j)
        if (a[k][j]) a[i][j] = (a[i][j] + p - modp::mul(f, a[k][j], p)) % p;
    }
  }
  FieldMatrix out(p, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, a[i][n + j]);
  return out;
}

FieldMatrix field_matmul(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b, "field_matmul");
  if (a.cols() != b.rows()) throw std::invalid_argument("field_matmul: inner dimension mismatch");
  const std::uint64_t p = a.modulus();
  FieldMatrix c(p, a.rows(), b.cols());
  std::vector<std::uint64_t> row(b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    std::fill(row.begin(), row.end(), 0);
    for (int k = 0; k < a.cols(); ++k) {
      const std::uint64_t aik = a(i, k);
      if (!aik) continue;
      for (int j = 0; j < b.cols(); ++j) row[j] = (row[j] + aik * b(k, j)) % p;
    }
    for (int j = 0; j < b.cols(); ++j) c.set(i, j, row[j]);
  }
  return c;
}

FieldMatrix field_add(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b, "field_add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("field_add: shape mismatch");
  FieldMatrix c(a.modulus(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j) + b(i, j));
  return c;
}

FieldMatrix field_sub(const FieldMatrix& a, const FieldMatrix& b) {
  require_same_field(a, b, "field_sub");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("field_sub: shape mismatch");
  FieldMatrix c(a.modulus(), a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c.set(i, j, a(i, j) + a.modulus() - b(i, j));
  return c;
}

std::vector<std::uint64_t> field_matvec(const FieldMatrix& m, const std::vector<std::uint64_t>& x) {
  if (static_cast<int>(x.size()) != m.cols()) throw std::invalid_argument("field_matvec: dimension mismatch");
  const std::uint64_t p = m.modulus();
  std::vector<std::uint64_t> y(m.rows(), 0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) y[i] = (y[i] + m(i, j) * (x[j] % p)) % p;
  return y;
}

int field_rank(const FieldMatrix& m) {
  const std::uint64_t p = m.modulus();
  std::vector<std::vector<std::uint64_t>> a(m.rows(), std::vector<std::uint64_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int piv = rank;
    while (piv < m.rows() && a[piv][col] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const std::uint64_t s = modp::inv(a[rank][col], p);
    for (int i = rank + 1; i < m.rows(); ++i) {
      if (!a[i][col]) continue;
      const std::uint64_t f = modp::mul(a[i][col], s, p);
      for (int j = col; j < m.cols(); ++j) a[i][j] = (a[i][j] + p - modp::mul(f, a[rank][j], p)) % p;
    }
    ++rank;
  }
  return rank;
}

std::optional<std::uint64_t> multiplicative_order(const FieldMatrix& m, std::uint64_t max_order) {
  if (m.rows() != m.cols()) throw std::invalid_argument("multiplicative_order: non-square matrix");
  if (field_rank(m) < m.rows()) return std::nullopt;
  const FieldMatrix id = FieldMatrix::identity(m.modulus(), m.rows());
  FieldMatrix power = m;
  for (std::uint64_t k = 1; k <= max_order; ++k) {
    if (power == id) return k;
    power = field_matmul(power, m);
  }
  return std::nullopt;
}

}  // namespace connlap
