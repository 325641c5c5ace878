// SPDX-License-Identifier: Apache-2.0
#include "connlap/exact_linalg.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace connlap {

namespace {

void require_square(const IntMatrix& m, const char* op) {
  if (!m.is_square()) throw std::invalid_argument(std::string(op) + ": non-square matrix");
}

using Rows = std::vector<std::vector<Integer>>;

Rows to_rows(const IntMatrix& m, int extra_cols) {
  Rows a(m.rows(), std::vector<Integer>(m.cols() + extra_cols));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

// a[i][j] = (a[k][k] a[i][j] - a[i][k] a[k][j]) / prev, exact.
void bareiss_update(std::vector<Integer>& row_i, const std::vector<Integer>& row_k, int k,
                    const Integer& prev, int col_begin, Integer& tmp) {
  const Integer pivot = row_k[k];
  const Integer factor = row_i[k];
  for (std::size_t j = col_begin; j < row_i.size(); ++j) {
    if (static_cast<int>(j) == k) continue;
    mpz_mul(row_i[j].get_mpz_t(), row_i[j].get_mpz_t(), pivot.get_mpz_t());
    mpz_mul(tmp.get_mpz_t(), factor.get_mpz_t(), row_k[j].get_mpz_t());
    mpz_sub(row_i[j].get_mpz_t(), row_i[j].get_mpz_t(), tmp.get_mpz_t());
    mpz_divexact(row_i[j].get_mpz_t(), row_i[j].get_mpz_t(), prev.get_mpz_t());
  }
  row_i[k] = 0;
}

}  // namespace

Integer det(const IntMatrix& m) {
  require_square(m, "det");
  const int n = m.rows();
  if (n == 0) return 1;
  Rows a = to_rows(m, 0);
  Integer prev = 1, tmp;
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && sgn(a[piv][k]) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) bareiss_update(a[i], a[k], k, prev, k + 1, tmp);
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

RatMatrix inverse_exact(const IntMatrix& m) {
  require_square(m, "inverse_exact");
  const int n = m.rows();
  Rows a = to_rows(m, n);
  for (int i = 0; i < n; ++i) a[i][n + i] = 1;
  Integer prev = 1, tmp;
  for (int k = 0; k < n; ++k) {
    int piv = k;
    while (piv < n && sgn(a[piv][k]) == 0) ++piv;
    if (piv == n) throw std::domain_error("inverse_exact: matrix is singular");
    std::swap(a[piv], a[k]);
    // Fraction-free Gauss–Jordan: every row other than k is eliminated; all
    // divisions are exact and the diagonal stays equal to the latest pivot.
    for (int i = 0; i < n; ++i)
      if (i != k) bareiss_update(a[i], a[k], k, prev, 0, tmp);
    prev = a[k][k];
  }
  // Now a = [d I | d m^{-1}] with d = ±det(m).
  RatMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      inv(i, j) = Rational(a[i][n + j], prev);
      inv(i, j).canonicalize();
    }
  return inv;
}

IntMatrix inverse_integral(const IntMatrix& m) { return inverse_exact(m).to_integer(); }

int rank(const IntMatrix& m) {
  Rows a = to_rows(m, 0);
  const int rows = m.rows();
  Integer prev = 1, tmp;
  int r = 0;
  for (int col = 0; col < m.cols() && r < rows; ++col) {
    int piv = r;
    while (piv < rows && sgn(a[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (int i = r + 1; i < rows; ++i) {
      // Same fraction-free step, with the pivot at (r, col).
      const Integer pivot = a[r][col];
      const Integer factor = a[i][col];
      for (int j = col + 1; j < m.cols(); ++j) {
        a[i][j] = pivot * a[i][j] - factor * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = a[r][col];
    ++r;
  }
  return r;
}

IntMatrix matpow(const IntMatrix& m, unsigned k) {
  require_square(m, "matpow");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

IntPolynomial::IntPolynomial(std::vector<Integer> ascending) : c_(std::move(ascending)) {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Integer IntPolynomial::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Integer(0);
}

Rational IntPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

double IntPolynomial::operator()(double x) const {
  double acc = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string IntPolynomial::str() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& a = c_[k];
    if (sgn(a) == 0) continue;
    const Integer mag = ::abs(a);
    if (first)
      out << (sgn(a) < 0 ? "-" : "");
    else
      out << (sgn(a) < 0 ? " - " : " + ");
    if (mag != 1 || k == 0) out << mag.get_str();
    if (k >= 1) out << 'x';
    if (k >= 2) out << '^' << k;
    first = false;
  }
  return out.str();
}

Reciprocity reciprocity(const IntPolynomial& p) {
  const auto& c = p.coefficients();
  if (c.empty()) return Reciprocity::none;
  const std::size_t n = c.size();
  bool pal = true, anti = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (c[i] != c[n - 1 - i]) pal = false;
    if (c[i] != -c[n - 1 - i]) anti = false;
  }
  if (pal) return Reciprocity::palindromic;
  if (anti) return Reciprocity::anti_palindromic;
  return Reciprocity::none;
}

bool is_reciprocal(const IntPolynomial& p) { return reciprocity(p) == Reciprocity::palindromic; }

const char* to_string(Reciprocity r) {
  switch (r) {
    case Reciprocity::palindromic: return "palindromic";
    case Reciprocity::anti_palindromic: return "anti-palindromic";
    case Reciprocity::none: break;
  }
  return "none";
}

}  // namespace connlap
