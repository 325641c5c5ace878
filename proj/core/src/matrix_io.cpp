// SPDX-License-Identifier: Apache-2.0
#include "connlap/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace connlap {

namespace {

template <class M, class Fmt>
void write_rows(std::ostream& out, const M& m, Fmt fmt) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << fmt(m(i, j));
    }
    out << '\n';
  }
}

void read_header(std::istream& in, int& rows, int& cols) {
  if (!(in >> rows >> cols) || rows < 0 || cols < 0)
    throw std::runtime_error("matrix dump: bad \"rows cols\" header");
}

std::string next_token(std::istream& in, int i, int j) {
  std::string tok;
  if (!(in >> tok))
    throw std::runtime_error("matrix dump: missing entry (" + std::to_string(i) + "," +
                             std::to_string(j) + ")");
  return tok;
}

}  // namespace

void write_matrix(std::ostream& out, const IntMatrix& m) {
  write_rows(out, m, [](const Integer& x) { return x.get_str(); });
}

void write_matrix(std::ostream& out, const RatMatrix& m) {
  write_rows(out, m, [](const Rational& x) { return x.get_str(); });
}

void write_matrix(std::ostream& out, const FieldMatrix& m) {
  write_rows(out, m, [](std::uint64_t x) { return std::to_string(x); });
}

IntMatrix read_int_matrix(std::istream& in) {
  int rows = 0, cols = 0;
  read_header(in, rows, cols);
  IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const std::string tok = next_token(in, i, j);
      if (m(i, j).set_str(tok, 10) != 0)
        throw std::runtime_error("matrix dump: bad integer '" + tok + "'");
    }
  return m;
}

RatMatrix read_rat_matrix(std::istream& in) {
  int rows = 0, cols = 0;
  read_header(in, rows, cols);
  RatMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      const std::string tok = next_token(in, i, j);
      Rational q;
      if (q.set_str(tok, 10) != 0 || q.get_den() == 0)
        throw std::runtime_error("matrix dump: bad rational '" + tok + "'");
      q.canonicalize();
      m(i, j) = q;
    }
  return m;
}

}  // namespace connlap
