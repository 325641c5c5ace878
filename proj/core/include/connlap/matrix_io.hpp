// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>

#include "connlap/field_matrix.hpp"
#include "connlap/int_matrix.hpp"

namespace connlap {

// Dump format: a "rows cols" header line, then one line per row with
// space-separated entries. Rational entries that are not integers are
// written as "num/den".

void write_matrix(std::ostream& out, const IntMatrix& m);
void write_matrix(std::ostream& out, const RatMatrix& m);
void write_matrix(std::ostream& out, const FieldMatrix& m);

/// Reads an integer dump; throws std::runtime_error on malformed input or a
/// rational token.
IntMatrix read_int_matrix(std::istream& in);
RatMatrix read_rat_matrix(std::istream& in);

}  // namespace connlap
