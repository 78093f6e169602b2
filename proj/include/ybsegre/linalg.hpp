#pragma once

#include "ybsegre/rational.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ybsegre {

// A sparse row vector over Q: (column, coefficient) pairs sorted by column,
// coefficients nonzero.
using SparseRow = std::vector<std::pair<std::uint32_t, Rational>>;

// row -= c * pivot, merging sorted sparse representations.
SparseRow row_axpy(const SparseRow& row, const SparseRow& pivot, const Rational& c);

// Rank of the span of the given rows, by exact incremental Gaussian
// elimination with one pivot per leading column. The rows this library
// produces are differences of two unit vectors, which stay two-term under
// elimination, so this runs near linear time on them. Consumes `rows`.
std::size_t sparse_rank(std::vector<SparseRow> rows);

} // namespace ybsegre
