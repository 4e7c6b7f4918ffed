#pragma once

#include <vector>

#include "unitals/gf.hpp"

namespace unitals {

using Row = std::vector<Elem>;

/// Reduces the rows in place to reduced row echelon form; returns the pivot
/// column of each nonzero row.
std::vector<std::size_t> row_reduce(const Field& f, std::vector<Row>& rows, std::size_t cols);

/// A basis of {x : rows * x = 0}, one vector per free column, with a 1 in
/// that column.
std::vector<Row> null_space(const Field& f, std::vector<Row> rows, std::size_t cols);

std::size_t rank(const Field& f, std::vector<Row> rows, std::size_t cols);

}  // namespace unitals
