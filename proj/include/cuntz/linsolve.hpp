#pragma once

// Exact Gaussian elimination over Q(sqrt2).

#include <cstddef>
#include <vector>

#include "cuntz/scalar.hpp"

namespace cuntz {

using Matrix = std::vector<std::vector<Scalar>>;

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& rows, std::size_t cols);

/// Basis of {x : A x = 0}; one vector per free column.
std::vector<std::vector<Scalar>> nullspace(Matrix rows, std::size_t cols);

}  // namespace cuntz
