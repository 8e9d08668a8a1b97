#pragma once

#include <vector>

#include "qdef/scalar.hpp"

namespace qdef {

using ScalarMatrix = std::vector<std::vector<Scalar>>;

/// Rank over the field by Gaussian elimination; rows may have any common length.
std::size_t scalar_rank(ScalarMatrix rows);

/// True iff `target` is a linear combination of the columns of `columns`
/// (given as a list of column vectors of equal length).
bool in_column_span(const ScalarMatrix& columns, const std::vector<Scalar>& target);

}  // namespace qdef
