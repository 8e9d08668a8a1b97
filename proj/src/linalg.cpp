#include "qdef/linalg.hpp"

namespace qdef {

std::size_t scalar_rank(ScalarMatrix rows) {
  std::size_t rank = 0;
  std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < width && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    Scalar inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      Scalar factor = rows[r][col] * inv;
      for (std::size_t c = col; c < width; ++c) {
        if (!rows[rank][c].is_zero()) rows[r][c] -= factor * rows[rank][c];
      }
    }
    ++rank;
  }
  return rank;
}

bool in_column_span(const ScalarMatrix& columns, const std::vector<Scalar>& target) {
  // Work with the transpose: columns become rows, so the span test is a rank
  // comparison after appending the target as one more row.
  ScalarMatrix rows = columns;
  std::size_t base = scalar_rank(rows);
  rows.push_back(target);
  return scalar_rank(std::move(rows)) == base;
}

}  // namespace qdef
