#include "cyclecone/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace cyclecone {

std::vector<std::size_t> reduce_to_echelon(RationalMatrix& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }

  std::size_t lead = 0;
  for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
    std::size_t pick = lead;
    while (pick < rows.size() && rows[pick][col] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[lead], rows[pick]);

    const ExactRational inv = 1 / rows[lead][col];
    for (std::size_t j = col; j < cols; ++j) rows[lead][j] *= inv;

    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      const ExactRational factor = rows[r][col];
      for (std::size_t j = col; j < cols; ++j) rows[r][j] -= factor * rows[lead][j];
    }
    pivots.push_back(col);
    ++lead;
  }
  return pivots;
}

std::size_t rank(RationalMatrix rows) { return reduce_to_echelon(rows).size(); }

RationalMatrix echelon_basis(RationalMatrix rows) {
  const auto pivots = reduce_to_echelon(rows);
  rows.resize(pivots.size());
  return rows;
}

}  // namespace cyclecone
