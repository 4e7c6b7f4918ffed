#include "unitals/linalg.hpp"

#include <utility>

namespace unitals {

std::vector<std::size_t> row_reduce(const Field& f, std::vector<Row>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Elem s = f.inv(rows[r][col]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      const Elem factor = rows[i][col];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

std::vector<Row> null_space(const Field& f, std::vector<Row> rows, std::size_t cols) {
  const auto pivots = row_reduce(f, rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Row> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Row v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(rows[i][free]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const Field& f, std::vector<Row> rows, std::size_t cols) {
  return row_reduce(f, rows, cols).size();
}

}  // namespace unitals
