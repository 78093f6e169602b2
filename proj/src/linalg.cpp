#include "ybsegre/linalg.hpp"

#include <unordered_map>

namespace ybsegre {

SparseRow row_axpy(const SparseRow& row, const SparseRow& pivot, const Rational& c) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      Rational v = c * pivot[j].second;
      if (v != 0) out.emplace_back(pivot[j].first, std::move(v));
      ++j;
    } else {
      Rational v = row[i].second + c * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::size_t sparse_rank(std::vector<SparseRow> rows) {
  // pivot per leading column; pivot rows normalized to leading coefficient 1
  std::unordered_map<std::uint32_t, SparseRow> pivots;
  std::size_t rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      row = row_axpy(row, it->second, -row.front().second);
    }
    if (row.empty()) continue;
    Rational lead = row.front().second;
    if (lead != 1)
      for (auto& [col, v] : row) v /= lead;
    std::uint32_t col = row.front().first;
    pivots.emplace(col, std::move(row));
    ++rank;
  }
  return rank;
}

} // namespace ybsegre
