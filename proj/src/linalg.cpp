#include "loopforge/linalg.hpp"

#include <algorithm>

namespace loopforge {

SparseRow row_add(const SparseRow& a, const SparseRow& b,
                  const Rational& factor) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rational v = factor * b[j].second;
      if (!is_zero(v)) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      Rational v = a[i].second + factor * b[j].second;
      if (!is_zero(v)) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

void row_scale(SparseRow& a, const Rational& c) {
  for (auto& [k, v] : a) v *= c;
}

SparseRow normalize_row(SparseRow row) {
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [k, v] : row) {
    if (!out.empty() && out.back().first == k)
      out.back().second += v;
    else
      out.emplace_back(k, v);
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& kv) { return is_zero(kv.second); }),
            out.end());
  return out;
}

SparseRow RowSpace::reduce(SparseRow row) const {
  for (size_t i = 0; i < rows_.size() && !row.empty(); ++i) {
    int p = pivots_[i];
    if (row.front().first > p) continue;
    auto it = std::lower_bound(
        row.begin(), row.end(), p,
        [](const auto& kv, int col) { return kv.first < col; });
    if (it == row.end() || it->first != p) continue;
    row = row_add(row, rows_[i], -it->second);
  }
  return row;
}

bool RowSpace::insert(SparseRow row) {
  row = reduce(std::move(row));
  if (row.empty()) return false;
  row_scale(row, Rational(1) / row.front().second);
  int p = row.front().first;
  // Eliminate the new pivot from existing rows to keep the basis reduced.
  for (size_t i = 0; i < rows_.size(); ++i) {
    auto& r = rows_[i];
    auto it = std::lower_bound(
        r.begin(), r.end(), p,
        [](const auto& kv, int col) { return kv.first < col; });
    if (it != r.end() && it->first == p) r = row_add(r, row, -it->second);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
  size_t idx = static_cast<size_t>(pos - pivots_.begin());
  pivots_.insert(pos, p);
  rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(row));
  return true;
}

std::vector<std::vector<Rational>> RowSpace::kernel_basis(int ncols) const {
  std::vector<bool> is_pivot(static_cast<size_t>(ncols), false);
  for (int p : pivots_)
    if (p < ncols) is_pivot[static_cast<size_t>(p)] = true;
  std::vector<std::vector<Rational>> out;
  for (int f = 0; f < ncols; ++f) {
    if (is_pivot[static_cast<size_t>(f)]) continue;
    std::vector<Rational> v(static_cast<size_t>(ncols), Rational(0));
    v[static_cast<size_t>(f)] = 1;
    for (size_t i = 0; i < rows_.size(); ++i) {
      auto it = std::lower_bound(
          rows_[i].begin(), rows_[i].end(), f,
          [](const auto& kv, int col) { return kv.first < col; });
      if (it != rows_[i].end() && it->first == f)
        v[static_cast<size_t>(pivots_[i])] = -it->second;
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool solve_dense(std::vector<std::vector<Rational>> a,
                 std::vector<Rational> rhs, std::vector<Rational>& out) {
  const size_t n = a.size();
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && is_zero(a[piv][col])) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = Rational(1) / a[col][col];
    for (size_t j = col; j < n; ++j) a[col][j] *= inv;
    rhs[col] *= inv;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || is_zero(a[r][col])) continue;
      Rational f = a[r][col];
      for (size_t j = col; j < n; ++j) a[r][j] -= f * a[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  out = std::move(rhs);
  return true;
}

}  // namespace loopforge
