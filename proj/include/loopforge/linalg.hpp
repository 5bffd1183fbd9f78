#pragma once

#include "loopforge/rational.hpp"

#include <map>
#include <utility>
#include <vector>

namespace loopforge {

// Sparse row over dense integer column indices, sorted by column.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow row_add(const SparseRow& a, const SparseRow& b,
                  const Rational& factor);  // a + factor * b
void row_scale(SparseRow& a, const Rational& c);

// Incrementally maintained reduced row echelon basis of a row space.
// Insertion order does not affect the resulting space; all arithmetic is
// exact, so membership tests are decisions, not approximations.
class RowSpace {
 public:
  // Reduce the row against the basis; returns the residual (empty if the
  // row already lies in the span).
  SparseRow reduce(SparseRow row) const;
  // Insert a row; returns true if the rank grew.
  bool insert(SparseRow row);
  bool contains(const SparseRow& row) const { return reduce(row).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  // Kernel basis of the linear map whose matrix rows are this space,
  // acting on coordinates 0..ncols-1.
  std::vector<std::vector<Rational>> kernel_basis(int ncols) const;

 private:
  std::vector<SparseRow> rows_;  // normalized, pivot-sorted, fully reduced
  std::vector<int> pivots_;
};

// Exact solve of a dense square system; returns false when singular.
bool solve_dense(std::vector<std::vector<Rational>> a,
                 std::vector<Rational> rhs, std::vector<Rational>& out);

// Interns arbitrary ordered keys as dense column indices.
template <class K>
class KeyInterner {
 public:
  int id(const K& k) {
    auto [it, inserted] = ids_.try_emplace(k, static_cast<int>(ids_.size()));
    if (inserted) keys_.push_back(k);
    return it->second;
  }
  int size() const { return static_cast<int>(ids_.size()); }
  const K& key(int id) const { return keys_[id]; }

 private:
  std::map<K, int> ids_;
  std::vector<K> keys_;
};

inline void append_term(SparseRow& row, int col, const Rational& v) {
  if (!is_zero(v)) row.emplace_back(col, v);
}

// Sort by column and merge duplicates; drops zeros.
SparseRow normalize_row(SparseRow row);

}  // namespace loopforge
