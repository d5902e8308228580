#pragma once

#include <algorithm>
#include <vector>

#include "slice.hpp"

namespace diffdim {

/// A subspace of the coordinate space in reduced row-echelon form with
/// respect to the canonical term order. Pivots strictly decrease down the
/// rows and each pivot column is eliminated from every other row. Because the
/// term order is graded, every row's support has order at most the pivot's
/// order, which is what makes order-restriction a row filter.
class SliceBasis {
public:
  SliceBasis() = default;
  explicit SliceBasis(int ambient_level) : ambient_level_(ambient_level) {}

  const std::vector<SliceVector>& rows() const { return rows_; }
  int dim() const { return static_cast<int>(rows_.size()); }
  int ambient_level() const { return ambient_level_; }
  void set_ambient_level(int level) {
    if (level < max_row_order()) throw InputError("ambient level below the basis support");
    ambient_level_ = level;
  }

  int max_row_order() const {
    int m = 0;
    for (const auto& r : rows_) m = std::max(m, r.order());
    return m;
  }

  /// Fully reduces v against the rows; the result has no pivot term in its
  /// support. Zero iff v lies in the span. Each elimination step strictly
  /// lowers the working leading term, so peeled-off terms stay final.
  SliceVector reduce(SliceVector v) const {
    SliceVector out;
    while (!v.is_zero()) {
      const SliceVector* row = pivot_row(v.leading_term());
      if (row) {
        v.axpy(-v.leading_coeff(), *row);  // rows are monic
      } else {
        out.add_term(v.leading_term(), v.leading_coeff());
        v.drop_leading();
      }
    }
    return out;
  }

  /// Membership with early exit: contained iff every intermediate leading
  /// term is a pivot.
  bool contains(SliceVector v) const {
    while (!v.is_zero()) {
      const SliceVector* row = pivot_row(v.leading_term());
      if (!row) return false;
      v.axpy(-v.leading_coeff(), *row);
    }
    return true;
  }

  /// Inserts v if independent, keeping the reduced echelon invariant.
  /// Returns true when the dimension grew.
  bool insert(SliceVector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    v.make_monic();
    // eliminate the new pivot from every existing row; v itself carries no
    // other pivot, so this cannot cascade
    for (SliceVector& row : rows_) {
      Rat c = row.coeff(v.leading_term());
      if (c != 0) row.axpy(-c, v);
    }
    auto at = std::upper_bound(rows_.begin(), rows_.end(), v,
                               [](const SliceVector& a, const SliceVector& b) {
                                 return term_less(b.leading_term(), a.leading_term());
                               });
    ambient_level_ = std::max(ambient_level_, v.order());
    rows_.insert(at, std::move(v));
    return true;
  }

  /// Builds a basis from rows already in reduced echelon form (pivot order
  /// strictly decreasing, pivots eliminated everywhere else); used where a
  /// subset of an echelon basis is known to stay one.
  static SliceBasis from_reduced_rows(std::vector<SliceVector> rows, int ambient_level) {
    SliceBasis b(ambient_level);
    for (std::size_t k = 1; k < rows.size(); ++k)
      if (!term_less(rows[k].leading_term(), rows[k - 1].leading_term()))
        throw InternalError("rows are not pivot-sorted");
    b.rows_ = std::move(rows);
    for (const SliceVector& row : b.rows_)
      b.ambient_level_ = std::max(b.ambient_level_, row.order());
    return b;
  }

  bool operator==(const SliceBasis& o) const { return rows_ == o.rows_; }
  bool operator!=(const SliceBasis& o) const { return rows_ != o.rows_; }

private:
  /// Row whose pivot is exactly t, or null. Rows are pivot-sorted descending.
  const SliceVector* pivot_row(const DiffTerm& t) const {
    auto it = std::lower_bound(rows_.begin(), rows_.end(), t,
                               [](const SliceVector& row, const DiffTerm& term) {
                                 return term_less(term, row.leading_term());
                               });
    if (it == rows_.end() || it->leading_term() != t) return nullptr;
    return &*it;
  }

  std::vector<SliceVector> rows_;
  int ambient_level_ = 0;
};

/// Gaussian elimination over the rationals; span is preserved exactly.
inline SliceBasis echelonize(const std::vector<SliceVector>& vs) {
  int width = -1;
  SliceBasis b;
  for (const SliceVector& v : vs) {
    if (v.is_zero()) continue;
    int w = v.shift_width();
    if (width == -1) width = w;
    if (w != width) throw InputError("mixed shift widths across vectors");
    b.insert(v);
  }
  return b;
}

inline int subspace_dim(const SliceBasis& b) { return b.dim(); }

inline bool subspace_contains(const SliceBasis& b, const SliceVector& v) {
  return b.contains(v);
}

inline SliceBasis subspace_sum(const SliceBasis& a, const SliceBasis& b) {
  SliceBasis r = a;
  for (const SliceVector& v : b.rows()) r.insert(v);
  r.set_ambient_level(std::max(a.ambient_level(), b.ambient_level()));
  return r;
}

inline bool subspace_leq(const SliceBasis& inner, const SliceBasis& outer) {
  for (const SliceVector& v : inner.rows())
    if (!outer.contains(v)) return false;
  return true;
}

/// Basis of { v in span(b) : order(v) <= i }. High-order coordinates are
/// pivoted first by the canonical order, so the restriction is exactly the
/// rows whose pivot order fits, and those stay in reduced echelon form.
inline SliceBasis restrict_to_order(const SliceBasis& b, int i) {
  if (i > b.ambient_level()) throw InputError("restriction level above the ambient level");
  std::vector<SliceVector> kept;
  for (const SliceVector& row : b.rows())
    if (row.order() <= i) kept.push_back(row);
  return SliceBasis::from_reduced_rows(std::move(kept), std::max(i, 0));
}

/// Rank by Bareiss fraction-free elimination on integer data; no rational
/// division in intermediate steps. Independent of the echelon path above.
inline int fraction_free_rank(const std::vector<SliceVector>& vs) {
  // collect the support, columns in canonical order (leading first)
  std::vector<DiffTerm> columns;
  {
    std::map<DiffTerm, int, TermGreater> seen;
    for (const SliceVector& v : vs) {
      if (!v.integer_valued()) throw InputError("fraction-free rank needs integer input");
      for (const auto& [t, c] : v.terms()) seen.emplace(t, 0);
    }
    for (const auto& [t, idx] : seen) columns.push_back(t);
  }
  std::size_t rows = vs.size(), cols = columns.size();
  if (rows == 0 || cols == 0) return 0;
  std::vector<std::vector<Int>> m(rows, std::vector<Int>(cols, Int(0)));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = to_integer(vs[r].coeff(columns[c]));

  int rank = 0;
  Int prev_pivot = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c)
        m[r][c] = (m[row][col] * m[r][c] - m[r][col] * m[row][c]) / prev_pivot;
      m[r][col] = 0;
    }
    prev_pivot = m[row][col];
    ++row;
    ++rank;
  }
  return rank;
}

}  // namespace diffdim
