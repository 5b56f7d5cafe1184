#pragma once

// Exact rational linear algebra on column-sparse matrices.
//
// Everything downstream (cochain differentials, intertwiner systems, syzygy
// computations) reduces to three primitives implemented here:
//   * rank over Q, computed fraction-free over the integers after clearing
//     denominators, so no entry is ever rounded;
//   * a deterministic column-echelon form with leftmost-pivot tie-breaking,
//     used to extract kernel bases and to solve in-span systems;
//   * sparse matrix products for composing module maps and checking d^2 = 0.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stratakit {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using index_t = std::int64_t;

// One sparse column: (row, value) pairs sorted by row, values nonzero.
using SparseQColumn = std::vector<std::pair<index_t, Rational>>;
using SparseZColumn = std::vector<std::pair<index_t, Int>>;

namespace detail {

inline void normalize_column(SparseQColumn& col) {
  std::sort(col.begin(), col.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseQColumn out;
  out.reserve(col.size());
  for (auto& [r, v] : col) {
    if (!out.empty() && out.back().first == r) {
      out.back().second += v;
      // is_zero() avoids the ordering-based compare of the rational backend
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!v.is_zero()) {
      out.emplace_back(r, std::move(v));
    }
  }
  col = std::move(out);
}

// col -= coeff * other, both sorted by row.
inline void axpy(SparseQColumn& col, const Rational& coeff,
                 const SparseQColumn& other) {
  if (coeff.is_zero() || other.empty()) return;
  // rows above other's first entry are untouched: merge the tail only
  const std::size_t keep = static_cast<std::size_t>(
      std::lower_bound(
          col.begin(), col.end(), other.front().first,
          [](const auto& e, index_t r) { return e.first < r; }) -
      col.begin());
  SparseQColumn merged;
  merged.reserve(col.size() - keep + other.size());
  std::size_t i = keep, j = 0;
  while (i < col.size() || j < other.size()) {
    if (j == other.size() ||
        (i < col.size() && col[i].first < other[j].first)) {
      merged.push_back(std::move(col[i++]));
    } else if (i == col.size() || other[j].first < col[i].first) {
      merged.emplace_back(other[j].first, -coeff * other[j].second);
      ++j;
    } else {
      Rational v = col[i].second - coeff * other[j].second;
      if (!v.is_zero()) merged.emplace_back(col[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  col.resize(keep);
  col.insert(col.end(), std::make_move_iterator(merged.begin()),
             std::make_move_iterator(merged.end()));
}

inline Int column_gcd(const SparseZColumn& col) {
  Int g = 0;
  for (const auto& [r, v] : col) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) break;
  }
  return g;
}

}  // namespace detail

// Rank of an integer matrix given as sparse columns, by fraction-free
// elimination: the update  c := (p*c - c_r*P) / g  keeps every entry an exact
// integer, and per-column gcd normalization keeps growth tame.  Pivots are
// chosen sparsest-column-first (classic Markowitz-style heuristic); rank does
// not depend on the choice.
inline index_t integer_column_rank(index_t rows,
                                   std::vector<SparseZColumn> columns) {
  (void)rows;
  std::vector<bool> alive(columns.size(), true);
  // row -> set of live columns touching it
  std::unordered_map<index_t, std::unordered_set<std::size_t>> row_cols;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (const auto& [r, v] : columns[c]) row_cols[r].insert(c);
  }
  index_t rank = 0;
  for (;;) {
    // pick the sparsest live nonzero column
    std::size_t pivot_col = columns.size();
    std::size_t best_nnz = SIZE_MAX;
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (!alive[c] || columns[c].empty()) continue;
      if (columns[c].size() < best_nnz) {
        best_nnz = columns[c].size();
        pivot_col = c;
      }
    }
    if (pivot_col == columns.size()) break;

    // pivot entry: smallest magnitude, then smallest row
    const SparseZColumn& P = columns[pivot_col];
    index_t pivot_row = P.front().first;
    Int pivot_val = P.front().second;
    for (const auto& [r, v] : P) {
      Int a = boost::multiprecision::abs(v);
      Int b = boost::multiprecision::abs(pivot_val);
      if (a < b) {
        pivot_row = r;
        pivot_val = v;
      }
    }

    auto it = row_cols.find(pivot_row);
    std::vector<std::size_t> touched;
    if (it != row_cols.end()) {
      touched.assign(it->second.begin(), it->second.end());
      std::sort(touched.begin(), touched.end());
    }
    for (std::size_t c : touched) {
      if (c == pivot_col || !alive[c]) continue;
      SparseZColumn& col = columns[c];
      auto pos = std::lower_bound(
          col.begin(), col.end(), pivot_row,
          [](const auto& e, index_t r) { return e.first < r; });
      if (pos == col.end() || pos->first != pivot_row) continue;
      Int c_r = pos->second;
      // col := pivot_val * col - c_r * P
      SparseZColumn merged;
      merged.reserve(col.size() + P.size());
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < P.size()) {
        if (j == P.size() || (i < col.size() && col[i].first < P[j].first)) {
          merged.emplace_back(col[i].first, pivot_val * col[i].second);
          ++i;
        } else if (i == col.size() || P[j].first < col[i].first) {
          merged.emplace_back(P[j].first, -c_r * P[j].second);
          ++j;
        } else {
          Int v = pivot_val * col[i].second - c_r * P[j].second;
          if (v != 0) merged.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      Int g = detail::column_gcd(merged);
      if (g > 1) {
        for (auto& [r, v] : merged) v /= g;
      }
      // maintain occupancy for rows whose membership changed
      for (const auto& [r, v] : col) {
        if (r == pivot_row) continue;
        auto f = std::lower_bound(
            merged.begin(), merged.end(), r,
            [](const auto& e, index_t rr) { return e.first < rr; });
        if (f == merged.end() || f->first != r) row_cols[r].erase(c);
      }
      for (const auto& [r, v] : merged) {
        if (r != pivot_row) row_cols[r].insert(c);
      }
      row_cols[pivot_row].erase(c);
      col = std::move(merged);
    }
    for (const auto& [r, v] : columns[pivot_col]) row_cols[r].erase(pivot_col);
    alive[pivot_col] = false;
    ++rank;
  }
  return rank;
}

// Deterministic column echelon over Q.  Columns are fed left to right; each is
// reduced against the recorded pivots until its topmost nonzero row is fresh
// (leftmost column wins every pivot-row tie by construction).  Dependent
// columns optionally report the linear combination that annihilated them.
class ColumnEchelon {
 public:
  explicit ColumnEchelon(index_t rows, bool track_combinations = false)
      : rows_(rows), track_(track_combinations) {}

  index_t rows() const { return rows_; }
  index_t rank() const { return static_cast<index_t>(basis_.size()); }
  const std::vector<SparseQColumn>& basis() const { return basis_; }
  const std::vector<index_t>& pivot_rows() const { return pivot_rows_; }
  // combination expressing basis()[k] in the originally fed columns
  const std::vector<SparseQColumn>& combinations() const { return combos_; }

  // Feed the next column.  Returns true if it extended the basis; when it was
  // dependent and tracking is on, *kernel_combo receives the coefficients of a
  // vanishing combination of the fed columns (coefficient 1 on this one).
  bool add(SparseQColumn v, SparseQColumn* kernel_combo = nullptr) {
    SparseQColumn combo;
    if (track_) combo.emplace_back(fed_count_, Rational(1));
    ++fed_count_;
    for (;;) {
      if (v.empty()) {
        if (kernel_combo) *kernel_combo = std::move(combo);
        return false;
      }
      index_t top = v.front().first;
      auto it = pivot_of_row_.find(top);
      if (it == pivot_of_row_.end()) break;
      std::size_t k = it->second;
      Rational coeff = v.front().second / leading_value_(k);
      detail::axpy(v, coeff, basis_[k]);
      if (track_) detail::axpy(combo, coeff, combos_[k]);
    }
    pivot_of_row_[v.front().first] = basis_.size();
    pivot_rows_.push_back(v.front().first);
    basis_.push_back(std::move(v));
    if (track_) combos_.push_back(std::move(combo));
    return true;
  }

  // Fully reduce v over all pivot rows (ascending), leaving a remainder
  // supported on non-pivot rows only.  coeffs, when requested, holds the
  // coordinates of (v - remainder) with respect to basis().
  SparseQColumn reduce(SparseQColumn v,
                       std::vector<Rational>* coeffs = nullptr) const {
    if (coeffs) coeffs->assign(basis_.size(), Rational(0));
    // one forward walk: a basis column's support starts at its pivot row, so
    // eliminating v's rows in ascending order never disturbs the prefix and
    // each pivot row is cleared at most once
    std::size_t pos = 0;
    while (pos < v.size()) {
      auto it = pivot_of_row_.find(v[pos].first);
      if (it == pivot_of_row_.end()) {
        ++pos;
        continue;
      }
      std::size_t k = it->second;
      Rational coeff = v[pos].second / leading_value_(k);
      detail::axpy(v, coeff, basis_[k]);
      if (coeffs) (*coeffs)[k] = std::move(coeff);
      // the entry at pos was annihilated; new entries lie strictly below it
    }
    return v;
  }

  // Coordinates of v in the span of the basis; false if v lies outside.
  bool solve(const SparseQColumn& v, std::vector<Rational>& coeffs) const {
    SparseQColumn rem = reduce(v, &coeffs);
    return rem.empty();
  }

  bool row_is_pivot(index_t r) const { return pivot_of_row_.count(r) > 0; }

 private:
  const Rational& leading_value_(std::size_t k) const {
    return basis_[k].front().second;
  }

  index_t rows_;
  bool track_;
  index_t fed_count_ = 0;
  std::vector<SparseQColumn> basis_;
  std::vector<SparseQColumn> combos_;
  std::vector<index_t> pivot_rows_;
  std::unordered_map<index_t, std::size_t> pivot_of_row_;
};

// Dense-interface matrix over Q with column-sparse storage.
class RationalMatrix {
 public:
  RationalMatrix() : rows_(0) {}
  RationalMatrix(index_t rows, index_t cols)
      : rows_(rows), columns_(static_cast<std::size_t>(cols)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative shape");
  }

  static RationalMatrix identity(index_t n) {
    RationalMatrix m(n, n);
    for (index_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  index_t rows() const { return rows_; }
  index_t cols() const { return static_cast<index_t>(columns_.size()); }

  Rational at(index_t r, index_t c) const {
    check_(r, c);
    const SparseQColumn& col = column(c);
    auto pos = std::lower_bound(
        col.begin(), col.end(), r,
        [](const auto& e, index_t rr) { return e.first < rr; });
    if (pos != col.end() && pos->first == r) return pos->second;
    return Rational(0);
  }

  void set(index_t r, index_t c, Rational v) {
    check_(r, c);
    SparseQColumn& col = columns_[static_cast<std::size_t>(c)];
    auto pos = std::lower_bound(
        col.begin(), col.end(), r,
        [](const auto& e, index_t rr) { return e.first < rr; });
    if (pos != col.end() && pos->first == r) {
      if (v.is_zero()) {
        col.erase(pos);
      } else {
        pos->second = std::move(v);
      }
    } else if (!v.is_zero()) {
      col.emplace(pos, r, std::move(v));
    }
  }

  void add_to(index_t r, index_t c, const Rational& v) {
    if (v.is_zero()) return;
    set(r, c, at(r, c) + v);
  }

  const SparseQColumn& column(index_t c) const {
    check_col_(c);
    return columns_[static_cast<std::size_t>(c)];
  }

  void set_column(index_t c, SparseQColumn col) {
    check_col_(c);
    detail::normalize_column(col);
    if (!col.empty() && col.back().first >= rows_)
      throw std::out_of_range("row index past shape");
    columns_[static_cast<std::size_t>(c)] = std::move(col);
  }

  bool is_zero() const {
    for (const auto& col : columns_)
      if (!col.empty()) return false;
    return true;
  }

  index_t nonzero_count() const {
    index_t n = 0;
    for (const auto& col : columns_) n += static_cast<index_t>(col.size());
    return n;
  }

  bool operator==(const RationalMatrix& o) const {
    return rows_ == o.rows_ && columns_ == o.columns_;
  }
  bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

  RationalMatrix operator*(const RationalMatrix& o) const {
    if (cols() != o.rows()) throw std::invalid_argument("shape mismatch in *");
    RationalMatrix result(rows_, o.cols());
    for (index_t j = 0; j < o.cols(); ++j) {
      SparseQColumn acc;
      for (const auto& [k, w] : o.column(j)) {
        for (const auto& [r, v] : column(k)) {
          acc.emplace_back(r, v * w);
        }
      }
      detail::normalize_column(acc);
      result.columns_[static_cast<std::size_t>(j)] = std::move(acc);
    }
    return result;
  }

  RationalMatrix operator+(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols() != o.cols())
      throw std::invalid_argument("shape mismatch in +");
    RationalMatrix result(rows_, cols());
    for (index_t j = 0; j < cols(); ++j) {
      SparseQColumn col = column(j);
      detail::axpy(col, Rational(-1), o.column(j));
      result.columns_[static_cast<std::size_t>(j)] = std::move(col);
    }
    return result;
  }

  RationalMatrix operator-(const RationalMatrix& o) const {
    if (rows_ != o.rows_ || cols() != o.cols())
      throw std::invalid_argument("shape mismatch in -");
    RationalMatrix result(rows_, cols());
    for (index_t j = 0; j < cols(); ++j) {
      SparseQColumn col = column(j);
      detail::axpy(col, Rational(1), o.column(j));
      result.columns_[static_cast<std::size_t>(j)] = std::move(col);
    }
    return result;
  }

  RationalMatrix transpose() const {
    RationalMatrix result(cols(), rows_);
    std::vector<SparseQColumn> out(static_cast<std::size_t>(rows_));
    for (index_t j = 0; j < cols(); ++j)
      for (const auto& [r, v] : column(j))
        out[static_cast<std::size_t>(r)].emplace_back(j, v);
    for (index_t j = 0; j < rows_; ++j)
      result.columns_[static_cast<std::size_t>(j)] =
          std::move(out[static_cast<std::size_t>(j)]);
    return result;
  }

  // apply to a sparse vector: result = this * v
  SparseQColumn apply(const SparseQColumn& v) const {
    SparseQColumn acc;
    for (const auto& [k, w] : v) {
      for (const auto& [r, val] : column(k)) acc.emplace_back(r, val * w);
    }
    detail::normalize_column(acc);
    return acc;
  }

  index_t rank() const {
    std::vector<SparseZColumn> int_cols;
    int_cols.reserve(columns_.size());
    for (const auto& col : columns_) {
      if (col.empty()) continue;
      Int lcm = 1;
      for (const auto& [r, v] : col) {
        Int den = boost::multiprecision::denominator(v);
        lcm = lcm / boost::multiprecision::gcd(lcm, den) * den;
      }
      SparseZColumn zc;
      zc.reserve(col.size());
      for (const auto& [r, v] : col) {
        zc.emplace_back(r, boost::multiprecision::numerator(v) *
                               (lcm / boost::multiprecision::denominator(v)));
      }
      int_cols.push_back(std::move(zc));
    }
    return integer_column_rank(rows_, std::move(int_cols));
  }

  // kernel basis as matrix columns (deterministic: one vector per dependent
  // column, unit coefficient on it, support on earlier columns)
  RationalMatrix nullspace() const {
    ColumnEchelon ech(rows_, /*track_combinations=*/true);
    std::vector<SparseQColumn> kernel;
    for (index_t j = 0; j < cols(); ++j) {
      SparseQColumn combo;
      if (!ech.add(column(j), &combo)) kernel.push_back(std::move(combo));
    }
    RationalMatrix result(cols(), static_cast<index_t>(kernel.size()));
    for (std::size_t k = 0; k < kernel.size(); ++k)
      result.columns_[k] = std::move(kernel[k]);
    return result;
  }

  ColumnEchelon echelon() const {
    ColumnEchelon ech(rows_);
    for (index_t j = 0; j < cols(); ++j) ech.add(column(j));
    return ech;
  }

 private:
  void check_(index_t r, index_t c) const {
    if (r < 0 || r >= rows_) throw std::out_of_range("matrix index");
    check_col_(c);
  }

  void check_col_(index_t c) const {
    if (c < 0 || c >= cols()) throw std::out_of_range("matrix index");
  }

  index_t rows_;
  std::vector<SparseQColumn> columns_;
};

}  // namespace stratakit
