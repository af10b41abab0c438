#ifndef WRL_EXACTMATH_MATRIX_HPP
#define WRL_EXACTMATH_MATRIX_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "wrl/exactmath/rational.hpp"

namespace wrl::exactmath {

// Scales a row by a positive rational so its entries become coprime
// integers (Gaussian integers with coprime rational content).  Rank,
// kernel and span computations are invariant under this.
void make_primitive(std::vector<Rational>& row);
void make_primitive(std::vector<GaussianRational>& row);

/*
 * Dense matrix over an exact field.  All elimination is fraction-free
 * (Bareiss): rows are cleared to integer form first, and the one-step
 * cross-multiplication with exact division by the previous pivot keeps
 * every intermediate entry in the subring.
 */
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, K(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = K(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<K>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  K& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const K& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_);
  }

  std::vector<K> apply(const std::vector<K>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("Matrix::apply: size mismatch");
    std::vector<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero(at(i, j)) && !is_zero(v[j])) out[i] += at(i, j) * v[j];
    return out;
  }

  std::size_t rank() const;
  // Exact basis of the right kernel (M v = 0); rank-nullity and
  // M v = 0 are re-verified before returning.
  std::vector<std::vector<K>> right_kernel() const;

 private:
  std::size_t rows_, cols_;
  std::vector<K> e_;
};

template <class K>
struct EchelonForm {
  std::vector<std::vector<K>> rows;  // upper echelon, integer-cleared
  std::vector<std::size_t> pivot_cols;
};

template <class K>
EchelonForm<K> fraction_free_echelon(const Matrix<K>& m) {
  std::vector<std::vector<K>> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    bool nz = false;
    for (const auto& x : r)
      if (!is_zero(x)) { nz = true; break; }
    if (nz) {
      make_primitive(r);
      rows.push_back(std::move(r));
    }
  }
  EchelonForm<K> ef;
  const std::size_t ncols = m.cols();
  std::size_t top = 0;
  K prev_pivot(1);
  for (std::size_t col = 0; col < ncols && top < rows.size(); ++col) {
    // smallest-height nonzero pivot keeps the growth down
    std::size_t best = rows.size();
    std::size_t best_h = 0;
    for (std::size_t i = top; i < rows.size(); ++i) {
      if (is_zero(rows[i][col])) continue;
      std::size_t h = rows[i][col].height_bits();
      if (best == rows.size() || h < best_h) {
        best = i;
        best_h = h;
      }
    }
    if (best == rows.size()) continue;
    std::swap(rows[top], rows[best]);
    const K pivot = rows[top][col];
    for (std::size_t i = top + 1; i < rows.size(); ++i) {
      if (is_zero(rows[i][col])) {
        // still need the Bareiss rescale to keep the division exact later
        for (std::size_t j = col; j < ncols; ++j)
          rows[i][j] = rows[i][j] * pivot / prev_pivot;
        continue;
      }
      const K factor = rows[i][col];
      for (std::size_t j = col; j < ncols; ++j)
        rows[i][j] = (rows[i][j] * pivot - rows[top][j] * factor) / prev_pivot;
    }
    ef.pivot_cols.push_back(col);
    prev_pivot = pivot;
    ++top;
  }
  rows.resize(top);
  ef.rows = std::move(rows);
  return ef;
}

template <class K>
std::size_t Matrix<K>::rank() const {
  return fraction_free_echelon(*this).pivot_cols.size();
}

template <class K>
std::vector<std::vector<K>> Matrix<K>::right_kernel() const {
  EchelonForm<K> ef = fraction_free_echelon(*this);
  const std::size_t r = ef.pivot_cols.size();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : ef.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<K>> basis;
  for (std::size_t free_col = 0; free_col < cols_; ++free_col) {
    if (is_pivot[free_col]) continue;
    std::vector<K> v(cols_, K(0));
    v[free_col] = K(1);
    for (std::size_t bi = r; bi-- > 0;) {
      const auto& row = ef.rows[bi];
      const std::size_t pc = ef.pivot_cols[bi];
      K acc(0);
      for (std::size_t j = pc + 1; j < cols_; ++j)
        if (!is_zero(row[j]) && !is_zero(v[j])) acc += row[j] * v[j];
      v[pc] = -acc / row[pc];
    }
    make_primitive(v);
    basis.push_back(std::move(v));
  }

  if (r + basis.size() != cols_)
    throw std::logic_error("Matrix::right_kernel: rank-nullity violated");
  for (const auto& v : basis)
    for (const auto& x : apply(v))
      if (!is_zero(x)) throw std::logic_error("Matrix::right_kernel: M v != 0");
  return basis;
}

/*
 * Streaming row-echelon accumulator.  Feeds rows one at a time, keeping a
 * content-normalized fraction-free echelon; supports early-stopped rank
 * computations on matrices too large to materialize.
 */
template <class K>
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  // Remainder of row after elimination against the accumulated basis.
  std::vector<K> reduce(std::vector<K> row) const {
    if (row.size() != cols_) throw std::invalid_argument("EchelonBasis: size mismatch");
    for (const auto& pr : rows_) {
      if (is_zero(row[pr.pivot])) continue;
      const K a = row[pr.pivot];
      const K b = pr.row[pr.pivot];
      for (std::size_t j = 0; j < cols_; ++j) row[j] = row[j] * b - pr.row[j] * a;
      make_primitive(row);
    }
    return row;
  }

  bool in_span(const std::vector<K>& row) const {
    for (const auto& x : reduce(row))
      if (!is_zero(x)) return false;
    return true;
  }

  // Returns true when the row was independent and the rank grew.
  bool add_row(std::vector<K> row) {
    row = reduce(std::move(row));
    std::size_t pc = cols_;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!is_zero(row[j])) { pc = j; break; }
    if (pc == cols_) return false;
    make_primitive(row);
    PivotRow pr{pc, std::move(row)};
    auto it = rows_.begin();
    while (it != rows_.end() && it->pivot < pc) ++it;
    rows_.insert(it, std::move(pr));
    return true;
  }

 private:
  struct PivotRow {
    std::size_t pivot;
    std::vector<K> row;
  };
  std::size_t cols_;
  std::vector<PivotRow> rows_;  // ascending pivot order
};

// Rank of a row-streamed matrix, stopping early once `cap` independent
// rows are found (pass cap = 0 for no cap).  The provider returns false
// when rows are exhausted.
template <class K>
std::size_t streamed_rank(std::size_t cols,
                          const std::function<bool(std::vector<K>&)>& next_row,
                          std::size_t cap = 0) {
  EchelonBasis<K> eb(cols);
  std::vector<K> row;
  while (next_row(row)) {
    eb.add_row(std::move(row));
    row.clear();
    if (cap != 0 && eb.rank() >= cap) break;
  }
  return eb.rank();
}

template <class K>
struct SpanSolve {
  std::size_t rank = 0;                    // rank of the spanning set
  std::optional<std::vector<K>> coeffs;    // target = sum coeffs[i] * vecs[i]
};

// Exact least-structure solve of `target` against the row vectors `vecs`.
// Picks independent coordinates first, solves the small square system and
// verifies the combination on every coordinate.
template <class K>
SpanSolve<K> span_solve(const std::vector<std::vector<K>>& vecs, const std::vector<K>& target) {
  SpanSolve<K> out;
  const std::size_t b = vecs.size();
  if (b == 0) return out;
  const std::size_t n = vecs[0].size();
  if (target.size() != n) throw std::invalid_argument("span_solve: size mismatch");

  EchelonBasis<K> eb(b);
  std::vector<std::size_t> coords;
  for (std::size_t t = 0; t < n && coords.size() < b; ++t) {
    std::vector<K> col(b);
    for (std::size_t i = 0; i < b; ++i) col[i] = vecs[i][t];
    if (eb.add_row(std::move(col))) coords.push_back(t);
  }
  out.rank = coords.size();
  if (out.rank < b) return out;  // dependent spanning set: no unique solve

  // Solve sum_i c_i vecs[i][t] = target[t] over the chosen coordinates.
  Matrix<K> a(b, b);
  for (std::size_t r = 0; r < b; ++r)
    for (std::size_t i = 0; i < b; ++i) a.at(r, i) = vecs[i][coords[r]];
  std::vector<K> rhs(b);
  for (std::size_t r = 0; r < b; ++r) rhs[r] = target[coords[r]];

  // plain exact Gaussian elimination on the b x b system
  std::vector<std::vector<K>> aug(b, std::vector<K>(b + 1));
  for (std::size_t i = 0; i < b; ++i) {
    for (std::size_t j = 0; j < b; ++j) aug[i][j] = a.at(i, j);
    aug[i][b] = rhs[i];
  }
  for (std::size_t col = 0; col < b; ++col) {
    std::size_t piv = col;
    while (piv < b && is_zero(aug[piv][col])) ++piv;
    if (piv == b) throw std::logic_error("span_solve: singular after independence check");
    std::swap(aug[col], aug[piv]);
    for (std::size_t i = 0; i < b; ++i) {
      if (i == col || is_zero(aug[i][col])) continue;
      K f = aug[i][col] / aug[col][col];
      for (std::size_t j = col; j <= b; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  std::vector<K> c(b);
  for (std::size_t i = 0; i < b; ++i) c[i] = aug[i][b] / aug[i][i];

  // full verification: the combination must match on every coordinate
  for (std::size_t t = 0; t < n; ++t) {
    K acc(0);
    for (std::size_t i = 0; i < b; ++i)
      if (!is_zero(c[i]) && !is_zero(vecs[i][t])) acc += c[i] * vecs[i][t];
    if (!(acc == target[t])) return out;  // rank set, no coeffs: not in span
  }
  out.coeffs = std::move(c);
  return out;
}

// rank of a finite family of vectors (rows)
template <class K>
std::size_t row_rank(const std::vector<std::vector<K>>& vecs) {
  if (vecs.empty()) return 0;
  EchelonBasis<K> eb(vecs[0].size());
  for (const auto& v : vecs) eb.add_row(v);
  return eb.rank();
}

}  // namespace wrl::exactmath

#endif  // WRL_EXACTMATH_MATRIX_HPP
