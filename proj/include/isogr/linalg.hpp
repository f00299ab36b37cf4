#pragma once

// Exact integer linear algebra: fraction-free rank, Smith normal form,
// saturated integer kernels, rank over Z/(2), and a sparse row echelon form
// over Z (lattice insertion) or a field, used for graded ideal components.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "isogr/coefficients.hpp"
#include "isogr/errors.hpp"

namespace isogr {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0)) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw StructuralError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw StructuralError("matrix product: inner dimensions differ");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        if (is_zero(a(i, l))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, l) * b(l, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix sum: shapes differ");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix difference: shapes differ");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return isogr::is_zero(x); });
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<mpz_class>;
using RatMatrix = Matrix<mpq_class>;

/// Rank over Q by Bareiss fraction-free elimination; every intermediate entry
/// is a minor of M, so the divisions are exact.
inline std::size_t rank_over_rationals(IntMatrix a) {
  const std::size_t m = a.rows(), n = a.cols();
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t col = 0; col < n && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && sgn(a(piv, col)) == 0) ++piv;
    if (piv == m) continue;
    a.swap_rows(rank, piv);
    for (std::size_t i = rank + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        mpz_class t = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

/// Rank after reducing every entry mod 2.
inline std::size_t rank_mod2(const IntMatrix& m) {
  std::vector<std::vector<std::uint8_t>> a(m.rows(), std::vector<std::uint8_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = mpz_odd_p(m(i, j).get_mpz_t()) ? 1 : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && !a[piv][col]) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[rank], a[piv]);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i != rank && a[i][col]) {
        for (std::size_t j = col; j < m.cols(); ++j) a[i][j] ^= a[rank][j];
      }
    }
    ++rank;
  }
  return rank;
}

struct SmithForm {
  std::vector<mpz_class> diagonal;  // length min(rows, cols), d_i | d_{i+1}
  std::size_t rank = 0;
  std::optional<IntMatrix> left;   // U, rows x rows
  std::optional<IntMatrix> right;  // V, cols x cols; U * M * V = D

  std::vector<mpz_class> torsion_factors() const {
    std::vector<mpz_class> out;
    for (const auto& d : diagonal)
      if (d > 1) out.push_back(d);
    return out;
  }
};

namespace detail {

inline void row_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (sgn(a(src, j)) != 0) a(dst, j) -= q * a(src, j);
  }
}
inline void col_axpy(IntMatrix& a, std::size_t dst, std::size_t src, const mpz_class& q) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (sgn(a(i, src)) != 0) a(i, dst) -= q * a(i, src);
  }
}

}  // namespace detail

/// Smith normal form by gcd-driven elimination. The pivot is the entry of
/// least absolute value in the remaining block, ties going to the smallest
/// row and then the smallest column.
inline SmithForm smith_normal_form(const IntMatrix& m, bool with_transforms = false) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  IntMatrix u, v;
  if (with_transforms) {
    u = IntMatrix::identity(rows);
    v = IntMatrix::identity(cols);
  }
  const std::size_t steps = std::min(rows, cols);
  SmithForm out;
  out.diagonal.assign(steps, mpz_class(0));

  auto pick_pivot = [&](std::size_t t) -> std::optional<std::pair<std::size_t, std::size_t>> {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    mpz_class best_abs;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (sgn(a(i, j)) == 0) continue;
        mpz_class x = abs(a(i, j));
        if (!best || x < best_abs) {
          best = {i, j};
          best_abs = x;
        }
      }
    return best;
  };

  for (std::size_t t = 0; t < steps; ++t) {
    auto piv = pick_pivot(t);
    if (!piv) break;
    a.swap_rows(t, piv->first);
    a.swap_cols(t, piv->second);
    if (with_transforms) {
      u.swap_rows(t, piv->first);
      v.swap_cols(t, piv->second);
    }
    while (true) {
      // A nonzero remainder is smaller than the pivot and takes its place.
      bool restarted = false;
      for (std::size_t i = t + 1; i < rows && !restarted; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        detail::row_axpy(a, i, t, q);
        if (with_transforms) detail::row_axpy(u, i, t, q);
        if (sgn(a(i, t)) != 0) {
          a.swap_rows(t, i);
          if (with_transforms) u.swap_rows(t, i);
          restarted = true;
        }
      }
      for (std::size_t j = t + 1; j < cols && !restarted; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        detail::col_axpy(a, j, t, q);
        if (with_transforms) detail::col_axpy(v, j, t, q);
        if (sgn(a(t, j)) != 0) {
          a.swap_cols(t, j);
          if (with_transforms) v.swap_cols(t, j);
          restarted = true;
        }
      }
      if (restarted) continue;
      // the pivot must divide the whole remaining block
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < rows && !bad_row; ++i)
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            bad_row = i;
            break;
          }
        }
      if (!bad_row) break;
      detail::row_axpy(a, t, *bad_row, mpz_class(-1));
      if (with_transforms) detail::row_axpy(u, t, *bad_row, mpz_class(-1));
    }
    if (sgn(a(t, t)) < 0) {
      for (std::size_t j = 0; j < cols; ++j) a(t, j) = -a(t, j);
      if (with_transforms)
        for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
    out.diagonal[t] = a(t, t);
    if (sgn(a(t, t)) != 0) ++out.rank;
  }
  if (with_transforms) {
    out.left = std::move(u);
    out.right = std::move(v);
  }
  return out;
}

/// Row-style Hermite normal form: echelon on the first nonzero column, positive
/// pivots, entries above each pivot reduced into [0, pivot). Zero rows dropped.
inline std::vector<std::vector<mpz_class>> hermite_rows(std::vector<std::vector<mpz_class>> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < rows.size(); ++col) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) != 0 && (!best || abs(rows[i][col]) < abs(rows[*best][col]))) best = i;
      }
      if (!best) break;
      std::swap(rows[r], rows[*best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (sgn(rows[i][col]) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        for (std::size_t j = col; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (sgn(rows[i][col]) != 0) done = false;
      }
      if (done) break;
    }
    if (r < rows.size() && sgn(rows[r][col]) != 0) {
      if (sgn(rows[r][col]) < 0)
        for (auto& x : rows[r]) x = -x;
      for (std::size_t i = 0; i < r; ++i) {
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        if (sgn(q) != 0)
          for (std::size_t j = col; j < n; ++j) rows[i][j] -= q * rows[r][j];
      }
      ++r;
    }
  }
  rows.resize(r);
  return rows;
}

/// Z-basis of {v : M v = 0}, the saturated kernel lattice, in Hermite form.
/// Empty iff M has full column rank.
inline std::vector<std::vector<mpz_class>> integer_kernel(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  // Work on [M^T | I]: unimodular row operations clear the left block.
  std::vector<std::vector<mpz_class>> b(cols, std::vector<mpz_class>(rows + cols));
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t i = 0; i < rows; ++i) b[j][i] = m(i, j);
    b[j][rows + j] = 1;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < rows && r < cols; ++c) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t i = r; i < cols; ++i) {
        if (sgn(b[i][c]) != 0 && (!best || abs(b[i][c]) < abs(b[*best][c]))) best = i;
      }
      if (!best) break;
      std::swap(b[r], b[*best]);
      bool done = true;
      for (std::size_t i = r + 1; i < cols; ++i) {
        if (sgn(b[i][c]) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), b[i][c].get_mpz_t(), b[r][c].get_mpz_t());
        for (std::size_t j = c; j < rows + cols; ++j) b[i][j] -= q * b[r][j];
        if (sgn(b[i][c]) != 0) done = false;
      }
      if (done) {
        ++r;
        break;
      }
    }
  }
  std::vector<std::vector<mpz_class>> kernel;
  for (std::size_t i = r; i < cols; ++i) kernel.emplace_back(b[i].begin() + static_cast<std::ptrdiff_t>(rows), b[i].end());
  return hermite_rows(std::move(kernel));
}

/// Row echelon form built by inserting sparse rows one at a time. Each stored
/// row's last nonzero column is its pivot and pivots are distinct. Over Z
/// (R = mpz_class) rows are combined by extended gcd, so the stored rows are a
/// basis of the lattice spanned by everything inserted; over a field pivots
/// are normalised to 1.
template <class R>
class SparseEchelon {
 public:
  using Entry = std::pair<std::uint32_t, R>;
  using Row = std::vector<Entry>;  // sorted by column, no zero entries

  explicit SparseEchelon(std::size_t cols = 0) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::map<std::uint32_t, Row>& rows() const { return rows_; }

  /// True when the stored rows already span Z^cols (or the whole space).
  bool full() const { return rows_.size() == cols_ && unit_pivots_; }

  /// Returns true if the row changed the span.
  bool insert(Row v) {
    bool changed = false;
    while (!v.empty()) {
      const std::uint32_t p = v.back().first;
      auto it = rows_.find(p);
      if (it == rows_.end()) {
        if constexpr (coeff_traits<R>::is_field) {
          R inv = R(1) / v.back().second;
          for (auto& e : v) e.second *= inv;
        } else if (sgn(v.back().second) < 0) {
          for (auto& e : v) e.second = -e.second;
        }
        if constexpr (!coeff_traits<R>::is_field) {
          if (v.back().second != 1) unit_pivots_ = false;
        }
        rows_.emplace(p, std::move(v));
        return true;
      }
      Row& piv = it->second;
      if constexpr (coeff_traits<R>::is_field) {
        v = combine(R(1), v, v.back().second, piv);
      } else {
        const mpz_class& a = v.back().second;
        const mpz_class& b = piv.back().second;
        if (mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
          mpz_class q;
          mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
          v = combine(mpz_class(1), v, q, piv);
        } else {
          // [s t; -a/g b/g] is unimodular: piv <- s*piv + t*v, v <- (b/g)*v - (a/g)*piv
          mpz_class g, s, t;
          mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), b.get_mpz_t(), a.get_mpz_t());
          mpz_class bg = b / g, ag = a / g;
          Row new_piv = combine2(s, piv, t, v);
          Row new_v = combine(bg, v, ag, piv);
          if (new_piv.back().second < 0)
            for (auto& e : new_piv) e.second = -e.second;
          piv = std::move(new_piv);
          v = std::move(new_v);
          changed = true;
          recompute_unit_pivots();
        }
      }
    }
    return changed;
  }

  /// Reduces v against the stored rows (from the highest pivot down) over the
  /// fraction field; the result vanishes on every pivot column.
  template <class F>
  void reduce(std::vector<F>& v) const {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      const std::uint32_t p = it->first;
      if (is_zero(v[p])) continue;
      const Row& row = it->second;
      F factor = v[p] / coeff_cast<F>(row.back().second);
      for (const auto& [c, x] : row) v[c] -= factor * coeff_cast<F>(x);
    }
  }

 private:
  // alpha*x - beta*y
  static Row combine(const R& alpha, const Row& x, const R& beta, const Row& y) {
    Row out;
    out.reserve(x.size() + y.size());
    std::size_t i = 0, j = 0;
    while (i < x.size() || j < y.size()) {
      if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
        R val = alpha * x[i].second;
        if (!is_zero(val)) out.emplace_back(x[i].first, std::move(val));
        ++i;
      } else if (i == x.size() || y[j].first < x[i].first) {
        R val = -(beta * y[j].second);
        if (!is_zero(val)) out.emplace_back(y[j].first, std::move(val));
        ++j;
      } else {
        R val = alpha * x[i].second - beta * y[j].second;
        if (!is_zero(val)) out.emplace_back(x[i].first, std::move(val));
        ++i;
        ++j;
      }
    }
    return out;
  }
  // alpha*x + beta*y
  static Row combine2(const R& alpha, const Row& x, const R& beta, const Row& y) { return combine(alpha, x, R(-beta), y); }

  void recompute_unit_pivots() {
    unit_pivots_ = true;
    if constexpr (!coeff_traits<R>::is_field) {
      for (const auto& [p, row] : rows_)
        if (row.back().second != 1) unit_pivots_ = false;
    }
  }

  std::size_t cols_;
  std::map<std::uint32_t, Row> rows_;
  bool unit_pivots_ = true;
};

}  // namespace isogr
