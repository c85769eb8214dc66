// Dense exact-rational matrices and the elimination routines the symplectic
// layer needs: rref, rank, kernel, solve, inverse, and congruence inertia for
// symmetric forms. Sizes here are small (dim <= ~40), so plain Gaussian
// elimination with first-nonzero pivoting is the right tool.
#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "nquiver/rational.hpp"

namespace nquiver {

class RatMat {
 public:
  RatMat() = default;
  RatMat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, Rational(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("RatMat: negative shape");
  }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rational& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  RatMat transpose() const {
    RatMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const RatMat& a, const RatMat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend RatMat operator+(const RatMat& a, const RatMat& b) {
    require_same_shape(a, b);
    RatMat c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] + b.data_[k];
    return c;
  }

  friend RatMat operator-(const RatMat& a, const RatMat& b) {
    require_same_shape(a, b);
    RatMat c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = a.data_[k] - b.data_[k];
    return c;
  }

  friend RatMat operator*(const Rational& s, const RatMat& a) {
    RatMat c(a.rows_, a.cols_);
    for (std::size_t k = 0; k < a.data_.size(); ++k) c.data_[k] = s * a.data_[k];
    return c;
  }

  friend RatMat operator*(const RatMat& a, const RatMat& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("RatMat multiply: shape mismatch");
    RatMat c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Rational& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Rational& bkj = b(k, j);
          if (bkj != 0) c(i, j) += aik * bkj;
        }
      }
    return c;
  }

  friend std::ostream& operator<<(std::ostream& os, const RatMat& m) {
    for (int i = 0; i < m.rows_; ++i) {
      for (int j = 0; j < m.cols_; ++j) {
        if (j) os << ' ';
        os << m(i, j);
      }
      os << '\n';
    }
    return os;
  }

 private:
  static void require_same_shape(const RatMat& a, const RatMat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("RatMat: shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

// Reduced row echelon form; pivot column indices returned via *pivots.
inline RatMat rref(RatMat m, std::vector<int>* pivots = nullptr) {
  if (pivots) pivots->clear();
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m(i, col) != 0) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    Rational inv = Rational(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational f = m(i, col);
      for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    if (pivots) pivots->push_back(col);
    ++row;
  }
  return m;
}

inline int rank(const RatMat& m) {
  std::vector<int> piv;
  rref(m, &piv);
  return static_cast<int>(piv.size());
}

// Columns form a basis of {x : m x = 0}.
inline RatMat kernel_basis(const RatMat& m) {
  std::vector<int> piv;
  RatMat r = rref(m, &piv);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : piv) is_pivot[c] = 1;
  int nfree = m.cols() - static_cast<int>(piv.size());
  RatMat k(m.cols(), nfree);
  int col = 0;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(free, col) = 1;
    for (std::size_t pr = 0; pr < piv.size(); ++pr) k(piv[pr], col) = -r(static_cast<int>(pr), free);
    ++col;
  }
  return k;
}

// Any solution X of A X = B, or nullopt if inconsistent.
inline std::optional<RatMat> solve_linear(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_linear: row mismatch");
  RatMat aug(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    for (int j = 0; j < b.cols(); ++j) aug(i, a.cols() + j) = b(i, j);
  }
  std::vector<int> piv;
  RatMat r = rref(std::move(aug), &piv);
  for (int c : piv)
    if (c >= a.cols()) return std::nullopt;  // a pivot landed in the rhs block
  RatMat x(a.cols(), b.cols());
  for (std::size_t pr = 0; pr < piv.size(); ++pr)
    for (int j = 0; j < b.cols(); ++j) x(piv[pr], j) = r(static_cast<int>(pr), a.cols() + j);
  return x;
}

inline std::optional<RatMat> inverse(const RatMat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: not square");
  auto x = solve_linear(m, RatMat::identity(m.rows()));
  if (!x) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return x;
}

// Basis of the column space, as columns of the returned matrix.
inline RatMat column_space_basis(const RatMat& m) {
  std::vector<int> piv;
  rref(m, &piv);
  RatMat b(m.rows(), static_cast<int>(piv.size()));
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (int i = 0; i < m.rows(); ++i) b(i, static_cast<int>(k)) = m(i, piv[k]);
  return b;
}

// Do all columns of x lie in the column space of u?
inline bool columns_in_span(const RatMat& u, const RatMat& x) {
  if (u.rows() != x.rows()) throw std::invalid_argument("columns_in_span: row mismatch");
  return solve_linear(u, x).has_value();
}

// Standard basis vectors extending colspace(u) to the full space.
inline RatMat complement_basis(const RatMat& u) {
  std::vector<int> piv;
  rref(u.transpose(), &piv);
  std::vector<char> hit(u.rows(), 0);
  for (int c : piv) hit[c] = 1;
  RatMat comp(u.rows(), u.rows() - static_cast<int>(piv.size()));
  int col = 0;
  for (int i = 0; i < u.rows(); ++i)
    if (!hit[i]) comp(i, col++) = 1;
  return comp;
}

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
};

// Sylvester inertia of a symmetric matrix by congruence elimination.
inline Inertia symmetric_inertia(RatMat s) {
  if (s.rows() != s.cols()) throw std::invalid_argument("symmetric_inertia: not square");
  const int n = s.rows();
  Inertia inertia;
  std::vector<char> done(n, 0);
  for (int step = 0; step < n; ++step) {
    int pivot = -1;
    for (int i = 0; i < n; ++i)
      if (!done[i] && s(i, i) != 0) { pivot = i; break; }
    if (pivot < 0) {
      // all remaining diagonal entries vanish; a nonzero off-diagonal entry
      // yields a hyperbolic pair after adding row/col j into i
      int oi = -1, oj = -1;
      for (int i = 0; i < n && oi < 0; ++i)
        for (int j = i + 1; j < n; ++j)
          if (!done[i] && !done[j] && s(i, j) != 0) { oi = i; oj = j; break; }
      if (oi < 0) break;  // remaining block is zero
      for (int k = 0; k < n; ++k) s(oi, k) += s(oj, k);
      for (int k = 0; k < n; ++k) s(k, oi) += s(k, oj);
      pivot = oi;
    }
    Rational d = s(pivot, pivot);
    if (d > 0) ++inertia.positive;
    else ++inertia.negative;
    for (int i = 0; i < n; ++i) {
      if (i == pivot || done[i] || s(i, pivot) == 0) continue;
      Rational f = s(i, pivot) / d;
      for (int k = 0; k < n; ++k) s(i, k) -= f * s(pivot, k);
      for (int k = 0; k < n; ++k) s(k, i) -= f * s(k, pivot);
    }
    done[pivot] = 1;
  }
  inertia.zero = n - inertia.positive - inertia.negative;
  return inertia;
}

}  // namespace nquiver
