#pragma once

// Small dense matrices over Integer or Rational with the exact linear algebra
// the quadratic-form code needs: Bareiss determinants, rank, kernels, and
// Sylvester-style definiteness tests.

#include <siegel/integer.hpp>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace siegel {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
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
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    }
    return out;
  }

  /// Rows and columns picked by index lists.
  Matrix select(const std::vector<std::size_t>& row_idx,
                const std::vector<std::size_t>& col_idx) const {
    Matrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      for (std::size_t j = 0; j < col_idx.size(); ++j) out(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
    return out;
  }

  /// Leading k x k block.
  Matrix leading(std::size_t k) const {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    return select(idx, idx);
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: size mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Row-major lexicographic order; only meaningful for equal shapes.
  friend bool lex_less(const Matrix& a, const Matrix& b) {
    return std::lexicographical_compare(a.data_.begin(), a.data_.end(), b.data_.begin(),
                                        b.data_.end());
  }

  /// Row-major order read from the last entry backwards; the canonical
  /// tie-break for lattice minima, whose search fixes trailing rows first.
  friend bool colex_less(const Matrix& a, const Matrix& b) {
    return std::lexicographical_compare(a.data_.rbegin(), a.data_.rend(), b.data_.rbegin(), b.data_.rend());
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

inline RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
  }
  return out;
}

/// Throws unless every entry is an integer.
inline IntMatrix to_integer(const RatMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).get_den() != 1) throw std::invalid_argument("matrix is not integral");
      out(i, j) = m(i, j).get_num();
    }
  }
  return out;
}

/// Fraction-free (Bareiss) determinant with row pivoting.
inline Integer determinant(IntMatrix m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j));
        mpz_divexact(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

inline Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  Integer den = 1;
  for (const auto& x : m.data()) den = lcm(den, x.get_den());
  IntMatrix scaled(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational v = m(i, j) * den;
      scaled(i, j) = v.get_num();
    }
  }
  Rational out(determinant(scaled), ipow(den, m.rows()));
  out.canonicalize();
  return out;
}

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> row_reduce(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(p, j));
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = 0; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline std::size_t rank(RatMatrix m) { return row_reduce(m).size(); }
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

/// Basis of {x : m x = 0}, one vector per free column, in column order.
inline std::vector<RatVector> kernel_basis(RatMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<RatVector> basis;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector v(m.cols(), Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Scales a nonzero rational vector to a primitive integer vector whose first
/// nonzero entry is positive.
inline IntVector primitive_integer_vector(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVector out;
  out.reserve(v.size());
  for (const auto& x : v) {
    const Rational scaled = x * den;
    out.push_back(scaled.get_num());
  }
  Integer g = 0;
  for (const auto& x : out) g = gcd(g, x);
  if (g == 0) throw std::invalid_argument("zero vector has no primitive multiple");
  for (auto& x : out) x /= g;
  const auto first = std::find_if(out.begin(), out.end(), [](const Integer& x) { return x != 0; });
  if (sgn(*first) < 0) {
    for (auto& x : out) x = -x;
  }
  return out;
}

inline RatMatrix inverse(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

/// Sylvester: all leading principal minors positive.
template <class T>
bool is_positive_definite(const Matrix<T>& m) {
  if (!m.is_symmetric()) return false;
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    if (sgn(determinant(m.leading(k))) <= 0) return false;
  }
  return true;
}

/// All principal minors (every index subset) non-negative.
template <class T>
bool is_positive_semidefinite(const Matrix<T>& m) {
  if (!m.is_symmetric()) return false;
  const std::size_t n = m.rows();
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ul << i)) idx.push_back(i);
    }
    if (sgn(determinant(m.select(idx, idx))) < 0) return false;
  }
  return true;
}

/// sum_{i,j} a_ij b_ij, i.e. tr(AB) for symmetric A, B.
template <class A, class B>
Rational trace_product(const Matrix<A>& a, const Matrix<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("trace product: size mismatch");
  }
  Rational out = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out += Rational(a(i, j)) * Rational(b(i, j));
  }
  return out;
}

/// Text format "3,-14/17;-14/17,4/17": rows split by ';', entries by ','.
inline RatMatrix parse_matrix(std::string_view text) {
  std::vector<RatVector> rows;
  std::size_t pos = 0;
  while (true) {
    const auto semi = text.find(';', pos);
    const auto row_text = text.substr(pos, semi == std::string_view::npos ? semi : semi - pos);
    RatVector row;
    std::size_t p = 0;
    while (true) {
      const auto comma = row_text.find(',', p);
      row.push_back(parse_rational(row_text.substr(p, comma == std::string_view::npos ? comma : comma - p)));
      if (comma == std::string_view::npos) break;
      p = comma + 1;
    }
    rows.push_back(std::move(row));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  RatMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw std::invalid_argument("ragged matrix text");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

template <class T>
std::string format_matrix(const Matrix<T>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ';';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ',';
      out += m(i, j).get_str();
    }
  }
  return out;
}

}  // namespace siegel
