#pragma once

// Completion of an integer vector v to an integer matrix T with last column v,
// prescribed entries above the diagonal in columns 2..n-1 ("bullets"), and
// det(T) = gcd(v). Built column by column from the bottom-right block, choosing
// the first column by a Bezout combination of the cofactor minors.

#include <siegel/integer.hpp>
#include <siegel/matrix.hpp>
#include <siegel/tits_lattice.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace siegel {

/// Values for the fixed positions (i, j), 0-based, with 1 <= j <= n-2 and
/// i < j. Other entries of `values` are ignored.
class BulletPattern {
 public:
  explicit BulletPattern(std::size_t n) : values_(n, n) {}
  BulletPattern(IntMatrix values) : values_(std::move(values)) {  // NOLINT
    if (!values_.is_square()) throw std::invalid_argument("bullet pattern must be square");
  }

  /// Column j holds d_{i+1} * ... * d_j in row i, as needed for the
  /// rank reduction inside a Tits lattice.
  static BulletPattern d_pattern(const TitsLattice& lattice) {
    const std::size_t n = lattice.size();
    BulletPattern p(n);
    const auto& d = lattice.steps();
    for (std::size_t j = 1; j + 1 < n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        Integer prod = 1;
        for (std::size_t k = i; k < j; ++k) prod *= d[k];
        p.values_(i, j) = prod;
      }
    }
    return p;
  }

  static bool is_bullet(std::size_t n, std::size_t i, std::size_t j) {
    return j >= 1 && j + 1 < n && i < j;
  }

  std::size_t size() const { return values_.rows(); }
  const Integer& at(std::size_t i, std::size_t j) const { return values_(i, j); }
  Integer& at(std::size_t i, std::size_t j) { return values_(i, j); }

 private:
  IntMatrix values_;
};

struct PatternedMatrix {
  IntMatrix entries;
  IntVector v;
  BulletPattern bullets;
  Integer det;
};

namespace detail {

/// Minor of the block starting at `offset` with row `skip` and the block's
/// first column removed.
inline Integer block_minor(const IntMatrix& t, std::size_t offset, std::size_t skip) {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t r = offset; r < t.rows(); ++r) {
    if (r != skip) rows.push_back(r);
  }
  for (std::size_t c = offset + 1; c < t.cols(); ++c) cols.push_back(c);
  return determinant(t.select(rows, cols));
}

inline void complete_block(IntMatrix& t, const IntVector& v, std::size_t offset) {
  const std::size_t n = t.rows();
  const std::size_t m = n - offset;
  bool tail_zero = true;
  for (std::size_t r = offset + 1; r < n; ++r) tail_zero = tail_zero && v[r] == 0;

  if (m >= 3 && tail_zero) {
    // The Bezout step would need gcd(v_2..v_n) != 0. Fill ones on the block
    // diagonal (columns offset+1 .. n-2) and one corner entry; the remaining
    // free entries are zero, so det = -v_offset * corner.
    for (std::size_t r = offset + 1; r + 1 < n; ++r) t(r, r) = 1;
    t(n - 1, offset) = -sgn(v[offset]);
    return;
  }
  if (m >= 3) complete_block(t, v, offset + 1);

  // det(block) = sum_i (-1)^i t(offset+i, offset) * minor_i.
  std::vector<Integer> signed_minors;
  for (std::size_t i = 0; i < m; ++i) {
    const Integer minor = block_minor(t, offset, offset + i);
    signed_minors.push_back(i % 2 == 0 ? minor : Integer(-minor));
  }
  IntVector tail(v.begin() + static_cast<std::ptrdiff_t>(offset), v.end());
  const Integer target = gcd_of(tail);
  if (gcd_of(signed_minors) != target) {
    throw std::logic_error("special_t: cofactor gcd differs from gcd(v)");
  }
  const auto coeff = bezout_coefficients(signed_minors);
  for (std::size_t i = 0; i < m; ++i) t(offset + i, offset) = coeff[i];
}

}  // namespace detail

/// Throws std::invalid_argument for v = 0 or n < 2.
inline PatternedMatrix special_t(const IntVector& v, const BulletPattern& bullets) {
  const std::size_t n = v.size();
  if (n < 2) throw std::invalid_argument("special_t needs n >= 2");
  if (bullets.size() != n) throw std::invalid_argument("special_t: bullet pattern size mismatch");
  if (gcd_of(v) == 0) throw std::invalid_argument("special_t: v must be nonzero");

  IntMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i) t(i, n - 1) = v[i];
  for (std::size_t j = 1; j + 1 < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) t(i, j) = bullets.at(i, j);
  }
  detail::complete_block(t, v, 0);
  Integer det = determinant(t);
  if (det != gcd_of(v)) throw std::logic_error("special_t: determinant check failed");
  return {std::move(t), v, bullets, std::move(det)};
}

inline PatternedMatrix special_t(const IntVector& v) { return special_t(v, BulletPattern(v.size())); }

/// Whether T^T B T stays in the lattice. B must be a member.
inline bool verify_lattice_closure(const TitsLattice& lattice, const PatternedMatrix& t,
                                   const IntMatrix& b) {
  if (!lattice.contains(b)) throw std::invalid_argument("verify_lattice_closure: B is not in L");
  return lattice.contains(t.entries.transpose() * b * t.entries);
}

}  // namespace siegel
