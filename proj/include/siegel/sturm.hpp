#pragma once

// Characteristic polynomials and Sturm sequences over the rationals.

#include <siegel/integer.hpp>
#include <siegel/matrix.hpp>

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace siegel {

/// Coefficients in increasing degree; no trailing zeros except for the zero
/// polynomial, which is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<unsigned long>(i));
    return Polynomial(std::move(d));
  }

  /// Remainder of division by a nonzero polynomial.
  Polynomial remainder(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = c_;
    const int dd = divisor.degree();
    for (int k = static_cast<int>(r.size()) - 1; k >= dd; --k) {
      if (r[k] == 0) continue;
      const Rational q = r[k] / divisor.leading();
      for (int i = 0; i <= dd; ++i) r[k - dd + i] -= q * divisor.c_[i];
    }
    r.resize(static_cast<std::size_t>(std::max(dd, 0)));
    return Polynomial(std::move(r));
  }

  Polynomial operator-() const {
    std::vector<Rational> n = c_;
    for (auto& x : n) x = -x;
    return Polynomial(std::move(n));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// det(x I - A) by the Faddeev-LeVerrier recursion.
inline Polynomial characteristic_polynomial(const RatMatrix& a) {
  if (!a.is_square()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Rational tr = 0;
    const RatMatrix am = a * m;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<unsigned long>(k);
  }
  return Polynomial(std::move(c));
}

class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
    seq_.push_back(p);
    Polynomial d = p.derivative();
    while (!d.is_zero()) {
      seq_.push_back(d);
      d = -seq_[seq_.size() - 2].remainder(seq_.back());
    }
  }

  int sign_changes(const Rational& x) const {
    int changes = 0;
    int last = 0;
    for (const auto& p : seq_) {
      const int s = sgn(p(x));
      if (s == 0) continue;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  }

  /// Distinct real roots in (a, b], for a < b neither of which is a root.
  int count_roots(const Rational& a, const Rational& b) const { return sign_changes(a) - sign_changes(b); }

 private:
  std::vector<Polynomial> seq_;
};

}  // namespace siegel
