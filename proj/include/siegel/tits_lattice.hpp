#pragma once

// The lattice L(1, d1, ..., d1*...*d_{n-1}) of integral symmetric n x n
// matrices whose (i,j) entry is divisible by d1*...*d_{max(i,j)-1}, together
// with its characteristic values and the constants C(L), C'(L).

#include <siegel/integer.hpp>
#include <siegel/matrix.hpp>
#include <siegel/radical.hpp>

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace siegel {

class TitsLattice {
 public:
  TitsLattice() : TitsLattice(std::vector<Integer>{}) {}

  /// Matrix size is steps.size() + 1.
  explicit TitsLattice(std::vector<Integer> steps) : steps_(std::move(steps)) {
    for (const auto& d : steps_) {
      if (d < 1) throw std::invalid_argument("lattice steps must be >= 1");
    }
    prefix_.push_back(1);
    for (const auto& d : steps_) prefix_.push_back(prefix_.back() * d);
  }

  static TitsLattice principal(std::size_t n) {
    if (n < 1) throw std::invalid_argument("lattice size must be >= 1");
    return TitsLattice(std::vector<Integer>(n - 1, Integer(1)));
  }

  std::size_t size() const { return steps_.size() + 1; }
  const std::vector<Integer>& steps() const { return steps_; }
  /// (1, d_1, d_1 d_2, ...).
  const std::vector<Integer>& prefix() const { return prefix_; }
  bool is_principal() const { return prefix_.back() == 1; }

  /// Required divisor of entry (i, j), 0-based: d_1 * ... * d_{max(i,j)}.
  const Integer& modulus(std::size_t i, std::size_t j) const { return prefix_[std::max(i, j)]; }

  bool contains(const IntMatrix& b) const {
    if (b.rows() != size() || b.cols() != size()) {
      throw std::invalid_argument("lattice membership: wrong matrix size");
    }
    if (!b.is_symmetric()) throw std::invalid_argument("lattice membership: matrix not symmetric");
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = i; j < size(); ++j) {
        if (!divides(modulus(i, j), b(i, j))) return false;
      }
    }
    return true;
  }

  /// gcd of determinants of positive definite members: prod_i d_i^(n-i).
  Integer mu() const {
    Integer out = 1;
    const std::size_t n = size();
    for (std::size_t i = 1; i < n; ++i) out *= ipow(steps_[i - 1], n - i);
    return out;
  }

  /// Least lambda with lambda*C in L for all PSD integral C: d_1 * ... * d_{n-1}.
  Integer nu() const { return prefix_.back(); }

  /// Lattice of the leading (n-1) x (n-1) block, steps d_1 .. d_{n-2}.
  TitsLattice truncated() const {
    if (steps_.empty()) throw std::logic_error("cannot truncate a 1 x 1 lattice");
    return TitsLattice(std::vector<Integer>(steps_.begin(), steps_.end() - 1));
  }

 private:
  std::vector<Integer> steps_;
  std::vector<Integer> prefix_{};
};

/// prod_{i=1}^{r-1} x_i^i.
inline Integer weighted_step_product(std::span<const Integer> steps, std::size_t r) {
  Integer out = 1;
  for (std::size_t i = 1; i < r; ++i) out *= ipow(steps[i - 1], i);
  return out;
}

/// sqrt(3) / P_r^(1/r), written as (3/P) * (P^(r-1))^(1/r) / sqrt(3).
inline RadicalTerm sqrt3_over_root(const Integer& p, unsigned long r) {
  return RadicalTerm(Rational(3) / Rational(p), ipow(p, r - 1), r, true);
}

/// C(L) = min{1, min_{2<=r<=n} sqrt(3) / (prod_{i<r} d_i^i)^(1/r)}.
inline RadicalValue c_factor(const TitsLattice& lattice) {
  const std::size_t n = lattice.size();
  if (n < 2) throw std::invalid_argument("C(L) needs n >= 2");
  std::vector<RadicalTerm> terms{RadicalTerm(1)};
  for (std::size_t r = 2; r <= n; ++r) {
    terms.push_back(sqrt3_over_root(weighted_step_product(lattice.steps(), r), r));
  }
  return RadicalValue::min_of(std::move(terms));
}

/// C'(L(x_1..x_{g-1})) = x_1 * max{1, max_{2<=r<=g} (prod_{i<r} x_i^i)^(1/r) / sqrt(3)}.
inline RadicalValue c_prime(std::span<const Integer> steps) {
  if (steps.empty()) throw std::invalid_argument("C'(L) needs at least one step");
  const std::size_t g = steps.size() + 1;
  const Rational x1(steps.front());
  std::vector<RadicalTerm> terms{RadicalTerm(x1)};
  for (std::size_t r = 2; r <= g; ++r) {
    terms.emplace_back(x1, weighted_step_product(steps, r), r, true);
  }
  return RadicalValue::max_of(std::move(terms));
}

/// Factor of the positive definite inequality: sqrt(3) * mu^(1/n) / nu.
inline RadicalTerm posdef_factor(const TitsLattice& lattice) {
  return RadicalTerm(Rational(3) / Rational(lattice.nu()), lattice.mu(), lattice.size(), true);
}

/// Same quantity written through the steps: sqrt(3) / (prod d_i^i)^(1/n).
inline RadicalTerm bnc_part1_factor(const TitsLattice& lattice) {
  const auto n = lattice.size();
  return sqrt3_over_root(weighted_step_product(lattice.steps(), n), n);
}

}  // namespace siegel
