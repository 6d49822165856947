#pragma once

// Multiplicative arithmetic functions over arbitrary-precision integers.

#include <siegel/integer.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace siegel {

struct PrimePower {
  Integer prime;
  unsigned long exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorisation; factors are sorted by strictly increasing prime.
struct Factorization {
  Integer value;
  std::vector<PrimePower> factors;
};

/// Deterministic trial division up to sqrt(n).
inline Factorization factorize(const Integer& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive");
  Factorization out{n, {}};
  Integer rest = n;
  auto strip = [&](const Integer& p) {
    unsigned long e = 0;
    while (divides(p, rest)) {
      rest /= p;
      ++e;
    }
    if (e) out.factors.push_back({p, e});
  };
  strip(Integer(2));
  strip(Integer(3));
  // 6k +- 1 wheel
  for (Integer p = 5; p * p <= rest; p += 6) {
    strip(p);
    strip(p + 2);
  }
  if (rest > 1) out.factors.push_back({rest, 1});
  return out;
}

inline bool is_squarefree(const Integer& n) {
  for (const auto& pp : factorize(n).factors) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

/// Number of k-tuples in (Z/n)^k whose entries together with n are coprime.
/// Euler product: prod over p^e || n of (p^{ke} - p^{k(e-1)}).
inline Integer phi_k(const Integer& n, unsigned long k) {
  if (n < 1) throw std::invalid_argument("phi_k: n must be positive");
  if (k < 1) throw std::invalid_argument("phi_k: k must be positive");
  Integer out = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    out *= ipow(p, k * e) - ipow(p, k * (e - 1));
  }
  return out;
}

/// Sum of d^alpha over the positive divisors d of n.
inline Integer sigma_alpha(const Integer& n, unsigned long alpha) {
  if (n < 1) throw std::invalid_argument("sigma_alpha: n must be positive");
  Integer out = 1;
  for (const auto& [p, e] : factorize(n).factors) {
    const Integer pa = ipow(p, alpha);
    Integer term = 1;
    Integer power = 1;
    for (unsigned long i = 1; i <= e; ++i) {
      power *= pa;
      term += power;
    }
    out *= term;
  }
  return out;
}

/// Positive divisors of n in increasing order.
inline std::vector<Integer> divisors(const Integer& n) {
  std::vector<Integer> out{1};
  for (const auto& [p, e] : factorize(n).factors) {
    const std::size_t base = out.size();
    Integer power = 1;
    for (unsigned long i = 1; i <= e; ++i) {
      power *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// n = squarefree * scale^2 with squarefree square-free; unique.
struct SquarefreeParts {
  Integer squarefree;
  Integer scale;

  friend bool operator==(const SquarefreeParts&, const SquarefreeParts&) = default;
};

inline SquarefreeParts squarefree_decompose(const Integer& n) {
  if (n < 1) throw std::invalid_argument("squarefree_decompose: n must be positive");
  SquarefreeParts out{1, 1};
  for (const auto& [p, e] : factorize(n).factors) {
    if (e % 2) out.squarefree *= p;
    out.scale *= ipow(p, e / 2);
  }
  return out;
}

}  // namespace siegel
