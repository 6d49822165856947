#pragma once

// Brute-force reference implementations. They share only the number types
// and the matrix container with the library; every algorithm here is the
// naive one.

#include <siegel/integer.hpp>
#include <siegel/matrix.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using siegel::Integer;
using siegel::IntMatrix;
using siegel::IntVector;
using siegel::RatMatrix;
using siegel::Rational;

// ---- arithmetic functions ----

/// Number of k-tuples in [0, n)^k whose gcd with n is 1.
inline std::uint64_t jordan_by_tuples(std::uint64_t n, unsigned k) {
  std::uint64_t count = 0;
  std::vector<std::uint64_t> x(k, 0);
  while (true) {
    std::uint64_t g = n;
    for (auto v : x) g = std::gcd(g, v);
    if (g == 1) ++count;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++x[pos] < n) break;
      x[pos] = 0;
      if (pos == 0) return count;
    }
    if (k == 0) return count;
  }
}

/// J_k(n) from n^k = sum_{d | n} J_k(d), all divisors found by trial.
inline std::vector<Integer> jordan_table(std::uint64_t limit, unsigned k) {
  std::vector<Integer> j(limit + 1, 0);
  for (std::uint64_t n = 1; n <= limit; ++n) {
    Integer v = siegel::ipow(Integer(static_cast<unsigned long>(n)), k);
    for (std::uint64_t d = 1; d < n; ++d) {
      if (n % d == 0) v -= j[d];
    }
    j[n] = v;
  }
  return j;
}

inline Integer sigma_by_trial(std::uint64_t n, unsigned alpha) {
  Integer s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += siegel::ipow(Integer(static_cast<unsigned long>(d)), alpha);
  }
  return s;
}

// ---- determinants and definiteness ----

template <class T>
T leibniz_det(const siegel::Matrix<T>& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  T total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    }
    T term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += inversions % 2 ? T(-term) : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

template <class T>
siegel::Matrix<T> principal(const siegel::Matrix<T>& m, unsigned long mask) {
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (mask & (1ul << i)) idx.push_back(i);
  }
  siegel::Matrix<T> out(idx.size(), idx.size());
  for (std::size_t a = 0; a < idx.size(); ++a) {
    for (std::size_t b = 0; b < idx.size(); ++b) out(a, b) = m(idx[a], idx[b]);
  }
  return out;
}

template <class T>
bool psd(const siegel::Matrix<T>& m) {
  for (unsigned long mask = 1; mask < (1ul << m.rows()); ++mask) {
    if (leibniz_det(principal(m, mask)) < 0) return false;
  }
  return true;
}

template <class T>
bool pd(const siegel::Matrix<T>& m) {
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    if (leibniz_det(principal(m, (1ul << k) - 1)) <= 0) return false;
  }
  return true;
}

/// Rank 1 iff nonzero with every 2x2 minor zero.
inline bool rank_one(const IntMatrix& m) {
  if (m.is_zero()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) {
      for (std::size_t k = 0; k < m.rows(); ++k) {
        for (std::size_t l = 0; l < m.rows(); ++l) {
          if (m(i, k) * m(j, l) != m(i, l) * m(j, k)) return false;
        }
      }
    }
  }
  return true;
}

/// Adjugate-based inverse.
inline RatMatrix inverse(const RatMatrix& a) {
  const std::size_t n = a.rows();
  const Rational det = leibniz_det(a);
  RatMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      RatMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      const Rational cof = n == 1 ? Rational(1) : leibniz_det(minor);
      out(i, j) = ((i + j) % 2 ? Rational(-cof) : cof) / det;
    }
  }
  return out;
}

/// 1 / tr(A^-1) is at most the smallest eigenvalue of a PD matrix.
inline Rational eigen_floor(const RatMatrix& a) {
  const RatMatrix inv = oracle::inverse(a);
  Rational tr = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) tr += inv(i, i);
  return 1 / tr;
}

inline Rational pairing(const RatMatrix& a, const IntMatrix& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) s += a(i, j) * Rational(b(i, j));
  }
  return s;
}

// ---- minima by box enumeration ----

struct Min {
  Rational value;
  IntMatrix witness;
  IntVector vector;
};

enum class Kind { Plus, Nonzero, RankOne };

/// Minimum of tr(AB) over symmetric integer B with entry (i,j) divisible by
/// prefix[max(i,j)], classified by `kind`. Every candidate with trace at most
/// U / lambda is visited, U taken from `start` (a member of the class).
inline std::optional<Min> lattice_min(const RatMatrix& a, const std::vector<Integer>& prefix, Kind kind,
                                      const IntMatrix& start, unsigned long long max_visits) {
  const std::size_t n = a.rows();
  const Rational upper = pairing(a, start);
  const Integer cap = siegel::floor(upper / eigen_floor(a));
  Min best{upper, start, {}};
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < n; ++i) cells.emplace_back(i, i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) cells.emplace_back(i, j);
  }
  IntMatrix b(n, n);
  unsigned long long visits = 0;
  bool overflow = false;
  auto rec = [&](auto&& self, std::size_t idx, const Integer& trace) -> void {
    if (overflow) return;
    if (idx == cells.size()) {
      if (++visits > max_visits) {
        overflow = true;
        return;
      }
      if (b.is_zero()) return;
      const Rational v = pairing(a, b);
      if (v > best.value || (v == best.value && !colex_less(b, best.witness))) return;
      if (!psd(b)) return;
      if (kind == Kind::Plus && !pd(b)) return;
      if (kind == Kind::RankOne && !rank_one(b)) return;
      best = {v, b, {}};
      return;
    }
    const auto [i, j] = cells[idx];
    const Integer& m = prefix[std::max(i, j)];
    if (i == j) {
      for (Integer d = 0; trace + d <= cap; d += m) {
        b(i, i) = d;
        self(self, idx + 1, trace + d);
      }
      b(i, i) = 0;
    } else {
      const Integer reach = siegel::isqrt(b(i, i) * b(j, j)) / m;
      for (Integer t = -reach; t <= reach; ++t) {
        b(i, j) = b(j, i) = t * m;
        self(self, idx + 1, trace);
      }
      b(i, j) = b(j, i) = 0;
    }
  };
  rec(rec, 0, Integer(0));
  if (overflow) return std::nullopt;
  return best;
}

/// M(f) over the box |x|^2 <= U / lambda, U = min a_ii.
inline Min arithmetic_min(const RatMatrix& a) {
  const std::size_t n = a.rows();
  Rational upper = a(0, 0);
  for (std::size_t i = 1; i < n; ++i) upper = std::min(upper, a(i, i));
  const Integer r = siegel::isqrt(siegel::floor(upper / eigen_floor(a)));
  std::optional<Min> best;
  IntVector x(n, -r);
  while (true) {
    if (std::any_of(x.begin(), x.end(), [](const Integer& v) { return v != 0; })) {
      Rational v = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) v += a(i, j) * Rational(x[i] * x[j]);
      }
      IntVector w = x;
      auto first = std::find_if(w.begin(), w.end(), [](const Integer& e) { return e != 0; });
      if (*first < 0) {
        for (auto& e : w) e = -e;
      }
      if (!best || v < best->value || (v == best->value && w < best->vector)) best = Min{v, {}, w};
    }
    std::size_t pos = n;
    while (pos > 0) {
      --pos;
      if (++x[pos] <= r) break;
      x[pos] = -r;
      if (pos == 0) return *best;
    }
  }
}

// ---- cusps and gcd tuples ----

struct CuspTally {
  std::uint64_t count = 0;
  std::uint64_t m1_sum = 0;
};

/// Walks the vectors (D1..D_{g-1}, D_2..D_{g-1} a_2, ..., a_g, 0, D_2..D_{g-1} a_{g+2}, ..., a_{2g})
/// with 0 <= a_k, a_{g+k} < D_1...D_{k-1} and keeps the primitive ones.
inline CuspTally cusps(const std::vector<std::uint64_t>& d) {
  const std::size_t g = d.size() + 1;
  auto prod = [&](std::size_t i, std::size_t j) {
    std::uint64_t p = 1;
    for (std::size_t k = i; k <= j; ++k) p *= d[k - 1];
    return p;
  };
  std::vector<std::uint64_t> range, scale;
  for (std::size_t k = 2; k <= g; ++k) {
    range.push_back(prod(1, k - 1));
    scale.push_back(prod(k, g - 1));
  }
  const std::uint64_t lead = prod(1, g - 1);
  std::vector<std::uint64_t> a(2 * (g - 1), 0);
  CuspTally t;
  while (true) {
    std::uint64_t top = lead;
    for (std::size_t k = 0; k + 1 < g; ++k) top = std::gcd(top, scale[k] * a[k]);
    std::uint64_t all = top;
    for (std::size_t k = 0; k + 1 < g; ++k) all = std::gcd(all, scale[k] * a[g - 1 + k]);
    if (all == 1) {
      ++t.count;
      t.m1_sum += top * top;
    }
    std::size_t pos = a.size();
    while (pos > 0) {
      --pos;
      if (++a[pos] < range[pos % (g - 1)]) break;
      a[pos] = 0;
      if (pos == 0) return t;
    }
    if (a.empty()) return t;
  }
}

/// |{x : 0 <= x_i < d_1...d_i, gcd(c_1...c_k, x_1 c_2...c_k, ..., x_k) = b_1...b_k}|.
inline std::uint64_t gcd_tuples(const std::vector<std::uint64_t>& d, const std::vector<std::uint64_t>& c,
                                const std::vector<std::uint64_t>& b) {
  const std::size_t k = d.size();
  std::uint64_t target = 1;
  for (auto v : b) target *= v;
  std::vector<std::uint64_t> limit(k), tail(k + 1, 1);
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < k; ++i) limit[i] = (p *= d[i]);
  for (std::size_t i = k; i-- > 0;) tail[i] = tail[i + 1] * c[i];
  std::vector<std::uint64_t> x(k, 0);
  std::uint64_t count = 0;
  while (true) {
    std::uint64_t g = tail[0];
    for (std::size_t i = 0; i < k; ++i) g = std::gcd(g, x[i] * tail[i + 1]);
    if (g == target) ++count;
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++x[pos] < limit[pos]) break;
      x[pos] = 0;
      if (pos == 0) return count;
    }
    if (k == 0) return count;
  }
}

// ---- random inputs ----

/// Symmetric matrix with entries p/q, q in 1..4, |p/q| <= 5, redrawn until
/// positive definite.
inline RatMatrix random_pd_form(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> den(1, 4);
  while (true) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) {
        const int q = den(rng);
        std::uniform_int_distribution<int> num(-5 * q, 5 * q);
        Rational v(num(rng), q);
        v.canonicalize();
        m(i, j) = m(j, i) = v;
      }
    }
    if (pd(m)) return m;
  }
}

inline Integer random_integer(std::mt19937_64& rng, long lo, long hi) {
  return Integer(std::uniform_int_distribution<long>(lo, hi)(rng));
}


/// Random B with B_ij divisible by prefix[max(i,j)] and B v = 0: a random
/// integer combination of an integral basis of the solutions of B v = 0.
inline IntMatrix random_member_killing(std::mt19937_64& rng, const std::vector<Integer>& prefix, const IntVector& v) {
  const std::size_t n = v.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) slots.emplace_back(i, j);
  }
  // Unknown y_s scales the basis matrix m_s (E_ij + E_ji) of the lattice.
  RatMatrix eq(n, slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    const auto [i, j] = slots[s];
    const Integer m = prefix[std::max(i, j)];
    eq(i, s) += Rational(m * v[j]);
    if (i != j) eq(j, s) += Rational(m * v[i]);
  }
  std::vector<IntVector> basis;
  for (const auto& k : siegel::kernel_basis(eq)) basis.push_back(siegel::primitive_integer_vector(k));
  IntMatrix b(n, n);
  for (const auto& k : basis) {
    const Integer c = random_integer(rng, -3, 3);
    for (std::size_t s = 0; s < slots.size(); ++s) {
      const auto [i, j] = slots[s];
      const Integer add = c * k[s] * prefix[std::max(i, j)];
      b(i, j) += add;
      if (i != j) b(j, i) += add;
    }
  }
  return b;
}

}  // namespace oracle
