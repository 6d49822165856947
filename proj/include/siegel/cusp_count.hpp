#pragma once

// Corank-1 cusps of the level cover: branching orders, closed-form counts and
// the exhaustive enumerators that back them.

#include <siegel/arith.hpp>
#include <siegel/integer.hpp>
#include <siegel/polarization.hpp>

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

/// The primitive vector
/// (D_1..D_{g-1}, D_2..D_{g-1} a_2, ..., a_g, 0, D_2..D_{g-1} a_{g+2}, ..., a_{2g})
/// with upper = (a_2..a_g), lower = (a_{g+2}..a_{2g}) and
/// 0 <= a_k, a_{g+k} < D_1 ... D_{k-1}.
struct CuspVector {
  std::vector<Integer> divisors;  // D_1 .. D_{g-1}
  std::vector<Integer> upper;
  std::vector<Integer> lower;

  std::size_t genus() const { return divisors.size() + 1; }

  /// D_i * ... * D_j, 1-based; empty product is 1.
  Integer d_product(std::size_t i, std::size_t j) const {
    Integer out = 1;
    for (std::size_t k = i; k <= j; ++k) out *= divisors[k - 1];
    return out;
  }

  void validate() const {
    const std::size_t g = genus();
    if (g < 2 || upper.size() != g - 1 || lower.size() != g - 1) {
      throw std::invalid_argument("cusp vector: wrong number of entries");
    }
    for (const auto& d : divisors) {
      if (d < 1) throw std::invalid_argument("cusp vector: divisors must be >= 1");
    }
    for (std::size_t k = 2; k <= g; ++k) {
      const Integer range = d_product(1, k - 1);
      for (const Integer* a : {&upper[k - 2], &lower[k - 2]}) {
        if (*a < 0 || *a >= range) throw std::invalid_argument("cusp vector: entry out of range");
      }
    }
  }

  std::vector<Integer> encoded() const {
    validate();
    const std::size_t g = genus();
    std::vector<Integer> out(2 * g);
    out[0] = d_product(1, g - 1);
    out[g] = 0;
    for (std::size_t k = 2; k <= g; ++k) {
      const Integer scale = d_product(k, g - 1);
      out[k - 1] = scale * upper[k - 2];
      out[g + k - 1] = scale * lower[k - 2];
    }
    return out;
  }

  bool is_primitive() const { return gcd_of(encoded()) == 1; }
};

/// gcd of the first g encoded entries, squared.
inline Integer m1(const CuspVector& c) {
  const auto e = c.encoded();
  const Integer g = gcd_of(std::vector<Integer>(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(c.genus())));
  return g * g;
}

namespace detail {

inline void check_divisors(const PolarizationType& t, const std::vector<Integer>& divisors) {
  if (divisors.size() != t.steps().size()) throw std::invalid_argument("need one divisor per step");
  for (std::size_t j = 0; j < divisors.size(); ++j) {
    if (divisors[j] < 1 || !divides(divisors[j], t.steps()[j])) {
      throw std::invalid_argument("divisor D_j must divide d_j");
    }
  }
}

inline void check_count_hypotheses(const PolarizationType& t, const std::vector<Integer>& divisors) {
  check_divisors(t, divisors);
  if (!is_coprime_type(t)) throw std::invalid_argument("cusp counts need pairwise coprime steps");
  if (!is_squarefree_type(t)) throw std::invalid_argument("cusp counts need square-free steps");
}

}  // namespace detail

inline Integer m2(const PolarizationType& t, const std::vector<Integer>& divisors) {
  detail::check_divisors(t, divisors);
  Integer out = 1;
  for (const auto& d : divisors) out *= d;
  return out;
}

/// |C(i)| = prod_j phi_{g-j}(D_j) sigma_{g-j}(D_j).
inline Integer count_level_cusps(const PolarizationType& t, const std::vector<Integer>& divisors) {
  detail::check_count_hypotheses(t, divisors);
  const std::size_t g = t.genus();
  Integer out = 1;
  for (std::size_t j = 1; j < g; ++j) {
    out *= phi_k(divisors[j - 1], g - j) * sigma_alpha(divisors[j - 1], g - j);
  }
  return out;
}

/// M_1(i), the sum of m1 over C(i).
inline Integer m1_weighted_sum(const PolarizationType& t, const std::vector<Integer>& divisors) {
  detail::check_count_hypotheses(t, divisors);
  const std::size_t g = t.genus();
  Integer phis = 1;
  for (std::size_t j = 1; j < g; ++j) phis *= phi_k(divisors[j - 1], g - j);
  Integer head = 1;
  for (std::size_t j = 1; j + 1 < g; ++j) head *= divisors[j - 1];
  Integer bracket = head * head * divisors[g - 2];
  for (std::size_t j = 1; j + 1 < g; ++j) bracket *= sigma_alpha(divisors[j - 1], g - j - 2);
  bracket *= sigma_alpha(divisors[g - 2], 1);
  return phis * bracket;
}

class CuspBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CuspEnumeration {
  std::vector<CuspVector> cusps;
  std::map<Integer, Integer> count_by_m1;

  Integer count() const { return Integer(static_cast<unsigned long>(cusps.size())); }
  Integer m1_sum() const {
    Integer s = 0;
    for (const auto& [m, c] : count_by_m1) s += m * c;
    return s;
  }
};

/// All primitive cusp vectors for D, a-tuples in row-major order (upper first).
inline CuspEnumeration enumerate_level_cusps(const PolarizationType& t, const std::vector<Integer>& divisors,
                                             unsigned long long max_vectors = 10000000) {
  detail::check_divisors(t, divisors);
  const std::size_t g = t.genus();
  CuspVector c{divisors, std::vector<Integer>(g - 1, 0), std::vector<Integer>(g - 1, 0)};
  std::vector<Integer> ranges;
  Integer total = 1;
  for (std::size_t k = 2; k <= g; ++k) ranges.push_back(c.d_product(1, k - 1));
  for (const auto& r : ranges) total *= r * r;
  if (total > Integer(std::to_string(max_vectors))) throw CuspBudgetExceeded("cusp enumeration domain has " + total.get_str() + " tuples");

  CuspEnumeration out;
  // Odometer over upper then lower entries, last entry fastest.
  std::vector<Integer*> slots;
  std::vector<Integer> limits;
  for (std::size_t i = 0; i + 1 < g; ++i) {
    slots.push_back(&c.upper[i]);
    limits.push_back(ranges[i]);
  }
  for (std::size_t i = 0; i + 1 < g; ++i) {
    slots.push_back(&c.lower[i]);
    limits.push_back(ranges[i]);
  }
  while (true) {
    if (c.is_primitive()) {
      out.count_by_m1[m1(c)] += 1;
      out.cusps.push_back(c);
    }
    std::size_t pos = slots.size();
    while (pos > 0) {
      --pos;
      if (++*slots[pos] < limits[pos]) break;
      *slots[pos] = 0;
      if (pos == 0) return out;
    }
    if (slots.empty()) return out;
  }
}

/// All D with D_j | d_j, lexicographic.
inline std::vector<std::vector<Integer>> divisor_tuples(const PolarizationType& t) {
  std::vector<std::vector<Integer>> out{{}};
  for (const auto& d : t.steps()) {
    std::vector<std::vector<Integer>> next;
    for (const auto& prefix : out) {
      for (const auto& e : divisors(d)) {
        auto p = prefix;
        p.push_back(e);
        next.push_back(std::move(p));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace detail {

inline void check_gcd_chain(std::size_t k, const std::vector<Integer>& d, const std::vector<Integer>& c,
                            const std::vector<Integer>& b) {
  if (d.size() != k || c.size() != k || b.size() != k) throw std::invalid_argument("count_gcd: lists must have length k");
  for (std::size_t i = 0; i < k; ++i) {
    if (b[i] < 1 || !divides(b[i], c[i]) || !divides(c[i], d[i])) {
      throw std::invalid_argument("count_gcd: need b_i | c_i | d_i");
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (gcd(d[i], d[j]) != 1) throw std::invalid_argument("count_gcd: d must be pairwise coprime");
    }
  }
}

}  // namespace detail

/// prod_i phi_{k+1-i}(c_i/b_i) (d_i/c_i)^{k+1-i}.
inline Integer count_gcd_tuples(std::size_t k, const std::vector<Integer>& d, const std::vector<Integer>& c,
                                const std::vector<Integer>& b) {
  detail::check_gcd_chain(k, d, c, b);
  Integer out = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const unsigned long e = k + 1 - i;
    out *= phi_k(c[i - 1] / b[i - 1], e) * ipow(d[i - 1] / c[i - 1], e);
  }
  return out;
}

/// Literal count of (x_1..x_k), 0 <= x_i < d_1...d_i, with
/// gcd(c_1..c_k, x_1 c_2..c_k, ..., x_k) = b_1...b_k.
inline Integer count_gcd_tuples_by_enumeration(std::size_t k, const std::vector<Integer>& d,
                                               const std::vector<Integer>& c, const std::vector<Integer>& b) {
  detail::check_gcd_chain(k, d, c, b);
  Integer target = 1;
  for (const auto& x : b) target *= x;
  std::vector<Integer> tail(k + 1, 1);  // tail[i] = c_{i+1} ... c_k, 0-based
  for (std::size_t i = k; i-- > 0;) tail[i] = tail[i + 1] * c[i];
  std::vector<Integer> limit(k);
  Integer p = 1;
  for (std::size_t i = 0; i < k; ++i) limit[i] = (p *= d[i]);

  Integer count = 0;
  std::vector<Integer> x(k, 0);
  while (true) {
    Integer g = tail[0];
    for (std::size_t i = 0; i < k; ++i) g = gcd(g, x[i] * tail[i + 1]);
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

/// Branching order of the level cover along corank-1 boundary components.
/// Throws std::domain_error when gcd(n, d_1...d_{g-1}) != 1.
inline Integer pi3_branching(const Integer& n, const PolarizationType& t) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  if (gcd(n, t.total_product()) != 1) {
    throw std::domain_error("level " + n.get_str() + " is not coprime to " + t.total_product().get_str());
  }
  return n;
}

}  // namespace siegel
