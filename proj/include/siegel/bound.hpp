#pragma once

// The level bound: n must exceed
//   X = (2^g+1) d_2...d_{g-2} / ((g+1) 2^{g-3}) * min{C'(d_1..d_{g-1}), C'(d_{g-1}..d_1)}
// and satisfy n >= 3 and gcd(n, d_1...d_{g-1}) = 1.

#include <siegel/integer.hpp>
#include <siegel/polarization.hpp>
#include <siegel/radical.hpp>
#include <siegel/tits_lattice.hpp>

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

inline Rational pow2(long e) {
  const Integer p = ipow(Integer(2), static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(Integer(1), p) : Rational(p);
}

struct ChiConstants {
  Rational weight;     // (2^g+1) 2^{g-2}
  Rational vanishing;  // 2^{2g-5}
};

inline ChiConstants chi_constants(long g) {
  if (g < 1) throw std::invalid_argument("genus must be >= 1");
  return {Rational(ipow(Integer(2), static_cast<unsigned long>(g)) + 1) * pow2(g - 2), pow2(2 * g - 5)};
}

/// (2^g+1) / ((g+1) 2^{g-3}), which equals w / ((g+1) v).
inline Rational genus_factor(long g) {
  const auto chi = chi_constants(g);
  return chi.weight / (Rational(g + 1) * chi.vanishing);
}

class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline void check_threshold_hypotheses(const PolarizationType& t) {
  if (t.genus() < 3) throw HypothesisError("the bound needs genus >= 3");
  if (!is_coprime_type(t)) throw HypothesisError("steps must be pairwise coprime");
  if (t.total_product() == 2) throw HypothesisError("d_1...d_{g-1} = 2 is excluded");
}

enum class Orientation { Forward, Reversed };

inline const char* to_string(Orientation o) { return o == Orientation::Forward ? "forward" : "reversed"; }

struct ThresholdParts {
  Rational prefactor;
  RadicalValue c_forward;
  RadicalValue c_reversed;
  Orientation orientation = Orientation::Forward;
  RadicalValue value;
};

inline ThresholdParts threshold_parts(const PolarizationType& t) {
  check_threshold_hypotheses(t);
  const long g = static_cast<long>(t.genus());
  ThresholdParts p;
  p.prefactor = genus_factor(g) * Rational(t.d_product(2, static_cast<std::size_t>(g - 2)));
  p.c_forward = c_prime(t.steps());
  p.c_reversed = c_prime(reverse(t).steps());
  p.orientation = p.c_reversed < p.c_forward ? Orientation::Reversed : Orientation::Forward;
  p.value = min(p.c_forward, p.c_reversed).scaled(p.prefactor);
  return p;
}

/// X written with C'.
inline RadicalValue general_type_threshold(const PolarizationType& t) { return threshold_parts(t).value; }

/// X written as in the theorem, with d_1 / C(L(d)) and d_{g-1} / C(L(reversed d)).
inline RadicalValue general_type_threshold_theorem_form(const PolarizationType& t) {
  check_threshold_hypotheses(t);
  const long g = static_cast<long>(t.genus());
  const Rational pre = genus_factor(g) * Rational(t.d_product(2, static_cast<std::size_t>(g - 2)));
  const RadicalValue forward = c_factor(TitsLattice(t.steps())).reciprocal().scaled(Rational(t.steps().front()));
  const RadicalValue backward =
      c_factor(TitsLattice(reverse(t).steps())).reciprocal().scaled(Rational(t.steps().back()));
  return min(forward, backward).scaled(pre);
}

/// Steps (1,...,1,d): (2^g+1) / ((g+1) 2^{g-3} sqrt 3) * (d^{g-1})^{1/g}.
inline RadicalValue threshold_one_one_d(long g, const Integer& d) {
  if (g < 3) throw std::invalid_argument("threshold_one_one_d needs g >= 3");
  if (d < 3) throw std::invalid_argument("threshold_one_one_d needs d >= 3");
  return RadicalTerm(genus_factor(g), ipow(d, static_cast<unsigned long>(g - 1)), static_cast<unsigned long>(g), true);
}

/// Steps (s,t): (3/4) sqrt 3 (s^2 t^2 min{s,t}^2)^{1/3} = (9/4) (...)^{1/3} / sqrt 3.
inline RadicalValue threshold_one_s_st(const Integer& s, const Integer& t) {
  if (s <= 1 || t <= 1) throw std::invalid_argument("threshold_one_s_st needs s, t > 1");
  if (gcd(s, t) != 1) throw std::invalid_argument("threshold_one_s_st needs gcd(s,t) = 1");
  const Integer m = s < t ? s : t;
  return RadicalTerm(Rational(9, 4), s * s * t * t * m * m, 3, true);
}

struct LevelOptions {
  bool enforce_gcd = true;
  bool enforce_min3 = true;
  bool reduce_squarefree = false;
};

struct BoundReport {
  PolarizationType type;
  std::optional<PolarizationType> reduced_type;
  std::optional<std::vector<Integer>> squarefree_scales;
  LevelOptions options;
  bool hypotheses_met = false;
  std::string failure;
  std::optional<RadicalValue> threshold;
  std::optional<Rational> prefactor;
  std::optional<RadicalValue> c_forward;
  std::optional<RadicalValue> c_reversed;
  Orientation orientation = Orientation::Forward;
  ChiConstants chi;
  std::optional<Integer> raw_n;
  bool min3_applied = false;
  unsigned long gcd_incremented_by = 0;
  std::optional<Integer> final_n;
};

/// Least admissible level. Types outside the theorem's hypotheses give a
/// report with hypotheses_met = false and no final_n.
inline BoundReport minimal_level(const PolarizationType& t, const LevelOptions& options = {}) {
  BoundReport r;
  r.type = t;
  r.options = options;
  r.chi = chi_constants(static_cast<long>(t.genus()));
  PolarizationType work = t;
  if (options.reduce_squarefree && !is_squarefree_type(t)) {
    auto red = squarefree_reduce(t);
    work = red.reduced;
    r.reduced_type = red.reduced;
    r.squarefree_scales = red.scales;
  }
  ThresholdParts parts;
  try {
    parts = threshold_parts(work);
  } catch (const HypothesisError& e) {
    r.failure = e.what();
    return r;
  }
  r.hypotheses_met = true;
  r.threshold = parts.value;
  r.prefactor = parts.prefactor;
  r.c_forward = parts.c_forward;
  r.c_reversed = parts.c_reversed;
  r.orientation = parts.orientation;

  Integer n = parts.value.least_integer_above();
  r.raw_n = n;
  if (options.enforce_min3 && n < 3) {
    n = 3;
    r.min3_applied = true;
  }
  if (options.enforce_gcd) {
    const Integer modulus = t.total_product();
    while (gcd(n, modulus) != 1) {
      ++n;
      ++r.gcd_incremented_by;
    }
  }
  r.final_n = n;
  return r;
}

/// Least n > (2^g+1) / ((g+1) 2^{g-3}), without the n >= 3 or gcd conditions.
inline Integer principal_minimal_level(long g) {
  return siegel::floor(genus_factor(g)) + 1;
}

}  // namespace siegel
