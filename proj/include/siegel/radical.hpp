#pragma once

// Exact values of the shape q * P^(1/r) / sqrt(3)^s and finite min/max
// combinations of them. Ordering is decided by raising both sides to a common
// integer power and comparing rationals; floating point is only used for the
// non-authoritative decimal rendering.

#include <siegel/integer.hpp>

#include <cmath>
#include <compare>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

/// coeff * radicand^(1/index), divided by sqrt(3) when over_sqrt3 is set.
struct RadicalTerm {
  Rational coeff = 0;
  Integer radicand = 1;
  unsigned long index = 1;
  bool over_sqrt3 = false;

  RadicalTerm() = default;
  RadicalTerm(Rational q, Integer p = 1, unsigned long r = 1, bool sqrt3 = false)
      : coeff(std::move(q)), radicand(std::move(p)), index(r), over_sqrt3(sqrt3) {
    if (sgn(coeff) < 0) throw std::invalid_argument("radical coefficient must be >= 0");
    if (radicand < 1) throw std::invalid_argument("radicand must be a positive integer");
    if (index < 1) throw std::invalid_argument("root index must be positive");
  }

  /// value^power as an exact rational; power must be a multiple of index and,
  /// with the sqrt(3) divisor, even.
  Rational raised(unsigned long power) const {
    if (power % index != 0 || (over_sqrt3 && power % 2 != 0)) {
      throw std::logic_error("RadicalTerm::raised: incompatible power");
    }
    Rational out = rpow(coeff, power) * Rational(ipow(radicand, power / index));
    if (over_sqrt3) out /= Rational(ipow(Integer(3), power / 2));
    return out;
  }

  unsigned long natural_power() const {
    return over_sqrt3 ? std::lcm(index, 2ul) : index;
  }

  RadicalTerm scaled(const Rational& s) const {
    if (sgn(s) < 0) throw std::invalid_argument("radical scale must be >= 0");
    RadicalTerm t = *this;
    t.coeff *= s;
    return t;
  }

  /// 1/value, kept in the same shape:
  /// P^(-1/r) = P^((r-1)/r) / P and sqrt(3) = 3 / sqrt(3).
  RadicalTerm reciprocal() const {
    if (sgn(coeff) == 0) throw std::domain_error("reciprocal of zero");
    Rational q = 1 / (coeff * Rational(radicand));
    if (over_sqrt3) q *= 3;
    return RadicalTerm(q, ipow(radicand, index - 1), index, over_sqrt3);
  }

  long double approx() const {
    if (sgn(coeff) == 0) return 0.0L;
    const long double lq = log_abs(coeff.get_num()) - log_abs(coeff.get_den());
    const long double lp = log_abs(radicand) / index;
    const long double l3 = over_sqrt3 ? std::log(3.0L) / 2 : 0.0L;
    return std::exp(lq + lp - l3);
  }

  static long double log_abs(const Integer& n) {
    long exp2 = 0;
    const double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs(static_cast<long double>(mant))) + exp2 * std::log(2.0L);
  }

  std::string to_string() const {
    std::string s = coeff.get_str();
    if (radicand != 1) s += "*" + radicand.get_str() + "^(1/" + std::to_string(index) + ")";
    if (over_sqrt3) s += "/sqrt(3)";
    return s;
  }
};

inline std::strong_ordering compare(const RadicalTerm& a, const RadicalTerm& b) {
  const bool za = sgn(a.coeff) == 0;
  const bool zb = sgn(b.coeff) == 0;
  if (za && zb) return std::strong_ordering::equal;
  if (za) return std::strong_ordering::less;
  if (zb) return std::strong_ordering::greater;
  const unsigned long power = std::lcm(a.natural_power(), b.natural_power());
  const int c = cmp(a.raised(power), b.raised(power));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

enum class Combiner { Min, Max };

inline const char* to_string(Combiner c) { return c == Combiner::Min ? "min" : "max"; }

/// min or max over a non-empty list of terms. Equality and ordering are by
/// value, not by representation.
class RadicalValue {
 public:
  RadicalValue() : terms_{RadicalTerm(0)}, combiner_(Combiner::Max) {}
  RadicalValue(RadicalTerm t) : terms_{std::move(t)}, combiner_(Combiner::Max) {}  // NOLINT
  RadicalValue(const Rational& q) : RadicalValue(RadicalTerm(q)) {}               // NOLINT
  RadicalValue(std::vector<RadicalTerm> terms, Combiner c) : terms_(std::move(terms)), combiner_(c) {
    if (terms_.empty()) throw std::invalid_argument("radical value needs at least one term");
  }

  static RadicalValue min_of(std::vector<RadicalTerm> terms) { return {std::move(terms), Combiner::Min}; }
  static RadicalValue max_of(std::vector<RadicalTerm> terms) { return {std::move(terms), Combiner::Max}; }

  const std::vector<RadicalTerm>& terms() const { return terms_; }
  Combiner combiner() const { return combiner_; }

  /// The term realising the min/max, found by exact comparison. The first
  /// such term wins ties.
  const RadicalTerm& dominant() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < terms_.size(); ++i) {
      const auto c = compare(terms_[i], terms_[best]);
      if ((combiner_ == Combiner::Min && c < 0) || (combiner_ == Combiner::Max && c > 0)) best = i;
    }
    return terms_[best];
  }

  std::size_t dominant_index() const {
    const RadicalTerm* d = &dominant();
    return static_cast<std::size_t>(d - terms_.data());
  }

  RadicalValue scaled(const Rational& s) const {
    std::vector<RadicalTerm> t;
    for (const auto& term : terms_) t.push_back(term.scaled(s));
    return {std::move(t), combiner_};
  }

  /// 1/x turns a min into a max and vice versa.
  RadicalValue reciprocal() const {
    std::vector<RadicalTerm> t;
    for (const auto& term : terms_) t.push_back(term.reciprocal());
    return {std::move(t), combiner_ == Combiner::Min ? Combiner::Max : Combiner::Min};
  }

  /// Largest integer n with n <= value.
  Integer floor() const {
    const RadicalTerm& d = dominant();
    if (sgn(d.coeff) == 0) return 0;
    Integer n;
    mpz_set_d(n.get_mpz_t(), static_cast<double>(std::floor(d.approx())));
    if (n < 0) n = 0;
    while (compare(RadicalTerm(Rational(n)), d) > 0) --n;
    while (compare(RadicalTerm(Rational(n + 1)), d) <= 0) ++n;
    return n;
  }

  /// Smallest integer n with n > value (strict).
  Integer least_integer_above() const { return floor() + 1; }

  long double approx() const { return dominant().approx(); }

  std::string to_string() const {
    if (terms_.size() == 1) return terms_.front().to_string();
    std::string s = std::string(siegel::to_string(combiner_)) + "{";
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (i) s += ", ";
      s += terms_[i].to_string();
    }
    return s + "}";
  }

  friend std::strong_ordering operator<=>(const RadicalValue& a, const RadicalValue& b) {
    return compare(a.dominant(), b.dominant());
  }
  friend bool operator==(const RadicalValue& a, const RadicalValue& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  std::vector<RadicalTerm> terms_;
  Combiner combiner_;
};

inline RadicalValue min(const RadicalValue& a, const RadicalValue& b) {
  return RadicalValue::min_of({a.dominant(), b.dominant()});
}

inline RadicalValue max(const RadicalValue& a, const RadicalValue& b) {
  return RadicalValue::max_of({a.dominant(), b.dominant()});
}

/// x * value for a non-negative rational x.
inline RadicalValue operator*(const Rational& x, const RadicalValue& v) { return v.scaled(x); }

}  // namespace siegel
