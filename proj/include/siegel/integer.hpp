#pragma once

// Arbitrary-precision scalars and the handful of helpers every other header
// needs. Nothing in the library uses fixed-width arithmetic for values.

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace siegel {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer ipow(const Integer& base, unsigned long exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

inline Rational rpow(const Rational& base, unsigned long exponent) {
  Rational out(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
  out.canonicalize();
  return out;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

inline Integer gcd_of(const std::vector<Integer>& values) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

/// floor(sqrt(n)) for n >= 0.
inline Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw std::domain_error("isqrt of a negative integer");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), n.get_mpz_t());
  return out;
}

inline bool is_perfect_square(const Integer& n) {
  return sgn(n) >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer floor(const Rational& q) {
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline Integer ceil(const Rational& q) {
  Integer out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

inline bool divides(const Integer& d, const Integer& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// g = a*x + b*y with g = gcd(a, b) >= 0 and GMP's minimal cofactors.
struct Bezout {
  Integer g;
  Integer x;
  Integer y;
};

inline Bezout ext_gcd(const Integer& a, const Integer& b) {
  Bezout r;
  mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(),
             b.get_mpz_t());
  return r;
}

/// Coefficients c with sum(c_i * a_i) = gcd(a), built by folding ext_gcd left
/// to right. All-zero input yields all-zero coefficients.
inline std::vector<Integer> bezout_coefficients(const std::vector<Integer>& a) {
  std::vector<Integer> coeff(a.size(), Integer(0));
  Integer g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    if (g == 0) {
      g = abs(a[i]);
      coeff[i] = sgn(a[i]);
      continue;
    }
    const Bezout b = ext_gcd(g, a[i]);
    for (std::size_t j = 0; j < i; ++j) coeff[j] *= b.x;
    coeff[i] = b.y;
    g = b.g;
  }
  return coeff;
}

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Accepts "7", "-14/17", "+3". Whitespace around the token is ignored.
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    std::size_t start = (s.front() == '-') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("bad integer literal");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') {
        throw std::invalid_argument("bad integer literal '" + std::string(s) + "'");
      }
    }
    return Integer(std::string(s));
  };
  Rational q;
  if (slash == std::string_view::npos) {
    q = Rational(parse_int(text));
  } else {
    const Integer den = parse_int(trim(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    q = Rational(parse_int(trim(text.substr(0, slash))), den);
    q.canonicalize();
  }
  return q;
}

inline Integer parse_integer(std::string_view text) {
  const Rational q = parse_rational(text);
  if (q.get_den() != 1) throw std::invalid_argument("expected an integer");
  return q.get_num();
}

/// "2,3,5" -> {2,3,5}.
inline std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = text.find(',', pos);
    out.push_back(parse_integer(text.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string join(const std::vector<Integer>& values, std::string_view sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].get_str();
  }
  return out;
}

}  // namespace siegel
