#pragma once

// Exact minima of quadratic forms: the arithmetic minimum M(f), and minima of
// the trace pairing (f,h) = tr(AB) over positive definite, nonzero positive
// semi-definite, and rank-1 members of a Tits lattice.
//
// The lattice search fixes the matrix row by row from the bottom. With the
// trailing block B_T fixed, every PSD completion satisfies
// tr(AB) >= tr(S B_T), S the Schur complement of the leading block of A,
// which is what prunes the search.

#include <siegel/integer.hpp>
#include <siegel/matrix.hpp>
#include <siegel/radical.hpp>
#include <siegel/sturm.hpp>
#include <siegel/tits_lattice.hpp>
#include <siegel/unimodular.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace siegel {

class QuadraticForm {
 public:
  QuadraticForm() = default;
  explicit QuadraticForm(RatMatrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || !m_.is_symmetric()) throw std::invalid_argument("quadratic form must be a symmetric matrix");
  }
  explicit QuadraticForm(const IntMatrix& m) : QuadraticForm(to_rational(m)) {}

  static QuadraticForm parse(std::string_view text) { return QuadraticForm(parse_matrix(text)); }
  static QuadraticForm identity(std::size_t n) { return QuadraticForm(RatMatrix::identity(n)); }

  std::size_t size() const { return m_.rows(); }
  const RatMatrix& matrix() const { return m_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  /// x A x^T
  Rational evaluate(const IntVector& x) const {
    if (x.size() != size()) throw std::invalid_argument("vector size does not match form");
    Rational out = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      for (std::size_t j = 0; j < size(); ++j) out += m_(i, j) * Rational(x[i] * x[j]);
    }
    return out;
  }

  bool is_positive_definite() const { return siegel::is_positive_definite(m_); }
  bool is_positive_semidefinite() const { return siegel::is_positive_semidefinite(m_); }
  std::size_t rank() const { return siegel::rank(m_); }
  std::string to_string() const { return format_matrix(m_); }

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;

 private:
  RatMatrix m_;
};

inline Rational inner_product(const QuadraticForm& f, const QuadraticForm& h) {
  if (f.size() != h.size()) throw std::invalid_argument("inner product: size mismatch");
  return trace_product(f.matrix(), h.matrix());
}

inline Rational inner_product(const QuadraticForm& f, const IntMatrix& h) {
  if (f.size() != h.rows() || !h.is_square()) throw std::invalid_argument("inner product: size mismatch");
  return trace_product(f.matrix(), h);
}

enum class Domain { LPlus, L0Nonzero, L1, IntegerVectors };

inline const char* to_string(Domain d) {
  switch (d) {
    case Domain::LPlus: return "L_plus";
    case Domain::L0Nonzero: return "L0_nonzero";
    case Domain::L1: return "L1";
    case Domain::IntegerVectors: return "integer_vectors";
  }
  return "?";
}

struct MinimumReport {
  Rational value;
  IntMatrix witness;          // lattice domains
  IntVector witness_vector;   // integer_vectors
  Domain domain = Domain::L1;
  Rational search_bound_used;
  unsigned long long enumerated = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchBudget {
  unsigned long long max_matrices = 1000000;
  std::optional<Integer> max_trace;

  /// SIEGEL_MAX_MATRICES and SIEGEL_MAX_TRACE override the defaults.
  static SearchBudget from_env() {
    SearchBudget b;
    if (const char* m = std::getenv("SIEGEL_MAX_MATRICES")) b.max_matrices = std::stoull(m);
    if (const char* t = std::getenv("SIEGEL_MAX_TRACE")) b.max_trace = parse_integer(t);
    return b;
  }
};

inline void require_positive_definite(const QuadraticForm& f) {
  if (!f.is_positive_definite()) throw std::invalid_argument("form is not positive definite");
}

/// Sturm certificate: no eigenvalue in (0, lambda] and A - lambda I is PD.
inline bool certify_eigenvalue_lower_bound(const QuadraticForm& f, const Rational& lambda) {
  if (sgn(lambda) <= 0) return false;
  const Polynomial p = characteristic_polynomial(f.matrix());
  if (p(lambda) == 0) return false;
  if (SturmSequence(p).count_roots(0, lambda) != 0) return false;
  RatMatrix shifted = f.matrix();
  for (std::size_t i = 0; i < f.size(); ++i) shifted(i, i) -= lambda;
  return siegel::is_positive_definite(shifted);
}

/// Rational 0 < lambda < smallest eigenvalue, within a factor 16/15 of it.
inline Rational eigenvalue_lower_bound(const QuadraticForm& f) {
  require_positive_definite(f);
  const Polynomial p = characteristic_polynomial(f.matrix());
  const SturmSequence sturm(p);
  Rational hi = f(0, 0);
  for (std::size_t i = 1; i < f.size(); ++i) hi = std::min(hi, f(i, i));
  Rational lo = 0;
  while (sgn(lo) == 0 || (hi - lo) * 16 > lo) {
    const Rational mid = (lo + hi) / 2;
    if (p(mid) != 0 && sturm.count_roots(0, mid) == 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

namespace detail {

inline bool lex_less_vector(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline IntVector sign_normalized(IntVector x) {
  const auto first = std::find_if(x.begin(), x.end(), [](const Integer& v) { return v != 0; });
  if (first != x.end() && sgn(*first) < 0) {
    for (auto& v : x) v = -v;
  }
  return x;
}

}  // namespace detail

namespace detail {

/// q with A = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2, A positive definite.
inline RatMatrix ldl_form(const RatMatrix& a) {
  const std::size_t n = a.rows();
  RatMatrix q = a;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k) {
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
    }
  }
  return q;
}

/// Calls fn(y) for every integer y with (y - c)^T G (y - c) <= rho, G positive definite.
template <class Fn>
void for_each_in_ellipsoid(const RatMatrix& g, const RatVector& c, const Rational& rho, Fn&& fn) {
  if (sgn(rho) < 0) return;
  const std::size_t n = g.rows();
  const RatMatrix q = ldl_form(g);
  IntVector y(n, 0);
  auto recurse = [&](auto&& self, std::size_t i, const Rational& partial) -> void {
    Rational t = 0;
    for (std::size_t j = i + 1; j < n; ++j) t += q(i, j) * (Rational(y[j]) - c[j]);
    const Rational room = (rho - partial) / q(i, i);
    if (sgn(room) < 0) return;
    const Integer s = isqrt(siegel::floor(room)) + 1;
    const Rational mid = c[i] - t;
    const Integer last = siegel::floor(mid) + s;
    for (Integer v = siegel::ceil(mid) - s; v <= last; ++v) {
      const Rational z = Rational(v) - mid;
      const Rational next = partial + q(i, i) * z * z;
      if (next > rho) continue;
      y[i] = v;
      if (i == 0) {
        fn(static_cast<const IntVector&>(y));
      } else {
        self(self, i - 1, next);
      }
    }
    y[i] = 0;
  };
  recurse(recurse, n - 1, Rational(0));
}

}  // namespace detail

/// M(f) by Fincke-Pohst enumeration on f = sum_k q_kk (x_k + sum_{j>k} q_kj x_j)^2.
/// Among minimisers the witness is the lexicographically least one whose
/// first nonzero entry is positive.
inline MinimumReport arithmetic_minimum(const QuadraticForm& f) {
  require_positive_definite(f);
  const std::size_t n = f.size();
  const RatMatrix q = detail::ldl_form(f.matrix());

  MinimumReport rep;
  rep.domain = Domain::IntegerVectors;
  std::size_t best_i = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (f(i, i) < f(best_i, best_i)) best_i = i;
  }
  Rational upper = f(best_i, best_i);
  rep.search_bound_used = upper / eigenvalue_lower_bound(f);
  rep.value = upper;
  rep.witness_vector.assign(n, 0);
  rep.witness_vector[best_i] = 1;

  IntVector x(n, 0);
  auto recurse = [&](auto&& self, std::size_t level, const Rational& partial) -> void {
    Rational center = 0;
    for (std::size_t j = level + 1; j < n; ++j) center += q(level, j) * Rational(x[j]);
    const Rational room = (upper - partial) / q(level, level);
    if (sgn(room) < 0) return;
    const Integer s = isqrt(siegel::floor(room));
    const Integer first = siegel::ceil(-center) - s - 1;
    const Integer last = siegel::floor(-center) + s + 1;
    for (Integer v = first; v <= last; ++v) {
      const Rational shifted = Rational(v) + center;
      const Rational next = partial + q(level, level) * shifted * shifted;
      if (next > upper) continue;
      x[level] = v;
      if (level == 0) {
        if (std::all_of(x.begin(), x.end(), [](const Integer& e) { return e == 0; })) continue;
        ++rep.enumerated;
        IntVector w = detail::sign_normalized(x);
        if (next < rep.value || (next == rep.value && detail::lex_less_vector(w, rep.witness_vector))) {
          rep.value = next;
          rep.witness_vector = std::move(w);
          upper = next;
        }
      } else {
        self(self, level - 1, next);
      }
    }
    x[level] = 0;
  };
  recurse(recurse, n - 1, Rational(0));
  return rep;
}

namespace detail {

/// Every principal minor of m that uses row/column `fixed` is >= 0. Minors
/// avoiding `fixed` were checked when the smaller block was built.
inline bool psd_through(const IntMatrix& m, std::size_t fixed) {
  const std::size_t n = m.rows();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    if (!(mask & (1ul << fixed))) continue;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1ul << i)) idx.push_back(i);
    }
    if (sgn(determinant(m.select(idx, idx))) < 0) return false;
  }
  return true;
}

class LatticeSearch {
 public:
  LatticeSearch(const QuadraticForm& f, const TitsLattice& lattice, Domain domain, const SearchBudget& budget)
      : f_(f), lattice_(lattice), domain_(domain), budget_(budget), n_(f.size()) {
    const RatMatrix& a = f.matrix();
    const RatMatrix a_inv = inverse(a);
    for (std::size_t k = 0; k < n_; ++k) {
      inv_diag_.push_back(a_inv(k, k));
      std::vector<std::size_t> tail;
      for (std::size_t i = k; i < n_; ++i) tail.push_back(i);
      RatMatrix s = a.select(tail, tail);
      if (k > 0) {
        std::vector<std::size_t> head;
        for (std::size_t i = 0; i < k; ++i) head.push_back(i);
        s = s - a.select(tail, head) * inverse(a.leading(k)) * a.select(head, tail);
      }
      schur_.push_back(std::move(s));
    }
    lambda_ = eigenvalue_lower_bound(f);
  }

  MinimumReport run() {
    IntMatrix start(n_, n_);
    Rational upper = 0;
    if (domain_ == Domain::LPlus) {
      for (std::size_t i = 0; i < n_; ++i) start(i, i) = lattice_.modulus(i, i);
      upper = trace_product(f_.matrix(), start);
    } else {
      std::size_t best = 0;
      for (std::size_t i = 1; i < n_; ++i) {
        if (Rational(lattice_.modulus(i, i)) * f_(i, i) < Rational(lattice_.modulus(best, best)) * f_(best, best)) {
          best = i;
        }
      }
      start(best, best) = lattice_.modulus(best, best);
      upper = trace_product(f_.matrix(), start);
    }
    best_ = start;
    upper_ = upper;
    rep_.domain = domain_;
    rep_.search_bound_used = upper / lambda_;
    if (budget_.max_trace && siegel::floor(rep_.search_bound_used) > *budget_.max_trace) {
      throw BudgetExceeded("trace bound " + siegel::floor(rep_.search_bound_used).get_str() +
                           " exceeds the configured maximum");
    }
    b_ = IntMatrix(n_, n_);
    level(n_ - 1, Integer(0));
    rep_.value = upper_;
    rep_.witness = best_;
    return rep_;
  }

 private:
  // Rows/columns k..n-1 of b_ as a block.
  IntMatrix trailing(std::size_t k) const {
    std::vector<std::size_t> idx;
    for (std::size_t i = k; i < n_; ++i) idx.push_back(i);
    return b_.select(idx, idx);
  }

  Integer trace_cap() const { return siegel::floor(upper_ / lambda_); }

  void level(std::size_t k, const Integer& trace_so_far) {
    if (k + 1 < n_) {
      const IntMatrix rest = trailing(k + 1);
      if (determinant(rest) != 0) {
        ellipsoid_level(k, trace_so_far, rest);
        return;
      }
    }
    const Integer& m = lattice_.modulus(k, k);
    for (Integer d = 0;; d += m) {
      if (d > siegel::floor(upper_ * inv_diag_[k]) || d + trace_so_far > trace_cap()) break;
      b_(k, k) = d;
      row(k, k + 1, trace_so_far + d);
    }
    b_(k, k) = 0;
  }

  // With the block B' below row k positive definite, a row (beta, r) can
  // only beat U if s00 r^T B'^-1 r + 2 s.r + tr(S' B') <= U, where
  // S = [[s00, s^T], [s, S']] is the Schur complement for level k. That is
  // an ellipsoid in r; beta then runs upward from r^T B'^-1 r.
  void ellipsoid_level(std::size_t k, const Integer& trace_so_far, const IntMatrix& rest) {
    const std::size_t m = rest.rows();
    const RatMatrix& s = schur_[k];
    const RatMatrix w = inverse(to_rational(rest));
    std::vector<std::size_t> tail;
    for (std::size_t j = 1; j <= m; ++j) tail.push_back(j);
    const Rational c = trace_product(s.select(tail, tail), rest);
    const Rational& s00 = s(0, 0);

    RatVector r0(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) r0[i] -= Rational(rest(i, j)) * s(0, j + 1);
      r0[i] /= s00;
    }
    Rational r0_norm = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) r0_norm += r0[i] * w(i, j) * r0[j];
    }
    // Row entries are r_j = mod_j * y_j.
    std::vector<Integer> mods(m);
    RatMatrix g(m, m);
    RatVector center(m);
    for (std::size_t i = 0; i < m; ++i) {
      mods[i] = lattice_.modulus(k, k + 1 + i);
      center[i] = r0[i] / Rational(mods[i]);
    }
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) g(i, j) = w(i, j) * Rational(mods[i] * mods[j]);
    }
    const Rational rho = (upper_ - c) / s00 + r0_norm;
    const Integer& step = lattice_.modulus(k, k);

    for_each_in_ellipsoid(g, center, rho, [&](const IntVector& y) {
      Rational lin = c;
      for (std::size_t i = 0; i < m; ++i) {
        b_(k, k + 1 + i) = mods[i] * y[i];
        b_(k + 1 + i, k) = b_(k, k + 1 + i);
        lin += 2 * s(0, i + 1) * Rational(b_(k, k + 1 + i));
      }
      Rational norm = 0;
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          norm += Rational(b_(k, k + 1 + i)) * w(i, j) * Rational(b_(k, k + 1 + j));
        }
      }
      Integer beta = siegel::ceil(norm);
      beta = ((beta + step - 1) / step) * step;
      for (;; beta += step) {
        if (s00 * Rational(beta) + lin > upper_) break;
        if (beta > siegel::floor(upper_ * inv_diag_[k]) || beta + trace_so_far > trace_cap()) break;
        b_(k, k) = beta;
        close_row(k, trace_so_far + beta);
      }
    });
    b_(k, k) = 0;
    for (std::size_t i = 0; i < m; ++i) {
      b_(k, k + 1 + i) = 0;
      b_(k + 1 + i, k) = 0;
    }
  }

  void row(std::size_t k, std::size_t j, const Integer& trace_so_far) {
    if (j == n_) {
      close_row(k, trace_so_far);
      return;
    }
    const Integer& m = lattice_.modulus(k, j);
    const Integer reach = isqrt(b_(k, k) * b_(j, j));
    const Integer steps = reach / m;
    for (Integer t = -steps; t <= steps; ++t) {
      b_(k, j) = t * m;
      b_(j, k) = b_(k, j);
      row(k, j + 1, trace_so_far);
    }
    b_(k, j) = 0;
    b_(j, k) = 0;
  }

  void close_row(std::size_t k, const Integer& trace_so_far) {
    const IntMatrix block = trailing(k);
    if (!psd_through(block, 0)) return;
    if (domain_ == Domain::LPlus && determinant(block) == 0) return;
    if (domain_ == Domain::L1 && rank(block) > 1) return;
    if (trace_product(schur_[k], block) > upper_) return;
    if (k > 0) {
      level(k - 1, trace_so_far);
      return;
    }
    if (++rep_.enumerated > budget_.max_matrices) {
      throw BudgetExceeded("lattice search exceeded " + std::to_string(budget_.max_matrices) + " matrices");
    }
    if (b_.is_zero()) return;
    if (domain_ == Domain::L1 && rank(b_) != 1) return;
    const Rational value = trace_product(f_.matrix(), b_);
    if (value < upper_ || (value == upper_ && colex_less(b_, best_))) {
      upper_ = value;
      best_ = b_;
    }
  }

  const QuadraticForm& f_;
  const TitsLattice& lattice_;
  Domain domain_;
  SearchBudget budget_;
  std::size_t n_;
  std::vector<Rational> inv_diag_;
  std::vector<RatMatrix> schur_;
  Rational lambda_;
  Rational upper_;
  IntMatrix b_;
  IntMatrix best_;
  MinimumReport rep_;
};

}  // namespace detail

/// Exact minimum of (f,h) over the requested members h of L. Ties go to the
/// least witness in colex_less order (row-major, compared from the end).
inline MinimumReport lattice_minimum(const QuadraticForm& f, const TitsLattice& lattice, Domain domain,
                                     const SearchBudget& budget = SearchBudget::from_env()) {
  if (domain == Domain::IntegerVectors) throw std::invalid_argument("use arithmetic_minimum for integer vectors");
  require_positive_definite(f);
  if (f.size() != lattice.size()) throw std::invalid_argument("form and lattice sizes differ");
  return detail::LatticeSearch(f, lattice, domain, budget).run();
}

struct BncVerification {
  MinimumReport l_plus;
  MinimumReport l0;
  MinimumReport l1;
  RadicalTerm posdef_factor;
  RadicalValue c_factor;
  bool posdef_holds = false;
  bool part2_holds = false;
  std::optional<bool> principal_rank1_equality;  // set for principal lattices only
  bool naive_bound_violated = false;

  bool passed() const {
    return posdef_holds && part2_holds && principal_rank1_equality.value_or(true);
  }
};

/// Checks min_{L+} >= sqrt(3) mu^(1/n) / nu * min_{L1} and
/// min_{L0\{0}} >= C(L) * min_{L1}, exactly.
inline BncVerification verify_bnc(const QuadraticForm& f, const TitsLattice& lattice,
                                  const SearchBudget& budget = SearchBudget::from_env()) {
  BncVerification out;
  out.l_plus = lattice_minimum(f, lattice, Domain::LPlus, budget);
  out.l0 = lattice_minimum(f, lattice, Domain::L0Nonzero, budget);
  out.l1 = lattice_minimum(f, lattice, Domain::L1, budget);
  out.posdef_factor = siegel::posdef_factor(lattice);
  out.c_factor = lattice.size() >= 2 ? siegel::c_factor(lattice) : RadicalValue(Rational(1));
  out.posdef_holds = compare(RadicalTerm(out.l_plus.value), out.posdef_factor.scaled(out.l1.value)) >= 0;
  out.part2_holds = RadicalValue(out.l0.value) >= out.c_factor.scaled(out.l1.value);
  if (lattice.is_principal()) out.principal_rank1_equality = out.l0.value == out.l1.value;
  out.naive_bound_violated = out.l0.value < out.l1.value;
  return out;
}

struct RankReduction {
  QuadraticForm f;
  IntMatrix h;
  TitsLattice lattice;
  IntVector kernel_vector;
  IntMatrix transform;
  bool reduced_in_lattice = false;
};

/// Replaces (f, h) for singular h by forms in one variable fewer:
/// A' = T^-1 A T^-T and B' = T^T B T, T completing a kernel vector of h, so
/// tr(A'B') = tr(AB) and the last row and column of B' vanish.
inline RankReduction rank_reduce(const QuadraticForm& f, const IntMatrix& h, const TitsLattice& lattice) {
  const std::size_t n = f.size();
  if (h.rows() != n || lattice.size() != n) throw std::invalid_argument("rank_reduce: size mismatch");
  if (n < 2) throw std::invalid_argument("rank_reduce needs n >= 2");
  if (!lattice.contains(h)) throw std::invalid_argument("rank_reduce: h is not in the lattice");
  if (!siegel::is_positive_semidefinite(h)) throw std::invalid_argument("rank_reduce: h is not positive semi-definite");
  const auto kernel = kernel_basis(to_rational(h));
  if (kernel.empty()) throw std::invalid_argument("rank_reduce: h is nonsingular");

  IntVector v = primitive_integer_vector(kernel.front());
  for (std::size_t i = 1; i < kernel.size(); ++i) {
    IntVector w = primitive_integer_vector(kernel[i]);
    if (detail::lex_less_vector(w, v)) v = std::move(w);
  }
  const PatternedMatrix t = special_t(v, BulletPattern::d_pattern(lattice));
  const RatMatrix t_inv = inverse(to_rational(t.entries));
  const RatMatrix a_full = t_inv * f.matrix() * t_inv.transpose();
  const IntMatrix b_full = t.entries.transpose() * h * t.entries;

  RankReduction out;
  out.f = QuadraticForm(a_full.leading(n - 1));
  out.h = b_full.leading(n - 1);
  out.lattice = lattice.truncated();
  out.kernel_vector = v;
  out.transform = t.entries;
  out.reduced_in_lattice = out.lattice.contains(out.h);
  return out;
}

}  // namespace siegel
