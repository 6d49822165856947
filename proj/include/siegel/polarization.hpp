#pragma once

// Polarisation types (1, d1, d1*d2, ..., d1*...*d_{g-1}), stored by their
// steps d_i.

#include <siegel/arith.hpp>
#include <siegel/integer.hpp>

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace siegel {

class PolarizationType {
 public:
  PolarizationType() = default;

  /// Genus is steps.size() + 1; every step must be >= 1.
  explicit PolarizationType(std::vector<Integer> steps) : steps_(std::move(steps)) {
    if (steps_.empty()) throw std::invalid_argument("polarisation needs genus >= 2");
    for (const auto& d : steps_) {
      if (d < 1) throw std::invalid_argument("polarisation steps must be >= 1");
    }
  }

  /// Parses the CLI syntax "2,3" (steps, i.e. type (1,2,6)).
  static PolarizationType parse(std::string_view text) {
    return PolarizationType(parse_integer_list(text));
  }

  std::size_t genus() const { return steps_.size() + 1; }
  const std::vector<Integer>& steps() const { return steps_; }

  /// d_i, 1-based.
  const Integer& step(std::size_t i) const {
    if (i < 1 || i > steps_.size()) throw std::out_of_range("step index out of range");
    return steps_[i - 1];
  }

  /// prod_{k=i}^{j} d_k; the empty product (j < i) is 1.
  Integer d_product(std::size_t i, std::size_t j) const {
    if (i < 1) throw std::out_of_range("d_product: i must be >= 1");
    if (j < i) return 1;
    if (j > steps_.size()) throw std::out_of_range("d_product: j exceeds g-1");
    Integer out = 1;
    for (std::size_t k = i; k <= j; ++k) out *= steps_[k - 1];
    return out;
  }

  /// d_1 * ... * d_{g-1}.
  Integer total_product() const { return d_product(1, steps_.size()); }

  /// (1, d1, d1 d2, ...).
  std::vector<Integer> type_vector() const {
    std::vector<Integer> out{1};
    for (const auto& d : steps_) out.push_back(out.back() * d);
    return out;
  }

  std::string to_string() const { return join(steps_); }

  friend bool operator==(const PolarizationType&, const PolarizationType&) = default;

 private:
  std::vector<Integer> steps_;
};

inline Integer d_product(const PolarizationType& t, std::size_t i, std::size_t j) {
  return t.d_product(i, j);
}

/// gcd(d_i, d_j) = 1 for all i != j.
inline bool is_coprime_type(const PolarizationType& t) {
  const auto& s = t.steps();
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (gcd(s[i], s[j]) != 1) return false;
    }
  }
  return true;
}

inline bool is_squarefree_type(const PolarizationType& t) {
  return std::all_of(t.steps().begin(), t.steps().end(),
                     [](const Integer& d) { return is_squarefree(d); });
}

inline PolarizationType reverse(const PolarizationType& t) {
  std::vector<Integer> s(t.steps().rbegin(), t.steps().rend());
  return PolarizationType(std::move(s));
}

/// e_i = d_i * s_i^2 step-wise.
struct SquarefreeReduction {
  PolarizationType reduced;
  std::vector<Integer> scales;
};

inline SquarefreeReduction squarefree_reduce(const PolarizationType& t) {
  std::vector<Integer> reduced;
  std::vector<Integer> scales;
  for (const auto& e : t.steps()) {
    const auto parts = squarefree_decompose(e);
    reduced.push_back(parts.squarefree);
    scales.push_back(parts.scale);
  }
  return {PolarizationType(std::move(reduced)), std::move(scales)};
}

}  // namespace siegel
