#pragma once

// JSON encodings. Integers that fit in 64 bits are JSON numbers, larger ones
// strings; rationals are "p/q" strings. Decimal fields are informational only.

#include <siegel/bound.hpp>
#include <siegel/form_minima.hpp>
#include <siegel/integer.hpp>
#include <siegel/matrix.hpp>
#include <siegel/radical.hpp>

#include <json.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>

namespace siegel {

using Json = nlohmann::ordered_json;

inline Json json_integer(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

inline Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw std::invalid_argument("expected an integer");
}

inline Json json_rational(const Rational& q) { return q.get_str(); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational");
}

inline std::string decimal(long double x, int digits = 12) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*Lg", digits, x);
  return buf;
}

inline Json json_int_vector(const IntVector& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(json_integer(x));
  return j;
}

inline IntVector int_vector_from_json(const Json& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

inline Json json_matrix(const IntMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(json_integer(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

inline Json json_matrix(const RatMatrix& m) {
  Json j = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(json_rational(m(i, k)));
    j.push_back(std::move(row));
  }
  return j;
}

inline IntMatrix int_matrix_from_json(const Json& j) {
  IntMatrix m(j.size(), j.empty() ? 0 : j.front().size());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (j[i].size() != m.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = integer_from_json(j[i][k]);
  }
  return m;
}

inline Json to_json(const RadicalTerm& t) {
  return Json{{"q", json_rational(t.coeff)},
              {"P", json_integer(t.radicand)},
              {"r", t.index},
              {"over_sqrt3", t.over_sqrt3}};
}

inline RadicalTerm radical_term_from_json(const Json& j) {
  return RadicalTerm(rational_from_json(j.at("q")), integer_from_json(j.at("P")), j.at("r").get<unsigned long>(),
                     j.at("over_sqrt3").get<bool>());
}

inline Json to_json(const RadicalValue& v) {
  Json terms = Json::array();
  for (const auto& t : v.terms()) terms.push_back(to_json(t));
  return Json{{"combiner", to_string(v.combiner())},
              {"terms", std::move(terms)},
              {"text", v.to_string()},
              {"decimal", decimal(v.approx())}};
}

inline RadicalValue radical_value_from_json(const Json& j) {
  std::vector<RadicalTerm> terms;
  for (const auto& t : j.at("terms")) terms.push_back(radical_term_from_json(t));
  const auto c = j.at("combiner").get<std::string>();
  if (c != "min" && c != "max") throw std::invalid_argument("unknown combiner " + c);
  return RadicalValue(std::move(terms), c == "min" ? Combiner::Min : Combiner::Max);
}

inline Json to_json(const BoundReport& r) {
  Json j;
  j["steps"] = json_int_vector(r.type.steps());
  j["genus"] = r.type.genus();
  j["type"] = json_int_vector(r.type.type_vector());
  j["options"] = {{"enforce_gcd", r.options.enforce_gcd},
                  {"enforce_min3", r.options.enforce_min3},
                  {"reduce_squarefree", r.options.reduce_squarefree}};
  j["reduced_steps"] = r.reduced_type ? json_int_vector(r.reduced_type->steps()) : Json(nullptr);
  j["squarefree_scales"] = r.squarefree_scales ? json_int_vector(*r.squarefree_scales) : Json(nullptr);
  j["hypotheses_met"] = r.hypotheses_met;
  j["failure"] = r.hypotheses_met ? Json(nullptr) : Json(r.failure);
  j["chi_weight"] = json_rational(r.chi.weight);
  j["chi_vanishing"] = json_rational(r.chi.vanishing);
  j["prefactor"] = r.prefactor ? json_rational(*r.prefactor) : Json(nullptr);
  j["c_values"] = r.c_forward ? Json{{"forward", to_json(*r.c_forward)}, {"reversed", to_json(*r.c_reversed)}}
                              : Json(nullptr);
  j["orientation"] = r.hypotheses_met ? Json(to_string(r.orientation)) : Json(nullptr);
  j["threshold"] = r.threshold ? to_json(*r.threshold) : Json(nullptr);
  j["raw_n"] = r.raw_n ? json_integer(*r.raw_n) : Json(nullptr);
  j["adjustments"] = {{"min3_applied", r.min3_applied}, {"gcd_incremented_by", r.gcd_incremented_by}};
  j["final_n"] = r.final_n ? json_integer(*r.final_n) : Json(nullptr);
  return j;
}

inline Json to_json(const MinimumReport& r) {
  Json j;
  j["domain"] = to_string(r.domain);
  j["value"] = json_rational(r.value);
  if (r.domain == Domain::IntegerVectors) {
    j["witness"] = json_int_vector(r.witness_vector);
  } else {
    j["witness"] = json_matrix(r.witness);
  }
  j["search_bound_used"] = json_rational(r.search_bound_used);
  j["enumerated"] = r.enumerated;
  return j;
}

inline Domain domain_from_string(const std::string& s) {
  for (Domain d : {Domain::LPlus, Domain::L0Nonzero, Domain::L1, Domain::IntegerVectors}) {
    if (s == to_string(d)) return d;
  }
  throw std::invalid_argument("unknown domain " + s);
}

inline MinimumReport minimum_report_from_json(const Json& j) {
  MinimumReport r;
  r.domain = domain_from_string(j.at("domain").get<std::string>());
  r.value = rational_from_json(j.at("value"));
  if (r.domain == Domain::IntegerVectors) {
    r.witness_vector = int_vector_from_json(j.at("witness"));
  } else {
    r.witness = int_matrix_from_json(j.at("witness"));
  }
  r.search_bound_used = rational_from_json(j.at("search_bound_used"));
  r.enumerated = j.at("enumerated").get<unsigned long long>();
  return r;
}

}  // namespace siegel
