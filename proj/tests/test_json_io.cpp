#include <siegel/json_io.hpp>
#include <siegel/tables.hpp>

#include <gtest/gtest.h>

using namespace siegel;

TEST(JsonIo, IntegersRoundTrip) {
  for (const char* s : {"0", "-7", "9223372036854775807", "123456789012345678901234567890", "-99999999999999999999"}) {
    const Integer n(s);
    const Json j = json_integer(n);
    EXPECT_EQ(integer_from_json(Json::parse(j.dump())), n) << s;
  }
  EXPECT_TRUE(json_integer(Integer(5)).is_number_integer());
  EXPECT_TRUE(json_integer(Integer("123456789012345678901234567890")).is_string());
  EXPECT_THROW(integer_from_json(Json(1.5)), std::invalid_argument);
}

TEST(JsonIo, RationalsRoundTrip) {
  for (const Rational& q : {Rational(0), Rational(-14, 17), Rational(3), Rational(Integer("10000000000000000000001"), 3)}) {
    EXPECT_EQ(rational_from_json(Json::parse(json_rational(q).dump())), q);
  }
  EXPECT_EQ(json_rational(Rational(-14, 17)), Json("-14/17"));
}

TEST(JsonIo, MatricesRoundTrip) {
  const IntMatrix m{{6, 17}, {17, 51}};
  EXPECT_EQ(int_matrix_from_json(Json::parse(json_matrix(m).dump())), m);
  EXPECT_THROW(int_matrix_from_json(Json::parse("[[1,2],[3]]")), std::invalid_argument);
}

TEST(JsonIo, RadicalRoundTrip) {
  const RadicalTerm t(Rational(9, 4), 9, 3, true);
  const Json j = to_json(t);
  EXPECT_EQ(j.at("q"), "9/4");
  EXPECT_EQ(j.at("P"), 9);
  EXPECT_EQ(j.at("r"), 3);
  const RadicalTerm back_term = radical_term_from_json(Json::parse(j.dump()));
  EXPECT_EQ(back_term.coeff, t.coeff);
  EXPECT_EQ(back_term.radicand, t.radicand);
  EXPECT_EQ(back_term.index, t.index);
  EXPECT_EQ(back_term.over_sqrt3, t.over_sqrt3);

  const auto v = RadicalValue::min_of({t, RadicalTerm(Rational(5, 2))});
  const auto back = radical_value_from_json(Json::parse(to_json(v).dump()));
  EXPECT_EQ(back, v);
  EXPECT_EQ(back.combiner(), Combiner::Min);
  EXPECT_EQ(back.terms().size(), 2u);
}

TEST(JsonIo, BoundReportFields) {
  const auto r = minimal_level(PolarizationType::parse("2,3"));
  const Json j = Json::parse(to_json(r).dump());
  EXPECT_EQ(j.at("final_n"), 7);
  EXPECT_EQ(j.at("genus"), 3);
  EXPECT_EQ(j.at("type"), Json::parse("[1,2,6]"));
  EXPECT_EQ(j.at("chi_weight"), "18");
  EXPECT_EQ(j.at("chi_vanishing"), "2");
  EXPECT_TRUE(j.at("hypotheses_met").get<bool>());
  EXPECT_EQ(radical_value_from_json(j.at("threshold")), *r.threshold);
  EXPECT_EQ(radical_value_from_json(j.at("c_values").at("forward")), *r.c_forward);
  EXPECT_EQ(j.at("adjustments").at("gcd_incremented_by"), 0);

  const Json bad = to_json(minimal_level(PolarizationType::parse("1,2")));
  EXPECT_FALSE(bad.at("hypotheses_met").get<bool>());
  EXPECT_TRUE(bad.at("final_n").is_null());
  EXPECT_TRUE(bad.at("failure").is_string());
}

TEST(JsonIo, MinimumReportRoundTrip) {
  const QuadraticForm f(RatMatrix{{Rational(3), Rational(-14, 17)}, {Rational(-14, 17), Rational(4, 17)}});
  const auto r = lattice_minimum(f, TitsLattice(std::vector<Integer>{17}), Domain::L1);
  const auto back = minimum_report_from_json(Json::parse(to_json(r).dump()));
  EXPECT_EQ(back.value, r.value);
  EXPECT_EQ(back.witness, r.witness);
  EXPECT_EQ(back.domain, r.domain);
  EXPECT_EQ(back.enumerated, r.enumerated);

  const auto a = arithmetic_minimum(f);
  const auto aback = minimum_report_from_json(Json::parse(to_json(a).dump()));
  EXPECT_EQ(aback.witness_vector, a.witness_vector);
  EXPECT_EQ(aback.value, a.value);
}

TEST(JsonIo, TableJsonShape) {
  const Json j = Json::parse(emit_table(TableFamily::SByT, TableFormat::Json));
  EXPECT_EQ(j.at("family"), "s-by-t");
  EXPECT_EQ(j.at("rows").size(), 10u);
  EXPECT_EQ(j.at("columns").size(), 10u);
  // s = 1, t = 2 is excluded; s = 5, t = 2 is "(11)".
  EXPECT_TRUE(j.at("cells")[0][1].is_null());
  EXPECT_EQ(j.at("cells")[4][1].at("n"), 11);
  EXPECT_TRUE(j.at("cells")[4][1].at("gcd_adjusted").get<bool>());
}

TEST(JsonIo, CsvQuoting) {
  EXPECT_EQ(csv_field("7"), "7");
  EXPECT_EQ(csv_field("(11)"), "(11)");
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}
