#include <roughpi/catalog.hpp>
#include <roughpi/recognizer.hpp>

#include <gtest/gtest.h>

using namespace roughpi;

TEST(ClosedForm, CanonicalStrings) {
  EXPECT_EQ(ClosedForm::pi_sqrt(rational(4, 15)).to_string(), "4*pi/15");
  EXPECT_EQ(ClosedForm::pi_sqrt(rational(1, 4)).to_string(), "pi/4");
  EXPECT_EQ(ClosedForm::pi_sqrt(rational(1, 15), {25, -2, 5}).to_string(), "pi/15*sqrt(25-2*sqrt(5))");
  EXPECT_EQ(ClosedForm::pi_sqrt(rational(1, 3), {1, 1, 2}).to_string(), "pi/3*sqrt(1+sqrt(2))");
  EXPECT_EQ(ClosedForm::log_form(rational(2, 5)).to_string(), "(2*sqrt(3)/5)*log(2+sqrt(3))");
  EXPECT_EQ(ClosedForm::log_form(rational(1, 3)).to_string(), "(sqrt(3)/3)*log(2+sqrt(3))");
  EXPECT_EQ(ClosedForm::pi_trig(rational(4, 15), 3, Trig::cos, 1, 10).to_string(), "4*pi/15*sqrt(3)*cos(pi/10)");
  EXPECT_EQ(ClosedForm::pi_trig(rational(1, 2), 1, Trig::sin, 2, 5).to_string(), "pi/2*sin(2*pi/5)");
}

TEST(ClosedForm, EvaluateKnownValues) {
  EXPECT_NEAR(static_cast<double>(evaluate<real50>(ClosedForm::pi_sqrt(rational(1, 4)))), 0.7853981633974483, 1e-15);
  EXPECT_NEAR(static_cast<double>(evaluate<real50>(ClosedForm::log_form(rational(1, 3)))), 0.7603459963009463, 1e-15);
  EXPECT_NEAR(static_cast<double>(evaluate<real50>(ClosedForm::pi_sqrt(rational(1, 15), {25, -2, 5}))),
              0.9489219551645615, 1e-15);
}

TEST(Recognize, RationalConvergents) {
  auto q = detail::rationalize(real50(4) / 15, 10000);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, rational(4, 15));
  q = detail::rationalize(real50(-355) / 113, 10000);
  ASSERT_TRUE(q);
  EXPECT_EQ(*q, rational(-355, 113));
}

TEST(Recognize, RoundTripsCatalogForms) {
  for (const auto& [id, f] : builtin_catalog().formulas) {
    if (!f.expected) continue;
    auto got = recognize<real50>(evaluate<real50>(*f.expected), real50(1e-10));
    ASSERT_TRUE(got) << id;
    EXPECT_EQ(got->to_string(), f.expected->to_string()) << id;
  }
}

TEST(Recognize, NoFormForGenericNumbers) {
  EXPECT_FALSE(recognize<real50>(real50("0.1234567890"), real50(1e-10)));
  EXPECT_FALSE(recognize<real50>(real50(0), real50(1e-10)));
  EXPECT_FALSE(recognize<real50>(real50("1.0655543205039403067"), real50(1e-10)));
}

TEST(Recognize, LooseToleranceIsAmbiguous) {
  try {
    recognize<real50>(constants::pi<real50>() / 4, real50(1e-3));
    FAIL() << "expected AmbiguousMatch";
  } catch (const AmbiguousMatch& e) {
    EXPECT_GE(e.candidates().size(), 2u);
  }
}

TEST(Recognize, TighterToleranceNeverAddsMatches) {
  // A value recognized at some tolerance stays recognized, identically, when tightened.
  const real50 v = evaluate<real50>(ClosedForm::pi_sqrt(rational(2, 15), {5, 0, 0}));
  auto loose = recognize<real50>(v, real50(1e-8));
  for (double tol : {1e-10, 1e-14, 1e-19}) {
    auto tight = recognize<real50>(v, real50(tol));
    ASSERT_TRUE(tight);
    EXPECT_EQ(*tight, *loose);
  }
  // Perturbed beyond tolerance: nothing.
  EXPECT_FALSE(recognize<real50>(v + real50(1e-9), real50(1e-12)));
  EXPECT_THROW(recognize<real50>(v, real50(1e-25)), DomainError);
}

TEST(Recognize, NegativeValues) {
  auto got = recognize<real50>(-constants::pi<real50>() / 4, real50(1e-12));
  ASSERT_TRUE(got);
  EXPECT_EQ(got->to_string(), "-pi/4");
}

TEST(ClosedForm, JsonRoundTrip) {
  for (const auto& [id, f] : builtin_catalog().formulas) {
    if (!f.expected) continue;
    auto j = to_json(*f.expected);
    EXPECT_EQ(closed_form_from_json(j), *f.expected) << id;
    EXPECT_EQ(j.at("expr"), f.expected->to_string());
  }
  auto bad = to_json(ClosedForm::pi_sqrt(rational(1, 4)));
  bad["expr"] = "pi/5";
  EXPECT_THROW(closed_form_from_json(bad), DomainError);
}
