#include <roughpi/catalog.hpp>
#include <roughpi/evaluator.hpp>

#include <boost/math/constants/constants.hpp>
#include <gtest/gtest.h>

using namespace roughpi;

namespace {

const Catalog& cat() {
  static const Catalog c = builtin_catalog();
  return c;
}

double d(const real50& x) { return static_cast<double>(x); }

}  // namespace

TEST(Constants, AgreeWithBoost) {
  using boost::math::constants::pi;
  EXPECT_LT(abs_of(real50(constants::pi<real50>() - pi<real50>())), real50(1e-48));
  EXPECT_LT(abs_of(real100(constants::pi<real100>() - pi<real100>())), real100(1e-98));
  const real50 x("0.7");
  EXPECT_LT(abs_of(real50(constants::sqrt(x) - sqrt(x))), real50(1e-48));
  EXPECT_LT(abs_of(real50(constants::log(real50(3.5)) - log(real50(3.5)))), real50(1e-48));
  EXPECT_LT(abs_of(real50(constants::sin(x) - sin(x))), real50(1e-48));
  EXPECT_LT(abs_of(real50(constants::cos(x) - cos(x))), real50(1e-48));
}

TEST(Numeric, CompensatedSumRecoversSmallTerms) {
  CompensatedSum<double> s;
  s += 1.0;
  for (int i = 0; i < 1000; ++i) s += 1e-16;
  s += -1.0;
  EXPECT_NEAR(s.value(), 1e-13, 1e-20);
}

TEST(Gauss, ExactForDegree39) {
  const auto& rule = detail::gauss_legendre_20<real50>();
  real50 sum = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    real50 x = (rule.nodes[i] + 1) / 2;
    sum += rule.weights[i] * pow(x, 39) / 2;
  }
  EXPECT_LT(abs_of(real50(sum - real50(1) / 40)), real50(1e-45));
}

TEST(Residue, PoleSet) {
  auto ps = pole_set<real50>(30);
  ASSERT_EQ(ps.angles.size(), 15u);
  EXPECT_NEAR(d(ps.angles.front()), M_PI / 30, 1e-15);
  EXPECT_NEAR(d(ps.angles.back()), 29 * M_PI / 30, 1e-15);
  EXPECT_THROW(pole_set<real50>(7), NotResidueEligible);
}

TEST(Residue, FamilyValues) {
  const real50 pi = constants::pi<real50>();
  auto r = residue_eval<real50>(cat().at("S7-f").integrand);
  EXPECT_LT(abs_of(real50(r.value - 4 * pi / 15)), real50(1e-45));
  EXPECT_LT(r.imag_leak, real50(1e-45));
  r = residue_eval<real50>(cat().at("S11-f").integrand);
  EXPECT_LT(abs_of(real50(r.value - 32 * pi / 105)), real50(1e-45));
  r = residue_eval<real50>(cat().at("S3-f").integrand);
  EXPECT_LT(abs_of(real50(r.value - pi / 4)), real50(1e-45));
}

// Independent oracle for P = 30: integral of x^e/(1+x^30) over [0, inf) is (pi/30)/sin((e+1)pi/30),
// and for the symmetric numerator the [0,1] integral is half of that.
TEST(Residue, MatchesMellinOracleForPeriod30) {
  for (const char* id : {"S7-f", "ss0", "ss2", "ss3"}) {
    const auto& g = cat().at(id).integrand;
    real50 oracle = 0;
    const real50 pi = boost::math::constants::pi<real50>();
    for (const auto& [e, c] : g.numerator().terms()) oracle += real50(c) * (pi / 30) / sin(pi * (e + 1) / 30);
    oracle /= 2;
    EXPECT_LT(abs_of(real50(residue_eval<real50>(g).value - oracle)), real50(1e-45)) << id;
  }
}

TEST(Residue, OrderIndependent) {
  for (const char* id : {"S7-f", "S11-f", "ss0"}) {
    const auto& g = cat().at(id).integrand;
    auto a = residue_eval<real50>(g, false).value, b = residue_eval<real50>(g, true).value;
    EXPECT_LT(abs_of(real50(a - b)), real50(1e-45)) << id;
  }
}

TEST(Residue, Eligibility) {
  EXPECT_THROW(residue_eval<real50>(cat().at("ss6").integrand), NotResidueEligible);
  EXPECT_THROW(residue_eval<real50>(cat().at("S5-g").integrand), NotResidueEligible);
  EXPECT_THROW(residue_eval<real50>(cat().at("S5-h").integrand), SymmetryError);
  EXPECT_THROW(residue_eval<real50>(cat().at("S7-h").integrand), SymmetryError);
  EXPECT_THROW(residue_eval<real50>(Integrand::from_factors({{+1, 3}}, +1, 5)), NotResidueEligible);
  EXPECT_THROW(residue_eval<real50>(Integrand::from_numerator(IntPolynomial{{0, 1}, {1, 1}}, +1, 4)), SymmetryError);
}

TEST(Quadrature, RemovableSingularity) {
  const auto r = reduce_for_quadrature(cat().at("S5-g").integrand);
  // (1-x^4)/(1-x^6) = (1+x^2)/(1+x^2+x^4)
  EXPECT_EQ(r.numerator, (IntPolynomial{{0, 1}, {2, 1}}));
  EXPECT_EQ(r.denominator, (IntPolynomial{{0, 1}, {2, 1}, {4, 1}}));
  EXPECT_THROW(reduce_for_quadrature(Integrand::from_factors({{+1, 6}, {+1, 10}, {+1, 12}}, -1, 30)), PoleOnPath);
}

TEST(Quadrature, MatchesResidueOnEligibleFormulas) {
  for (const auto& [id, f] : cat().formulas) {
    try {
      check_residue_eligible(f.integrand);
    } catch (const Error&) {
      continue;
    }
    auto q = quadrature<real50>(f.integrand, real50(1e-30));
    auto r = residue_eval<real50>(f.integrand);
    EXPECT_LT(abs_of(real50(q.value - r.value)), real50(1e-29)) << id;
  }
}

TEST(Quadrature, ErrorEstimateIsConservative) {
  const real50 pi = constants::pi<real50>();
  for (double tol : {1e-8, 1e-15, 1e-25}) {
    auto q = quadrature<real50>(cat().at("S3-f").integrand, real50(tol));
    EXPECT_LT(q.error_estimate, real50(tol));
    EXPECT_LT(abs_of(real50(q.value - pi / 4)), real50(tol));
  }
}

TEST(Quadrature, ToleranceErrors) {
  EXPECT_THROW(quadrature<real50>(cat().at("S3-f").integrand, real50(1e-60)), ToleranceError);
  QuadratureOptions tight{2};
  try {
    quadrature<real50>(cat().at("S11-f").integrand, real50(1e-40), tight);
    FAIL() << "expected ToleranceError";
  } catch (const ToleranceError& e) {
    EXPECT_FALSE(e.best_estimate().empty());
  }
}

TEST(Quadrature, RemovableSingularityValue) {
  const real50 pi = constants::pi<real50>();
  auto q = quadrature<real50>(cat().at("S5-g").integrand, real50(1e-30));
  EXPECT_LT(abs_of(real50(q.value - pi * constants::sqrt(real50(3)) / 6)), real50(1e-29));
}

TEST(Quadrature, ScaleLaw) {
  auto parent = quadrature<real50>(cat().at("S7-f").integrand, real50(1e-30)).value;
  auto child = quadrature<real50>(cat().at("S11-f").integrand, real50(1e-30)).value;
  EXPECT_LT(abs_of(real50(child - parent * 8 / 7)), real50(1e-29));
}

TEST(Series, EulerAverageOnLeibniz) {
  std::vector<real50> t;
  for (int j = 0; j < 42; ++j) t.push_back(real50(1) / (2 * j + 1));
  EXPECT_LT(abs_of(real50(detail::euler_average(t, 20) - constants::pi<real50>() / 4)), real50(1e-12));
}

TEST(Series, AgreesWithQuadrature) {
  for (const auto& [id, f] : cat().formulas) {
    auto q = quadrature<real50>(f.integrand, real50(1e-25));
    auto s = series_sum<real50>(f.integrand, f.k, real50(1e-16));
    EXPECT_LT(abs_of(real50(s.value - q.value)), real50(1e-6)) << id;
    EXPECT_LE(s.blocks, 10000u) << id;
  }
}

TEST(Series, LeibnizTight) {
  auto s = series_sum<real50>(cat().at("S3-f").integrand, 3, real50(1e-16));
  EXPECT_LT(abs_of(real50(s.value - constants::pi<real50>() / 4)), real50(1e-8));
}

TEST(Series, RepeatingBlocks) {
  auto s = series_sum<real50>(cat().at("S5-g").integrand, 5, real50(1e-16));
  EXPECT_LT(abs_of(real50(s.value - constants::pi<real50>() * constants::sqrt(real50(3)) / 6)), real50(1e-12));
}

TEST(Series, Failures) {
  // Divergent: every block of 1/(1-x^2) = 1 + x^2 + ... adds a positive amount.
  EXPECT_THROW(series_sum<real50>(Integrand::from_factors({}, -1, 2), 3, real50(1e-10)), PoleOnPath);
  EXPECT_THROW(series_sum<real50>(cat().at("S3-f").integrand, 3, real50(1e-60)), ToleranceError);
  SeriesOptions few{20, 30};
  try {
    series_sum<real50>(cat().at("S3-f").integrand, 3, real50(1e-40), few);
    FAIL() << "expected ToleranceError";
  } catch (const ToleranceError& e) {
    EXPECT_FALSE(e.best_estimate().empty());
  }
}
