#include <roughpi/numeric.hpp>
#include <roughpi/polynomial.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace roughpi;

namespace {

// Dense reference arithmetic over plain vectors.
using Dense = std::vector<long long>;

Dense dense_mul(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) return {};
  Dense r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Dense dense_add(Dense a, const Dense& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}

IntPolynomial from_dense(const Dense& d) {
  IntPolynomial p;
  for (std::size_t i = 0; i < d.size(); ++i) p.add_term(i, d[i]);
  return p;
}

Dense random_dense(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 12), coef(-5, 5), zero(0, 2);
  Dense d(len(rng));
  for (auto& c : d) c = zero(rng) == 0 ? 0 : coef(rng);
  return d;
}

}  // namespace

TEST(Polynomial, CanonicalString) {
  IntPolynomial p{{0, 1}, {3, 2}, {6, -1}};
  EXPECT_EQ(p.to_string(), "1 + 2*x^3 - x^6");
  EXPECT_EQ(IntPolynomial().to_string(), "0");
  EXPECT_EQ((IntPolynomial{{1, -1}}).to_string(), "-x");
  EXPECT_EQ(IntPolynomial::binomial(-1, 4).to_string(), "1 - x^4");
}

TEST(Polynomial, ZeroCoefficientsVanish) {
  IntPolynomial p{{2, 3}, {2, -3}, {5, 1}};
  EXPECT_EQ(p.term_count(), 1u);
  EXPECT_EQ(p.degree(), 5u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(IntPolynomial().degree(), 0u);
}

TEST(Polynomial, RingAxiomsAgainstDenseOracle) {
  std::mt19937 rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    Dense a = random_dense(rng), b = random_dense(rng), c = random_dense(rng);
    IntPolynomial A = from_dense(a), B = from_dense(b), C = from_dense(c);
    EXPECT_EQ(A * B, from_dense(dense_mul(a, b)));
    EXPECT_EQ(A + B, from_dense(dense_add(a, b)));
    EXPECT_EQ(A * B, B * A);
    EXPECT_EQ((A * B) * C, A * (B * C));
    EXPECT_EQ(A * (B + C), A * B + A * C);
    EXPECT_EQ(A - A, IntPolynomial());
  }
}

TEST(Polynomial, ExactDivisionRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Dense a = random_dense(rng), b = random_dense(rng);
    IntPolynomial A = from_dense(a), B = from_dense(b);
    if (B.is_zero() || A.is_zero()) continue;
    if (abs(B.leading_coefficient()) != 1) B.add_term(B.degree() + 1, 1);
    EXPECT_EQ((A * B).exact_div(B), A);
    EXPECT_TRUE(B.divides(A * B));
  }
}

TEST(Polynomial, ExactDivisionRemainder) {
  const auto num = IntPolynomial::binomial(+1, 4);
  EXPECT_THROW(num.exact_div(IntPolynomial::binomial(-1, 2)), RemainderError);
  EXPECT_FALSE(IntPolynomial::binomial(-1, 2).divides(num));
  EXPECT_TRUE(IntPolynomial::binomial(-1, 3).divides(IntPolynomial::binomial(-1, 30)));
  EXPECT_TRUE(IntPolynomial::binomial(+1, 10).divides(IntPolynomial::binomial(+1, 30)));
  EXPECT_TRUE(IntPolynomial::binomial(+1, 6).divides(IntPolynomial::binomial(+1, 30)));  // 30/6 odd
  EXPECT_FALSE(IntPolynomial::binomial(+1, 10).divides(IntPolynomial::binomial(+1, 20)));
}

TEST(Polynomial, ComposeAndShift) {
  IntPolynomial p{{0, 1}, {1, -2}, {3, 4}};
  EXPECT_EQ(p.compose_power(3), (IntPolynomial{{0, 1}, {3, -2}, {9, 4}}));
  EXPECT_EQ(p.shifted(2), (IntPolynomial{{2, 1}, {3, -2}, {5, 4}}));
  EXPECT_THROW(p.compose_power(0), DomainError);
  EXPECT_EQ(p.value_at_one(), 3);
}

TEST(Polynomial, Palindrome) {
  EXPECT_TRUE((IntPolynomial{{0, 1}, {2, -1}, {4, 1}}).is_palindromic(4));
  EXPECT_FALSE((IntPolynomial{{0, 1}, {2, -1}}).is_palindromic(2));
  EXPECT_TRUE((IntPolynomial{{1, 1}, {3, 1}}).is_palindromic(4));
}

TEST(Polynomial, BigCoefficientsSurvive) {
  IntPolynomial p = IntPolynomial::binomial(+1, 1);
  IntPolynomial q = IntPolynomial::constant(1);
  for (int i = 0; i < 80; ++i) q *= p;
  EXPECT_EQ(q.value_at_one(), bigint(1) << 80);
  EXPECT_GT(q.max_abs_coefficient(), bigint(std::numeric_limits<long long>::max()));
  nlohmann::json j = q;
  EXPECT_EQ(j.get<IntPolynomial>(), q);
}

TEST(Polynomial, JsonRoundTrip) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    IntPolynomial A = from_dense(random_dense(rng));
    nlohmann::json j = A;
    EXPECT_EQ(j.get<IntPolynomial>(), A);
    EXPECT_EQ(nlohmann::json::parse(j.dump()).get<IntPolynomial>(), A);
  }
}

TEST(Polynomial, EvaluateMatchesDouble) {
  IntPolynomial p{{0, 1}, {2, -3}, {7, 2}};
  const double x = 0.37;
  const double expect = 1 - 3 * x * x + 2 * std::pow(x, 7);
  EXPECT_NEAR(static_cast<double>(p.evaluate<real50>(real50(x))), expect, 1e-15);
}
