#include <roughpi/rough_core.hpp>

#include <gtest/gtest.h>

#include <numeric>

using namespace roughpi;

namespace {

// Trial division written independently of the library.
bool oracle_rough(u64 n, u64 k) {
  for (u64 d = 2; d < k; ++d)
    if (n % d == 0) {
      bool prime = true;
      for (u64 e = 2; e * e <= d; ++e)
        if (d % e == 0) prime = false;
      if (prime) return false;
    }
  return true;
}

std::vector<u64> oracle_prefix(u64 k, u64 limit) {
  std::vector<u64> v;
  for (u64 n = 1; n <= limit; ++n)
    if (oracle_rough(n, k)) v.push_back(n);
  return v;
}

}  // namespace

TEST(RoughCore, Primes) {
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
  EXPECT_EQ(next_prime(7), 11u);
  EXPECT_EQ(next_prime(13), 17u);
  EXPECT_EQ(primes_below(13), (std::vector<u64>{2, 3, 5, 7, 11}));
}

TEST(RoughCore, Primorial) {
  EXPECT_EQ(primorial(2), 1u);
  EXPECT_EQ(primorial(3), 2u);
  EXPECT_EQ(primorial(5), 6u);
  EXPECT_EQ(primorial(7), 30u);
  EXPECT_EQ(primorial(11), 210u);
  EXPECT_EQ(primorial(13), 2310u);
  EXPECT_THROW(primorial(4), DomainError);
}

TEST(RoughCore, TotientMatchesCountOfCoprimes) {
  for (u64 n = 1; n <= 300; ++n) {
    u64 count = 0;
    for (u64 r = 1; r <= n; ++r) count += std::gcd(r, n) == 1;
    EXPECT_EQ(totient(n), count) << n;
  }
}

TEST(RoughCore, PrefixMatchesTrialDivision) {
  for (u64 k : {2u, 3u, 5u, 7u, 11u, 13u}) EXPECT_EQ(rough_prefix(k, 2000).elements, oracle_prefix(k, 2000)) << k;
}

TEST(RoughCore, PrintedPrefixes) {
  const std::vector<u64> s5{1, 5, 7, 11, 13, 17, 19};
  auto p = rough_prefix(5, 19).elements;
  EXPECT_EQ(p, s5);
  const std::vector<u64> s7{1, 7, 11, 13, 17, 19, 23, 29, 31};
  EXPECT_EQ(rough_prefix(7, 31).elements, s7);
}

TEST(RoughCore, RejectsBadK) {
  EXPECT_THROW(rough_prefix(1, 10), DomainError);
  EXPECT_THROW(rough_prefix(9, 10), DomainError);
  EXPECT_THROW(rough_prefix(0, 10), DomainError);
  try {
    rough_prefix(1, 10);
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("S_1"), std::string::npos);
  }
}

TEST(RoughCore, RefineIsNextRoughSet) {
  for (u64 k : {2u, 3u, 5u, 7u, 11u}) {
    auto s = rough_prefix(k, 5000);
    EXPECT_EQ(refine(s, k), rough_prefix(next_prime(k), 5000)) << k;
  }
}

TEST(RoughCore, RefineRejectsCorruptInput) {
  auto s = rough_prefix(5, 100);
  auto bad = s;
  bad.elements.push_back(102);  // beyond limit and even
  EXPECT_THROW(refine(bad, 5), IntegrityError);
  bad = s;
  bad.elements[3] = 9;  // divisible by 3
  EXPECT_THROW(refine(bad, 5), IntegrityError);
  EXPECT_THROW(refine(s, 7), IntegrityError);
}

TEST(RoughCore, GroupOrders) {
  const std::pair<u64, u64> expect[] = {{3, 1}, {5, 2}, {7, 8}, {11, 48}, {13, 480}};
  for (auto [k, order] : expect) {
    auto g = mmg(k);
    EXPECT_EQ(g.order(), order) << k;
    EXPECT_EQ(g.modulus, primorial(k));
    EXPECT_TRUE(is_closed(g)) << k;
    for (u64 e : g.elements) EXPECT_EQ(std::gcd(e, g.modulus), 1u);
  }
}

TEST(RoughCore, GroupElementsForSeven) {
  EXPECT_EQ(mmg(7).elements, (std::vector<u64>{1, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(mmg(5).elements, (std::vector<u64>{1, 5}));
  EXPECT_EQ(mmg(3).elements, (std::vector<u64>{1}));
}

TEST(RoughCore, BFile) {
  EXPECT_EQ(to_bfile({1, 5, 7}), "1 1\n2 5\n3 7\n");
  EXPECT_EQ(to_bfile({4}, 0), "0 4\n");
}
