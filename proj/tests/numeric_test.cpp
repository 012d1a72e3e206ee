#include <gtest/gtest.h>

#include <limits>

#include "permcensus/numeric.hpp"

using namespace permcensus;

namespace {

// Independent of mpz_fac_ui.
Count product_factorial(std::uint64_t n)
{
  Count r = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    r *= static_cast<unsigned long>(i);
  return r;
}

std::vector<PrimePower> trial_division(std::uint64_t q)
{
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; q > 1; ++p) {
    PrimePower pp{p, 0, 1};
    while (q % p == 0) {
      q /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    if (pp.exponent > 0)
      out.push_back(pp);
  }
  return out;
}

} // namespace

TEST(Factorial, SmallValues)
{
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(4), 24);
  EXPECT_EQ(factorial(20).get_str(), "2432902008176640000");
}

TEST(Factorial, MatchesIteratedProduct)
{
  for (std::uint64_t n : {0, 1, 7, 20, 21, 57, 300})
    EXPECT_EQ(factorial(n), product_factorial(n)) << n;
  EXPECT_EQ(factorial(300).get_str().size(), 615u);
}

TEST(FactorPrimePowers, Examples)
{
  EXPECT_TRUE(factor_prime_powers(1).factors().empty());
  EXPECT_EQ(factor_prime_powers(12).factors(),
            (std::vector<PrimePower>{{2, 2, 4}, {3, 1, 3}}));
  EXPECT_EQ(factor_prime_powers(360).factors(),
            (std::vector<PrimePower>{{2, 3, 8}, {3, 2, 9}, {5, 1, 5}}));
  EXPECT_EQ(factor_prime_powers(999983).factors(),
            (std::vector<PrimePower>{{999983, 1, 999983}}));
}

TEST(FactorPrimePowers, RejectsZero)
{
  EXPECT_THROW(factor_prime_powers(0), std::invalid_argument);
}

TEST(FactorPrimePowers, InvariantsUpTo5000)
{
  for (std::uint64_t q = 1; q <= 5000; ++q) {
    auto const f = factor_prime_powers(q);
    EXPECT_EQ(f.factors(), trial_division(q)) << q;
    std::uint64_t product = 1;
    std::uint64_t last_prime = 1;
    for (auto const& pp : f.factors()) {
      EXPECT_GT(pp.prime, last_prime);
      EXPECT_GE(pp.exponent, 1u);
      last_prime = pp.prime;
      product *= pp.value;
    }
    EXPECT_EQ(product, q);
  }
}

TEST(DeltaNabla, Examples)
{
  EXPECT_EQ(delta(12, 2), 12u);
  EXPECT_EQ(delta(12, 4), 3u);
  EXPECT_EQ(nabla(12, 6), 3u);
  EXPECT_EQ(nabla(12, 12), 12u);
  for (std::uint64_t q : {2, 6, 12, 360, 997}) {
    EXPECT_EQ(delta(q, 1), q);
    EXPECT_EQ(nabla(q, 1), 1u);
  }
  EXPECT_EQ(delta(1, 5), 1u);
  EXPECT_EQ(nabla(1, 5), 1u);
}

TEST(DeltaNabla, ProductIsQ)
{
  for (std::uint64_t q = 1; q <= 1000; ++q)
    for (std::uint64_t k = 1; k <= 1000; ++k) {
      auto const d = delta(q, k);
      auto const n = nabla(q, k);
      ASSERT_EQ(d * n, q) << q << ' ' << k;
      ASSERT_EQ(q % d, 0u);
      ASSERT_EQ(q % n, 0u);
    }
}

TEST(Divisors, Examples)
{
  EXPECT_EQ(divisors(1), (std::vector<std::uint64_t>{1}));
  EXPECT_EQ(divisors(12), (std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12}));
  EXPECT_EQ(divisors(9), (std::vector<std::uint64_t>{1, 3, 9}));
  EXPECT_EQ(divisors(360).size(), 24u);
  EXPECT_THROW(divisors(0), std::invalid_argument);
}

TEST(Residue, Examples)
{
  EXPECT_EQ(residue(-2, 2), 0u);
  EXPECT_EQ(residue(5, 3), 2u);
  EXPECT_EQ(residue(-7, 5), 3u);
  EXPECT_EQ(residue(std::numeric_limits<std::int64_t>::min(), 7),
            static_cast<std::uint64_t>((std::numeric_limits<std::int64_t>::min() % 7) + 7));
  EXPECT_THROW(residue(1, 0), std::invalid_argument);
}

TEST(Residue, CongruentAndIdempotent)
{
  for (std::int64_t n = -300; n <= 300; ++n)
    for (std::uint64_t q = 1; q <= 17; ++q) {
      auto const r = residue(n, q);
      ASSERT_LT(r, q);
      ASSERT_EQ((static_cast<std::int64_t>(r) - n) % static_cast<std::int64_t>(q), 0);
      ASSERT_EQ(residue(static_cast<std::int64_t>(r), q), r);
    }
}

TEST(Iverson, Bracket)
{
  static_assert(iverson(true) == 1 && iverson(false) == 0);
}

TEST(ExactRatio, LowestTerms)
{
  ExactRatio const r(Count(9), Count(24));
  EXPECT_EQ(r.numerator(), 3);
  EXPECT_EQ(r.denominator(), 8);
  EXPECT_EQ(r.str(), "3/8");
  EXPECT_EQ(r, ExactRatio(Count(45), Count(120)));
  EXPECT_LT(ExactRatio(Count(1), Count(3)), r);
  EXPECT_EQ(ExactRatio(Count(0), Count(5)).str(), "0");
  EXPECT_THROW(ExactRatio(Count(1), Count(0)), std::invalid_argument);
  ExactRatio const neg_den(Count(1), Count(-2));
  EXPECT_GT(neg_den.denominator(), 0);
}

TEST(SignificantDigits, Formatting)
{
  EXPECT_EQ(to_significant_digits(mpq_class(3, 8), 6), "0.375");
  EXPECT_EQ(to_significant_digits(mpq_class(63, 256), 6), "0.246094");
  EXPECT_EQ(to_significant_digits(mpq_class(0), 6), "0");
}

TEST(SmallestPrimeDivisor, Values)
{
  EXPECT_EQ(smallest_prime_divisor(21), 3u);
  EXPECT_EQ(smallest_prime_divisor(11), 11u);
  EXPECT_EQ(smallest_prime_divisor(25), 5u);
  EXPECT_THROW(smallest_prime_divisor(1), std::invalid_argument);
}
