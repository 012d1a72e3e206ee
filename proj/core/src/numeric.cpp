#include "permcensus/numeric.hpp"


#include <mpfr.h>

namespace permcensus {

Count factorial(std::uint64_t n)
{
  Count result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

PrimePowerFactorization::PrimePowerFactorization(std::uint64_t q) : value_(q)
{
  if (q == 0)
    throw std::invalid_argument("factor_prime_powers: q must be positive");

  std::uint64_t rest = q;
  for (std::uint64_t p = 2; p <= rest / p; ++p) {
    if (rest % p != 0)
      continue;
    PrimePower pp{p, 0, 1};
    while (rest % p == 0) {
      rest /= p;
      ++pp.exponent;
      pp.value *= p;
    }
    factors_.push_back(pp);
  }
  if (rest > 1)
    factors_.push_back({rest, 1, rest});
}

PrimePowerFactorization factor_prime_powers(std::uint64_t q)
{
  return PrimePowerFactorization(q);
}

std::uint64_t delta(std::uint64_t q, std::uint64_t k)
{
  std::uint64_t result = 1;
  for (auto const& f : factor_prime_powers(q).factors())
    if (k % f.value != 0)
      result *= f.value;
  return result;
}

std::uint64_t nabla(std::uint64_t q, std::uint64_t k)
{
  std::uint64_t result = 1;
  for (auto const& f : factor_prime_powers(q).factors())
    if (k % f.value == 0)
      result *= f.value;
  return result;
}

std::vector<std::uint64_t> divisors(std::uint64_t m)
{
  if (m == 0)
    throw std::invalid_argument("divisors: m must be positive");

  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d <= m / d; ++d) {
    if (m % d != 0)
      continue;
    small.push_back(d);
    if (d != m / d)
      large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::uint64_t residue(std::int64_t n, std::uint64_t q)
{
  if (q == 0)
    throw std::invalid_argument("residue: modulus must be positive");
  if (n >= 0)
    return static_cast<std::uint64_t>(n) % q;
  // -(n + 1) avoids overflow at INT64_MIN.
  std::uint64_t r = static_cast<std::uint64_t>(-(n + 1)) % q;
  return q - 1 - r;
}

std::uint64_t smallest_prime_divisor(std::uint64_t m)
{
  if (m < 2)
    throw std::invalid_argument("smallest_prime_divisor: m must be at least 2");
  return factor_prime_powers(m).factors().front().prime;
}

ExactRatio::ExactRatio(Count numerator, Count denominator)
{
  if (denominator == 0)
    throw std::invalid_argument("ExactRatio: zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRatio::ExactRatio(mpq_class value) : value_(std::move(value))
{
  value_.canonicalize();
}

std::string ExactRatio::str() const
{
  return value_.get_str();
}

std::string to_significant_digits(mpq_class const& value, int digits)
{
  mpfr_t x;
  mpfr_init2(x, 256);
  mpfr_set_q(x, value.get_mpq_t(), MPFR_RNDN);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, x);
  std::string out(buf);
  mpfr_free_str(buf);
  mpfr_clear(x);
  return out;
}

} // namespace permcensus
