#ifndef PERMCENSUS_NUMERIC_HPP
#define PERMCENSUS_NUMERIC_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace permcensus {

/// Exact nonnegative count. Values grow like n!, so no native word is used.
using Count = mpz_class;

/// Iverson bracket: 1 if the proposition holds, 0 otherwise.
constexpr std::uint64_t iverson(bool proposition) noexcept
{
  return proposition ? 1 : 0;
}

Count factorial(std::uint64_t n);

/// One component q_j = p_j^e_j of a prime-power factorization.
struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;
  std::uint64_t value;

  friend bool operator==(PrimePower const&, PrimePower const&) = default;
};

/// q = q_1 ... q_r with q_j powers of distinct primes, primes ascending.
/// q = 1 has no factors.
class PrimePowerFactorization {
public:
  explicit PrimePowerFactorization(std::uint64_t q);

  std::vector<PrimePower> const& factors() const noexcept { return factors_; }
  std::uint64_t value() const noexcept { return value_; }
  bool is_prime_power() const noexcept { return factors_.size() <= 1; }

private:
  std::uint64_t value_;
  std::vector<PrimePower> factors_;
};

/// Throws std::invalid_argument for q = 0.
PrimePowerFactorization factor_prime_powers(std::uint64_t q);

/// Product of the prime-power components q_j of q with q_j not dividing k.
std::uint64_t delta(std::uint64_t q, std::uint64_t k);
/// Product of the prime-power components q_j of q with q_j dividing k.
std::uint64_t nabla(std::uint64_t q, std::uint64_t k);

/// All positive divisors of m, ascending.
std::vector<std::uint64_t> divisors(std::uint64_t m);

/// The representative of n modulo q in [0, q).
std::uint64_t residue(std::int64_t n, std::uint64_t q);

std::uint64_t smallest_prime_divisor(std::uint64_t m);

/// Exact rational kept in lowest terms with a positive denominator.
class ExactRatio {
public:
  ExactRatio() = default;
  ExactRatio(Count numerator, Count denominator);
  explicit ExactRatio(mpq_class value);

  Count numerator() const { return value_.get_num(); }
  Count denominator() const { return value_.get_den(); }
  mpq_class const& value() const noexcept { return value_; }

  /// "a/b", or just "a" when the denominator is 1.
  std::string str() const;
  double to_double() const { return value_.get_d(); }

  friend bool operator==(ExactRatio const& a, ExactRatio const& b)
  {
    return a.value_ == b.value_;
  }
  friend auto operator<=>(ExactRatio const& a, ExactRatio const& b)
  {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater
                         : std::strong_ordering::equal;
  }

private:
  mpq_class value_{0};
};

/// Decimal rendering with the given number of significant digits, exact
/// input rounded to nearest.
std::string to_significant_digits(mpq_class const& value, int digits);

} // namespace permcensus

#endif // PERMCENSUS_NUMERIC_HPP
