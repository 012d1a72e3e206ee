#ifndef PERMCENSUS_STATS_HPP
#define PERMCENSUS_STATS_HPP

#include <cstdint>
#include <span>
#include <string>

#include <mpfr.h>

#include "permcensus/census.hpp"
#include "permcensus/numeric.hpp"

namespace permcensus {

/// Working precision, in bits, of every Real produced by this module.
inline constexpr mpfr_prec_t real_precision = 128;

/// Owning wrapper around an MPFR value.
class Real {
public:
  explicit Real(mpfr_prec_t precision = real_precision);
  Real(Real const& other);
  Real(Real&& other) noexcept;
  Real& operator=(Real other) noexcept;
  ~Real();

  mpfr_ptr get() noexcept { return value_; }
  mpfr_srcptr get() const noexcept { return value_; }

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string str(int significant_digits = 10) const;

  /// Exact comparison against a rational: negative, zero or positive.
  int compare(mpq_class const& q) const { return mpfr_cmp_q(value_, q.get_mpq_t()); }

private:
  mpfr_t value_;
};

/// stat_count(kind, q, n, 1) / n! in lowest terms.
ExactRatio probability(CensusEngine& engine, StatKind kind, std::uint64_t q,
                       std::uint64_t n);
ExactRatio probability(StatKind kind, std::uint64_t q, std::uint64_t n);

/// c_q = exp(pi^2 / (6 q^2)), rounded to nearest.
Real sandwich_constant(std::uint64_t q);

/// prod_{k=1}^{m} (1 - 1/(qk)), the no-q-multiple-cycle probability in S_{mq}.
ExactRatio block_probability(std::uint64_t q, std::uint64_t m);

struct BoundReport {
  std::uint64_t q = 2;
  std::uint64_t m = 1;
  Real lower;        // c_q^{-1} (e m)^{-1/q}, rounded toward -inf
  Real upper;        // c_q m^{-1/q}, rounded toward +inf
  ExactRatio exact;  // block_probability(q, m)

  bool brackets() const
  {
    return lower.compare(exact.value()) <= 0 && upper.compare(exact.value()) >= 0;
  }
};

/// Throws std::out_of_range for q < 2 or m < 1.
BoundReport sandwich_bounds(std::uint64_t q, std::uint64_t m);

/// Upper bound (sum 1/a_k)^{-1} on the probability that a random permutation
/// has no cycle of any of the given lengths. The bound is exact here; it is
/// `vacuous` when it is at least 1.
struct CycleAvoidanceBound {
  ExactRatio value;
  bool vacuous = false;

  /// min(1, value)
  ExactRatio capped() const;
};

/// Throws std::invalid_argument for an empty list, a zero length or a
/// repeated length.
CycleAvoidanceBound erdos_turan_bound(std::span<std::uint64_t const> lengths);

/// The bound with lengths q, 2q, ..., floor(n/q) q.
CycleAvoidanceBound erdos_turan_bound_multiples(std::uint64_t q, std::uint64_t n);

} // namespace permcensus

#endif // PERMCENSUS_STATS_HPP
