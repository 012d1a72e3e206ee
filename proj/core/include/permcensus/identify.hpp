#ifndef PERMCENSUS_IDENTIFY_HPP
#define PERMCENSUS_IDENTIFY_HPP

// Degree recognition for a black-box group known to be S_n for some unknown
// n, using nothing but the orders of uniformly random elements.
//
// 1. The fraction of odd orders estimates p_{2,n} = f_2(n)/n!, which is
//    constant on each block {2t, 2t+1} and strictly decreasing across blocks,
//    so it pins down the block {m, m+1}.
// 2. For p the smallest prime divisor of m+1, the fraction of orders coprime
//    to p is f_p(m)/m! in S_m but f_p(m+1)/(m+1)! = that * m/(m+1) in
//    S_{m+1}. A two-point binomial likelihood comparison picks the degree.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <vector>

#include "permcensus/numeric.hpp"
#include "permcensus/permutation.hpp"

namespace permcensus {

/// Seeded source of uniform integers. The bit stream is std::mt19937_64
/// (fully specified by the standard); bounded draws use rejection on the
/// 64-bit output, so a seed yields the same values on every platform.
class SampleRng {
public:
  explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);

private:
  std::mt19937_64 engine_;
};

/// Uniform element of S_n by Fisher-Yates: for i = n-1 down to 1, swap
/// position i with position rng.below(i + 1).
Permutation random_permutation(std::uint32_t n, SampleRng& rng);

/// lcm of the cycle lengths.
Count order_of(Permutation const& p);

struct OrderSample {
  std::vector<Count> orders;
  std::optional<std::uint64_t> source_seed;

  std::size_t sample_count() const noexcept { return orders.size(); }
};

/// Orders of `samples` uniform elements of S_n drawn from a SampleRng
/// seeded with `seed`.
OrderSample simulate_sample(std::uint32_t n, std::size_t samples,
                            std::uint64_t seed);

/// Reads one positive decimal integer per line; blank lines are skipped.
/// Throws std::invalid_argument naming the offending line otherwise.
OrderSample read_order_sample(std::istream& in);

/// A candidate block {low, low + 1} with low even.
struct DegreeBlock {
  std::uint64_t low = 2;
  std::uint64_t high() const noexcept { return low + 1; }

  friend bool operator==(DegreeBlock, DegreeBlock) = default;
};

ExactRatio odd_order_fraction(OrderSample const& sample);

/// The block {2t, 2t+1} inside [1, n_max] whose probability f_2(2t)/(2t)! is
/// nearest to the observed odd-order fraction. Ties go to the smaller block.
/// Throws std::out_of_range if the fraction lies outside [0, 1] or n_max < 3.
DegreeBlock infer_block(ExactRatio const& odd_fraction, std::uint64_t n_max);
DegreeBlock infer_block(double odd_fraction, std::uint64_t n_max);

struct HypothesisFit {
  std::uint64_t degree = 0;
  ExactRatio expected_coprime;   // f_p(degree) / degree!
  double log_likelihood = 0.0;   // binomial, may be -infinity
};

struct DegreeEstimate {
  DegreeBlock block;
  std::uint64_t chosen_n = 0;
  std::uint64_t discriminating_prime = 0;
  std::size_t sample_count = 0;
  ExactRatio observed_odd;
  ExactRatio expected_odd;       // f_2(m) / m!
  ExactRatio observed_coprime;
  HypothesisFit lower;           // n = m
  HypothesisFit upper;           // n = m + 1
  double confidence = 0.0;       // posterior of chosen_n under equal priors
};

/// Throws std::invalid_argument for an empty sample.
DegreeEstimate disambiguate(OrderSample const& sample, DegreeBlock block);

/// infer_block on the odd-order fraction followed by disambiguate.
DegreeEstimate identify_degree(OrderSample const& sample, std::uint64_t n_max);

} // namespace permcensus

#endif // PERMCENSUS_IDENTIFY_HPP
