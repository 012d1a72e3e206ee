#include "permcensus/identify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "permcensus/census.hpp"

namespace permcensus {

std::uint64_t SampleRng::below(std::uint64_t bound)
{
  if (bound == 0)
    throw std::invalid_argument("SampleRng::below: bound must be positive");
  // Values below 2^64 mod bound would bias the residue.
  std::uint64_t const threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t const r = engine_();
    if (r >= threshold)
      return r % bound;
  }
}

Permutation random_permutation(std::uint32_t n, SampleRng& rng)
{
  if (n == 0)
    throw std::invalid_argument("random_permutation: n must be at least 1");
  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  for (std::uint32_t i = n - 1; i >= 1; --i)
    std::swap(images[i], images[rng.below(i + 1)]);
  return Permutation(std::move(images));
}

Count order_of(Permutation const& p)
{
  return p.order();
}

OrderSample simulate_sample(std::uint32_t n, std::size_t samples,
                            std::uint64_t seed)
{
  SampleRng rng(seed);
  OrderSample sample;
  sample.source_seed = seed;
  sample.orders.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i)
    sample.orders.push_back(order_of(random_permutation(n, rng)));
  return sample;
}

OrderSample read_order_sample(std::istream& in)
{
  OrderSample sample;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto const first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos)
      continue;
    auto const last = line.find_last_not_of(" \t\r");
    std::string const token = line.substr(first, last - first + 1);
    bool const digits = std::all_of(token.begin(), token.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
    Count value;
    if (!digits || value.set_str(token, 10) != 0 || value < 1)
      throw std::invalid_argument("line " + std::to_string(line_no) +
                                  ": expected a positive integer, got '" +
                                  token + "'");
    sample.orders.push_back(std::move(value));
  }
  return sample;
}

ExactRatio odd_order_fraction(OrderSample const& sample)
{
  if (sample.orders.empty())
    throw std::invalid_argument("odd_order_fraction: empty sample");
  auto const odd = std::count_if(sample.orders.begin(), sample.orders.end(),
                                 [](Count const& o) { return mpz_odd_p(o.get_mpz_t()) != 0; });
  return ExactRatio(Count(static_cast<unsigned long>(odd)),
                    Count(static_cast<unsigned long>(sample.orders.size())));
}

DegreeBlock infer_block(ExactRatio const& odd_fraction, std::uint64_t n_max)
{
  mpq_class const& x = odd_fraction.value();
  if (x < 0 || x > 1)
    throw std::out_of_range("infer_block: fraction must lie in [0, 1]");
  if (n_max < 3)
    throw std::out_of_range("infer_block: n_max must be at least 3 to hold a block");

  // p_{2,2t} = prod_{d=1}^{t} (1 - 1/(2d)) is strictly decreasing in t, so
  // |p - x| falls and then rises.
  mpq_class p(1, 2);
  mpq_class best_gap = abs(p - x);
  std::uint64_t best = 1;
  for (std::uint64_t t = 2; 2 * t + 1 <= n_max; ++t) {
    p *= mpq_class(static_cast<unsigned long>(2 * t - 1), static_cast<unsigned long>(2 * t));
    mpq_class gap = abs(p - x);
    if (gap >= best_gap)
      break;
    best_gap = std::move(gap);
    best = t;
  }
  return {2 * best};
}

DegreeBlock infer_block(double odd_fraction, std::uint64_t n_max)
{
  if (!std::isfinite(odd_fraction))
    throw std::out_of_range("infer_block: fraction must be finite");
  return infer_block(ExactRatio(mpq_class(odd_fraction)), n_max);
}

namespace {

double binomial_log_likelihood(std::size_t hits, std::size_t total,
                               ExactRatio const& rate)
{
  double const e = rate.to_double();
  auto const term = [](std::size_t count, double prob) {
    if (count == 0)
      return 0.0;
    if (prob <= 0.0)
      return -std::numeric_limits<double>::infinity();
    return static_cast<double>(count) * std::log(prob);
  };
  // 1 - e is taken exactly so that e = 1 gives a true zero.
  double const miss = mpq_class(1 - rate.value()).get_d();
  return term(hits, e) + term(total - hits, miss);
}

} // namespace

DegreeEstimate disambiguate(OrderSample const& sample, DegreeBlock block)
{
  if (sample.orders.empty())
    throw std::invalid_argument("disambiguate: empty sample");
  if (block.low < 2)
    throw std::out_of_range("disambiguate: block must start at 2 or above");

  std::uint64_t const m = block.low;
  std::uint64_t const p = smallest_prime_divisor(m + 1);
  std::size_t const total = sample.orders.size();
  auto const coprime = static_cast<std::size_t>(std::count_if(
      sample.orders.begin(), sample.orders.end(), [p](Count const& o) {
        return mpz_divisible_ui_p(o.get_mpz_t(), p) == 0;
      }));

  DegreeEstimate est;
  est.block = block;
  est.discriminating_prime = p;
  est.sample_count = total;
  est.observed_odd = odd_order_fraction(sample);
  est.expected_odd = ExactRatio(f_closed(2, m), factorial(m));
  est.observed_coprime = ExactRatio(Count(static_cast<unsigned long>(coprime)),
                                    Count(static_cast<unsigned long>(total)));

  // p is prime, so an order is coprime to p exactly when no cycle length is
  // divisible by p, and the expected fraction is f_p(n)/n!.
  for (auto* fit : {&est.lower, &est.upper}) {
    std::uint64_t const n = fit == &est.lower ? m : m + 1;
    fit->degree = n;
    fit->expected_coprime = ExactRatio(f_closed(p, n), factorial(n));
    fit->log_likelihood = binomial_log_likelihood(coprime, total, fit->expected_coprime);
  }

  double const ll_low = est.lower.log_likelihood;
  double const ll_high = est.upper.log_likelihood;
  bool const pick_high = ll_high > ll_low;
  est.chosen_n = pick_high ? m + 1 : m;

  double const winner = pick_high ? ll_high : ll_low;
  double const loser = pick_high ? ll_low : ll_high;
  if (std::isinf(winner) && winner < 0)
    est.confidence = 0.5;
  else
    est.confidence = 1.0 / (1.0 + std::exp(loser - winner));
  return est;
}

DegreeEstimate identify_degree(OrderSample const& sample, std::uint64_t n_max)
{
  return disambiguate(sample, infer_block(odd_order_fraction(sample), n_max));
}

} // namespace permcensus
