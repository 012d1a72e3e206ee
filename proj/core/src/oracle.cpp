#include "permcensus/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace permcensus {

Count class_size(Partition const& p, std::uint64_t n)
{
  if (p.total() != n)
    throw std::invalid_argument("class_size: partition does not sum to n");
  Count centralizer = 1;
  for (auto const& [part, mult] : p.multiplicities()) {
    Count power;
    mpz_ui_pow_ui(power.get_mpz_t(), part, mult);
    centralizer *= power * factorial(mult);
  }
  return factorial(n) / centralizer;
}

bool stat_holds(Partition const& p, StatBase base, std::uint64_t q)
{
  auto const& parts = p.parts();
  auto const order = [&] {
    Count l = 1;
    for (auto part : parts)
      mpz_lcm_ui(l.get_mpz_t(), l.get_mpz_t(), part);
    return l;
  };
  auto const any_part = [&](auto pred) {
    return std::any_of(parts.begin(), parts.end(), pred);
  };

  switch (base) {
  case StatBase::OrderMultiple:
    return mpz_divisible_ui_p(order().get_mpz_t(), q) != 0;
  case StatBase::OrderDivides: {
    Count const l = order();
    return l <= q && q % l.get_ui() == 0;
  }
  case StatBase::OrderEquals:
    return order() == q;
  case StatBase::CycleMultiple:
    return any_part([q](std::uint64_t part) { return part % q == 0; });
  case StatBase::CycleDivides:
    return any_part([q](std::uint64_t part) { return q % part == 0; });
  case StatBase::CycleEquals:
    return any_part([q](std::uint64_t part) { return part == q; });
  }
  return false;
}

Count oracle_sym(StatKind kind, std::uint64_t q, std::uint64_t n,
                 OracleLimits const& limits)
{
  if (q == 0 || n == 0)
    throw std::out_of_range("oracle_sym: q and n must be at least 1");
  if (n > limits.max_sym_degree)
    throw OracleLimitExceeded("oracle_sym: n = " + std::to_string(n) +
                              " exceeds limit " +
                              std::to_string(limits.max_sym_degree));

  Count hits = 0;
  for (auto const& p : partitions(static_cast<std::uint32_t>(n)))
    if (stat_holds(p, kind.base, q))
      hits += class_size(p, n);
  return kind.complemented ? factorial(n) - hits : hits;
}

void for_each_coset_element(
    std::uint32_t n, std::uint32_t k,
    std::function<void(Permutation const&)> const& visit,
    Composition composition)
{
  if (k == 0 || k > n)
    throw std::out_of_range("for_each_coset_element: k must lie in [1, n]");

  Permutation const cycle = Permutation::consecutive_cycle(n, 1, k);
  std::vector<std::uint32_t> moved(n - k + 1);
  std::iota(moved.begin(), moved.end(), k - 1);

  std::vector<std::uint32_t> images(n);
  std::iota(images.begin(), images.end(), 0u);
  do {
    std::copy(moved.begin(), moved.end(), images.begin() + (k - 1));
    Permutation const a(images);
    visit(composition == Composition::AThenCycle ? a * cycle : cycle * a);
  } while (std::next_permutation(moved.begin(), moved.end()));
}

Count oracle_coset(StatKind kind, std::uint64_t q, std::uint64_t n,
                   std::uint64_t k, OracleLimits const& limits,
                   Composition composition)
{
  if (q == 0 || k == 0 || k > n)
    throw std::out_of_range("oracle_coset: need q >= 1 and 1 <= k <= n");
  if (n - k + 1 > limits.max_coset_degree)
    throw OracleLimitExceeded("oracle_coset: coset degree " +
                              std::to_string(n - k + 1) + " exceeds limit " +
                              std::to_string(limits.max_coset_degree));

  std::uint64_t hits = 0;
  std::uint64_t total = 0;
  for_each_coset_element(
      static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k),
      [&](Permutation const& g) {
        ++total;
        if (stat_holds(g.cycle_type(), kind.base, q))
          ++hits;
      },
      composition);
  return Count(static_cast<unsigned long>(kind.complemented ? total - hits
                                                            : hits));
}

} // namespace permcensus
