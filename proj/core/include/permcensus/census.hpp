#ifndef PERMCENSUS_CENSUS_HPP
#define PERMCENSUS_CENSUS_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "permcensus/numeric.hpp"
#include "permcensus/stat_kind.hpp"

namespace permcensus {

/// A statistic evaluated on the coset C_{n,k} = G_{n,k-1} (1,2,...,k), where
/// G_{n,k-1} fixes 1..k-1 pointwise. C_{n,1} = S_n and C_{n,n} is the single
/// n-cycle (1,2,...,n).
struct CosetQuery {
  StatKind kind;
  std::uint64_t q = 1;
  std::uint64_t n = 1;
  std::uint64_t k = 1;
};

/// Throws std::out_of_range unless q >= 1 and 1 <= k <= n.
void validate(CosetQuery const& query);

/// |C_{n,k}| = (n-k+1)!.
Count coset_size(std::uint64_t n, std::uint64_t k);

/// f_q(n) = prod_{j=1}^{n} (j - [q | j]); f_q(0) = 1. Counts the elements of
/// S_n with no cycle of length divisible by q.
Count f_closed(std::uint64_t q, std::uint64_t n);

/// Closed form for the number of elements of C_{n,k} with no cycle of length
/// divisible by q:
///   f_q(n-k+1) - [(-k) mod q <= s] f_q(n-k),  s = q - 2 - (n mod q).
Count ncm_closed(std::uint64_t q, std::uint64_t n, std::uint64_t k);

/// Memoized evaluator for all twelve statistics on the cosets C_{n,k}.
///
/// Each base statistic is tabulated in one orientation (complemented for
/// everything except OrderDivides) and the other orientation is derived via
/// |C_{n,k}| - N. A table row n holds the entries for k = n, n-1, ..., 1;
/// it depends on its own k+1 entry and on the k = 1 entries of earlier rows,
/// possibly at a divisor of q as modulus, so rows are filled with n
/// ascending and k descending and no recursion on n is needed.
///
/// Not thread-safe; use one engine per task.
class CensusEngine {
public:
  Count stat_count(CosetQuery const& query);

  /// |C_{n,k}| minus the count of the flipped kind. Always equal to
  /// stat_count(query); exposed as an independent route.
  Count complement(CosetQuery const& query);

  /// Number of big-integer additions, subtractions and multiplications
  /// performed while filling tables.
  std::uint64_t arithmetic_ops() const noexcept { return ops_; }
  void reset_arithmetic_ops() noexcept { ops_ = 0; }

  /// Total number of (kind, q, n, k) entries held.
  std::size_t memo_entries() const noexcept;

private:
  using Row = std::vector<Count>; // indexed by k, slot 0 unused
  struct Table {
    std::vector<Row> rows;        // indexed by n, slot 0 empty
  };

  Table& ensure(StatBase base, std::uint64_t q, std::uint64_t n);
  void fill_row(StatBase base, std::uint64_t q, Table& table, std::uint64_t n);
  Count const& sym_entry(StatBase base, std::uint64_t q, std::uint64_t n);
  Count const& factorial_of(std::uint64_t n);

  std::map<std::pair<StatBase, std::uint64_t>, Table> tables_;
  std::vector<Count> factorials_{Count(1)};
  std::uint64_t ops_ = 0;
};

/// True when the engine tabulates `base` in complemented form.
constexpr bool tabulated_complemented(StatBase base) noexcept
{
  return base != StatBase::OrderDivides;
}

} // namespace permcensus

#endif // PERMCENSUS_CENSUS_HPP
