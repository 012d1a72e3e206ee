#ifndef PERMCENSUS_ORACLE_HPP
#define PERMCENSUS_ORACLE_HPP

// Brute-force ground truth for the census engine. Nothing here shares code
// with the recurrences: S_n counts come from summing conjugacy-class sizes
// over partitions, coset counts from enumerating every element of C_{n,k}.

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "permcensus/numeric.hpp"
#include "permcensus/partition.hpp"
#include "permcensus/permutation.hpp"
#include "permcensus/stat_kind.hpp"

namespace permcensus {

/// Number of permutations in S_n with cycle type p: n! / prod_j j^{m_j} m_j!.
Count class_size(Partition const& p, std::uint64_t n);

/// Whether an element of cycle type p satisfies the uncomplemented statistic.
/// Order statistics use lcm(parts); cycle statistics scan the parts.
bool stat_holds(Partition const& p, StatBase base, std::uint64_t q);

class OracleLimitExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  std::uint64_t max_sym_degree = 14;   // partition summation
  std::uint64_t max_coset_degree = 9;  // n - k + 1 for coset enumeration
};

/// How the coset representative a and the cycle b = (1,2,...,k) combine.
/// Only the pointwise product depends on this; the cycle type does not.
enum class Composition {
  AThenCycle, // x -> b(a(x))
  CycleThenA, // x -> a(b(x))
};

Count oracle_sym(StatKind kind, std::uint64_t q, std::uint64_t n,
                 OracleLimits const& limits = {});

/// Enumerates each a in Sym({k,...,n}), forms a * (1,2,...,k) and tests the
/// cycle type.
Count oracle_coset(StatKind kind, std::uint64_t q, std::uint64_t n,
                   std::uint64_t k, OracleLimits const& limits = {},
                   Composition composition = Composition::AThenCycle);

/// Visits every element of C_{n,k} under the given composition convention.
/// No limit is applied.
void for_each_coset_element(
    std::uint32_t n, std::uint32_t k,
    std::function<void(Permutation const&)> const& visit,
    Composition composition = Composition::AThenCycle);

} // namespace permcensus

#endif // PERMCENSUS_ORACLE_HPP
