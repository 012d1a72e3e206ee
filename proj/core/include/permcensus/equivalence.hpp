#ifndef PERMCENSUS_EQUIVALENCE_HPP
#define PERMCENSUS_EQUIVALENCE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "permcensus/census.hpp"
#include "permcensus/oracle.hpp"

namespace permcensus {

struct Mismatch {
  CosetQuery query;
  std::string method; // "coset" or "partition"
  Count recurrence;
  Count oracle;

  std::string describe() const;
};

struct EquivalenceReport {
  std::uint64_t comparisons = 0;
  std::optional<Mismatch> first_mismatch;
};

/// Compares the engine with oracle_coset for every kind, q in [1, q_max],
/// n in [1, n_max] and k in [1, n], and with oracle_sym at k = 1. Stops at
/// the first disagreement. Throws OracleLimitExceeded if n_max is beyond
/// either oracle limit.
EquivalenceReport check_oracle_equivalence(std::uint64_t q_max,
                                           std::uint64_t n_max,
                                           OracleLimits const& limits = {});

} // namespace permcensus

#endif // PERMCENSUS_EQUIVALENCE_HPP
