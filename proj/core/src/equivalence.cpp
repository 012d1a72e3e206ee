#include "permcensus/equivalence.hpp"

#include <sstream>

namespace permcensus {

std::string Mismatch::describe() const
{
  std::ostringstream os;
  os << "mismatch (" << method << "): stat=" << stat_name(query.kind)
     << " q=" << query.q << " n=" << query.n << " k=" << query.k
     << " recurrence=" << recurrence << " oracle=" << oracle;
  return os.str();
}

EquivalenceReport check_oracle_equivalence(std::uint64_t q_max,
                                           std::uint64_t n_max,
                                           OracleLimits const& limits)
{
  if (n_max > limits.max_coset_degree || n_max > limits.max_sym_degree)
    throw OracleLimitExceeded("oracle-check: n_max = " + std::to_string(n_max) +
                              " exceeds the oracle enumeration limits");

  EquivalenceReport report;
  CensusEngine engine;
  for (StatKind kind : all_stat_kinds())
    for (std::uint64_t q = 1; q <= q_max; ++q)
      for (std::uint64_t n = 1; n <= n_max; ++n)
        for (std::uint64_t k = 1; k <= n; ++k) {
          CosetQuery const query{kind, q, n, k};
          Count const fast = engine.stat_count(query);

          Count slow = oracle_coset(kind, q, n, k, limits);
          ++report.comparisons;
          if (fast != slow) {
            report.first_mismatch = Mismatch{query, "coset", fast, slow};
            return report;
          }
          if (k == 1) {
            slow = oracle_sym(kind, q, n, limits);
            ++report.comparisons;
            if (fast != slow) {
              report.first_mismatch = Mismatch{query, "partition", fast, slow};
              return report;
            }
          }
        }
  return report;
}

} // namespace permcensus
