#ifndef PERMCENSUS_PERMCENSUS_HPP
#define PERMCENSUS_PERMCENSUS_HPP

#include "permcensus/census.hpp"
#include "permcensus/equivalence.hpp"
#include "permcensus/identify.hpp"
#include "permcensus/numeric.hpp"
#include "permcensus/oracle.hpp"
#include "permcensus/partition.hpp"
#include "permcensus/permutation.hpp"
#include "permcensus/stat_kind.hpp"
#include "permcensus/stats.hpp"

#endif // PERMCENSUS_PERMCENSUS_HPP
