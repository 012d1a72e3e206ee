#include "permcensus/census.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace permcensus {

namespace {

// Products of every subset of the prime-power components of q.
std::set<std::uint64_t> unitary_divisors(std::uint64_t q)
{
  std::set<std::uint64_t> out{1};
  for (auto const& f : factor_prime_powers(q).factors()) {
    std::set<std::uint64_t> next = out;
    for (std::uint64_t d : out)
      next.insert(d * f.value);
    out = std::move(next);
  }
  return out;
}

// Moduli other than q whose k = 1 column the recurrence for `base` reads.
std::set<std::uint64_t> sub_moduli(StatBase base, std::uint64_t q)
{
  std::set<std::uint64_t> out;
  if (base == StatBase::OrderMultiple)
    out = unitary_divisors(q);
  else if (base == StatBase::OrderEquals)
    for (std::uint64_t d : divisors(q))
      out.insert(d);
  out.erase(q);
  return out;
}

} // namespace

void validate(CosetQuery const& query)
{
  if (query.q == 0)
    throw std::out_of_range("q must be at least 1");
  if (query.n == 0)
    throw std::out_of_range("n must be at least 1");
  if (query.k == 0 || query.k > query.n)
    throw std::out_of_range("k must lie in [1, n], got k = " +
                            std::to_string(query.k) +
                            ", n = " + std::to_string(query.n));
}

Count coset_size(std::uint64_t n, std::uint64_t k)
{
  if (k == 0 || k > n)
    throw std::out_of_range("coset_size: k must lie in [1, n]");
  return factorial(n - k + 1);
}

Count f_closed(std::uint64_t q, std::uint64_t n)
{
  if (q == 0)
    throw std::out_of_range("f_closed: q must be at least 1");
  Count result = 1;
  for (std::uint64_t j = 1; j <= n; ++j)
    result *= static_cast<unsigned long>(j - iverson(j % q == 0));
  return result;
}

Count ncm_closed(std::uint64_t q, std::uint64_t n, std::uint64_t k)
{
  validate({{StatBase::CycleMultiple, true}, q, n, k});
  auto const s = static_cast<std::int64_t>(q) - 2 -
                 static_cast<std::int64_t>(residue(static_cast<std::int64_t>(n), q));
  auto const neg_k = residue(-static_cast<std::int64_t>(k), q);
  std::uint64_t const top = n - k + 1;
  Count const shorter = f_closed(q, top - 1);
  Count result = shorter * static_cast<unsigned long>(top - iverson(top % q == 0));
  if (static_cast<std::int64_t>(neg_k) <= s)
    result -= shorter;
  return result;
}

Count CensusEngine::stat_count(CosetQuery const& query)
{
  validate(query);
  Table& table = ensure(query.kind.base, query.q, query.n);
  Count const& tabulated = table.rows[query.n][query.k];
  if (query.kind.complemented == tabulated_complemented(query.kind.base))
    return tabulated;
  return coset_size(query.n, query.k) - tabulated;
}

Count CensusEngine::complement(CosetQuery const& query)
{
  validate(query);
  CosetQuery flipped = query;
  flipped.kind = query.kind.flipped();
  return coset_size(query.n, query.k) - stat_count(flipped);
}

std::size_t CensusEngine::memo_entries() const noexcept
{
  std::size_t total = 0;
  for (auto const& [key, table] : tables_)
    for (auto const& row : table.rows)
      total += row.empty() ? 0 : row.size() - 1;
  return total;
}

Count const& CensusEngine::factorial_of(std::uint64_t n)
{
  while (factorials_.size() <= n)
    factorials_.push_back(factorials_.back() *
                          static_cast<unsigned long>(factorials_.size()));
  return factorials_[n];
}

CensusEngine::Table& CensusEngine::ensure(StatBase base, std::uint64_t q,
                                          std::uint64_t n)
{
  Table& table = tables_[{base, q}];
  if (table.rows.size() > n)
    return table;
  if (table.rows.empty())
    table.rows.emplace_back();

  if (n > 1)
    for (std::uint64_t d : sub_moduli(base, q))
      ensure(base, d, n - 1);

  for (std::uint64_t m = table.rows.size(); m <= n; ++m)
    fill_row(base, q, table, m);
  return table;
}

Count const& CensusEngine::sym_entry(StatBase base, std::uint64_t q,
                                     std::uint64_t n)
{
  return tables_.at({base, q}).rows.at(n).at(1);
}

void CensusEngine::fill_row(StatBase base, std::uint64_t q, Table& table,
                            std::uint64_t n)
{
  auto const factors = factor_prime_powers(q);
  auto const delta_of = [&](std::uint64_t k) {
    std::uint64_t r = 1;
    for (auto const& f : factors.factors())
      if (k % f.value != 0)
        r *= f.value;
    return r;
  };

  Row row(n + 1);

  // Initial conditions on the single n-cycle.
  switch (base) {
  case StatBase::OrderMultiple:
  case StatBase::CycleMultiple:
    row[n] = iverson(n % q != 0);
    break;
  case StatBase::OrderDivides:
    row[n] = iverson(q % n == 0);
    break;
  case StatBase::CycleDivides:
    row[n] = iverson(q % n != 0);
    break;
  case StatBase::OrderEquals:
  case StatBase::CycleEquals:
    row[n] = iverson(q != n);
    break;
  }

  // C_{n,k} splits into G_{n,k}(1..k), whose elements have cycle type
  // {k} + type(a) for a in S_{n-k}, and n-k conjugates of C_{n,k+1}.
  for (std::uint64_t k = n - 1; k >= 1; --k) {
    std::uint64_t const rest = n - k;
    Count head;
    switch (base) {
    case StatBase::OrderMultiple:
      head = sym_entry(base, delta_of(k), rest);
      break;
    case StatBase::OrderDivides:
      if (q % k == 0)
        head = sym_entry(base, q, rest);
      break;
    case StatBase::OrderEquals: {
      // lcm(|a|, k) = q iff k | q and |a| = d * delta(q,k) with d | nabla(q,k).
      head = factorial_of(rest);
      if (q % k == 0) {
        std::uint64_t const dl = delta_of(k);
        for (std::uint64_t d : divisors(q / dl)) {
          head -= factorial_of(rest) - sym_entry(base, d * dl, rest);
          ops_ += 2;
        }
      }
      break;
    }
    case StatBase::CycleMultiple:
      if (k % q != 0)
        head = sym_entry(base, q, rest);
      break;
    case StatBase::CycleDivides:
      if (q % k != 0)
        head = sym_entry(base, q, rest);
      break;
    case StatBase::CycleEquals:
      if (q != k)
        head = sym_entry(base, q, rest);
      break;
    }
    row[k] = row[k + 1] * static_cast<unsigned long>(rest);
    row[k] += head;
    ops_ += 2;
  }
  table.rows.push_back(std::move(row));
}

} // namespace permcensus
