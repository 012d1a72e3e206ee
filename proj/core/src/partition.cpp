#include "permcensus/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace permcensus {

Partition::Partition(std::vector<std::uint32_t> parts) : parts_(std::move(parts))
{
  if (std::find(parts_.begin(), parts_.end(), 0u) != parts_.end())
    throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

std::uint64_t Partition::total() const noexcept
{
  return std::accumulate(parts_.begin(), parts_.end(), std::uint64_t{0});
}

std::map<std::uint32_t, std::uint32_t> Partition::multiplicities() const
{
  std::map<std::uint32_t, std::uint32_t> m;
  for (auto part : parts_)
    ++m[part];
  return m;
}

Partitions::Partitions(std::uint32_t n) : n_(n)
{
  if (n == 0)
    throw std::invalid_argument("partitions: n must be at least 1");
}

Partitions partitions(std::uint32_t n)
{
  return Partitions(n);
}

Partitions::iterator::iterator(std::uint32_t n)
    : current_(std::vector<std::uint32_t>{n}), done_(false)
{}

Partitions::iterator& Partitions::iterator::operator++()
{
  std::vector<std::uint32_t> parts = current_.parts();

  // Rightmost part larger than one; everything after it is a 1.
  auto it = std::find_if(parts.rbegin(), parts.rend(),
                         [](std::uint32_t p) { return p > 1; });
  if (it == parts.rend()) {
    done_ = true;
    return *this;
  }
  std::size_t const i = parts.size() - 1 - std::distance(parts.rbegin(), it);
  std::uint32_t rem = static_cast<std::uint32_t>(parts.size() - 1 - i) + 1;
  std::uint32_t const v = --parts[i];
  parts.resize(i + 1);
  while (rem > v) {
    parts.push_back(v);
    rem -= v;
  }
  parts.push_back(rem);
  current_ = Partition(std::move(parts));
  return *this;
}

} // namespace permcensus
