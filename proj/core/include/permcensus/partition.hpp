#ifndef PERMCENSUS_PARTITION_HPP
#define PERMCENSUS_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <vector>

namespace permcensus {

/// A partition of n, parts stored in descending order.
class Partition {
public:
  Partition() = default;
  /// Parts are sorted descending; throws std::invalid_argument on a zero part.
  explicit Partition(std::vector<std::uint32_t> parts);

  std::vector<std::uint32_t> const& parts() const noexcept { return parts_; }
  std::uint64_t total() const noexcept;
  /// Map from part j to its multiplicity m_j.
  std::map<std::uint32_t, std::uint32_t> multiplicities() const;

  friend bool operator==(Partition const&, Partition const&) = default;

private:
  std::vector<std::uint32_t> parts_;
};

/// Input range over the partitions of n in reverse lexicographic order,
/// starting from {n} and ending at {1,1,...,1}.
class Partitions {
public:
  explicit Partitions(std::uint32_t n);

  class iterator {
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;
    using pointer = Partition const*;
    using reference = Partition const&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const noexcept { return done_; }

  private:
    friend class Partitions;
    explicit iterator(std::uint32_t n);

    Partition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const noexcept { return {}; }

private:
  std::uint32_t n_;
};

Partitions partitions(std::uint32_t n);

} // namespace permcensus

#endif // PERMCENSUS_PARTITION_HPP
