#ifndef PERMCENSUS_PERMUTATION_HPP
#define PERMCENSUS_PERMUTATION_HPP

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "permcensus/numeric.hpp"
#include "permcensus/partition.hpp"

namespace permcensus {

/// A bijection on the points 1..n.
///
/// Images are stored zero-based: images()[i] is the image of point i + 1,
/// minus one. Composition follows the "left factor acts first" convention:
/// (a * b)(x) = b(a(x)).
class Permutation {
public:
  /// The identity of the given degree.
  explicit Permutation(std::uint32_t degree = 1);

  /// Throws std::invalid_argument unless `images` is a permutation of
  /// 0..size-1.
  explicit Permutation(std::vector<std::uint32_t> images);

  /// Build from disjoint cycles written with one-based points, e.g.
  /// from_cycles(5, {{1, 2, 3}, {4, 5}}).
  static Permutation from_cycles(
      std::uint32_t degree,
      std::initializer_list<std::initializer_list<std::uint32_t>> cycles);

  /// The cycle (first, first+1, ..., last) on one-based points.
  static Permutation consecutive_cycle(std::uint32_t degree, std::uint32_t first,
                                       std::uint32_t last);

  std::uint32_t degree() const noexcept
  {
    return static_cast<std::uint32_t>(images_.size());
  }
  std::span<std::uint32_t const> images() const noexcept { return images_; }

  /// One-based image of a one-based point.
  std::uint32_t operator()(std::uint32_t point) const
  {
    return images_.at(point - 1) + 1;
  }

  Permutation inverse() const;

  /// Cycle lengths, descending, fixed points included.
  Partition cycle_type() const;

  /// lcm of the cycle lengths.
  Count order() const;

  friend Permutation operator*(Permutation const& first,
                               Permutation const& second);
  friend bool operator==(Permutation const&, Permutation const&) = default;

private:
  std::vector<std::uint32_t> images_;
};

} // namespace permcensus

#endif // PERMCENSUS_PERMUTATION_HPP
