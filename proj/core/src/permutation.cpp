#include "permcensus/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace permcensus {

Permutation::Permutation(std::uint32_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (auto image : images_) {
    if (image >= images_.size() || seen[image])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[image] = true;
  }
}

Permutation Permutation::from_cycles(
    std::uint32_t degree,
    std::initializer_list<std::initializer_list<std::uint32_t>> cycles)
{
  std::vector<std::uint32_t> images(degree);
  std::iota(images.begin(), images.end(), 0u);
  for (auto const& cycle : cycles) {
    std::vector<std::uint32_t> points(cycle);
    for (std::size_t i = 0; i < points.size(); ++i) {
      auto from = points[i];
      auto to = points[(i + 1) % points.size()];
      if (from == 0 || from > degree || to == 0 || to > degree)
        throw std::invalid_argument("Permutation: cycle point out of range");
      images[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::consecutive_cycle(std::uint32_t degree,
                                           std::uint32_t first,
                                           std::uint32_t last)
{
  if (first == 0 || first > last || last > degree)
    throw std::invalid_argument("Permutation: bad cycle bounds");
  Permutation p(degree);
  for (std::uint32_t x = first; x < last; ++x)
    p.images_[x - 1] = x;
  p.images_[last - 1] = first - 1;
  return p;
}

Permutation Permutation::inverse() const
{
  std::vector<std::uint32_t> inv(images_.size());
  for (std::uint32_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = i;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Partition Permutation::cycle_type() const
{
  std::vector<bool> seen(images_.size(), false);
  std::vector<std::uint32_t> lengths;
  for (std::uint32_t start = 0; start < images_.size(); ++start) {
    if (seen[start])
      continue;
    std::uint32_t len = 0;
    for (auto x = start; !seen[x]; x = images_[x]) {
      seen[x] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return Partition(std::move(lengths));
}

Count Permutation::order() const
{
  Count result = 1;
  Partition const type = cycle_type();
  for (auto len : type.parts())
    mpz_lcm_ui(result.get_mpz_t(), result.get_mpz_t(), len);
  return result;
}

Permutation operator*(Permutation const& first, Permutation const& second)
{
  if (first.degree() != second.degree())
    throw std::invalid_argument("Permutation: degree mismatch in product");
  Permutation p;
  p.images_.resize(first.images_.size());
  for (std::size_t i = 0; i < first.images_.size(); ++i)
    p.images_[i] = second.images_[first.images_[i]];
  return p;
}

} // namespace permcensus
