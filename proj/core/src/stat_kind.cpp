#include "permcensus/stat_kind.hpp"

#include <algorithm>
#include <cctype>

namespace permcensus {

namespace {

constexpr std::array<std::string_view, 6> base_names{"om", "od", "oe",
                                                     "cm", "cd", "ce"};

} // namespace

std::array<StatKind, 12> all_stat_kinds()
{
  std::array<StatKind, 12> kinds{};
  std::size_t i = 0;
  for (StatBase base : all_stat_bases) {
    kinds[i++] = {base, false};
    kinds[i++] = {base, true};
  }
  return kinds;
}

std::string stat_name(StatKind kind)
{
  std::string name(base_names[static_cast<std::size_t>(kind.base)]);
  return kind.complemented ? "n" + name : name;
}

std::optional<StatKind> parse_stat_name(std::string_view name)
{
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });

  bool complemented = false;
  std::string_view rest = lower;
  if (rest.size() == 3 && rest.front() == 'n') {
    complemented = true;
    rest.remove_prefix(1);
  }
  for (std::size_t i = 0; i < base_names.size(); ++i)
    if (rest == base_names[i])
      return StatKind{static_cast<StatBase>(i), complemented};
  return std::nullopt;
}

} // namespace permcensus
