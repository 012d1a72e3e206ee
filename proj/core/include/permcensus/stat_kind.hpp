#ifndef PERMCENSUS_STAT_KIND_HPP
#define PERMCENSUS_STAT_KIND_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace permcensus {

/// The six base statistics: elements whose order is a multiple of / divides
/// / equals q, and elements having a cycle whose length is a multiple of /
/// divides / equals q.
enum class StatBase {
  OrderMultiple,
  OrderDivides,
  OrderEquals,
  CycleMultiple,
  CycleDivides,
  CycleEquals,
};

inline constexpr std::array<StatBase, 6> all_stat_bases{
    StatBase::OrderMultiple, StatBase::OrderDivides, StatBase::OrderEquals,
    StatBase::CycleMultiple, StatBase::CycleDivides, StatBase::CycleEquals,
};

/// A base statistic, optionally complemented within the ambient set
/// (|S| - N(S)).
struct StatKind {
  StatBase base = StatBase::OrderMultiple;
  bool complemented = false;

  constexpr StatKind flipped() const noexcept { return {base, !complemented}; }

  friend constexpr bool operator==(StatKind, StatKind) = default;
};

/// All twelve kinds, unbarred then barred for each base.
std::array<StatKind, 12> all_stat_kinds();

/// Short lowercase name: om, od, oe, cm, cd, ce, with an 'n' prefix for the
/// complemented form (nom, ncm, ...).
std::string stat_name(StatKind kind);
std::optional<StatKind> parse_stat_name(std::string_view name);

} // namespace permcensus

#endif // PERMCENSUS_STAT_KIND_HPP
