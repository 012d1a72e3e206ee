#include "permcensus/stats.hpp"

#include <set>
#include <stdexcept>

namespace permcensus {

Real::Real(mpfr_prec_t precision)
{
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
}

Real::Real(Real const& other)
{
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept
{
  mpfr_init2(value_, mpfr_get_prec(other.value_));
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(Real other) noexcept
{
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real()
{
  mpfr_clear(value_);
}

std::string Real::str(int significant_digits) const
{
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", significant_digits, value_);
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

ExactRatio probability(CensusEngine& engine, StatKind kind, std::uint64_t q,
                       std::uint64_t n)
{
  return ExactRatio(engine.stat_count({kind, q, n, 1}), factorial(n));
}

ExactRatio probability(StatKind kind, std::uint64_t q, std::uint64_t n)
{
  CensusEngine engine;
  return probability(engine, kind, q, n);
}

namespace {

// pi^2 / (6 q^2) with the given rounding direction.
void log_sandwich_constant(mpfr_ptr out, std::uint64_t q, mpfr_rnd_t rnd)
{
  mpfr_const_pi(out, rnd);
  mpfr_sqr(out, out, rnd);
  mpfr_div_ui(out, out, 6, rnd);
  mpfr_div_ui(out, out, q, rnd);
  mpfr_div_ui(out, out, q, rnd);
}

} // namespace

Real sandwich_constant(std::uint64_t q)
{
  if (q == 0)
    throw std::out_of_range("sandwich_constant: q must be positive");
  Real c(real_precision + 32);
  log_sandwich_constant(c.get(), q, MPFR_RNDN);
  mpfr_exp(c.get(), c.get(), MPFR_RNDN);
  Real out;
  mpfr_set(out.get(), c.get(), MPFR_RNDN);
  return out;
}

ExactRatio block_probability(std::uint64_t q, std::uint64_t m)
{
  mpq_class p = 1;
  for (std::uint64_t k = 1; k <= m; ++k) {
    Count const qk = Count(static_cast<unsigned long>(q)) * static_cast<unsigned long>(k);
    p *= mpq_class(qk - 1, qk);
  }
  return ExactRatio(p);
}

BoundReport sandwich_bounds(std::uint64_t q, std::uint64_t m)
{
  if (q < 2)
    throw std::out_of_range("sandwich_bounds: q must be at least 2");
  if (m < 1)
    throw std::out_of_range("sandwich_bounds: m must be at least 1");

  BoundReport report;
  report.q = q;
  report.m = m;
  report.exact = block_probability(q, m);

  Real c_up, c_down, log_m, t;

  // lower = exp(-(C + (1 + log m)/q)); the exponent is rounded down.
  log_sandwich_constant(c_up.get(), q, MPFR_RNDU);
  mpfr_log_ui(log_m.get(), m, MPFR_RNDU);
  mpfr_add_ui(t.get(), log_m.get(), 1, MPFR_RNDU);
  mpfr_div_ui(t.get(), t.get(), q, MPFR_RNDU);
  mpfr_add(t.get(), t.get(), c_up.get(), MPFR_RNDU);
  mpfr_neg(t.get(), t.get(), MPFR_RNDN);
  mpfr_exp(report.lower.get(), t.get(), MPFR_RNDD);

  // upper = exp(C - log(m)/q); the exponent is rounded up.
  mpfr_log_ui(log_m.get(), m, MPFR_RNDD);
  mpfr_div_ui(t.get(), log_m.get(), q, MPFR_RNDD);
  mpfr_sub(t.get(), c_up.get(), t.get(), MPFR_RNDU);
  mpfr_exp(report.upper.get(), t.get(), MPFR_RNDU);

  return report;
}

ExactRatio CycleAvoidanceBound::capped() const
{
  return vacuous ? ExactRatio(mpq_class(1)) : value;
}

CycleAvoidanceBound erdos_turan_bound(std::span<std::uint64_t const> lengths)
{
  if (lengths.empty())
    throw std::invalid_argument("erdos_turan_bound: no cycle lengths given");
  std::set<std::uint64_t> seen;
  mpq_class harmonic = 0;
  for (auto a : lengths) {
    if (a == 0)
      throw std::invalid_argument("erdos_turan_bound: lengths must be positive");
    if (!seen.insert(a).second)
      throw std::invalid_argument("erdos_turan_bound: lengths must be distinct");
    harmonic += mpq_class(1, static_cast<unsigned long>(a));
  }
  ExactRatio value(1 / harmonic);
  bool const vacuous = value.value() >= 1;
  return {std::move(value), vacuous};
}

CycleAvoidanceBound erdos_turan_bound_multiples(std::uint64_t q, std::uint64_t n)
{
  if (q == 0)
    throw std::invalid_argument("erdos_turan_bound_multiples: q must be positive");
  std::vector<std::uint64_t> lengths;
  for (std::uint64_t a = q; a <= n; a += q)
    lengths.push_back(a);
  return erdos_turan_bound(lengths);
}

} // namespace permcensus
